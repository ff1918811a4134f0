#include "edgeideal/linalg.hpp"

#include <cstdlib>
#include <optional>

namespace edgeideal {

namespace {

// Index of the row at or below `from` with the smallest nonzero |entry| in column c.
template <class T, class Abs>
std::optional<std::size_t> choose_pivot(const Matrix<T>& m, std::size_t from, std::size_t c, Abs abs) {
    std::optional<std::size_t> best;
    for (std::size_t r = from; r < m.rows(); ++r) {
        if (m(r, c) == 0) continue;
        if (!best || abs(m(r, c)) < abs(m(*best, c))) {
            best = r;
            if (abs(m(r, c)) == 1) break;
        }
    }
    return best;
}

std::optional<std::size_t> bareiss_i64(IntMatrix m) {
    std::size_t rank = 0;
    std::int64_t prev = 1;
    const auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        auto p = choose_pivot(m, rank, c, abs64);
        if (!p) continue;
        m.swap_rows(*p, rank);
        const std::int64_t pivot = m(rank, c);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const std::int64_t a = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                std::int64_t lhs, rhs, diff;
                if (__builtin_mul_overflow(m(i, j), pivot, &lhs) || __builtin_mul_overflow(a, m(rank, j), &rhs) ||
                    __builtin_sub_overflow(lhs, rhs, &diff)) {
                    return std::nullopt;
                }
                m(i, j) = diff / prev;
            }
            m(i, c) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_rational_mpz(const IntMatrix& src) {
    Matrix<mpz_class> m(src.rows(), src.cols());
    for (std::size_t r = 0; r < src.rows(); ++r) {
        for (std::size_t c = 0; c < src.cols(); ++c) m(r, c) = static_cast<long>(src(r, c));
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    const auto absz = [](const mpz_class& v) -> mpz_class { return abs(v); };
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        auto p = choose_pivot(m, rank, c, absz);
        if (!p) continue;
        m.swap_rows(*p, rank);
        const mpz_class pivot = m(rank, c);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const mpz_class a = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                mpz_class t = m(i, j) * pivot - a * m(rank, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, c) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
    if (auto r = bareiss_i64(m)) return *r;
    return rank_rational_mpz(m);
}

std::size_t rank_mod_p(const IntMatrix& src, std::uint64_t p) {
    const PrimeField f(p);
    Matrix<std::uint64_t> m(src.rows(), src.cols());
    for (std::size_t r = 0; r < src.rows(); ++r) {
        for (std::size_t c = 0; c < src.cols(); ++c) m(r, c) = f.from_int(src(r, c));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, rank);
        const auto inv = f.inv(m(rank, c));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const auto factor = f.mul(m(i, c), inv);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(rank, j)));
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(const IntMatrix& m, FieldSpec field) {
    return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

}  // namespace edgeideal
