#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "edgeideal/field.hpp"

namespace edgeideal {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit
/// integers and restarts with GMP integers if an intermediate overflows.
std::size_t rank_rational(const IntMatrix& m);

/// Bareiss elimination in GMP integers throughout.
std::size_t rank_rational_mpz(const IntMatrix& m);

/// Rank over GF(p); entries are reduced mod p first.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

std::size_t rank(const IntMatrix& m, FieldSpec field);

/// Field policies for the generic routines below.
struct RationalField {
    using Element = mpq_class;
    Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return 1 / a; }
    Element neg(const Element& a) const { return -a; }
};

struct PrimeField {
    using Element = std::uint64_t;
    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime) : p(prime) {}
    Element from_int(std::int64_t v) const {
        const auto m = static_cast<std::int64_t>(p);
        return static_cast<Element>(((v % m) + m) % m);
    }
    bool is_zero(Element a) const { return a == 0; }
    Element add(Element a, Element b) const { return (a + b) % p; }
    Element sub(Element a, Element b) const { return (a + p - b) % p; }
    Element mul(Element a, Element b) const { return (a * b) % p; }
    Element neg(Element a) const { return a == 0 ? 0 : p - a; }
    Element inv(Element a) const {
        Element result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }
};

template <class Field>
using FieldMatrix = Matrix<typename Field::Element>;

template <class Field>
FieldMatrix<Field> to_field(const Field& f, const IntMatrix& m) {
    FieldMatrix<Field> out(m.rows(), m.cols(), f.from_int(0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f.from_int(m(r, c));
    }
    return out;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class Field>
std::vector<std::size_t> row_reduce(const Field& f, FieldMatrix<Field>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && f.is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, row);
        const auto scale = f.inv(m(row, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

template <class Field>
std::size_t field_rank(const Field& f, FieldMatrix<Field> m) {
    return row_reduce(f, m).size();
}

/// Basis of the right null space, one basis vector per column.
template <class Field>
FieldMatrix<Field> null_space(const Field& f, FieldMatrix<Field> m) {
    const std::size_t n = m.cols();
    const auto pivots = row_reduce(f, m);
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    FieldMatrix<Field> basis(n, n - pivots.size(), f.from_int(0));
    std::size_t col = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis(free, col) = f.from_int(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], col) = f.neg(m(r, free));
        ++col;
    }
    return basis;
}

template <class Field>
FieldMatrix<Field> multiply(const Field& f, const FieldMatrix<Field>& a, const FieldMatrix<Field>& b) {
    FieldMatrix<Field> out(a.rows(), b.cols(), f.from_int(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
        }
    }
    return out;
}

/// [a | b]; both must have the same number of rows.
template <class Field>
FieldMatrix<Field> hconcat(const Field& f, const FieldMatrix<Field>& a, const FieldMatrix<Field>& b) {
    FieldMatrix<Field> out(a.rows(), a.cols() + b.cols(), f.from_int(0));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

}  // namespace edgeideal
