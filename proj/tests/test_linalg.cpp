#include <doctest.h>

#include <random>

#include "edgeideal/error.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/linalg.hpp"
#include "support.hpp"

using namespace edgeideal;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi, double density) {
    std::uniform_int_distribution<int> entry(lo, hi);
    std::bernoulli_distribution nonzero(density);
    IntMatrix m(rows, cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (nonzero(rng)) m(r, c) = entry(rng);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("q").is_rational());
    CHECK(FieldSpec::parse("2").characteristic() == 2);
    CHECK(FieldSpec::parse("7").name() == "GF(7)");
    CHECK(FieldSpec::rationals().name() == "Q");
    CHECK_THROWS_AS(FieldSpec::parse("4"), DomainError);
    CHECK_THROWS_AS(FieldSpec::parse("x"), Error);
    CHECK_THROWS_AS(FieldSpec::prime(1), DomainError);
    CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 31), DomainError);
    CHECK(FieldSpec::prime(2147483647).characteristic() == 2147483647);
    int primes = 0;
    for (std::uint64_t n = 0; n < 100; ++n) primes += is_prime(n) ? 1 : 0;
    CHECK(primes == 25);
}

TEST_CASE("small ranks") {
    CHECK(rank_rational(IntMatrix(0, 0)) == 0);
    CHECK(rank_rational(IntMatrix(3, 4, 0)) == 0);
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 4;
    m(1, 0) = 1;
    m(1, 1) = 2;
    CHECK(rank_rational(m) == 1);
    m(1, 1) = 3;
    CHECK(rank_rational(m) == 2);
    CHECK(rank_mod_p(m, 2) == 1);
    CHECK(rank_mod_p(m, 3) == 2);
    CHECK(rank(m, FieldSpec::prime(2)) == 1);
    CHECK(rank(m, FieldSpec::rationals()) == 2);
}

TEST_CASE("ranks agree with plain elimination") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + static_cast<std::size_t>(trial % 9);
        const std::size_t cols = 1 + static_cast<std::size_t>((trial * 7) % 11);
        const auto m = random_matrix(rng, rows, cols, -3, 3, 0.5);
        CHECK(rank_rational(m) == support::naive_rank_q(m));
        CHECK(rank_rational_mpz(m) == support::naive_rank_q(m));
        for (long p : {2L, 3L, 5L, 101L}) CHECK(rank_mod_p(m, static_cast<std::uint64_t>(p)) == support::naive_rank_p(m, p));
    }
}

TEST_CASE("overflowing entries fall back to big integers") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(rng, 12, 12, -1000000000, 1000000000, 1.0);
        CHECK(rank_rational(m) == support::naive_rank_q(m));
    }
    IntMatrix dependent(3, 3);
    const std::int64_t big = 3037000499;
    for (std::size_t c = 0; c < 3; ++c) {
        dependent(0, c) = big - static_cast<std::int64_t>(c);
        dependent(1, c) = 2 * (big - static_cast<std::int64_t>(c));
        dependent(2, c) = static_cast<std::int64_t>(c * c) + 1;
    }
    CHECK(rank_rational(dependent) == 2);
}

TEST_CASE("null spaces") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(rng, 1 + trial % 6, 1 + trial % 8, -2, 2, 0.6);
        RationalField q;
        const auto fm = to_field(q, m);
        const auto basis = null_space(q, fm);
        CHECK(basis.cols() == m.cols() - support::naive_rank_q(m));
        const auto product = multiply(q, fm, basis);
        bool zero = true;
        for (std::size_t r = 0; r < product.rows(); ++r) {
            for (std::size_t c = 0; c < product.cols(); ++c) zero = zero && q.is_zero(product(r, c));
        }
        CHECK(zero);
        CHECK(field_rank(q, basis) == basis.cols());

        PrimeField f5(5);
        const auto g = to_field(f5, m);
        const auto b5 = null_space(f5, g);
        CHECK(b5.cols() == m.cols() - support::naive_rank_p(m, 5));
        CHECK(field_rank(f5, hconcat(f5, g, g)) == support::naive_rank_p(m, 5));
    }
}
