#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "waring/cyclotomic.hpp"

using namespace waring;

TEST_CASE("cyclotomic polynomial has degree phi(d) and vanishes at primitive roots") {
    for (int d = 1; d <= 30; ++d) {
        int phi = 0;
        for (int k = 1; k <= d; ++k)
            if (std::gcd(k, d) == 1) ++phi;
        const auto poly = cyclotomic_polynomial(d);
        CHECK(static_cast<int>(poly.size()) - 1 == phi);
        CHECK(euler_totient(d) == phi);
        for (int k = 1; k <= d; ++k) {
            if (std::gcd(k, d) != 1) continue;
            const auto z = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
            std::complex<double> value = 0.0;
            for (std::size_t i = poly.size(); i-- > 0;) value = value * z + poly[i].get_d();
            CHECK(std::abs(value) < 1e-8);
        }
    }
}

TEST_CASE("field arithmetic agrees with the complex embedding") {
    std::mt19937_64 rng(11);
    for (int order : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Cyc a = oracle::random_cyc(order, rng);
            const Cyc b = oracle::random_cyc(order, rng);
            const auto za = oracle::embed(a);
            const auto zb = oracle::embed(b);
            CHECK(oracle::close(oracle::embed(a + b), za + zb));
            CHECK(oracle::close(oracle::embed(a - b), za - zb));
            CHECK(oracle::close(oracle::embed(a * b), za * zb));
            CHECK(oracle::close(oracle::embed(a.pow(3)), za * za * za));
            if (!b.is_zero()) {
                CHECK(oracle::close(oracle::embed(a / b), za / zb));
                CHECK((b * b.inverse()).is_one());
            }
        }
    }
}

TEST_CASE("roots of unity") {
    for (int order = 1; order <= 12; ++order) {
        CHECK(Cyc::root(order, order).is_one());
        CHECK(Cyc::root(order, 1).pow(order).is_one());
        for (int k = 1; k < order; ++k) {
            CHECK_FALSE(Cyc::root(order, k).is_one());
            CHECK(Cyc::root(order, k).as_root_power() == k);
        }
        CHECK(Cyc::root(order, -1) == Cyc::root(order, order - 1));
        for (long p = 0; p <= 2 * order; ++p) {
            Cyc direct(order);
            for (int k = 0; k < order; ++k) direct += Cyc::root(order, k * p);
            CHECK(root_power_sum(order, p) == direct);
            CHECK(direct == Cyc(order, p % order == 0 ? static_cast<long>(order) : 0L));
        }
    }
}

TEST_CASE("rational recognition") {
    const Cyc w = Cyc::root(3, 1);
    CHECK((w + w * w).as_rational() == Rational(-1));
    CHECK_FALSE(w.as_rational().has_value());
    CHECK(Cyc(6, Rational(3, 4)).as_rational() == Rational(3, 4));
    CHECK((-Cyc::root(4, 1)).as_root_power() == 3);
    CHECK_FALSE(Cyc(5, 2L).as_root_power().has_value());
}

TEST_CASE("mixing fields and inverting zero are domain errors") {
    CHECK_THROWS_AS(Cyc(3, 1L) + Cyc(4, 1L), DomainError);
    CHECK_THROWS_AS(Cyc(5).inverse(), DivisionByZero);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) * factorial(k) * factorial(n - k) == factorial(n));
}

TEST_CASE("prime field scalars") {
    CHECK(is_prime(2));
    CHECK(is_prime(251));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(221));
    for (std::uint64_t p : {5ULL, 7ULL, 13ULL, 31ULL}) {
        for (int d = 1; d <= 6; ++d) {
            if ((p - 1) % static_cast<std::uint64_t>(d) != 0) continue;
            const auto w = PrimeScalar::root_of_unity(p, d);
            CHECK(w.pow(static_cast<std::uint64_t>(d)) == PrimeScalar(p, 1));
            for (int k = 1; k < d; ++k) CHECK_FALSE(w.pow(static_cast<std::uint64_t>(k)) == PrimeScalar(p, 1));
        }
        for (std::int64_t v = 1; v < static_cast<std::int64_t>(p); ++v) CHECK(PrimeScalar(p, v) * PrimeScalar(p, v).inverse() == PrimeScalar(p, 1));
        CHECK(PrimeScalar::from_rational(p, Rational(1, 2)) * PrimeScalar(p, 2) == PrimeScalar(p, 1));
    }
}
