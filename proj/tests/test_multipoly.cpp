#include <doctest.h>

#include "oracles.hpp"
#include "waring/multipoly.hpp"

using namespace waring;

namespace {

LinForm random_form(int d, int order, std::mt19937_64& rng) {
    LinForm form(d, order);
    for (int r = 1; r <= d; ++r)
        for (int c = 1; c <= d; ++c)
            if (rng() % 2 == 0) form.coeffs()(r, c) = Cyc::root(order, static_cast<long>(rng() % 12)) * Integer(static_cast<long>(rng() % 5) - 2);
    return form;
}

}  // namespace

TEST_CASE("expand_power matches repeated multiplication") {
    std::mt19937_64 rng(3);
    for (int order : {1, 3, 4, 5}) {
        for (int d = 2; d <= 3; ++d) {
            for (int e = 1; e <= 4; ++e) {
                const auto form = random_form(d, order, rng);
                CHECK(expand_power(form, e) == oracle::power_by_multiplication(form, e));
            }
        }
    }
}

TEST_CASE("expand_power rejects a zero exponent") {
    CHECK_THROWS_AS(expand_power(LinForm(2, 1), 0), DomainError);
}

TEST_CASE("for_each_power_term reproduces expand_power with a scale") {
    std::mt19937_64 rng(8);
    const auto form = random_form(3, 3, rng);
    const Cyc scale = Cyc::root(3, 2) * Integer(7);
    SparsePoly collected(3);
    for_each_power_term(form, 3, scale, [&](const Monomial& m, const Cyc& c) { collected.add_term(m, c); });
    CHECK(collected == expand_power(form, 3) * scale);
}

TEST_CASE("multinomial coefficients and weak compositions") {
    for (int total = 0; total <= 6; ++total) {
        for (int count = 1; count <= 4; ++count) {
            std::size_t seen = 0;
            Integer sum = 0;
            for_each_weak_composition(total, count, [&](std::span<const int> parts) {
                ++seen;
                int s = 0;
                Integer denom = 1;
                for (int p : parts) {
                    s += p;
                    denom *= factorial(p);
                }
                CHECK(s == total);
                CHECK(multinomial(total, parts) == factorial(total) / denom);
                sum += multinomial(total, parts);
            });
            CHECK(Integer(static_cast<long>(seen)) == binomial(total + count - 1, count - 1));
            Integer power = 1;
            for (int k = 0; k < total; ++k) power *= count;
            CHECK(sum == power);
        }
    }
}

TEST_CASE("determinant polynomial agrees with Leibniz evaluation") {
    std::mt19937_64 rng(21);
    for (int d = 1; d <= 5; ++d) {
        const auto det = determinant_poly(d);
        CHECK(det.size() == factorial(d).get_ui());
        CHECK(det.is_homogeneous(d));
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = oracle::random_integer_matrix(d, 1, rng);
            CHECK(det.evaluate(x) == oracle::leibniz_det(x));
            CHECK(x.determinant() == oracle::leibniz_det(x));
        }
    }
}

TEST_CASE("permanent of a 2x2 block") {
    const int rows[] = {1, 2};
    const int cols[] = {2, 3};
    const auto perm = permanent_poly(rows, cols);
    CHECK(perm.size() == 2);
    const std::pair<VarId, int> a[] = {{{1, 2}, 1}, {{2, 3}, 1}};
    const std::pair<VarId, int> b[] = {{{1, 3}, 1}, {{2, 2}, 1}};
    CHECK(perm.coefficient(Monomial::from_exponents(a)).is_one());
    CHECK(perm.coefficient(Monomial::from_exponents(b)).is_one());
}

TEST_CASE("monomials are canonical") {
    const VarId u[] = {{2, 1}, {1, 3}, {2, 1}};
    const VarId v[] = {{2, 1}, {2, 1}, {1, 3}};
    CHECK(Monomial::from_vars(u) == Monomial::from_vars(v));
    const auto m = Monomial::from_vars(u);
    CHECK(m.degree() == 3);
    CHECK(m.exponent({2, 1}) == 2);
    CHECK(m.exponent({1, 3}) == 1);
    const VarId w[] = {{1, 1}};
    CHECK(Monomial::from_vars(w) * Monomial::from_vars(w) == Monomial::from_exponents(std::vector<std::pair<VarId, int>>{{{1, 1}, 2}}));
}

TEST_CASE("polynomial ring laws") {
    std::mt19937_64 rng(4);
    const auto a = random_form(2, 4, rng).to_poly();
    const auto b = random_form(2, 4, rng).to_poly();
    const auto c = random_form(2, 4, rng).to_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    const auto x = oracle::random_integer_matrix(2, 4, rng);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
}

TEST_CASE("order lifting preserves values") {
    std::mt19937_64 rng(9);
    const auto det = determinant_poly(3);
    const auto lifted = det.with_order(6);
    const auto x = oracle::random_integer_matrix(3, 1, rng);
    CHECK(lifted.evaluate(oracle::lift(x, 6)) == Cyc(6, *det.evaluate(x).as_rational()));
}
