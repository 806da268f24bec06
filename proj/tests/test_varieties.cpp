#include <doctest.h>

#include "oracles.hpp"
#include "waring/varieties.hpp"

using namespace waring;

namespace {

/// Projective GF(p) points of the d = 2 quadrics, counted directly.
std::uint64_t brute_force_count_d2(std::int64_t p) {
    std::uint64_t affine = 0;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c)
                for (std::int64_t e = 0; e < p; ++e) {
                    if (a == 0 && b == 0 && c == 0 && e == 0) continue;
                    const bool rows = a * b % p == 0 && c * e % p == 0;
                    const bool cols = a * c % p == 0 && b * e % p == 0;
                    const std::int64_t r1 = a + b, r2 = c + e;
                    const bool rho = ((r1 * r1 - r2 * r2) % p + p) % p == 0;
                    if (rows && cols && rho) ++affine;
                }
    return affine / static_cast<std::uint64_t>(p - 1);
}

}  // namespace

TEST_CASE("generator counts per family") {
    for (int d = 2; d <= 6; ++d) {
        const auto set = quadric_generators(d);
        const std::size_t pairs = static_cast<std::size_t>(d * (d - 1) / 2);
        CHECK(set.count("row") == d * pairs);
        CHECK(set.count("column") == d * pairs);
        CHECK(set.count("rho") == static_cast<std::size_t>(d));
        CHECK(set.generators.size() == 2 * d * pairs + d);
        for (const auto& g : set.generators) CHECK(g.poly.is_homogeneous(2));
    }
}

TEST_CASE("rho quadrics are built from row sums") {
    const int d = 3;
    const auto set = quadric_generators(d);
    const auto rho = [&](int i) { return row_sum(d, (i - 1 + d) % d + 1, d); };
    bool found = false;
    for (const auto& g : set.generators)
        if (g.family == "rho" && g.poly == rho(2) * rho(2) - rho(1) * rho(3)) found = true;
    CHECK(found);
}

TEST_CASE("quadrics vanish at every point") {
    for (int d = 2; d <= 5; ++d) {
        const auto points = decomposition_points(d);
        CHECK(points.size() == static_cast<std::size_t>(d) * factorial(d).get_ui());
        const auto r = vanish_on_points(d);
        CHECK(r.ok);
        CHECK(r.points == points.size());
        const auto set = quadric_generators(d);
        for (const auto& x : points)
            for (const auto& g : set.generators) CHECK(g.poly.evaluate(x).is_zero());
    }
}

TEST_CASE("a perturbed point violates a rho quadric") {
    CycMatrix x(3, 3);
    x(1, 1) = Cyc::root(3, 1);
    x(2, 2) = Cyc::root(3, 1);
    x(3, 3) = Cyc::root(3, 3);
    const auto set = quadric_generators(3);
    const auto bad = first_nonvanishing(set.generators, x);
    REQUIRE(bad.has_value());
    CHECK(set.generators[*bad].family == "rho");
}

TEST_CASE("extra generators for d = 3") {
    const auto extra = extra_generators(3);
    CHECK(extra.squares.size() == 9);
    CHECK(vanish_on_points(extra.squares, 3).ok);
    const int rows[] = {2, 3};
    const int cols[] = {2, 3};
    const auto target = SparsePoly::variable(3, {1, 1}) * SparsePoly::variable(3, {1, 1}) - permanent_poly(rows, cols, 3);
    bool found = false;
    for (const auto& g : extra.squares)
        if (g.poly == target) found = true;
    CHECK(found);
}

TEST_CASE("permanent differences for d = 4") {
    const auto extra = extra_generators(4);
    CHECK(extra.raw_differences == 24);
    CHECK(extra.differences.size() == 12);
    CHECK(vanish_on_points(extra.differences, 4).ok);
}

TEST_CASE("the literal d = 4 square family is evaluated faithfully") {
    // x11^2 + x12^2 - perm of rows {1,3}, cols {1,2} at the identity point.
    const auto extra = extra_generators(4);
    REQUIRE(!extra.squares.empty());
    const auto x = CycMatrix::identity(4, 4);
    const int rows[] = {1, 3};
    const int cols[] = {1, 2};
    const auto direct = SparsePoly::variable(4, {1, 1}) * SparsePoly::variable(4, {1, 1}) +
                        SparsePoly::variable(4, {1, 2}) * SparsePoly::variable(4, {1, 2}) - permanent_poly(rows, cols, 4);
    CHECK(direct.evaluate(x).is_one());
    const auto r = vanish_on_points(extra.squares, 4);
    CHECK(r.witness.has_value() == !r.ok);
}

TEST_CASE("rho quadrics reduce to extra generators modulo monomials") {
    const auto r = reduce_rho_quadrics();
    CHECK(r.ok);
    REQUIRE(r.rows.size() == 3);
    for (const auto& row : r.rows) {
        CHECK(row.solvable);
        CHECK(row.residual_in_ideal);
        for (const auto& m : row.residual) CHECK(in_monomial_ideal(m));
    }
}

TEST_CASE("monomial ideal membership") {
    const VarId same_row[] = {{1, 1}, {1, 2}};
    const VarId same_col[] = {{1, 3}, {2, 3}};
    const VarId diag[] = {{1, 1}, {2, 2}};
    const VarId square[] = {{1, 1}, {1, 1}};
    CHECK(in_monomial_ideal(Monomial::from_vars(same_row)));
    CHECK(in_monomial_ideal(Monomial::from_vars(same_col)));
    CHECK_FALSE(in_monomial_ideal(Monomial::from_vars(diag)));
    CHECK_FALSE(in_monomial_ideal(Monomial::from_vars(square)));
}

TEST_CASE("finite field locus counts for d = 2 match direct enumeration") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
        const auto full = finite_field_locus_count(2, p, LocusMode::Full);
        const auto staged = finite_field_locus_count(2, p, LocusMode::Staged);
        CHECK(full.projective_count == brute_force_count_d2(static_cast<std::int64_t>(p)));
        CHECK(full.projective_count == 4);
        CHECK(full.ok());
        CHECK(staged.projective_count == 4);
        CHECK(staged.ok());
    }
}

TEST_CASE("staged locus counts") {
    const auto r3 = finite_field_locus_count(3, 7, LocusMode::Staged);
    CHECK(r3.projective_count == 18);
    CHECK(r3.ok());
    const auto r4 = finite_field_locus_count(4, 5, LocusMode::Staged);
    CHECK(r4.projective_count == 96);
    CHECK(r4.ok());
}

TEST_CASE("locus preconditions") {
    CHECK_THROWS_AS(finite_field_locus_count(3, 5, LocusMode::Staged), DomainError);
    CHECK_THROWS_AS(finite_field_locus_count(2, 9, LocusMode::Staged), DomainError);
    CHECK_THROWS_AS(finite_field_locus_count(4, 5, LocusMode::Full), DomainError);
    CHECK_THROWS_AS(extra_generators(5), DomainError);
}
