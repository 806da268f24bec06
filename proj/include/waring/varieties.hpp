#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/multipoly.hpp"

namespace waring {

/// A named generator. Families: "row", "column", "rho" for the quadric set;
/// "square" and "permanent_difference" for the extra generators.
struct Generator {
    std::string family;
    std::string label;
    SparsePoly poly;
};

/// Row monomials x_{i,j1} x_{i,j2}, column monomials x_{i1,j} x_{i2,j}, and
/// rho_i^2 - rho_{i-1} rho_{i+1} with rho_i the i-th row sum, indices mod d.
/// Polynomials live in Q(w_d) so they can be evaluated at the term points.
struct QuadricSet {
    int d = 0;
    std::vector<Generator> generators;

    std::size_t count(std::string_view family) const;
};

QuadricSet quadric_generators(int d);

/// rho_i = sum_j x_{i,j}, with i taken mod d into [1, d].
SparsePoly row_sum(int d, int i, int order);

/// The d*d! points D^j P_sigma, sigma in lexicographic order, then j = 1..d.
std::vector<CycMatrix> decomposition_points(int d);

struct VanishReport {
    bool ok = false;
    std::size_t generators = 0;
    std::size_t points = 0;
    std::size_t evaluations = 0;
    /// (generator index, point index) of the first nonzero value.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

VanishReport vanish_on_points(const std::vector<Generator>& generators, int d);
VanishReport vanish_on_points(int d);

/// Index of the first generator not vanishing at x, if any.
std::optional<std::size_t> first_nonvanishing(const std::vector<Generator>& generators, const CycMatrix& x);

struct ExtraGenerators {
    int d = 0;
    /// d = 3: x_{i,j}^2 - P_{i;j}. d = 4: x_{i,j1}^2 + x_{i,j2}^2 - P_{i,i+2;j1,j2}.
    std::vector<Generator> squares;
    /// d = 4 only, one per pair of opposite index tuples.
    std::vector<Generator> differences;
    /// Ordered tuples satisfying the congruence before identifying g with -g.
    std::size_t raw_differences = 0;
};

ExtraGenerators extra_generators(int d);

struct RowReduction {
    int i = 0;
    bool solvable = false;
    /// Coefficient of x_{a,b}^2 - P_{a;b} at index 3(a-1) + (b-1).
    std::vector<Rational> coefficients;
    /// Monomials left after subtracting the combination.
    std::vector<Monomial> residual;
    bool residual_in_ideal = false;
};

struct ReductionReport {
    bool ok = false;
    std::vector<RowReduction> rows;
};

/// True when the degree-2 monomial is a row or column monomial generator.
bool in_monomial_ideal(const Monomial& m);

/// For d = 3, writes each rho quadric as a rational combination of the extra
/// generators plus terms in the ideal of the row and column monomials.
ReductionReport reduce_rho_quadrics();

enum class LocusMode { Full, Staged };

struct LocusReport {
    int d = 0;
    std::uint64_t p = 0;
    LocusMode mode = LocusMode::Full;
    std::uint64_t candidates = 0;
    std::uint64_t affine_solutions = 0;
    std::uint64_t projective_count = 0;
    std::uint64_t expected = 0;
    /// Affine solutions split into whole scalar orbits.
    bool homogeneous_ok = false;
    /// Every solution's nonzero entries, read row by row, form a geometric
    /// progression whose ratio is a d-th root of unity.
    bool geometric_ok = false;
    /// Normalized solutions coincide with the normalized D_p^j P_sigma.
    bool matches_points = false;
    /// Candidates satisfying the row and column monomials. In full mode this
    /// must equal the number of nonzero matrices with at most one nonzero
    /// entry per row and column; in staged mode every candidate qualifies.
    std::uint64_t monomial_solutions = 0;
    bool monomial_consistent = false;

    bool ok() const {
        return projective_count == expected && homogeneous_ok && geometric_ok && matches_points && monomial_consistent;
    }
};

/// Counts projective GF(p) points where every quadric vanishes. Full mode
/// enumerates every nonzero matrix and needs p^{d^2} <= 10^8 unless forced;
/// staged mode enumerates matrices with at most one nonzero per row and column.
LocusReport finite_field_locus_count(int d, std::uint64_t p, LocusMode mode, unsigned jobs = 1, bool force = false);

/// Full when p^{d^2} <= 10^8, staged otherwise.
LocusMode default_locus_mode(int d, std::uint64_t p);

}  // namespace waring
