#pragma once

#include <optional>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/multipoly.hpp"
#include "waring/perm.hpp"

namespace waring {

/// Coefficient matrix of the linear form of term (sigma, j): entry
/// (i, sigma(i)) is w^{ij}, all others zero.
struct TermPoint {
    Perm sigma;
    int j = 0;
    CycMatrix coords;
};

TermPoint term_point(int d, const Perm& sigma, int j);

/// A homogeneous form used as a functional by evaluation at term points.
struct DualForm {
    SparsePoly poly;
    int degree = 0;

    Cyc operator()(const TermPoint& point) const { return poly.evaluate(point.coords); }
};

/// e_{sigma,k} = prod_{i != k} x_{i,sigma(i)}.
Monomial e_monomial(const Perm& sigma, int k);

/// L_{sigma,j} = sum_k w^{kj} e_{sigma,k}, of degree d-1.
DualForm dual_form_L(int d, const Perm& sigma, int j);

/// x_{1,sigma(1)} * L_{sigma,j}, of degree d.
DualForm promoted_dual_form(int d, const Perm& sigma, int j);

/// Row and column order: permutations in lexicographic order, then j = 1..d.
std::vector<std::pair<Perm, int>> term_indices(int d);

/// Entry (a, b) is the functional of index a evaluated at the point of index b.
std::vector<std::vector<Cyc>> separation_matrix(int d, bool promoted = false, unsigned jobs = 1);

struct SeparationReport {
    bool diagonal_ok = false;
    bool off_diagonal_zero = false;
    std::size_t entries_checked = 0;
    /// First offending (row, column) in term_indices order.
    std::optional<std::pair<std::size_t, std::size_t>> witness;

    bool ok() const noexcept { return diagonal_ok && off_diagonal_zero; }
};

/// Checks every entry: off-diagonal zero, diagonal (-1)^{(d+1)j} d, times
/// x_{1,sigma(1)}(P_{sigma,j}) = w^j when promoted.
SeparationReport check_separation(int d, bool promoted = false, unsigned jobs = 1);

/// Exact rank of the expanded main terms in the degree-d monomial basis.
/// d <= 4 unless allow_large is set.
std::size_t rank_oracle(int d, bool allow_large = false);

}  // namespace waring
