#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "waring/decompositions.hpp"
#include "waring/matrix.hpp"
#include "waring/perm.hpp"

namespace waring {

/// Jacobi symbol (a / n) for odd positive n.
int jacobi_symbol(long a, long n);

/// The matrix w^k D^j P_sigma: entry w^{k + ij} at (i, sigma(i)).
/// D = diag(w, w^2, ..., w^d); P_sigma has ones at (i, sigma(i)).
/// k and j are stored in [0, d).
struct MonoMatrix {
    int k = 0;
    int j = 0;
    Perm sigma;

    int dim() const noexcept { return sigma.size(); }
    CycMatrix to_matrix() const;
    std::string to_string() const;

    friend auto operator<=>(const MonoMatrix&, const MonoMatrix&) = default;
    friend bool operator==(const MonoMatrix&, const MonoMatrix&) = default;
};

/// The canonical triple of X if X = w^k D^j P_sigma over Q(w_d), d = X.dim().
std::optional<MonoMatrix> mono_membership(const CycMatrix& x);

/// All d^2 d! elements of M, k outermost, then j, then sigma in lexicographic order.
std::vector<MonoMatrix> all_mono_matrices(int d);

CycMatrix diagonal_D(int d);
CycMatrix permutation_matrix(const Perm& sigma, int order);

/// i -> a*i + b mod d on [1, d], with d standing for the residue 0.
struct AffinePerm {
    int d = 1;
    int a = 1;
    int b = 0;

    int operator()(int i) const;
    Perm to_perm() const;
    /// (this o rhs)(i) = this(rhs(i)).
    AffinePerm compose(const AffinePerm& rhs) const;
    AffinePerm inverse() const;

    friend auto operator<=>(const AffinePerm&, const AffinePerm&) = default;
    friend bool operator==(const AffinePerm&, const AffinePerm&) = default;
};

/// All d*phi(d) affine permutations, ordered by (a, b).
std::vector<AffinePerm> affine_group(int d);
bool is_affine(const Perm& pi);

struct AffineLemmaReport {
    bool ok = false;
    std::size_t permutations = 0;
    /// Permutations pi with P_pi D in M.
    std::size_t in_m = 0;
    std::size_t affine = 0;
    std::optional<Perm> witness;
};

/// For every pi in S_d: P_pi D in M iff pi is affine, and for affine
/// pi: i -> ai + b, P_pi D = w^b D^a P_pi.
AffineLemmaReport affine_lemma_check(int d);

struct SignFormulaReport {
    bool ok = false;
    std::size_t checks = 0;
    /// "shift b=..." or "scale a=..." for the first disagreement.
    std::optional<std::string> witness;
};

/// Compares cycle parity of i -> i + b and i -> a*i with the closed forms.
SignFormulaReport sign_formula_check(int d);

/// The map X -> w^m D^n P_pi X P_sigma.
struct SymElement {
    int d = 1;
    int m = 0;
    int n = 0;
    AffinePerm pi;
    Perm sigma;

    /// det of the image divided by det X: (-1)^{(d+1)n} sgn(pi) sgn(sigma).
    int determinant_multiplier() const;
    CycMatrix apply(const CycMatrix& x) const;
    /// Image of the basis matrix E_{r,c}: w^e E_{r',c'}, returned as {r', c', e}.
    std::array<int, 3> apply_basis(int r, int c) const;
    /// Image of w^k D^j P_rho as a triple, computed by the commutation rules.
    MonoMatrix apply(const MonoMatrix& x) const;
    std::string to_string() const;

    friend auto operator<=>(const SymElement&, const SymElement&) = default;
    friend bool operator==(const SymElement&, const SymElement&) = default;
};

SymElement identity_symmetry(int d);
/// (h1 o h2)(X) = h1(h2(X)).
SymElement compose(const SymElement& h1, const SymElement& h2);
SymElement inverse(const SymElement& h);

/// Every (m, n, pi, sigma) in lexicographic order; |result| = d^3 phi(d) d!.
std::vector<SymElement> all_symmetries(int d);
std::vector<SymElement> sample_symmetries(int d, std::size_t count, std::uint64_t seed);

/// d^3 phi(d) d! / 2.
Integer symmetry_order_formula(int d);
/// Orders listed in the published table for d = 2..6.
std::optional<Integer> symmetry_order_reference(int d);

struct SymmetryReport {
    int d = 0;
    Integer tilde_order = 0;
    Integer h_order = 0;
    Integer formula_order = 0;
    std::optional<Integer> reference_order;
    /// Set when the tuple parametrization was checked to be injective.
    std::optional<bool> faithful;
    bool half_split = false;
    std::vector<SymElement> elements;

    bool matches_formula() const { return h_order == formula_order; }
    std::optional<bool> matches_reference() const {
        if (!reference_order) return std::nullopt;
        return h_order == *reference_order;
    }
};

/// Counts the group and its determinant-preserving half. Faithfulness and
/// element lists are produced for d <= 5; d = 6 counts only.
SymmetryReport enumerate_symmetries(int d, bool keep_elements = false);

struct ActionReport {
    bool structural_ok = true;
    bool bijective = false;
    std::size_t preserved = 0;
    std::size_t reversed = 0;
    std::optional<std::size_t> failing_term;

    bool sign_preserving() const { return structural_ok && bijective && reversed == 0; }
    bool sign_reversing() const { return structural_ok && bijective && preserved == 0; }
};

/// Maps every term matrix through h and matches it with a term of dec.
ActionReport symmetry_action(const SymElement& h, const PowerDecomposition& dec);
bool apply_symmetry(const SymElement& h, const PowerDecomposition& dec);

struct GroupActionSummary {
    int d = 0;
    bool sampled = false;
    std::size_t elements = 0;
    std::size_t h_elements = 0;
    std::size_t h_preserving = 0;
    std::size_t other_elements = 0;
    std::size_t other_reversing = 0;
    std::optional<SymElement> first_failure;

    bool ok() const {
        return h_preserving == h_elements && other_reversing == other_elements && !first_failure;
    }
};

/// Runs symmetry_action over all of the group, or over `samples` seeded draws
/// when samples > 0. Elements of H must preserve signs, the rest reverse them.
GroupActionSummary check_group_action(int d, std::size_t samples = 0, std::uint64_t seed = 0, unsigned jobs = 1);

struct TransposeReport {
    bool closed = false;
    std::size_t checked = 0;
    /// First X in M with X^t outside M; X^t is reported alongside.
    std::optional<MonoMatrix> witness;
    std::optional<CycMatrix> witness_transpose;
};

/// Searches M by k, then j, then sigma ordered by largest moved point and
/// then lexicographically, so S_2 comes before S_3 and so on.
TransposeReport transpose_closure(int d);

/// Replaces every term matrix C by A C B. Requires det(A B) = 1; A and B may be
/// rational (order 1) or over Q(w_d).
PowerDecomposition conjugate_decomposition(const CycMatrix& a, const CycMatrix& b, const PowerDecomposition& dec);

/// Integer matrix of determinant 1 built from seeded elementary row operations.
CycMatrix random_unimodular(int d, std::mt19937_64& rng, int steps = 12);

}  // namespace waring
