#pragma once

#include <optional>
#include <vector>

#include "waring/decompositions.hpp"

namespace waring {

/// Sorted multiset i_1 <= ... <= i_d of indices in [1, d].
class MultiIndex {
   public:
    MultiIndex(std::vector<int> entries, int d);

    std::span<const int> entries() const noexcept { return entries_; }
    int dim() const noexcept { return d_; }
    /// lambda_k = number of entries equal to k, k = 1..d.
    std::vector<int> multiplicities() const;
    std::vector<int> support() const;

   private:
    std::vector<int> entries_;
    int d_;
};

/// Names the monomial x_{i_1,j_1} ... x_{i_d,j_d}.
struct IJPair {
    std::vector<int> rows;
    std::vector<int> cols;

    Monomial monomial() const;
};

enum class VerifyMode { Expand, Stream };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Expand;
    unsigned jobs = 1;
    /// Collect every mismatching monomial rather than only the first.
    bool full_diff = false;
};

struct Mismatch {
    Monomial monomial;
    Cyc expected;
    Cyc actual;
};

struct VerificationReport {
    bool equal = false;
    VerifyMode mode = VerifyMode::Expand;
    std::size_t term_count = 0;
    /// Distinct monomials produced by the terms before cancellation.
    std::size_t monomials_generated = 0;
    /// Monomials with a nonzero coefficient in the term sum.
    std::size_t monomials_nonzero = 0;
    double seconds = 0.0;
    /// Smallest mismatching monomial in canonical order.
    std::optional<Mismatch> witness;
    std::vector<Mismatch> diff;
};

/// Checks scale * target == sum of terms exactly.
///
/// Expand mode sums the multinomial expansion of every term into a hash map.
/// Stream mode never builds the sum: each monomial is assigned to the first
/// term whose support contains it, and that term computes the monomial's full
/// coefficient directly from the closed form over every term containing it.
/// The two modes are independent routes and must produce identical reports
/// apart from timing.
VerificationReport verify_power_decomposition(const PowerDecomposition& dec, const VerifyOptions& options = {});

/// Closed-form coefficient of x_I in sum_j (-1)^{(d+1)j} (sum_i w^{ij} x_i)^d.
Cyc lemma_coefficient(const MultiIndex& index, int d);

struct LemmaReport {
    bool agree = false;
    std::size_t monomials = 0;
    std::optional<std::vector<int>> witness;
};

/// Expands the lemma polynomial and compares every degree-d coefficient with
/// lemma_coefficient. Uses the diagonal variables x_{i,i} as x_i.
LemmaReport verify_lemma(int d);

/// Coefficient of x_{I,J} in det_d: the sign of sigma_{I,J}, or 0.
Cyc det_coefficient(const IJPair& pair, int order = 1);

struct ProductReport {
    bool equal = false;
    /// Sum over the products of their expanded sizes, before cancellation.
    std::size_t raw_monomials = 0;
    std::size_t final_monomials = 0;
};

ProductReport verify_product_identity(const ProductDecomposition& pd);

}  // namespace waring
