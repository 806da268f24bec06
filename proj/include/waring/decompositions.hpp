#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "waring/multipoly.hpp"
#include "waring/perm.hpp"

namespace waring {

enum class Scheme { Main, Classical, Gurvits, Monomial };
enum class Target { Determinant, DiagonalProduct };

std::string_view to_string(Scheme scheme);
std::string_view to_string(Target target);
std::optional<Scheme> parse_scheme(std::string_view name);
std::optional<Target> parse_target(std::string_view name);

/// Which summand a term is. Main: (perm, j). Classical: (perm, signs).
/// Gurvits: (perm, j) with j = 0 for the full row sum and j = k when row k is
/// omitted. Monomial: signs only.
struct TermIndex {
    std::optional<Perm> perm;
    int j = 0;
    std::vector<int> signs;

    friend bool operator==(const TermIndex&, const TermIndex&) = default;
};

/// coeff * form^exponent
struct PowerTerm {
    TermIndex index;
    Cyc coeff;
    LinForm form;
    int exponent = 0;

    friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// The identity scale * target = sum of terms, with every coefficient and form
/// living in Q(w_order).
struct PowerDecomposition {
    int d = 0;
    int order = 1;
    Scheme scheme = Scheme::Main;
    Target target = Target::Determinant;
    Integer scale = 1;
    std::vector<PowerTerm> terms;

    /// The target polynomial (unscaled) over Q(w_order).
    SparsePoly target_poly() const;

    friend bool operator==(const PowerDecomposition&, const PowerDecomposition&) = default;
};

std::size_t expected_term_count(Scheme scheme, int d);

/// d * d! * det_d = sum_{sigma, j} (-1)^sigma (-1)^{(d+1)j} (sum_i w^{ij} x_{i,sigma i})^d.
PowerDecomposition main_decomposition(int d);
PowerDecomposition classical_decomposition(int d);
PowerDecomposition gurvits_decomposition(int d);
/// 2^{d-1} d! x_{1,1} x_{2,2} ... x_{d,d} as signed d-th powers of sign-vector forms.
PowerDecomposition monomial_power_decomposition(int d);
PowerDecomposition make_decomposition(Scheme scheme, int d);

struct ProductTerm {
    int sign = 1;
    std::vector<LinForm> factors;
};

struct ProductDecomposition {
    int d = 3;
    std::vector<ProductTerm> terms;
};

/// The five-term product-of-linear-forms identity for det_3, integer coefficients.
ProductDecomposition krishna_makam_det3();

struct BoundsRow {
    int d = 0;
    Integer classical;
    Integer derksen;
    Integer gurvits;
    std::optional<Integer> cglv;
    Integer upper;
    Integer lower;
};

/// Upper and lower bounds on the Waring rank of det_d for d = 2..d_max.
std::vector<BoundsRow> bounds_table(int d_max);

}  // namespace waring
