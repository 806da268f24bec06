#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "waring/cyclotomic.hpp"
#include "waring/matrix.hpp"

namespace waring {

/// Largest matrix dimension representable in a variable code.
inline constexpr int kMaxDim = 16;
/// Largest total degree a Monomial can hold.
inline constexpr int kMaxDegree = 15;

/// The matrix variable x_{row,col}, 1-based.
struct VarId {
    int row = 1;
    int col = 1;

    auto operator<=>(const VarId&) const = default;

    std::uint8_t code() const;
    static VarId from_code(std::uint8_t code) { return {code / kMaxDim + 1, code % kMaxDim + 1}; }
};

/// A monomial in the x_{i,j}, stored as the sorted multiset of its variable
/// codes. Sorting codes orders variables row-major on (i, j), which is the
/// canonical order used for comparison and serialization.
class Monomial {
   public:
    Monomial() = default;

    static Monomial from_vars(std::span<const VarId> vars);
    static Monomial from_exponents(std::span<const std::pair<VarId, int>> exponents);
    static Monomial from_codes(std::span<const std::uint8_t> codes);

    int degree() const noexcept { return size_; }
    std::span<const std::uint8_t> codes() const noexcept { return {codes_.data(), size_}; }
    std::vector<std::pair<VarId, int>> exponents() const;
    int exponent(VarId v) const;

    /// Appends a variable code; the caller keeps the codes sorted.
    void push_sorted(std::uint8_t code);

    Monomial operator*(const Monomial& rhs) const;

    friend bool operator==(const Monomial& lhs, const Monomial& rhs) noexcept {
        return lhs.size_ == rhs.size_ && std::equal(lhs.codes_.begin(), lhs.codes_.begin() + lhs.size_, rhs.codes_.begin());
    }
    friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) noexcept {
        return std::lexicographical_compare_three_way(lhs.codes_.begin(), lhs.codes_.begin() + lhs.size_, rhs.codes_.begin(),
                                                      rhs.codes_.begin() + rhs.size_);
    }

    std::size_t hash() const noexcept;
    /// e.g. "x11^2*x23"; the empty monomial prints as "1".
    std::string to_string() const;

   private:
    std::array<std::uint8_t, kMaxDegree> codes_{};
    std::uint8_t size_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Sparse polynomial over Q(w_d). Zero coefficients are never stored.
class SparsePoly {
   public:
    using TermMap = std::unordered_map<Monomial, Cyc, MonomialHash>;

    explicit SparsePoly(int order = 1) : order_(order) {}

    static SparsePoly variable(int order, VarId v);
    static SparsePoly constant(const Cyc& c);

    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }
    /// Terms in canonical monomial order.
    std::vector<std::pair<Monomial, Cyc>> sorted_terms() const;

    Cyc coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Cyc& c);

    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);
    SparsePoly& operator*=(const Cyc& c);
    SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
    friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
    friend SparsePoly operator*(SparsePoly lhs, const Cyc& c) { return lhs *= c; }
    friend bool operator==(const SparsePoly& lhs, const SparsePoly& rhs) {
        return lhs.order_ == rhs.order_ && lhs.terms_ == rhs.terms_;
    }

    bool is_homogeneous(int degree) const;
    /// Evaluates with x_{i,j} := point(i, j).
    Cyc evaluate(const CycMatrix& point) const;
    /// Renames variables; coefficients of colliding images are added.
    SparsePoly substitute(const std::function<VarId(VarId)>& rename) const;
    /// Reinterprets a polynomial with rational coefficients over Q(w_order).
    SparsePoly with_order(int order) const;

    std::string to_string() const;

   private:
    int order_;
    TermMap terms_;
};

/// Degree-1 form sum_{i,j} c_{i,j} x_{i,j}, held as its d x d coefficient matrix.
class LinForm {
   public:
    LinForm() = default;
    explicit LinForm(CycMatrix coeffs) : coeffs_(std::move(coeffs)) {}
    LinForm(int dim, int order) : coeffs_(dim, order) {}

    int dim() const noexcept { return coeffs_.dim(); }
    int order() const noexcept { return coeffs_.order(); }
    const CycMatrix& coeffs() const noexcept { return coeffs_; }
    CycMatrix& coeffs() noexcept { return coeffs_; }

    bool is_zero() const { return coeffs_.nonzero_count() == 0; }
    /// Nonzero coefficients in row-major order.
    std::vector<std::pair<VarId, Cyc>> support() const;
    SparsePoly to_poly() const;

    friend bool operator==(const LinForm&, const LinForm&) = default;

   private:
    CycMatrix coeffs_;
};

/// d! / prod(lambda_k!); the parts must sum to d.
Integer multinomial(int d, std::span<const int> parts);

/// Calls visit(parts) for every weak composition of total into parts.size()
/// nonnegative parts, in lexicographically decreasing order of parts.
void for_each_weak_composition(int total, int count, const std::function<void(std::span<const int>)>& visit);

/// Streams the terms of scale * form^e, one call per weak composition of e over
/// the form's support. Coefficients follow the multinomial theorem; nothing is
/// expanded by repeated multiplication.
void for_each_power_term(const LinForm& form, int e, const Cyc& scale,
                         const std::function<void(const Monomial&, const Cyc&)>& visit);

SparsePoly expand_power(const LinForm& form, int e);

inline Cyc coefficient(const SparsePoly& p, const Monomial& m) { return p.coefficient(m); }

/// Leibniz expansion of det of the generic d x d matrix (x_{i,j}).
SparsePoly determinant_poly(int d, int order = 1);

/// Permanent of the submatrix on the given rows and columns (1-based).
SparsePoly permanent_poly(std::span<const int> rows, std::span<const int> cols, int order = 1);

}  // namespace waring
