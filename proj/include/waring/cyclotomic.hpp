#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficients of the d-th cyclotomic polynomial, constant term first.
/// Computed by dividing x^d - 1 by the product of Phi_e over proper divisors e.
std::vector<Integer> cyclotomic_polynomial(int d);

int euler_totient(int d);
Integer factorial(int n);
Integer binomial(int n, int k);

/// Reduction data for Q(w_d) = Q[x]/Phi_d. One immutable instance per order,
/// created on first use and never freed.
class CyclotomicField {
   public:
    static const CyclotomicField& of(int order);

    int order() const noexcept { return order_; }
    int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
    /// Phi_d, monic, constant term first.
    std::span<const Integer> modulus() const noexcept { return modulus_; }
    /// Power-basis coordinates of w^k for 0 <= k < order.
    std::span<const Integer> root_power(int k) const { return root_powers_.at(static_cast<std::size_t>(k)); }

    /// Reduces a dense integer polynomial (constant term first) modulo Phi_d in place,
    /// leaving exactly degree() coefficients.
    void reduce(std::vector<Integer>& poly) const;

   private:
    explicit CyclotomicField(int order);

    int order_;
    std::vector<Integer> modulus_;
    std::vector<std::vector<Integer>> root_powers_;
};

/// An exact element of Q(w_d), stored as an integer vector over the power basis
/// 1, w, ..., w^{phi(d)-1} together with a positive common denominator. The
/// representation is reduced (gcd of numerators and denominator is 1), so
/// equality is coefficient-wise.
class Cyc {
   public:
    Cyc() : Cyc(1) {}
    explicit Cyc(int order);
    Cyc(int order, long value);
    Cyc(int order, const Integer& value);
    Cyc(int order, const Rational& value);

    /// w^k for any integer k (negative exponents wrap modulo the order).
    static Cyc root(int order, long k);
    static Cyc from_coefficients(int order, std::span<const Rational> coeffs);

    int order() const noexcept { return field_->order(); }
    int degree() const noexcept { return field_->degree(); }
    const CyclotomicField& field() const noexcept { return *field_; }

    Rational coefficient(int i) const;
    std::vector<Rational> coefficients() const;
    std::span<const Integer> numerators() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_integral() const noexcept { return den_ == 1; }
    std::optional<Rational> as_rational() const;
    /// The k in [0, order) with *this == w^k, if any.
    std::optional<int> as_root_power() const;

    Cyc& operator+=(const Cyc& rhs);
    Cyc& operator-=(const Cyc& rhs);
    Cyc& operator*=(const Cyc& rhs);
    Cyc& operator*=(const Integer& rhs);
    Cyc& operator/=(const Cyc& rhs) { return *this *= rhs.inverse(); }
    Cyc& negate();
    /// *this += a * b without materializing the product.
    Cyc& add_product(const Cyc& a, const Cyc& b);

    Cyc inverse() const;
    Cyc pow(long e) const;

    friend Cyc operator+(Cyc lhs, const Cyc& rhs) { return lhs += rhs; }
    friend Cyc operator-(Cyc lhs, const Cyc& rhs) { return lhs -= rhs; }
    friend Cyc operator*(Cyc lhs, const Cyc& rhs) { return lhs *= rhs; }
    friend Cyc operator*(Cyc lhs, const Integer& rhs) { return lhs *= rhs; }
    friend Cyc operator/(Cyc lhs, const Cyc& rhs) { return lhs /= rhs; }
    friend Cyc operator-(Cyc value) { return value.negate(); }
    friend bool operator==(const Cyc& lhs, const Cyc& rhs);

    /// Human-readable form over the power basis, e.g. "1 - 2*w + 1/2*w^2".
    std::string to_string() const;

   private:
    void check_same_field(const Cyc& rhs) const;
    void normalize();

    const CyclotomicField* field_;
    std::vector<Integer> num_;
    Integer den_{1};
};

/// sum_{j=1}^{d} w^{p j}, computed by summation in Q(w_d).
Cyc root_power_sum(int d, long p);

bool is_prime(std::uint64_t n);

/// An element of GF(p).
struct PrimeScalar {
    std::uint64_t p = 2;
    std::uint64_t value = 0;

    PrimeScalar() = default;
    PrimeScalar(std::uint64_t modulus, std::int64_t v);

    PrimeScalar operator+(PrimeScalar rhs) const;
    PrimeScalar operator-(PrimeScalar rhs) const;
    PrimeScalar operator*(PrimeScalar rhs) const;
    PrimeScalar operator-() const;
    PrimeScalar pow(std::uint64_t e) const;
    PrimeScalar inverse() const;
    bool operator==(const PrimeScalar&) const = default;

    /// The smallest primitive d-th root of unity in GF(p); requires d | p - 1.
    static PrimeScalar root_of_unity(std::uint64_t p, int d);
    /// Image of a rational number under Z_(p) -> GF(p).
    static PrimeScalar from_rational(std::uint64_t p, const Rational& q);
};

}  // namespace waring
