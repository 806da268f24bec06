#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "waring/decompositions.hpp"

namespace oracle {

using waring::Cyc;
using waring::CycMatrix;
using waring::Rational;

/// Image of c under the embedding w -> exp(2 pi i / order).
inline std::complex<double> embed(const Cyc& c) {
    const double step = 2.0 * std::numbers::pi / c.order();
    std::complex<double> z = 0.0;
    const auto coeffs = c.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) z += coeffs[k].get_d() * std::polar(1.0, step * static_cast<double>(k));
    return z;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-7) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

inline Cyc random_cyc(int order, std::mt19937_64& rng, int span = 5) {
    std::vector<Rational> coeffs;
    const int n = waring::euler_totient(order);
    for (int k = 0; k < n; ++k) {
        Rational q(static_cast<long>(rng() % (2 * span + 1)) - span, static_cast<long>(rng() % 3) + 1);
        q.canonicalize();
        coeffs.push_back(q);
    }
    return Cyc::from_coefficients(order, coeffs);
}

inline CycMatrix random_integer_matrix(int d, int order, std::mt19937_64& rng, int span = 4) {
    CycMatrix x(d, order);
    for (int r = 1; r <= d; ++r)
        for (int c = 1; c <= d; ++c) x(r, c) = Cyc(order, static_cast<long>(rng() % (2 * span + 1)) - span);
    return x;
}

inline int inversion_sign(const std::vector<int>& images) {
    int inversions = 0;
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
            if (images[a] > images[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Leibniz expansion with signs from inversion counts.
inline Cyc leibniz_det(const CycMatrix& x) {
    const int d = x.dim();
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    Cyc total(x.order());
    do {
        Cyc term(x.order(), static_cast<long>(inversion_sign(images)));
        for (int i = 1; i <= d; ++i) term *= x(i, images[static_cast<std::size_t>(i - 1)]);
        total += term;
    } while (std::next_permutation(images.begin(), images.end()));
    return total;
}

inline Cyc evaluate_form(const waring::LinForm& form, const CycMatrix& x) {
    Cyc total(x.order());
    for (int r = 1; r <= form.dim(); ++r)
        for (int c = 1; c <= form.dim(); ++c) total += form.coeffs()(r, c) * x(r, c);
    return total;
}

/// sum of coeff * form(x)^e, computed pointwise.
inline Cyc evaluate_decomposition(const waring::PowerDecomposition& dec, const CycMatrix& x) {
    Cyc total(x.order());
    for (const auto& t : dec.terms) total += t.coeff * evaluate_form(t.form, x).pow(t.exponent);
    return total;
}

/// x lifted into Q(w_order); entries must be rational.
inline CycMatrix lift(const CycMatrix& x, int order) {
    CycMatrix y(x.dim(), order);
    for (int r = 1; r <= x.dim(); ++r)
        for (int c = 1; c <= x.dim(); ++c) y(r, c) = Cyc(order, *x(r, c).as_rational());
    return y;
}

/// form^e by repeated multiplication.
inline waring::SparsePoly power_by_multiplication(const waring::LinForm& form, int e) {
    waring::SparsePoly out = waring::SparsePoly::constant(Cyc(form.order(), 1L));
    const auto base = form.to_poly();
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
}

}  // namespace oracle
