#include "waring/decompositions.hpp"

#include <array>

namespace waring {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::Main: return "main";
        case Scheme::Classical: return "classical";
        case Scheme::Gurvits: return "gurvits";
        case Scheme::Monomial: return "monomial";
    }
    return "main";
}

std::string_view to_string(Target target) {
    return target == Target::Determinant ? "det" : "diagonal_product";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    for (const auto s : {Scheme::Main, Scheme::Classical, Scheme::Gurvits, Scheme::Monomial})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

std::optional<Target> parse_target(std::string_view name) {
    if (name == "det") return Target::Determinant;
    if (name == "diagonal_product") return Target::DiagonalProduct;
    return std::nullopt;
}

SparsePoly PowerDecomposition::target_poly() const {
    if (target == Target::Determinant) return determinant_poly(d, order);
    std::vector<VarId> diagonal;
    for (int i = 1; i <= d; ++i) diagonal.push_back({i, i});
    SparsePoly p(order);
    p.add_term(Monomial::from_vars(diagonal), Cyc(order, 1L));
    return p;
}

std::size_t expected_term_count(Scheme scheme, int d) {
    if (d < 1) throw DomainError("expected_term_count: d must be positive");
    std::size_t fact = 1;
    for (int k = 2; k <= d; ++k) fact *= static_cast<std::size_t>(k);
    const std::size_t half_cube = std::size_t{1} << (d - 1);
    switch (scheme) {
        case Scheme::Main: return static_cast<std::size_t>(d) * fact;
        case Scheme::Classical: return half_cube * fact;
        case Scheme::Gurvits: return d == 1 ? 1 : static_cast<std::size_t>(d + 1) * fact;
        case Scheme::Monomial: return half_cube;
    }
    return 0;
}

namespace {

void check_degree(int d) {
    if (d < 1) throw DomainError("decomposition: d must be positive");
    if (d > kMaxDegree) throw DomainError("decomposition: d exceeds monomial capacity");
}

long main_sign(int d, int j) {
    return ((d + 1) * j) % 2 == 0 ? 1 : -1;
}

// Sign vectors with first entry +1, enumerated by a binary counter over entries 2..d.
std::vector<std::vector<int>> half_sign_vectors(int d) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::vector<int> eps(static_cast<std::size_t>(d), 1);
        for (int i = 2; i <= d; ++i)
            if (mask & (1u << (i - 2))) eps[static_cast<std::size_t>(i - 1)] = -1;
        out.push_back(std::move(eps));
    }
    return out;
}

int product_of(const std::vector<int>& eps) {
    int p = 1;
    for (const int e : eps) p *= e;
    return p;
}

}  // namespace

PowerDecomposition main_decomposition(int d) {
    check_degree(d);
    PowerDecomposition dec;
    dec.d = d;
    dec.order = d;
    dec.scheme = Scheme::Main;
    dec.target = Target::Determinant;
    dec.scale = Integer(d) * factorial(d);
    for (const auto& sigma : all_permutations(d)) {
        for (int j = 1; j <= d; ++j) {
            PowerTerm term;
            term.index.perm = sigma;
            term.index.j = j;
            term.coeff = Cyc(d, static_cast<long>(sigma.sign()) * main_sign(d, j));
            term.form = LinForm(d, d);
            for (int i = 1; i <= d; ++i) term.form.coeffs()(i, sigma(i)) = Cyc::root(d, static_cast<long>(i) * j);
            term.exponent = d;
            dec.terms.push_back(std::move(term));
        }
    }
    return dec;
}

PowerDecomposition classical_decomposition(int d) {
    check_degree(d);
    PowerDecomposition dec;
    dec.d = d;
    dec.order = 1;
    dec.scheme = Scheme::Classical;
    dec.target = Target::Determinant;
    dec.scale = (Integer(1) << (d - 1)) * factorial(d);
    const auto signs = half_sign_vectors(d);
    for (const auto& sigma : all_permutations(d)) {
        for (const auto& eps : signs) {
            PowerTerm term;
            term.index.perm = sigma;
            term.index.signs = eps;
            term.coeff = Cyc(1, static_cast<long>(sigma.sign() * product_of(eps)));
            term.form = LinForm(d, 1);
            for (int i = 1; i <= d; ++i) term.form.coeffs()(i, sigma(i)) = Cyc(1, static_cast<long>(eps[static_cast<std::size_t>(i - 1)]));
            term.exponent = d;
            dec.terms.push_back(std::move(term));
        }
    }
    return dec;
}

PowerDecomposition gurvits_decomposition(int d) {
    check_degree(d);
    PowerDecomposition dec;
    dec.d = d;
    dec.order = 1;
    dec.scheme = Scheme::Gurvits;
    dec.target = Target::Determinant;
    dec.scale = factorial(d);
    for (const auto& sigma : all_permutations(d)) {
        // j = 0 is the full row sum; j = k omits row k. At d = 1 the omitted sum is
        // the zero form, so that term is left out.
        for (int j = 0; j <= d; ++j) {
            if (d == 1 && j == 1) continue;
            PowerTerm term;
            term.index.perm = sigma;
            term.index.j = j;
            term.coeff = Cyc(1, static_cast<long>(j == 0 ? sigma.sign() : -sigma.sign()));
            term.form = LinForm(d, 1);
            for (int i = 1; i <= d; ++i)
                if (i != j) term.form.coeffs()(i, sigma(i)) = Cyc(1, 1L);
            term.exponent = d;
            dec.terms.push_back(std::move(term));
        }
    }
    return dec;
}

PowerDecomposition monomial_power_decomposition(int d) {
    check_degree(d);
    PowerDecomposition dec;
    dec.d = d;
    dec.order = 1;
    dec.scheme = Scheme::Monomial;
    dec.target = Target::DiagonalProduct;
    dec.scale = (Integer(1) << (d - 1)) * factorial(d);
    for (const auto& eps : half_sign_vectors(d)) {
        PowerTerm term;
        term.index.signs = eps;
        term.coeff = Cyc(1, static_cast<long>(product_of(eps)));
        term.form = LinForm(d, 1);
        for (int i = 1; i <= d; ++i) term.form.coeffs()(i, i) = Cyc(1, static_cast<long>(eps[static_cast<std::size_t>(i - 1)]));
        term.exponent = d;
        dec.terms.push_back(std::move(term));
    }
    return dec;
}

PowerDecomposition make_decomposition(Scheme scheme, int d) {
    switch (scheme) {
        case Scheme::Main: return main_decomposition(d);
        case Scheme::Classical: return classical_decomposition(d);
        case Scheme::Gurvits: return gurvits_decomposition(d);
        case Scheme::Monomial: return monomial_power_decomposition(d);
    }
    throw DomainError("make_decomposition: unknown scheme");
}

// ---------------------------------------------------------------------------

namespace {

struct Entry {
    int row;
    int col;
    long coeff;
};

LinForm form_of(std::initializer_list<Entry> entries) {
    LinForm form(3, 1);
    for (const auto& e : entries) form.coeffs()(e.row, e.col) = Cyc(1, e.coeff);
    return form;
}

}  // namespace

ProductDecomposition krishna_makam_det3() {
    ProductDecomposition pd;
    pd.d = 3;
    // x11 (x22 + x23) (x31 + x33)
    pd.terms.push_back({+1, {form_of({{1, 1, 1}}), form_of({{2, 2, 1}, {2, 3, 1}}), form_of({{3, 1, 1}, {3, 3, 1}})}});
    // (x12 + x13) x21 x32
    pd.terms.push_back({+1, {form_of({{1, 2, 1}, {1, 3, 1}}), form_of({{2, 1, 1}}), form_of({{3, 2, 1}})}});
    // - (x11 + x13) x22 x31
    pd.terms.push_back({-1, {form_of({{1, 1, 1}, {1, 3, 1}}), form_of({{2, 2, 1}}), form_of({{3, 1, 1}})}});
    // - x12 (x21 + x23) (x32 + x33)
    pd.terms.push_back({-1, {form_of({{1, 2, 1}}), form_of({{2, 1, 1}, {2, 3, 1}}), form_of({{3, 2, 1}, {3, 3, 1}})}});
    // (x12 - x11) x23 (x31 + x32 + x33)
    pd.terms.push_back({+1, {form_of({{1, 2, 1}, {1, 1, -1}}), form_of({{2, 3, 1}}), form_of({{3, 1, 1}, {3, 2, 1}, {3, 3, 1}})}});
    return pd;
}

// ---------------------------------------------------------------------------

std::vector<BoundsRow> bounds_table(int d_max) {
    if (d_max < 2 || d_max > 20) throw DomainError("bounds_table: d_max must lie in [2, 20]");
    std::vector<BoundsRow> rows;
    for (int d = 2; d <= d_max; ++d) {
        BoundsRow row;
        row.d = d;
        const Integer fact = factorial(d);
        row.classical = (Integer(1) << (d - 1)) * fact;
        Rational derksen(row.classical);
        for (int k = 0; k < d / 3; ++k) derksen *= Rational(5, 6);
        derksen.canonicalize();
        if (derksen.get_den() != 1) throw DomainError("bounds_table: Derksen bound is not integral");
        row.derksen = derksen.get_num();
        row.gurvits = Integer(d + 1) * fact;
        if (d == 3) row.cglv = Integer(18);
        row.upper = Integer(d) * fact;
        row.lower = d == 3 ? Integer(17) : binomial(2 * d, d) - binomial(2 * d - 2, d - 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace waring
