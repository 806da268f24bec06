#include "waring/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "waring/parallel.hpp"

namespace waring {

namespace {

int mod(long x, int d) {
    const long r = x % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

int inverse_mod(int a, int d) {
    for (int x = 0; x < d; ++x)
        if (mod(static_cast<long>(a) * x, d) == 1 % d) return x;
    throw DomainError("inverse_mod: not a unit");
}

std::vector<int> units(int d) {
    std::vector<int> out;
    for (int a = d == 1 ? 0 : 1; a < std::max(d, 1); ++a)
        if (std::gcd(a, d) == 1) out.push_back(a);
    return out;
}

int parity(long e) { return e % 2 == 0 ? 1 : -1; }

int largest_moved_point(const Perm& x) {
    for (int i = x.size(); i >= 1; --i)
        if (x(i) != i) return i;
    return 0;
}

bool nested_less(const Perm& x, const Perm& y) {
    const int a = largest_moved_point(x);
    const int b = largest_moved_point(y);
    return a != b ? a < b : x < y;
}

using Entry = std::tuple<int, int, Cyc>;

std::optional<MonoMatrix> membership_from_entries(int d, const std::vector<Entry>& entries) {
    if (static_cast<int>(entries.size()) != d) return std::nullopt;
    std::vector<int> images(static_cast<std::size_t>(d), 0);
    std::vector<int> exps(static_cast<std::size_t>(d), 0);
    std::vector<bool> used(static_cast<std::size_t>(d) + 1, false);
    for (const auto& [r, c, value] : entries) {
        if (images[static_cast<std::size_t>(r - 1)] != 0 || used[static_cast<std::size_t>(c)]) return std::nullopt;
        const auto e = value.as_root_power();
        if (!e) return std::nullopt;
        images[static_cast<std::size_t>(r - 1)] = c;
        used[static_cast<std::size_t>(c)] = true;
        exps[static_cast<std::size_t>(r - 1)] = *e;
    }
    const int j = d == 1 ? 0 : mod(exps[1] - exps[0], d);
    const int k = mod(exps[0] - j, d);
    for (int i = 1; i <= d; ++i)
        if (exps[static_cast<std::size_t>(i - 1)] != mod(k + static_cast<long>(i) * j, d)) return std::nullopt;
    return MonoMatrix{k, j, Perm(images)};
}

}  // namespace

int jacobi_symbol(long a, long n) {
    if (n <= 0 || n % 2 == 0) throw DomainError("jacobi_symbol: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// ---------------------------------------------------------------------------

CycMatrix MonoMatrix::to_matrix() const {
    const int d = dim();
    CycMatrix x(d, d);
    for (int i = 1; i <= d; ++i) x(i, sigma(i)) = Cyc::root(d, static_cast<long>(k) + static_cast<long>(i) * j);
    return x;
}

std::string MonoMatrix::to_string() const {
    std::ostringstream out;
    out << "w^" << k << " D^" << j << " P" << sigma.to_string();
    return out.str();
}

std::optional<MonoMatrix> mono_membership(const CycMatrix& x) {
    const int d = x.dim();
    if (d < 1 || x.order() != d) return std::nullopt;
    std::vector<Entry> entries;
    for (int r = 1; r <= d; ++r)
        for (int c = 1; c <= d; ++c) {
            if (x(r, c).is_zero()) continue;
            if (static_cast<int>(entries.size()) == d) return std::nullopt;
            entries.emplace_back(r, c, x(r, c));
        }
    return membership_from_entries(d, entries);
}

std::vector<MonoMatrix> all_mono_matrices(int d) {
    std::vector<MonoMatrix> out;
    const auto perms = all_permutations(d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
            for (const auto& sigma : perms) out.push_back({k, j, sigma});
    return out;
}

CycMatrix diagonal_D(int d) {
    CycMatrix x(d, d);
    for (int i = 1; i <= d; ++i) x(i, i) = Cyc::root(d, i);
    return x;
}

CycMatrix permutation_matrix(const Perm& sigma, int order) {
    CycMatrix x(sigma.size(), order);
    for (int i = 1; i <= sigma.size(); ++i) x(i, sigma(i)) = Cyc(order, 1L);
    return x;
}

// ---------------------------------------------------------------------------

int AffinePerm::operator()(int i) const {
    const int r = mod(static_cast<long>(a) * i + b, d);
    return r == 0 ? d : r;
}

Perm AffinePerm::to_perm() const {
    std::vector<int> images;
    for (int i = 1; i <= d; ++i) images.push_back((*this)(i));
    return Perm(images);
}

AffinePerm AffinePerm::compose(const AffinePerm& rhs) const {
    return {d, mod(static_cast<long>(a) * rhs.a, d), mod(static_cast<long>(a) * rhs.b + b, d)};
}

AffinePerm AffinePerm::inverse() const {
    const int ai = inverse_mod(a, d);
    return {d, ai, mod(-static_cast<long>(ai) * b, d)};
}

std::vector<AffinePerm> affine_group(int d) {
    if (d < 1) throw DomainError("affine_group: d must be positive");
    std::vector<AffinePerm> out;
    for (const int a : units(d))
        for (int b = 0; b < d; ++b) out.push_back({d, a, b});
    return out;
}

bool is_affine(const Perm& pi) {
    const int d = pi.size();
    const int b = mod(pi(d), d);
    const int a = mod(pi(1) - b, d);
    const AffinePerm candidate{d, a, b};
    for (int i = 1; i <= d; ++i)
        if (candidate(i) != pi(i)) return false;
    return std::gcd(a, d) == 1;
}

AffineLemmaReport affine_lemma_check(int d) {
    if (d < 2 || d > 8) throw DomainError("affine_lemma_check: d must lie in [2, 8]");
    AffineLemmaReport report;
    report.ok = true;
    const CycMatrix D = diagonal_D(d);
    for (const auto& pi : all_permutations(d)) {
        ++report.permutations;
        const CycMatrix p = permutation_matrix(pi, d);
        const auto member = mono_membership(p * D);
        const bool affine = is_affine(pi);
        if (member) ++report.in_m;
        if (affine) ++report.affine;
        bool good = member.has_value() == affine;
        if (good && affine) {
            const int b = mod(pi(d), d);
            const int a = mod(pi(1) - b, d);
            CycMatrix rhs = CycMatrix::identity(d, d);
            for (int t = 0; t < a; ++t) rhs = rhs * D;
            rhs = rhs * p;
            const Cyc scalar = Cyc::root(d, b);
            for (int r = 1; r <= d; ++r)
                for (int c = 1; c <= d; ++c) rhs(r, c) *= scalar;
            good = rhs == p * D;
        }
        if (!good && report.ok) {
            report.ok = false;
            report.witness = pi;
        }
    }
    return report;
}

SignFormulaReport sign_formula_check(int d) {
    if (d < 2 || d > 64) throw DomainError("sign_formula_check: d must lie in [2, 64]");
    SignFormulaReport report;
    report.ok = true;
    auto fail = [&](std::string what) {
        if (report.ok) report.witness = std::move(what);
        report.ok = false;
    };
    for (int b = 0; b < d; ++b) {
        ++report.checks;
        const int direct = AffinePerm{d, 1, b}.to_perm().sign();
        if (direct != parity(static_cast<long>(b) * (d + 1))) fail("shift b=" + std::to_string(b));
    }
    for (const int a : units(d)) {
        ++report.checks;
        const int direct = AffinePerm{d, a, 0}.to_perm().sign();
        const int formula = d % 2 == 1 ? jacobi_symbol(a, d) : parity(static_cast<long>(d / 2 + 1) * ((a - 1) / 2));
        if (direct != formula) fail("scale a=" + std::to_string(a));
    }
    return report;
}

// ---------------------------------------------------------------------------

int SymElement::determinant_multiplier() const {
    return parity(static_cast<long>(d + 1) * n) * pi.to_perm().sign() * sigma.sign();
}

std::array<int, 3> SymElement::apply_basis(int r, int c) const {
    // (w^m D^n P_pi E_{r,c} P_sigma) has its entry at (pi^{-1}(r), sigma(c)).
    const int row = pi.inverse()(r);
    return {row, sigma(c), mod(m + static_cast<long>(n) * row, d)};
}

CycMatrix SymElement::apply(const CycMatrix& x) const {
    if (x.dim() != d || x.order() != d) throw DomainError("SymElement::apply: matrix has the wrong shape or field");
    const AffinePerm pi_inv = pi.inverse();
    CycMatrix y(d, d);
    for (int r = 1; r <= d; ++r)
        for (int c = 1; c <= d; ++c) {
            if (x(r, c).is_zero()) continue;
            const int row = pi_inv(r);
            y(row, sigma(c)) = x(r, c) * Cyc::root(d, m + static_cast<long>(n) * row);
        }
    return y;
}

MonoMatrix SymElement::apply(const MonoMatrix& x) const {
    return {mod(m + x.k + static_cast<long>(pi.b) * x.j, d), mod(n + static_cast<long>(pi.a) * x.j, d), sigma * x.sigma * pi.to_perm()};
}

std::string SymElement::to_string() const {
    std::ostringstream out;
    out << "(m=" << m << ", n=" << n << ", pi=" << pi.a << "i+" << pi.b << ", sigma=" << sigma.to_string() << ")";
    return out.str();
}

SymElement identity_symmetry(int d) {
    return {d, 0, 0, AffinePerm{d, d == 1 ? 0 : 1, 0}, Perm::identity(d)};
}

SymElement compose(const SymElement& h1, const SymElement& h2) {
    if (h1.d != h2.d) throw DomainError("compose: elements act on different sizes");
    const int d = h1.d;
    return {d, mod(h1.m + h2.m + static_cast<long>(h1.pi.b) * h2.n, d), mod(h1.n + static_cast<long>(h1.pi.a) * h2.n, d),
            h2.pi.compose(h1.pi), h1.sigma * h2.sigma};
}

SymElement inverse(const SymElement& h) {
    const int d = h.d;
    const int n = mod(-static_cast<long>(inverse_mod(h.pi.a, d)) * h.n, d);
    return {d, mod(-h.m - static_cast<long>(h.pi.b) * n, d), n, h.pi.inverse(), h.sigma.inverse()};
}

std::vector<SymElement> all_symmetries(int d) {
    if (d < 1 || d > 6) throw DomainError("all_symmetries: d must lie in [1, 6]");
    std::vector<SymElement> out;
    const auto aff = affine_group(d);
    const auto perms = all_permutations(d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
            for (const auto& pi : aff)
                for (const auto& sigma : perms) out.push_back({d, m, n, pi, sigma});
    return out;
}

std::vector<SymElement> sample_symmetries(int d, std::size_t count, std::uint64_t seed) {
    if (d < 1) throw DomainError("sample_symmetries: d must be positive");
    std::mt19937_64 rng(seed);
    const auto aff = affine_group(d);
    std::uniform_int_distribution<int> residue(0, d - 1);
    std::uniform_int_distribution<std::size_t> pick(0, aff.size() - 1);
    std::vector<SymElement> out;
    std::vector<int> images(static_cast<std::size_t>(d));
    for (std::size_t s = 0; s < count; ++s) {
        const int m = residue(rng);
        const int n = residue(rng);
        const AffinePerm pi = aff[pick(rng)];
        std::iota(images.begin(), images.end(), 1);
        std::shuffle(images.begin(), images.end(), rng);
        out.push_back({d, m, n, pi, Perm(images)});
    }
    return out;
}

Integer symmetry_order_formula(int d) {
    return Integer(d) * d * d * euler_totient(d) * factorial(d) / 2;
}

std::optional<Integer> symmetry_order_reference(int d) {
    switch (d) {
        case 2: return Integer(8);
        case 3: return Integer(162);
        case 4: return Integer(1536);
        case 5: return Integer(37500);
        case 6: return Integer(15552);
        default: return std::nullopt;
    }
}

SymmetryReport enumerate_symmetries(int d, bool keep_elements) {
    if (d < 2 || d > 6) throw DomainError("enumerate_symmetries: d must lie in [2, 6]");
    SymmetryReport report;
    report.d = d;
    report.formula_order = symmetry_order_formula(d);
    report.reference_order = symmetry_order_reference(d);
    std::uint64_t tilde = 0;
    std::uint64_t h = 0;
    if (d <= 5) {
        std::unordered_set<std::string> keys;
        std::string key(static_cast<std::size_t>(3 * d * d), '\0');
        for (auto& element : all_symmetries(d)) {
            ++tilde;
            if (element.determinant_multiplier() == 1) ++h;
            std::size_t pos = 0;
            for (int r = 1; r <= d; ++r)
                for (int c = 1; c <= d; ++c)
                    for (const int v : element.apply_basis(r, c)) key[pos++] = static_cast<char>(v);
            keys.insert(key);
            if (keep_elements) report.elements.push_back(std::move(element));
        }
        report.faithful = keys.size() == tilde;
    } else {
        const auto perms = all_permutations(d);
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n)
                for (const auto& pi : affine_group(d))
                    for (const auto& sigma : perms) {
                        ++tilde;
                        if (SymElement{d, m, n, pi, sigma}.determinant_multiplier() == 1) ++h;
                    }
    }
    report.tilde_order = Integer(static_cast<unsigned long>(tilde));
    report.h_order = Integer(static_cast<unsigned long>(h));
    report.half_split = 2 * h == tilde;
    return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string term_key(const Perm& sigma, int j) {
    std::string key;
    for (const int v : sigma.images()) key.push_back(static_cast<char>(v));
    key.push_back(static_cast<char>(j));
    return key;
}

// Term supports and the (sigma, j mod d) lookup, shared across group elements.
class ActionContext {
   public:
    explicit ActionContext(const PowerDecomposition& dec) : dec_(dec) {
        if (dec.scheme != Scheme::Main) throw DomainError("symmetry_action: decomposition must be the main scheme");
        for (std::size_t t = 0; t < dec.terms.size(); ++t) {
            const auto& index = dec.terms[t].index;
            lookup_.emplace(term_key(*index.perm, mod(index.j, dec.d)), t);
            std::vector<Entry> entries;
            for (const auto& [v, c] : dec.terms[t].form.support()) entries.emplace_back(v.row, v.col, c);
            supports_.push_back(std::move(entries));
        }
    }

    ActionReport run(const SymElement& h) const {
        if (dec_.d != h.d) throw DomainError("symmetry_action: element and decomposition sizes differ");
        const int d = h.d;
        const AffinePerm pi_inv = h.pi.inverse();
        ActionReport report;
        std::vector<int> hits(dec_.terms.size(), 0);
        std::vector<Entry> image_entries;
        for (std::size_t t = 0; t < dec_.terms.size(); ++t) {
            // Same entry rule as SymElement::apply, restricted to the support.
            image_entries.clear();
            for (const auto& [r, c, value] : supports_[t]) {
                const int row = pi_inv(r);
                image_entries.emplace_back(row, h.sigma(c), value * Cyc::root(d, h.m + static_cast<long>(h.n) * row));
            }
            const auto image = membership_from_entries(d, image_entries);
            const auto it = image ? lookup_.find(term_key(image->sigma, image->j)) : lookup_.end();
            if (it == lookup_.end()) {
                report.structural_ok = false;
                if (!report.failing_term) report.failing_term = t;
                continue;
            }
            ++hits[it->second];
            const Cyc& source = dec_.terms[t].coeff;
            const Cyc& target = dec_.terms[it->second].coeff;
            if (target == source) {
                ++report.preserved;
            } else if (target == -source) {
                ++report.reversed;
            } else {
                report.structural_ok = false;
                if (!report.failing_term) report.failing_term = t;
            }
        }
        report.bijective = std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; });
        return report;
    }

   private:
    const PowerDecomposition& dec_;
    std::unordered_map<std::string, std::size_t> lookup_;
    std::vector<std::vector<Entry>> supports_;
};

}  // namespace

ActionReport symmetry_action(const SymElement& h, const PowerDecomposition& dec) {
    return ActionContext(dec).run(h);
}

bool apply_symmetry(const SymElement& h, const PowerDecomposition& dec) {
    return symmetry_action(h, dec).sign_preserving();
}

GroupActionSummary check_group_action(int d, std::size_t samples, std::uint64_t seed, unsigned jobs) {
    if (d < 2 || d > 6) throw DomainError("check_group_action: d must lie in [2, 6]");
    if (samples == 0 && d > 5) throw DomainError("check_group_action: exhaustive checks are limited to d <= 5");
    const auto elements = samples == 0 ? all_symmetries(d) : sample_symmetries(d, samples, seed);
    const PowerDecomposition dec = main_decomposition(d);
    const ActionContext context(dec);

    struct Partial {
        std::size_t h_elements = 0, h_preserving = 0, other_elements = 0, other_reversing = 0;
        std::optional<std::size_t> first_failure;
    };
    std::vector<Partial> partials(std::max<std::size_t>(1, std::min<std::size_t>(resolve_jobs(jobs), elements.size())));
    const std::size_t used = parallel_blocks(elements.size(), jobs, [&](std::size_t block, std::size_t begin, std::size_t end) {
        Partial& p = partials[block];
        for (std::size_t e = begin; e < end; ++e) {
            const auto report = context.run(elements[e]);
            bool good;
            if (elements[e].determinant_multiplier() == 1) {
                ++p.h_elements;
                good = report.sign_preserving();
                if (good) ++p.h_preserving;
            } else {
                ++p.other_elements;
                good = report.sign_reversing();
                if (good) ++p.other_reversing;
            }
            if (!good && !p.first_failure) p.first_failure = e;
        }
    });
    GroupActionSummary summary;
    summary.d = d;
    summary.sampled = samples != 0;
    summary.elements = elements.size();
    std::optional<std::size_t> first;
    for (std::size_t b = 0; b < used; ++b) {
        summary.h_elements += partials[b].h_elements;
        summary.h_preserving += partials[b].h_preserving;
        summary.other_elements += partials[b].other_elements;
        summary.other_reversing += partials[b].other_reversing;
        if (partials[b].first_failure && (!first || *partials[b].first_failure < *first)) first = partials[b].first_failure;
    }
    if (first) summary.first_failure = elements[*first];
    return summary;
}

TransposeReport transpose_closure(int d) {
    if (d < 2 || d > 6) throw DomainError("transpose_closure: d must lie in [2, 6]");
    auto perms = all_permutations(d);
    std::stable_sort(perms.begin(), perms.end(), nested_less);
    TransposeReport report;
    report.closed = true;
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
            for (const auto& sigma : perms) {
                ++report.checked;
                const MonoMatrix x{k, j, sigma};
                CycMatrix t = x.to_matrix().transpose();
                if (mono_membership(t)) continue;
                report.closed = false;
                report.witness = x;
                report.witness_transpose = std::move(t);
                return report;
            }
    return report;
}

// ---------------------------------------------------------------------------

namespace {

CycMatrix lift(const CycMatrix& x, int order) {
    if (x.order() == order) return x;
    if (x.order() != 1) throw DomainError("conjugate_decomposition: matrix lives in an incompatible field");
    CycMatrix out(x.dim(), order);
    for (int r = 1; r <= x.dim(); ++r)
        for (int c = 1; c <= x.dim(); ++c) out(r, c) = Cyc(order, *x(r, c).as_rational());
    return out;
}

}  // namespace

PowerDecomposition conjugate_decomposition(const CycMatrix& a, const CycMatrix& b, const PowerDecomposition& dec) {
    if (a.dim() != dec.d || b.dim() != dec.d) throw DomainError("conjugate_decomposition: matrix size differs from d");
    const CycMatrix la = lift(a, dec.order);
    const CycMatrix lb = lift(b, dec.order);
    if (!(la * lb).determinant().is_one()) throw DomainError("conjugate_decomposition: det(AB) must equal 1");
    PowerDecomposition out = dec;
    for (auto& term : out.terms) term.form.coeffs() = la * term.form.coeffs() * lb;
    return out;
}

CycMatrix random_unimodular(int d, std::mt19937_64& rng, int steps) {
    CycMatrix x = CycMatrix::identity(d, 1);
    if (d < 2) return x;
    std::uniform_int_distribution<int> row(1, d);
    std::uniform_int_distribution<int> scale(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const int i = row(rng);
        int j = row(rng);
        if (j == i) j = i % d + 1;
        const int c = scale(rng);
        for (int col = 1; col <= d; ++col) x(i, col) += x(j, col) * Integer(c);
    }
    return x;
}

}  // namespace waring
