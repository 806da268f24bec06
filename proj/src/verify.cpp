#include "waring/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>

#include "waring/parallel.hpp"

namespace waring {

MultiIndex::MultiIndex(std::vector<int> entries, int d) : entries_(std::move(entries)), d_(d) {
    for (const int e : entries_)
        if (e < 1 || e > d_) throw DomainError("MultiIndex: entry outside [1,d]");
    std::sort(entries_.begin(), entries_.end());
}

std::vector<int> MultiIndex::multiplicities() const {
    std::vector<int> lambda(static_cast<std::size_t>(d_), 0);
    for (const int e : entries_) ++lambda[static_cast<std::size_t>(e - 1)];
    return lambda;
}

std::vector<int> MultiIndex::support() const {
    std::vector<int> out(entries_.begin(), entries_.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Monomial IJPair::monomial() const {
    if (rows.size() != cols.size()) throw DomainError("IJPair: row and column tuples differ in length");
    std::vector<VarId> vars;
    for (std::size_t k = 0; k < rows.size(); ++k) vars.push_back({rows[k], cols[k]});
    return Monomial::from_vars(vars);
}

namespace {

using Clock = std::chrono::steady_clock;
using TermMap = SparsePoly::TermMap;

TermMap scaled_target(const PowerDecomposition& dec) {
    TermMap out;
    const Cyc scale(dec.order, dec.scale);
    const SparsePoly target = dec.target_poly();
    for (const auto& [m, c] : target.terms()) out.emplace(m, c * scale);
    return out;
}

struct MismatchSink {
    bool full = false;
    std::optional<Mismatch> first;
    std::vector<Mismatch> all;

    void add(const Monomial& m, const Cyc& expected, const Cyc& actual) {
        if (!first || m < first->monomial) first = Mismatch{m, expected, actual};
        if (full) all.push_back(Mismatch{m, expected, actual});
    }

    void merge(MismatchSink&& other) {
        if (other.first && (!first || other.first->monomial < first->monomial)) first = std::move(other.first);
        for (auto& mm : other.all) all.push_back(std::move(mm));
    }
};

struct Tally {
    std::size_t generated = 0;
    std::size_t nonzero = 0;
    MismatchSink mismatches;
};

Tally verify_expand(const PowerDecomposition& dec, const TermMap& target, const VerifyOptions& options) {
    const std::size_t n = dec.terms.size();
    std::vector<TermMap> partial(std::max<std::size_t>(1, std::min<std::size_t>(resolve_jobs(options.jobs), n)));
    const std::size_t used = parallel_blocks(n, options.jobs, [&](std::size_t block, std::size_t begin, std::size_t end) {
        TermMap& acc = partial[block];
        for (std::size_t t = begin; t < end; ++t) {
            const auto& term = dec.terms[t];
            for_each_power_term(term.form, term.exponent, term.coeff, [&](const Monomial& m, const Cyc& c) {
                auto [it, inserted] = acc.try_emplace(m, c);
                if (!inserted) it->second += c;
            });
        }
    });
    TermMap& sum = partial[0];
    for (std::size_t b = 1; b < used; ++b) {
        for (auto& [m, c] : partial[b]) {
            auto [it, inserted] = sum.try_emplace(m, std::move(c));
            if (!inserted) it->second += c;
        }
        TermMap{}.swap(partial[b]);
    }

    Tally tally;
    tally.mismatches.full = options.full_diff;
    tally.generated = sum.size();
    const Cyc zero(dec.order);
    for (const auto& [m, c] : sum) {
        if (!c.is_zero()) ++tally.nonzero;
        const auto it = target.find(m);
        const Cyc& expected = it == target.end() ? zero : it->second;
        if (!(c == expected)) tally.mismatches.add(m, expected, c);
    }
    for (const auto& [m, c] : target)
        if (!sum.contains(m)) tally.mismatches.add(m, c, zero);
    return tally;
}

// Per-term data for the streaming route.
struct StreamTerm {
    std::vector<std::uint8_t> codes;
    std::array<std::int8_t, 256> position{};
    std::vector<std::vector<Cyc>> powers;  // powers[pos][l] = c^l
};

Tally verify_stream(const PowerDecomposition& dec, const TermMap& target, const VerifyOptions& options) {
    const std::size_t n = dec.terms.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<StreamTerm> info(n);
    std::vector<std::vector<std::uint64_t>> holders(256);
    int max_exponent = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const auto& term = dec.terms[t];
        max_exponent = std::max(max_exponent, term.exponent);
        auto& st = info[t];
        st.position.fill(-1);
        for (const auto& [v, c] : term.form.support()) {
            const auto code = v.code();
            st.position[code] = static_cast<std::int8_t>(st.codes.size());
            st.codes.push_back(code);
            std::vector<Cyc> pw{Cyc(dec.order, 1L)};
            for (int l = 1; l <= term.exponent; ++l) pw.push_back(pw.back() * c);
            st.powers.push_back(std::move(pw));
            auto& bits = holders[code];
            if (bits.empty()) bits.assign(words, 0);
            bits[t / 64] |= std::uint64_t{1} << (t % 64);
        }
    }
    std::vector<Integer> fact;
    for (int k = 0; k <= max_exponent; ++k) fact.push_back(factorial(k));

    const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_jobs(options.jobs), n));
    std::vector<Tally> tallies(blocks);
    const std::size_t used = parallel_blocks(n, options.jobs, [&](std::size_t block, std::size_t begin, std::size_t end) {
        Tally& tally = tallies[block];
        tally.mismatches.full = options.full_diff;
        std::vector<const std::uint64_t*> rows;
        std::vector<std::uint64_t> meet(words);
        Cyc sum(dec.order);
        Cyc product(dec.order);
        const Cyc zero(dec.order);
        for (std::size_t t = begin; t < end; ++t) {
            const auto& st = info[t];
            const int e = dec.terms[t].exponent;
            for_each_weak_composition(e, static_cast<int>(st.codes.size()), [&](std::span<const int> lambda) {
                rows.clear();
                for (std::size_t k = 0; k < lambda.size(); ++k)
                    if (lambda[k] > 0) rows.push_back(holders[st.codes[k]].data());
                // The owner is the first term containing every variable of the monomial.
                std::size_t w = 0;
                for (; w < words; ++w) {
                    std::uint64_t acc = ~std::uint64_t{0};
                    for (const auto* r : rows) acc &= r[w];
                    meet[w] = acc;
                    if (acc != 0) break;
                }
                const std::size_t owner = w * 64 + static_cast<std::size_t>(std::countr_zero(meet[w]));
                if (owner != t) return;
                for (std::size_t w2 = w + 1; w2 < words; ++w2) {
                    std::uint64_t acc = ~std::uint64_t{0};
                    for (const auto* r : rows) acc &= r[w2];
                    meet[w2] = acc;
                }

                Monomial m;
                Integer coeff = fact[static_cast<std::size_t>(e)];
                for (std::size_t k = 0; k < lambda.size(); ++k) {
                    for (int r = 0; r < lambda[k]; ++r) m.push_sorted(st.codes[k]);
                    coeff /= fact[static_cast<std::size_t>(lambda[k])];
                }
                sum = zero;
                for (std::size_t w2 = w; w2 < words; ++w2) {
                    for (std::uint64_t bits = meet[w2]; bits != 0; bits &= bits - 1) {
                        const std::size_t other = w2 * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                        const auto& ot = info[other];
                        if (dec.terms[other].exponent != e) continue;
                        product = dec.terms[other].coeff;
                        for (std::size_t k = 0; k < lambda.size(); ++k) {
                            if (lambda[k] == 0) continue;
                            const auto pos = static_cast<std::size_t>(ot.position[st.codes[k]]);
                            product *= ot.powers[pos][static_cast<std::size_t>(lambda[k])];
                        }
                        sum += product;
                    }
                }
                sum *= coeff;
                ++tally.generated;
                if (!sum.is_zero()) ++tally.nonzero;
                const auto it = target.find(m);
                const Cyc& expected = it == target.end() ? zero : it->second;
                if (!(sum == expected)) tally.mismatches.add(m, expected, sum);
            });
        }
    });

    Tally total = std::move(tallies[0]);
    for (std::size_t b = 1; b < used; ++b) {
        total.generated += tallies[b].generated;
        total.nonzero += tallies[b].nonzero;
        total.mismatches.merge(std::move(tallies[b].mismatches));
    }
    // Target monomials that no term can produce.
    const Cyc zero(dec.order);
    for (const auto& [m, c] : target) {
        bool covered = words > 0;
        for (std::size_t w = 0; w < words && covered; ++w) {
            std::uint64_t acc = ~std::uint64_t{0};
            for (const auto code : m.codes()) {
                const auto& bits = holders[code];
                acc &= bits.empty() ? 0 : bits[w];
            }
            if (acc != 0) break;
            covered = w + 1 < words;
        }
        // Monomials of a different degree than the terms are never generated either.
        const bool degree_ok = std::any_of(dec.terms.begin(), dec.terms.end(), [&](const PowerTerm& pt) { return pt.exponent == m.degree(); });
        if (!covered || !degree_ok) total.mismatches.add(m, c, zero);
    }
    return total;
}

}  // namespace

VerificationReport verify_power_decomposition(const PowerDecomposition& dec, const VerifyOptions& options) {
    const auto start = Clock::now();
    for (const auto& term : dec.terms)
        if (term.coeff.order() != dec.order || term.form.order() != dec.order)
            throw DomainError("verify_power_decomposition: term lives in a different field");
    const TermMap target = scaled_target(dec);
    Tally tally = options.mode == VerifyMode::Expand ? verify_expand(dec, target, options) : verify_stream(dec, target, options);

    VerificationReport report;
    report.mode = options.mode;
    report.term_count = dec.terms.size();
    report.monomials_generated = tally.generated;
    report.monomials_nonzero = tally.nonzero;
    report.equal = !tally.mismatches.first.has_value();
    report.witness = std::move(tally.mismatches.first);
    report.diff = std::move(tally.mismatches.all);
    std::sort(report.diff.begin(), report.diff.end(), [](const Mismatch& a, const Mismatch& b) { return a.monomial < b.monomial; });
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------

Cyc lemma_coefficient(const MultiIndex& index, int d) {
    if (index.dim() != d || static_cast<int>(index.entries().size()) != d)
        throw DomainError("lemma_coefficient: index must have d entries in [1,d]");
    long sum = 0;
    for (const int i : index.entries()) sum += i;
    const long target = static_cast<long>(d) * (d + 1) / 2;
    if (((sum - target) % d + d) % d != 0) return Cyc(d);
    const auto lambda = index.multiplicities();
    return Cyc(d, Integer(multinomial(d, lambda) * d));
}

LemmaReport verify_lemma(int d) {
    if (d < 2 || d > 6) throw DomainError("verify_lemma: d must lie in [2, 6]");
    SparsePoly p(d);
    for (int j = 1; j <= d; ++j) {
        LinForm form(d, d);
        for (int i = 1; i <= d; ++i) form.coeffs()(i, i) = Cyc::root(d, static_cast<long>(i) * j);
        SparsePoly power = expand_power(form, d);
        if (((d + 1) * j) % 2 != 0) power *= Cyc(d, -1L);
        p += power;
    }
    LemmaReport report;
    report.agree = true;
    for_each_weak_composition(d, d, [&](std::span<const int> lambda) {
        std::vector<int> entries;
        std::vector<std::pair<VarId, int>> exps;
        for (int k = 1; k <= d; ++k) {
            const int mult = lambda[static_cast<std::size_t>(k - 1)];
            entries.insert(entries.end(), static_cast<std::size_t>(mult), k);
            exps.push_back({VarId{k, k}, mult});
        }
        ++report.monomials;
        const Cyc expanded = p.coefficient(Monomial::from_exponents(exps));
        const Cyc closed = lemma_coefficient(MultiIndex(entries, d), d);
        if (!(expanded == closed) && report.agree) {
            report.agree = false;
            report.witness = entries;
        }
    });
    return report;
}

Cyc det_coefficient(const IJPair& pair, int order) {
    const std::size_t d = pair.rows.size();
    if (pair.cols.size() != d) throw DomainError("det_coefficient: row and column tuples differ in length");
    std::vector<int> images(d, 0);
    std::vector<bool> col_seen(d + 1, false);
    for (std::size_t k = 0; k < d; ++k) {
        const int i = pair.rows[k];
        const int j = pair.cols[k];
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > d || static_cast<std::size_t>(j) > d)
            throw DomainError("det_coefficient: index outside [1,d]");
        // Supp(I) = Supp(J) = [d] iff every row and every column occurs exactly once.
        if (images[static_cast<std::size_t>(i - 1)] != 0 || col_seen[static_cast<std::size_t>(j)]) return Cyc(order);
        images[static_cast<std::size_t>(i - 1)] = j;
        col_seen[static_cast<std::size_t>(j)] = true;
    }
    return Cyc(order, static_cast<long>(Perm(images).sign()));
}

ProductReport verify_product_identity(const ProductDecomposition& pd) {
    ProductReport report;
    SparsePoly sum(1);
    for (const auto& term : pd.terms) {
        SparsePoly product = SparsePoly::constant(Cyc(1, static_cast<long>(term.sign)));
        for (const auto& factor : term.factors) product *= factor.to_poly().with_order(1);
        report.raw_monomials += product.size();
        sum += product;
    }
    report.final_monomials = sum.size();
    report.equal = sum == determinant_poly(pd.d, 1);
    return report;
}

}  // namespace waring
