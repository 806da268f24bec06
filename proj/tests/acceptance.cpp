#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "waring/cli.hpp"
#include "waring/decompositions.hpp"
#include "waring/independence.hpp"
#include "waring/symmetry.hpp"
#include "waring/varieties.hpp"
#include "waring/verify.hpp"

using namespace waring;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::vector<std::string> lines;

    void check(bool condition, const std::string& what) {
        lines.push_back(std::string(condition ? "ok    " : "FAILED") + "  " + what);
        ok = ok && condition;
    }
    void info(const std::string& what) { lines.push_back("        " + what); }
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

Outcome verify_scheme(Outcome& out, Scheme scheme, int d, double budget) {
    const auto dec = make_decomposition(scheme, d);
    const auto start = Clock::now();
    const auto r = verify_power_decomposition(dec, {VerifyMode::Expand, 0, false});
    const double t = since(start);
    out.check(r.equal && r.term_count == expected_term_count(scheme, d),
              std::string(to_string(scheme)) + " d=" + std::to_string(d) + ": " + std::to_string(r.term_count) + " terms, equal=" +
                  (r.equal ? "true" : "false"));
    out.check(t <= budget, std::string(to_string(scheme)) + " d=" + std::to_string(d) + " in " + secs(t) + " (budget " + secs(budget) + ")");
    return out;
}

Outcome criterion1() {
    Outcome out;
    for (int d = 2; d <= 6; ++d) verify_scheme(out, Scheme::Main, d, d <= 5 ? 5.0 : 60.0);
    return out;
}

Outcome criterion2() {
    Outcome out;
    for (int d = 2; d <= 5; ++d) {
        verify_scheme(out, Scheme::Classical, d, 30.0);
        verify_scheme(out, Scheme::Gurvits, d, 30.0);
    }
    return out;
}

Outcome criterion3() {
    Outcome out;
    for (int d = 2; d <= 6; ++d) verify_scheme(out, Scheme::Monomial, d, 1.0);
    const auto start = Clock::now();
    const auto r = verify_product_identity(krishna_makam_det3());
    const double t = since(start);
    out.check(r.equal && krishna_makam_det3().terms.size() == 5, "five-term product identity for det3, equal=" + std::string(r.equal ? "true" : "false"));
    out.check(t <= 1.0, "product identity in " + secs(t));
    return out;
}

Outcome criterion4() {
    Outcome out;
    const auto start = Clock::now();
    for (int d = 2; d <= 5; ++d) {
        const auto r = verify_lemma(d);
        out.check(r.agree, "d=" + std::to_string(d) + ": " + std::to_string(r.monomials) + " monomials agree");
    }
    const double t = since(start);
    out.check(t <= 10.0, "all lemma checks in " + secs(t));
    return out;
}

Outcome criterion5() {
    Outcome out;
    const long classical[] = {4, 24, 192, 1920, 23040, 322560, 5160960, 92897280};
    const long derksen[] = {4, 20, 160, 1600, 16000, 224000, 3584000, 53760000};
    const long gurvits[] = {6, 24, 120, 720, 5040, 40320, 362880, 3628800};
    const long upper[] = {4, 18, 96, 600, 4320, 35280, 322560, 3265920};
    const long lower[] = {4, 17, 50, 182, 672, 2508, 9438, 35750};
    const auto rows = bounds_table(9);
    out.check(rows.size() == 8, "rows for d = 2..9");
    for (std::size_t k = 0; k < rows.size() && k < 8; ++k) {
        const auto& r = rows[k];
        const bool cglv_ok = r.d == 3 ? (r.cglv && *r.cglv == 18) : !r.cglv;
        out.check(r.classical == classical[k] && r.derksen == derksen[k] && r.gurvits == gurvits[k] && r.upper == upper[k] &&
                      r.lower == lower[k] && cglv_ok,
                  "d=" + std::to_string(r.d) + " row");
        if (r.d >= 2 && r.d <= 6) out.check(r.upper == expected_term_count(Scheme::Main, r.d), "d=" + std::to_string(r.d) + " upper bound equals term count");
    }
    return out;
}

Outcome criterion6() {
    Outcome out;
    for (int d = 2; d <= 5; ++d) {
        const auto r = check_separation(d, false, 0);
        out.check(r.ok(), "separation d=" + std::to_string(d) + ": " + std::to_string(r.entries_checked) + " entries");
    }
    for (int d = 2; d <= 4; ++d) {
        const auto start = Clock::now();
        const auto rank = rank_oracle(d);
        const double t = since(start);
        out.check(rank == expected_term_count(Scheme::Main, d), "rank d=" + std::to_string(d) + " = " + std::to_string(rank) + " in " + secs(t));
        if (d == 4) out.check(t <= 60.0, "rank d=4 within 60s");
    }
    return out;
}

Outcome criterion7() {
    Outcome out;
    const long table[] = {8, 162, 1536, 37500, 15552};
    for (int d = 2; d <= 6; ++d) {
        const auto r = enumerate_symmetries(d);
        const std::string orders = "|H| enumerated " + r.h_order.get_str() + ", formula " + r.formula_order.get_str() + ", published " +
                                   std::to_string(table[d - 2]);
        if (d <= 4) {
            out.check(r.h_order == table[d - 2] && r.matches_formula(), "d=" + std::to_string(d) + ": " + orders);
        } else {
            out.check(r.matches_formula() && r.matches_reference().has_value(), "d=" + std::to_string(d) + ": " + orders);
            if (r.matches_reference() == false) out.info("d=" + std::to_string(d) + ": published value differs from the enumerated order (flagged)");
        }
        if (d <= 5) out.check(r.half_split, "d=" + std::to_string(d) + ": exactly half of the extended group preserves the multiplier");
    }
    for (int d = 2; d <= 4; ++d) {
        const auto start = Clock::now();
        const auto g = check_group_action(d, 0, 0, 0);
        out.check(g.ok() && !g.sampled, "d=" + std::to_string(d) + ": all " + std::to_string(g.h_elements) + " elements of H preserve the terms (" +
                                            secs(since(start)) + ")");
    }
    return out;
}

Outcome criterion8() {
    Outcome out;
    for (int d = 2; d <= 6; ++d) {
        const auto r = affine_lemma_check(d);
        out.check(r.ok, "affine lemma d=" + std::to_string(d) + ": " + std::to_string(r.in_m) + " of " + std::to_string(r.permutations) + " permutations");
    }
    for (int d = 2; d <= 12; ++d) out.check(sign_formula_check(d).ok, "sign formulas d=" + std::to_string(d));
    return out;
}

Outcome criterion9() {
    Outcome out;
    for (int d = 2; d <= 6; ++d) {
        const auto r = transpose_closure(d);
        out.check(r.closed == (d <= 3), "d=" + std::to_string(d) + ": closed=" + (r.closed ? "true" : "false"));
        if (d == 4) {
            const Perm swap = Perm::transposition(4, 1, 2);
            const CycMatrix expected = permutation_matrix(swap, 4) * diagonal_D(4);
            const bool ok = r.witness && r.witness->to_matrix() == diagonal_D(4) * permutation_matrix(swap, 4) && r.witness_transpose &&
                            *r.witness_transpose == expected && !mono_membership(expected);
            out.check(ok, "d=4 witness " + (r.witness ? r.witness->to_string() : std::string("none")) + ", transpose P(12)D outside M");
        }
    }
    return out;
}

Outcome criterion10() {
    Outcome out;
    for (int d = 2; d <= 6; ++d) {
        const auto r = vanish_on_points(d);
        out.check(r.ok, "quadrics d=" + std::to_string(d) + ": " + std::to_string(r.generators) + " generators on " + std::to_string(r.points) + " points");
    }
    const auto e3 = extra_generators(3);
    out.check(vanish_on_points(e3.squares, 3).ok, "d=3 square-minus-permanent generators vanish");
    const auto e4 = extra_generators(4);
    out.check(vanish_on_points(e4.differences, 4).ok, "d=4 permanent differences vanish (" + std::to_string(e4.differences.size()) + ")");
    const auto sq4 = vanish_on_points(e4.squares, 4);
    std::string detail = "d=4 square-sum-minus-permanent generators vanish";
    if (sq4.witness) detail += "; first nonzero: " + e4.squares[sq4.witness->first].label + " at point " + std::to_string(sq4.witness->second);
    out.check(sq4.ok, detail);

    struct LocusCase {
        int d;
        std::uint64_t p;
        LocusMode mode;
    };
    for (const auto& c : {LocusCase{2, 5, LocusMode::Full}, LocusCase{3, 7, LocusMode::Full}, LocusCase{4, 5, LocusMode::Staged}}) {
        const auto start = Clock::now();
        const auto r = finite_field_locus_count(c.d, c.p, c.mode, 0);
        const double t = since(start);
        out.check(r.ok() && r.projective_count == expected_term_count(Scheme::Main, c.d),
                  "GF(" + std::to_string(c.p) + ") d=" + std::to_string(c.d) + (c.mode == LocusMode::Full ? " full" : " staged") + ": " +
                      std::to_string(r.projective_count) + " points in " + secs(t));
        if (c.d == 3) out.check(t <= 120.0, "full d=3 enumeration within 120s");
    }
    const auto red = reduce_rho_quadrics();
    out.check(red.ok, "d=3 rho quadrics reduce to extra generators modulo monomials");
    return out;
}

Outcome criterion11() {
    Outcome out;
    struct Range {
        Scheme scheme;
        int hi;
    };
    for (const auto& [scheme, hi] : {Range{Scheme::Main, 6}, Range{Scheme::Classical, 5}, Range{Scheme::Gurvits, 5}, Range{Scheme::Monomial, 6}}) {
        bool agree = true;
        for (int d = 1; d <= hi; ++d) {
            const auto dec = make_decomposition(scheme, d);
            const auto a = verify_power_decomposition(dec, {VerifyMode::Expand, 0, false});
            const auto b = verify_power_decomposition(dec, {VerifyMode::Stream, 0, false});
            agree = agree && a.equal && b.equal && a.monomials_generated == b.monomials_generated && a.monomials_nonzero == b.monomials_nonzero;
        }
        out.check(agree, std::string(to_string(scheme)) + " d=1.." + std::to_string(hi) + ": expand and stream agree");
    }
    auto corrupted = main_decomposition(4);
    corrupted.terms[17].coeff = -corrupted.terms[17].coeff;
    const auto a = verify_power_decomposition(corrupted, {VerifyMode::Expand, 0, false});
    const auto b = verify_power_decomposition(corrupted, {VerifyMode::Stream, 0, false});
    out.check(!a.equal && !b.equal && a.witness && b.witness && a.witness->monomial == b.witness->monomial,
              "corrupted d=4 identity: both modes report the same witness");

    std::vector<cli::RunConfig> configs;
    {
        cli::RunConfig c;
        c.command = "symmetries";
        c.d = 6;
        c.samples = 200;
        c.seed = 0;
        configs.push_back(c);
        c.command = "verify";
        c.d = 5;
        c.mode = "both";
        configs.push_back(c);
        c.command = "independence";
        c.d = 4;
        configs.push_back(c);
        c.command = "equations";
        c.d = 3;
        c.prime = 7;
        configs.push_back(c);
    }
    for (auto c : configs) {
        c.jobs = 1;
        const auto seq = cli::run(c);
        c.jobs = 4;
        const auto par = cli::run(c);
        out.check(seq.exit_code == 0 && seq.output == par.output,
                  c.command + " d=" + std::to_string(*c.d) + ": sequential and parallel reports byte-identical (" + std::to_string(seq.output.size()) +
                      " bytes)");
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"main identity d=2..6", criterion1},
        {"classical and Gurvits identities d=2..5", criterion2},
        {"monomial identity d=2..6 and five-term product identity", criterion3},
        {"closed-form coefficient vs brute-force expansion d=2..5", criterion4},
        {"bounds table d=2..9", criterion5},
        {"linear independence of the terms", criterion6},
        {"symmetry group orders and action", criterion7},
        {"affine lemma and sign formulas", criterion8},
        {"transpose closure", criterion9},
        {"defining equations and finite-field loci", criterion10},
        {"differential testing", criterion11},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.check(false, std::string("exception: ") + e.what());
        }
        const double t = since(start);
        std::printf("%s criterion %zu: %s [%s]\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs(t).c_str());
        for (const auto& line : out.lines) std::printf("    %s\n", line.c_str());
        std::fflush(stdout);
        if (!out.ok) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
