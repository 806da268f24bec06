#include "waring/cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "waring/decompositions.hpp"
#include "waring/independence.hpp"
#include "waring/serialize.hpp"
#include "waring/symmetry.hpp"
#include "waring/varieties.hpp"
#include "waring/verify.hpp"

namespace waring::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Report {
   public:
    Report(const RunConfig& config) : config_(config) {}

    void add(Json result) { results_.push_back(std::move(result)); }
    void skip(std::string what) { skipped_.push_back(std::move(what)); }
    void note(std::string what) { notes_.push_back(std::move(what)); }
    void timing(Json& result, double seconds) const {
        if (config_.timings) result["seconds"] = seconds;
    }

    bool ok() const {
        for (const auto& r : results_)
            if (!r.at("ok").get<bool>()) return false;
        return true;
    }

    const std::vector<std::string>& notes() const { return notes_; }

    Json to_json() const {
        Json cfg;
        cfg["d"] = config_.d ? Json(*config_.d) : Json(nullptr);
        cfg["scheme"] = config_.scheme;
        cfg["mode"] = config_.mode;
        cfg["prime"] = config_.prime ? Json(*config_.prime) : Json(nullptr);
        cfg["full"] = config_.full;
        cfg["force"] = config_.force;
        cfg["seed"] = config_.seed;
        Json out;
        out["command"] = config_.command;
        out["version"] = kVersion;
        out["config"] = std::move(cfg);
        out["ok"] = ok();
        out["results"] = results_;
        if (!skipped_.empty()) out["skipped"] = skipped_;
        if (!notes_.empty()) out["notes"] = notes_;
        return out;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << config_.command << ": " << (ok() ? "PASS" : "FAIL") << "\n";
        for (const auto& r : results_) {
            out << "  " << r.at("name").get<std::string>() << ": " << (r.at("ok").get<bool>() ? "PASS" : "FAIL") << "\n";
            for (const auto& [key, value] : r.items()) {
                if (key == "name" || key == "ok") continue;
                out << "    " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
        for (const auto& s : skipped_) out << "  skipped: " << s << "\n";
        for (const auto& n : notes_) out << "  note: " << n << "\n";
        return out.str();
    }

   private:
    const RunConfig& config_;
    Json results_ = Json::array();
    std::vector<std::string> skipped_;
    std::vector<std::string> notes_;
};

int require_d(const RunConfig& config, int lo, int hi, int forced_hi) {
    if (!config.d) throw UsageError("--d is required for " + config.command);
    const int d = *config.d;
    const int top = config.force ? forced_hi : hi;
    if (d < lo || d > top) {
        std::string msg = config.command + ": --d must lie in [" + std::to_string(lo) + ", " + std::to_string(top) + "]";
        if (!config.force && forced_hi > hi && d <= forced_hi) msg += " (use --force for larger d)";
        throw UsageError(msg);
    }
    return d;
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (config.format == f) return;
    throw UsageError(config.command + ": unsupported --format " + config.format);
}

Json monomial_json(const Monomial& m) { return m.to_string(); }

Json matrix_json(const CycMatrix& x) {
    Json rows = Json::array();
    for (int r = 1; r <= x.dim(); ++r) {
        Json row = Json::array();
        for (int c = 1; c <= x.dim(); ++c) row.push_back(x(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------

std::string cmd_decompose(const RunConfig& config) {
    require_format(config, {"json", "latex", "text"});
    if (config.scheme == "krishna-makam") {
        if (config.d && *config.d != 3) throw UsageError("decompose: the krishna-makam identity exists only for d = 3");
        const auto pd = krishna_makam_det3();
        if (config.format == "latex") return to_latex(pd);
        if (config.format == "text") return to_text(pd);
        return to_json(pd).dump(2) + "\n";
    }
    const auto scheme = parse_scheme(config.scheme);
    if (!scheme) throw UsageError("decompose: unknown --scheme " + config.scheme);
    const int d = require_d(config, 1, *scheme == Scheme::Monomial ? 8 : 6, 9);
    const auto dec = make_decomposition(*scheme, d);
    if (config.format == "latex") return to_latex(dec);
    if (config.format == "text") return to_text(dec);
    return to_json(dec).dump(2) + "\n";
}

Json verification_json(const VerificationReport& r, std::size_t expected_terms, const Report& report) {
    Json out;
    out["name"] = r.mode == VerifyMode::Expand ? "identity_expand" : "identity_stream";
    out["ok"] = r.equal && r.term_count == expected_terms;
    out["equal"] = r.equal;
    out["term_count"] = r.term_count;
    out["expected_term_count"] = expected_terms;
    out["monomials_generated"] = r.monomials_generated;
    out["monomials_nonzero"] = r.monomials_nonzero;
    if (r.witness) {
        out["witness"] = Json{{"monomial", monomial_json(r.witness->monomial)},
                              {"expected", to_json(r.witness->expected)},
                              {"actual", to_json(r.witness->actual)}};
    } else {
        out["witness"] = nullptr;
    }
    Json& mutable_out = out;
    report.timing(mutable_out, r.seconds);
    return out;
}

void cmd_verify(const RunConfig& config, Report& report) {
    require_format(config, {"json", "text"});
    if (config.scheme == "krishna-makam") {
        if (config.d && *config.d != 3) throw UsageError("verify: the krishna-makam identity exists only for d = 3");
        const auto start = Clock::now();
        const auto r = verify_product_identity(krishna_makam_det3());
        Json out{{"name", "product_identity"}, {"ok", r.equal}, {"equal", r.equal}, {"term_count", krishna_makam_det3().terms.size()},
                 {"raw_monomials", r.raw_monomials}, {"final_monomials", r.final_monomials}};
        report.timing(out, seconds_since(start));
        report.add(std::move(out));
        return;
    }
    const auto scheme = parse_scheme(config.scheme);
    if (!scheme) throw UsageError("verify: unknown --scheme " + config.scheme);
    const int hi = (*scheme == Scheme::Classical || *scheme == Scheme::Gurvits) ? 5 : 6;
    const int d = require_d(config, 1, hi, 8);
    if (config.mode != "expand" && config.mode != "stream" && config.mode != "both") throw UsageError("verify: unknown --mode " + config.mode);
    const auto dec = make_decomposition(*scheme, d);
    const std::size_t expected = expected_term_count(*scheme, d);
    std::vector<VerificationReport> runs;
    if (config.mode != "stream") runs.push_back(verify_power_decomposition(dec, {VerifyMode::Expand, config.jobs, false}));
    if (config.mode != "expand") runs.push_back(verify_power_decomposition(dec, {VerifyMode::Stream, config.jobs, false}));
    for (const auto& r : runs) report.add(verification_json(r, expected, report));
    if (runs.size() == 2) {
        const auto& a = runs[0];
        const auto& b = runs[1];
        const bool same_witness = a.witness.has_value() == b.witness.has_value() && (!a.witness || a.witness->monomial == b.witness->monomial);
        const bool agree = a.equal == b.equal && a.monomials_generated == b.monomials_generated &&
                           a.monomials_nonzero == b.monomials_nonzero && same_witness;
        report.add(Json{{"name", "modes_agree"}, {"ok", agree}});
    }
}

void cmd_lemma(const RunConfig& config, Report& report) {
    require_format(config, {"json", "text"});
    const int d = require_d(config, 2, 6, 6);
    const auto start = Clock::now();
    const auto r = verify_lemma(d);
    Json out{{"name", "lemma"}, {"ok", r.agree}, {"monomials", r.monomials}, {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}};
    report.timing(out, seconds_since(start));
    report.add(std::move(out));
}

void cmd_independence(const RunConfig& config, Report& report) {
    require_format(config, {"json", "text"});
    const int d = require_d(config, 2, 5, 5);
    for (const bool promoted : {false, true}) {
        const auto start = Clock::now();
        const auto r = check_separation(d, promoted, config.jobs);
        Json out{{"name", promoted ? "separation_promoted" : "separation"},
                 {"ok", r.ok()},
                 {"size", d * factorial(d).get_si()},
                 {"entries_checked", r.entries_checked},
                 {"diagonal_ok", r.diagonal_ok},
                 {"off_diagonal_zero", r.off_diagonal_zero},
                 {"witness", r.witness ? Json::array({r.witness->first, r.witness->second}) : Json(nullptr)}};
        report.timing(out, seconds_since(start));
        report.add(std::move(out));
    }
    if (d <= 4 || config.force) {
        if (d == 5) report.note("rank oracle at d = 5 runs exact elimination on a 600-row system and takes minutes");
        const auto start = Clock::now();
        const std::size_t rank = rank_oracle(d, config.force);
        const std::size_t terms = expected_term_count(Scheme::Main, d);
        Json out{{"name", "rank_oracle"}, {"ok", rank == terms}, {"rank", rank}, {"term_count", terms}};
        report.timing(out, seconds_since(start));
        report.add(std::move(out));
    } else {
        report.skip("rank_oracle: d = 5 requires --force");
    }
}

void cmd_symmetries(const RunConfig& config, Report& report) {
    require_format(config, {"json", "text"});
    const int d = require_d(config, 2, 6, 6);
    {
        const auto start = Clock::now();
        const auto r = enumerate_symmetries(d);
        const bool faithful = !r.faithful || *r.faithful;
        Json out{{"name", "group_order"},
                 {"ok", r.matches_formula() && r.half_split && faithful},
                 {"tilde_order", r.tilde_order.get_str()},
                 {"h_order", r.h_order.get_str()},
                 {"formula_order", r.formula_order.get_str()},
                 {"reference_order", r.reference_order ? Json(r.reference_order->get_str()) : Json(nullptr)},
                 {"matches_formula", r.matches_formula()},
                 {"matches_reference", r.matches_reference() ? Json(*r.matches_reference()) : Json(nullptr)},
                 {"faithful", r.faithful ? Json(*r.faithful) : Json(nullptr)},
                 {"half_split", r.half_split}};
        if (r.matches_reference() == false)
            report.note("enumerated |H| = " + r.h_order.get_str() + " differs from the published value " + r.reference_order->get_str() +
                        "; the order formula gives " + r.formula_order.get_str());
        report.timing(out, seconds_since(start));
        report.add(std::move(out));
    }
    {
        const auto r = affine_lemma_check(d);
        report.add(Json{{"name", "affine_lemma"},
                        {"ok", r.ok},
                        {"permutations", r.permutations},
                        {"in_m", r.in_m},
                        {"affine", r.affine},
                        {"witness", r.witness ? Json(r.witness->to_string()) : Json(nullptr)}});
    }
    {
        const auto r = sign_formula_check(d);
        report.add(Json{{"name", "sign_formulas"}, {"ok", r.ok}, {"checks", r.checks}, {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}});
    }
    {
        const auto r = transpose_closure(d);
        const bool expected = d <= 3;
        Json out{{"name", "transpose_closure"}, {"ok", r.closed == expected}, {"closed", r.closed}, {"expected_closed", expected}};
        out["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
        out["witness_transpose"] = r.witness_transpose ? matrix_json(*r.witness_transpose) : Json(nullptr);
        report.add(std::move(out));
    }
    {
        if (config.full && d == 6) throw UsageError("symmetries: --full is not available at d = 6; omit it for a sampled check");
        if (config.full && d == 5 && !config.force) throw UsageError("symmetries: --full at d = 5 requires --force");
        const std::size_t samples = config.full ? 0 : config.samples;
        const auto start = Clock::now();
        const auto r = check_group_action(d, samples, config.seed, config.jobs);
        Json out{{"name", "group_action"},
                 {"ok", r.ok()},
                 {"sampled", r.sampled},
                 {"elements", r.elements},
                 {"h_elements", r.h_elements},
                 {"h_preserving", r.h_preserving},
                 {"other_elements", r.other_elements},
                 {"other_reversing", r.other_reversing},
                 {"first_failure", r.first_failure ? Json(r.first_failure->to_string()) : Json(nullptr)}};
        report.timing(out, seconds_since(start));
        report.add(std::move(out));
    }
}

Json vanish_json(const std::string& name, const std::vector<Generator>& gens, const VanishReport& r) {
    return Json{{"name", name},
                {"ok", r.ok},
                {"generators", r.generators},
                {"points", r.points},
                {"evaluations", r.evaluations},
                {"witness", r.witness ? Json{{"generator", gens[r.witness->first].label}, {"point", r.witness->second}} : Json(nullptr)}};
}

void cmd_equations(const RunConfig& config, Report& report) {
    require_format(config, {"json", "text"});
    const int d = require_d(config, 2, 6, 6);
    const auto set = quadric_generators(d);
    {
        Json out = vanish_json("quadrics_vanish", set.generators, vanish_on_points(set.generators, d));
        out["row"] = set.count("row");
        out["column"] = set.count("column");
        out["rho"] = set.count("rho");
        report.add(std::move(out));
    }
    if (d == 3 || d == 4) {
        const auto extra = extra_generators(d);
        report.add(vanish_json("extra_squares_vanish", extra.squares, vanish_on_points(extra.squares, d)));
        if (d == 4) {
            Json out = vanish_json("permanent_differences_vanish", extra.differences, vanish_on_points(extra.differences, d));
            out["raw_tuples"] = extra.raw_differences;
            report.add(std::move(out));
        }
    }
    if (d == 3) {
        const auto r = reduce_rho_quadrics();
        Json rows = Json::array();
        for (const auto& row : r.rows) {
            Json coeffs = Json::array();
            for (const auto& c : row.coefficients) coeffs.push_back(c.get_str());
            Json residual = Json::array();
            for (const auto& m : row.residual) residual.push_back(m.to_string());
            rows.push_back(Json{{"i", row.i}, {"solvable", row.solvable}, {"coefficients", coeffs}, {"residual", residual},
                                {"residual_in_ideal", row.residual_in_ideal}});
        }
        report.add(Json{{"name", "rho_reduction"}, {"ok", r.ok}, {"rows", rows}});
    }
    if (config.prime) {
        const std::uint64_t p = *config.prime;
        if (!is_prime(p) || p > 251) throw UsageError("equations: --prime must be a prime below 256");
        if ((p - 1) % static_cast<std::uint64_t>(d) != 0) throw UsageError("equations: d must divide p - 1");
        LocusMode mode = default_locus_mode(d, p);
        if (config.full) {
            if (mode != LocusMode::Full && !config.force) throw UsageError("equations: --full needs p^(d^2) <= 10^8 unless --force is given");
            mode = LocusMode::Full;
        }
        const auto start = Clock::now();
        const auto r = finite_field_locus_count(d, p, mode, config.jobs, config.force);
        Json out{{"name", "locus_count"},
                 {"ok", r.ok()},
                 {"mode", mode == LocusMode::Full ? "full" : "staged"},
                 {"prime", p},
                 {"candidates", r.candidates},
                 {"affine_solutions", r.affine_solutions},
                 {"projective_count", r.projective_count},
                 {"expected", r.expected},
                 {"homogeneous_ok", r.homogeneous_ok},
                 {"geometric_ok", r.geometric_ok},
                 {"matches_points", r.matches_points},
                 {"monomial_solutions", r.monomial_solutions},
                 {"monomial_consistent", r.monomial_consistent}};
        report.timing(out, seconds_since(start));
        report.add(std::move(out));
    }
}

std::string bounds_output(const RunConfig& config) {
    require_format(config, {"json", "latex", "text"});
    const int d_max = config.d ? *config.d : 9;
    if (d_max < 2 || d_max > 20) throw UsageError("bounds: --d must lie in [2, 20]");
    const auto rows = bounds_table(d_max);
    auto opt = [](const std::optional<Integer>& v) { return v ? v->get_str() : std::string("-"); };
    if (config.format == "latex") {
        std::ostringstream out;
        out << "\\begin{tabular}{r|rrrrrr}\n";
        out << "$d$ & $2^{d-1}d!$ & Derksen & $(d+1)d!$ & CGLV & $d\\cdot d!$ & lower \\\\\n\\hline\n";
        for (const auto& r : rows)
            out << r.d << " & " << r.classical.get_str() << " & " << r.derksen.get_str() << " & " << r.gurvits.get_str() << " & "
                << opt(r.cglv) << " & " << r.upper.get_str() << " & " << r.lower.get_str() << " \\\\\n";
        out << "\\end{tabular}\n";
        return out.str();
    }
    if (config.format == "text") {
        std::ostringstream out;
        out << std::setw(3) << "d" << std::setw(12) << "classical" << std::setw(12) << "derksen" << std::setw(12) << "gurvits"
            << std::setw(8) << "cglv" << std::setw(12) << "d*d!" << std::setw(12) << "lower" << "\n";
        for (const auto& r : rows)
            out << std::setw(3) << r.d << std::setw(12) << r.classical.get_str() << std::setw(12) << r.derksen.get_str() << std::setw(12)
                << r.gurvits.get_str() << std::setw(8) << opt(r.cglv) << std::setw(12) << r.upper.get_str() << std::setw(12)
                << r.lower.get_str() << "\n";
        return out.str();
    }
    Json table = Json::array();
    for (const auto& r : rows)
        table.push_back(Json{{"d", r.d},
                             {"classical", r.classical.get_str()},
                             {"derksen", r.derksen.get_str()},
                             {"gurvits", r.gurvits.get_str()},
                             {"cglv", r.cglv ? Json(r.cglv->get_str()) : Json(nullptr)},
                             {"upper", r.upper.get_str()},
                             {"lower", r.lower.get_str()}});
    return Json{{"command", "bounds"}, {"version", kVersion}, {"rows", table}}.dump(2) + "\n";
}

void cmd_bench(const RunConfig& config, Report& report) {
    require_format(config, {"json", "text"});
    const int d = require_d(config, 2, 6, 7);
    const auto dec = main_decomposition(d);
    for (const auto mode : {VerifyMode::Expand, VerifyMode::Stream}) {
        const auto r = verify_power_decomposition(dec, {mode, config.jobs, false});
        Json out{{"name", mode == VerifyMode::Expand ? "bench_expand" : "bench_stream"},
                 {"ok", r.equal},
                 {"term_count", r.term_count},
                 {"monomials_generated", r.monomials_generated},
                 {"seconds", r.seconds}};
        report.add(std::move(out));
    }
}

}  // namespace

std::string usage() {
    return "usage: waring <command> [options]\n"
           "commands: decompose verify lemma-check independence symmetries equations bounds bench\n"
           "options: --d <int> --scheme <main|classical|gurvits|monomial|krishna-makam> --format <json|latex|text>\n"
           "         --prime <p> --full --force --jobs <n> --seed <n> --out <path> --mode <expand|stream|both>\n"
           "         --samples <n> --timings\n";
}

RunResult run(const RunConfig& config) {
    RunResult result;
    try {
        if (config.command == "decompose") {
            result.output = cmd_decompose(config);
            return result;
        }
        if (config.command == "bounds") {
            result.output = bounds_output(config);
            return result;
        }
        static const std::map<std::string, std::function<void(const RunConfig&, Report&)>> commands{
            {"verify", cmd_verify},         {"lemma-check", cmd_lemma}, {"independence", cmd_independence},
            {"symmetries", cmd_symmetries}, {"equations", cmd_equations}, {"bench", cmd_bench}};
        const auto it = commands.find(config.command);
        if (it == commands.end()) throw UsageError("unknown command '" + config.command + "'");
        Report report(config);
        it->second(config, report);
        result.output = config.format == "text" ? report.to_text() : report.to_json().dump(2) + "\n";
        for (const auto& n : report.notes()) result.diagnostics += "note: " + n + "\n";
        result.exit_code = report.ok() ? 0 : 1;
    } catch (const UsageError& e) {
        result.exit_code = 2;
        result.output.clear();
        result.diagnostics = std::string("error: ") + e.what() + "\n" + usage();
    } catch (const DomainError& e) {
        result.exit_code = 2;
        result.output.clear();
        result.diagnostics = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace waring::cli
