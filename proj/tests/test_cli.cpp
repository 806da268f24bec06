#include <doctest.h>

#include "waring/cli.hpp"
#include "waring/serialize.hpp"

using namespace waring;
using cli::RunConfig;

namespace {

RunConfig config(std::string command, std::optional<int> d = std::nullopt) {
    RunConfig c;
    c.command = std::move(command);
    c.d = d;
    return c;
}

}  // namespace

TEST_CASE("exit codes") {
    struct Case {
        RunConfig cfg;
        int code;
    };
    std::vector<Case> cases;
    cases.push_back({config("verify", 3), 0});
    cases.push_back({config("verify", 7), 2});
    cases.push_back({config("verify", 0), 2});
    cases.push_back({config("verify"), 2});
    cases.push_back({config("teleport", 3), 2});
    cases.push_back({config("lemma-check", 3), 0});
    cases.push_back({config("lemma-check", 9), 2});
    cases.push_back({config("independence", 2), 0});
    cases.push_back({config("independence", 6), 2});
    cases.push_back({config("symmetries", 2), 0});
    cases.push_back({config("symmetries", 7), 2});
    cases.push_back({config("equations", 2), 0});
    cases.push_back({config("bounds"), 0});
    cases.push_back({config("bounds", 30), 2});
    cases.push_back({config("decompose", 2), 0});
    cases.push_back({config("bench", 2), 0});
    {
        auto c = config("verify", 5);
        c.scheme = "classical";
        cases.push_back({c, 0});
        c.d = 6;
        cases.push_back({c, 2});
        c.force = true;
        c.d = 3;
        cases.push_back({c, 0});
    }
    {
        auto c = config("verify", 4);
        c.scheme = "krishna-makam";
        cases.push_back({c, 2});
        c.d = 3;
        cases.push_back({c, 0});
        c.scheme = "bogus";
        cases.push_back({c, 2});
    }
    {
        auto c = config("verify", 2);
        c.format = "latex";
        cases.push_back({c, 2});
        c.format = "yaml";
        cases.push_back({c, 2});
        c.format = "text";
        cases.push_back({c, 0});
        c.format = "json";
        c.mode = "sideways";
        cases.push_back({c, 2});
    }
    {
        auto c = config("equations", 3);
        c.prime = 5;
        cases.push_back({c, 2});
        c.prime = 8;
        cases.push_back({c, 2});
        c.prime = 7;
        cases.push_back({c, 0});
    }
    {
        auto c = config("symmetries", 6);
        c.full = true;
        cases.push_back({c, 2});
        c.d = 5;
        cases.push_back({c, 2});
        c.d = 3;
        cases.push_back({c, 0});
    }
    for (const auto& [cfg, code] : cases) {
        const auto r = cli::run(cfg);
        CHECK_MESSAGE(r.exit_code == code, cfg.command, " d=", cfg.d.value_or(-1), " scheme=", cfg.scheme, " format=", cfg.format);
        if (code == 2) {
            CHECK(r.output.empty());
            CHECK(r.diagnostics.find("error:") != std::string::npos);
        }
    }
}

TEST_CASE("usage text accompanies usage errors") {
    const auto r = cli::run(config("teleport"));
    CHECK(r.diagnostics.find(cli::usage()) != std::string::npos);
}

TEST_CASE("verify report contents") {
    const auto r = cli::run(config("verify", 4));
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("ok") == true);
    CHECK(j.at("version") == cli::kVersion);
    CHECK(j.at("results").at(0).at("equal") == true);
    CHECK(j.at("results").at(0).at("term_count") == 96);
    CHECK_FALSE(j.at("results").at(0).contains("seconds"));
}

TEST_CASE("both verification modes in one report") {
    auto c = config("verify", 4);
    c.mode = "both";
    c.scheme = "gurvits";
    const Json j = Json::parse(cli::run(c).output);
    CHECK(j.at("results").size() == 3);
    CHECK(j.at("results").at(2).at("name") == "modes_agree");
    CHECK(j.at("results").at(2).at("ok") == true);
}

TEST_CASE("decompose emits parseable decompositions") {
    const auto r = cli::run(config("decompose", 2));
    const auto dec = decomposition_from_json(Json::parse(r.output));
    CHECK(dec == main_decomposition(2));
    auto c = config("decompose", 3);
    c.format = "latex";
    const auto latex = cli::run(c).output;
    CHECK(latex.find("18\\,\\det_{3}") != std::string::npos);
    std::size_t powers = 0;
    for (std::size_t pos = latex.find("\\right)^{3}"); pos != std::string::npos; pos = latex.find("\\right)^{3}", pos + 1)) ++powers;
    CHECK(powers == 18);
}

TEST_CASE("symmetry report") {
    auto c = config("symmetries", 3);
    c.full = true;
    const auto r = cli::run(c);
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("results").at(0).at("h_order") == "162");
    CHECK(j.at("results").at(4).at("name") == "group_action");
    CHECK(j.at("results").at(4).at("sampled") == false);
}

TEST_CASE("published order mismatch is a note, not a failure") {
    auto c = config("symmetries", 5);
    c.samples = 20;
    const auto r = cli::run(c);
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j.at("results").at(0).at("matches_reference") == false);
    CHECK(j.at("results").at(0).at("matches_formula") == true);
    CHECK(r.diagnostics.find("37500") != std::string::npos);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
    auto c = config("symmetries", 6);
    c.samples = 40;
    c.seed = 7;
    c.jobs = 1;
    const auto a = cli::run(c);
    c.jobs = 3;
    const auto b = cli::run(c);
    const auto again = cli::run(c);
    CHECK(a.output == b.output);
    CHECK(b.output == again.output);
    c.seed = 8;
    CHECK(cli::run(c).exit_code == 0);

    auto v = config("verify", 4);
    v.jobs = 1;
    const auto v1 = cli::run(v).output;
    v.jobs = 4;
    CHECK(cli::run(v).output == v1);
}

TEST_CASE("timings are opt-in") {
    auto c = config("lemma-check", 3);
    c.timings = true;
    const Json j = Json::parse(cli::run(c).output);
    CHECK(j.at("results").at(0).contains("seconds"));
}

TEST_CASE("bounds in every format") {
    const Json j = Json::parse(cli::run(config("bounds")).output);
    CHECK(j.at("rows").size() == 8);
    CHECK(j.at("rows").at(1).at("lower") == "17");
    auto c = config("bounds", 4);
    c.format = "latex";
    CHECK(cli::run(c).output.find("\\begin{tabular}") == 0);
    c.format = "text";
    CHECK(cli::run(c).output.find("192") != std::string::npos);
}
