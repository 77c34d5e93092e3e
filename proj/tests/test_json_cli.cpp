#include "gls/json_io.hpp"
#include "gls/errors.hpp"
#include "gls/gls_core.hpp"
#include "test_helpers.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace gls;
using gls_test::check_rel;

TEST_CASE("psi json round trip: power and power_infinite") {
    const PsiFunction power = make_power_psi(1.0, 4.0, 0.7, 1.2);
    const PsiFunction p2 = psi_from_json(psi_to_json(power));
    for (double p : {1.2, 2.0, 3.9}) CHECK(p2.value(p) == power.value(p));

    const PsiFunction inf_psi = make_power_psi_infinite(1.0, 1.0, -1.0);
    const PsiFunction i2 = psi_from_json(psi_to_json(inf_psi));
    CHECK(i2.crossover_h() == inf_psi.crossover_h());
    for (double p : {1.2, 1.6, 5.0}) CHECK(i2.value(p) == inf_psi.value(p));
}

TEST_CASE("psi json round trip: degenerate and sampled natural") {
    const PsiFunction deg = degenerate_psi_r(2.0, make_interval(1.0, 3.0));
    const PsiFunction d2 = psi_from_json(psi_to_json(deg));
    CHECK(d2.value(2.0) == 1.0);
    CHECK(std::isinf(d2.value(1.5)));

    std::vector<std::pair<double, double>> table;
    for (int i = 0; i <= 32; ++i) {
        const double p = 1.05 + i * 0.06;
        table.emplace_back(p, 1.0 + 1.0 / p);
    }
    const PsiFunction nat = PsiFunction::natural_sampled(table, make_interval(1.0, 3.0));
    const PsiFunction n2 = psi_from_json(psi_to_json(nat));
    CHECK(!n2.has_exact_evaluator());
    // identical sample tables give identical interpolants
    for (double p : {1.3, 2.0, 2.7}) CHECK(n2.value(p) == nat.value(p));
}

TEST_CASE("profile_from_spec: catalog names and mixture JSON") {
    const RadialProfile g = profile_from_spec("gaussian(2)", 4);
    check_rel(g.value(1.0), std::exp(-2.0), 1e-14);
    const RadialProfile ball = profile_from_spec("ball_indicator(1.5)", 3);
    CHECK(ball.value(1.0) == 1.0);
    CHECK(ball.value(2.0) == 0.0);
    const RadialProfile pt = profile_from_spec("power_trunc(-1.0,0.1,0.05)", 5);
    check_rel(pt.value(0.5), 2.0, 1e-13);
    const RadialProfile mix = profile_from_spec(R"([{"kind":"gaussian","t":1.0,"coef":1.0},
                                                   {"kind":"gaussian","t":2.0,"coef":0.5}])", 3);
    check_rel(mix.value(1.0), std::exp(-1.0) + 0.5 * std::exp(-2.0), 1e-14);
    CHECK_THROWS_AS(profile_from_spec("vortex(1)", 3), DomainError);
}

TEST_CASE("report json: schema fields and byte-level determinism") {
    const int n = 5;
    const RadialProfile f = make_gaussian(n);
    const PsiFunction unit = PsiFunction::power(1.0, 2.5, 0.0, 0.0);
    const VerificationReport rep1 = verify_theorem_3A(f, unit, n);
    const VerificationReport rep2 = verify_theorem_3A(f, unit, n);
    const ReportMeta meta{"verify-hr", false, {}, kGlsGridPoints, PsiFunction::kNaturalSamples};
    const std::string s1 = report_to_json(rep1, meta).dump(2);
    const std::string s2 = report_to_json(rep2, meta).dump(2);
    CHECK(s1 == s2);

    const auto j = report_to_json(rep1, meta);
    for (const char* key : {"theorem", "n", "interval", "ratio", "passed", "argmax_p",
                            "samples", "provenance"})
        CHECK(j.contains(key));
    CHECK(!j["provenance"].contains("timestamp"));
    CHECK(j["samples"].size() == rep1.per_p.size());
    for (const auto& s : j["samples"]) {
        CHECK(s.contains("p"));
        CHECK(s.contains("lhs_p"));
        CHECK(s.contains("rhs_p"));
        CHECK(s.contains("margin"));
    }
}

// ---- CLI subprocess checks -------------------------------------------------

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const char* cli = std::getenv("GLS_CLI_PATH");
    REQUIRE_MESSAGE(cli != nullptr, "GLS_CLI_PATH not set (run through ctest)");
    const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("cli: constants single point") {
    const CliResult ok = run_cli("constants --n 5 --p 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("k_hr = 0.8") != std::string::npos);

    const CliResult bad = run_cli("constants --n 5 --p 3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: lpnorm value parses and matches the closed form") {
    const CliResult res = run_cli("lpnorm --n 3 --f gaussian(1) --p 2 --format csv");
    CHECK(res.exit_code == 0);
    const auto nl = res.output.find('\n');
    REQUIRE(nl != std::string::npos);
    const std::string row = res.output.substr(nl + 1);
    const auto lastcomma = row.rfind(',');
    const double v = std::stod(row.substr(lastcomma + 1));
    check_rel(v, std::pow(std::acos(-1.0) / 2.0, 0.75), 1e-9);
}

TEST_CASE("cli: csv sweep is byte-deterministic") {
    const CliResult a = run_cli("sweep --kind envelope-hr --n 4 --points 25 --no-timestamp");
    const CliResult b = run_cli("sweep --kind envelope-hr --n 4 --points 25 --no-timestamp");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("p,k_hr,envelope_hr") != std::string::npos);

    const CliResult empty = run_cli("sweep --kind envelope-hr --n 4 --points 1");
    CHECK(empty.exit_code == 2);
}

TEST_CASE("cli: verify-hr produces a passing json report") {
    const CliResult res = run_cli("verify-hr --n 5 --f gaussian(1) --psi natural "
                                  "--format json --no-timestamp");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["passed"].get<bool>());
    CHECK(j["ratio"].get<double>() <= 1.0 + 1e-6);
    CHECK(j["theorem"] == "3A");
}

TEST_CASE("cli: config file supplies defaults, flags override") {
    const std::string cfg_path = "/tmp/gls_cli_test_config.json";
    {
        std::ofstream out(cfg_path);
        out << R"({"n": 5, "p": 2.0})";
    }
    const CliResult from_cfg = run_cli("constants --n 5 --config " + cfg_path);
    CHECK(from_cfg.exit_code == 0);
    CHECK(from_cfg.output.find("k_hr = 0.8") != std::string::npos);

    // the explicit flag overrides the config's p
    const CliResult overridden = run_cli("constants --n 6 --p 2 --config " + cfg_path);
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.output.find("0.3333333333") != std::string::npos);
    std::remove(cfg_path.c_str());
}
