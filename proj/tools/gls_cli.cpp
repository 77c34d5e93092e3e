// Command-line front end: constant tables, norm evaluation, theorem
// verification runs, sharpness sweeps, machine-readable reports.
//
// Exit codes: 0 success / theorem passed, 1 theorem-check failure,
// 2 usage or domain error, 3 numerical non-convergence.

#include "gls/errors.hpp"
#include "gls/gls_core.hpp"
#include "gls/json_io.hpp"
#include "gls/sharp_constants.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitTheoremFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct CommonOpts {
    std::string format = "text";
    std::string out;
    bool no_timestamp = false;
    std::string config;
};

// JSON config mirrors the flag namespace (keys without dashes); command-line
// flags override file values.
json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw gls::DomainError("config: cannot open '" + path + "'");
    json j;
    in >> j;
    if (!j.is_object()) throw gls::DomainError("config: top level must be an object");
    return j;
}

template <typename T>
void merge_config(const CLI::App* cmd, const json& cfg, const std::string& flag,
                  const std::string& key, T& value) {
    const CLI::Option* opt = cmd->get_option_no_throw("--" + flag);
    if (opt != nullptr && opt->count() > 0) return; // explicit flag wins
    if (cfg.contains(key)) value = cfg[key].get<T>();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw gls::DomainError("cannot open output file '" + out_path + "'");
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

gls::PsiFunction parse_psi(const std::string& spec, double a, double b,
                           const std::function<double(double)>& natural_pnorm) {
    if (spec == "natural") {
        if (!natural_pnorm)
            throw gls::DomainError("psi 'natural' is not available for this command");
        return gls::PsiFunction::natural(natural_pnorm, gls::make_interval(a, b));
    }
    if (spec == "unit") return gls::PsiFunction::power(a, b, 0.0, 0.0);
    if (spec.rfind("power(", 0) == 0 && spec.back() == ')') {
        std::stringstream ss(spec.substr(6, spec.size() - 7));
        double beta = 0.0, gamma = 0.0;
        char comma = ',';
        ss >> beta >> comma >> gamma;
        if (ss.fail()) throw gls::DomainError("psi: expected power(beta,gamma)");
        return gls::PsiFunction::power(a, b, beta, gamma);
    }
    if (spec.rfind("degenerate(", 0) == 0 && spec.back() == ')') {
        const double r = std::stod(spec.substr(11, spec.size() - 12));
        return gls::PsiFunction::degenerate(r, gls::make_interval(a, b));
    }
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
        std::ifstream in(spec);
        if (!in) throw gls::DomainError("psi: cannot open file '" + spec + "'");
        json j;
        in >> j;
        return gls::psi_from_json(j);
    }
    throw gls::DomainError("psi: unknown spec '" + spec +
                           "' (expected natural | unit | power(b,g) | degenerate(r) | file.json)");
}

// ---- constants -------------------------------------------------------------

struct ConstantsRow {
    double p;
    std::optional<double> khr, ks, env_hr, env_s;
};

ConstantsRow constants_row(int n, std::optional<double> beta, double p) {
    ConstantsRow row{p, {}, {}, {}, {}};
    if (n >= 3 && p > 1.0 && p < 0.5 * n) {
        row.khr = gls::k_hr({n, p});
        row.env_hr = gls::envelope_hr(n, p);
    }
    if (beta && p > 1.0 && p < n / *beta) {
        row.ks = gls::k_s({n, *beta, p});
        row.env_s = gls::envelope_s(n, *beta, p);
    }
    return row;
}

std::string cell(const std::optional<double>& v, bool full) {
    if (!v) return "";
    return full ? fmt_full(*v) : fmt_10(*v);
}

int run_constants(int n, std::optional<double> beta, std::optional<double> p, int points,
                  const CommonOpts& common) {
    std::vector<ConstantsRow> rows;
    if (p) {
        rows.push_back(constants_row(n, beta, *p));
        if (!rows.back().khr && !rows.back().ks) {
            // single-point query outside every valid domain is a usage error
            if (n >= 3 && !beta) gls::HardyRellichQuery{n, *p}.validate();
            if (beta) gls::SobolevQuery{n, *beta, *p}.validate();
            throw gls::DomainError("constants: p outside every valid domain");
        }
    } else {
        if (points < 2) throw gls::DomainError("constants: grid needs --points >= 2");
        double hi = n >= 3 ? 0.5 * n : 1.0;
        if (beta) hi = std::max(hi, n / *beta);
        const double off = 1e-6 * (hi - 1.0);
        for (int j = 0; j < points; ++j) {
            const double pj = (1.0 + off) + (hi - 1.0 - 2.0 * off) * j / (points - 1);
            rows.push_back(constants_row(n, beta, pj));
        }
    }

    std::ostringstream os;
    if (common.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json row{{"n", n}, {"p", r.p}};
            if (beta) row["beta"] = *beta;
            if (r.khr) row["k_hr"] = *r.khr;
            if (r.ks) row["k_s"] = *r.ks;
            if (r.env_hr) row["envelope_hr"] = *r.env_hr;
            if (r.env_s) row["envelope_s"] = *r.env_s;
            arr.push_back(row);
        }
        json out{{"rows", arr},
                 {"provenance", gls::make_provenance({"constants", !common.no_timestamp, {}, 0, 0})}};
        os << out.dump(2);
    } else if (common.format == "csv") {
        os << "n,beta,p,k_hr,k_s,envelope_hr,envelope_s\n";
        for (const auto& r : rows)
            os << n << ',' << (beta ? fmt_full(*beta) : "") << ',' << fmt_full(r.p) << ','
               << cell(r.khr, true) << ',' << cell(r.ks, true) << ',' << cell(r.env_hr, true)
               << ',' << cell(r.env_s, true) << '\n';
    } else {
        for (const auto& r : rows) {
            if (rows.size() > 1) os << "p = " << fmt_10(r.p) << ": ";
            bool first = true;
            auto field = [&](const char* name, const std::optional<double>& v) {
                if (!v) return;
                if (!first) os << ", ";
                os << name << " = " << fmt_10(*v);
                first = false;
            };
            field("k_hr", r.khr);
            field("k_s", r.ks);
            field("envelope_hr", r.env_hr);
            field("envelope_s", r.env_s);
            os << '\n';
        }
    }
    emit(os.str(), common.out);
    return kExitOk;
}

// ---- lpnorm / glsnorm ------------------------------------------------------

int run_lpnorm(int n, const std::string& fspec, double p, const CommonOpts& common) {
    const gls::RadialProfile f = gls::profile_from_spec(fspec, n);
    const double v = gls::lp_norm(f, p);
    std::ostringstream os;
    if (common.format == "json") {
        json out{{"f", fspec},
                 {"n", n},
                 {"p", p},
                 {"value", v},
                 {"provenance", gls::make_provenance({"lpnorm", !common.no_timestamp, {}, 0, 0})}};
        os << out.dump(2);
    } else if (common.format == "csv") {
        os << "n,p,value\n" << n << ',' << fmt_full(p) << ',' << fmt_full(v) << '\n';
    } else {
        os << "lp_norm = " << fmt_10(v) << '\n';
    }
    emit(os.str(), common.out);
    return kExitOk;
}

int run_glsnorm(int n, const std::string& fspec, const std::string& psi_spec, double a, double b,
                const CommonOpts& common) {
    const gls::RadialProfile f = gls::profile_from_spec(fspec, n);
    const gls::PNormCache pnorm = gls::make_lp_map(f);
    const gls::PsiFunction psi = parse_psi(psi_spec, a, b, pnorm);
    const gls::Interval iv{psi.domain().a, psi.domain().b};
    const gls::GlsNormResult res = gls::gls_norm(pnorm, {psi, iv});
    std::ostringstream os;
    if (common.format == "json") {
        json out = gls::gls_result_to_json(res);
        out["f"] = fspec;
        out["n"] = n;
        out["psi"] = gls::psi_to_json(psi);
        out["provenance"] = gls::make_provenance({"glsnorm", !common.no_timestamp, {},
                                                  gls::kGlsGridPoints,
                                                  gls::PsiFunction::kNaturalSamples});
        os << out.dump(2);
    } else {
        os << "gls_norm = " << fmt_10(res.value) << "  (argmax p = " << fmt_10(res.argmax_p)
           << ")\n";
    }
    emit(os.str(), common.out);
    return kExitOk;
}

// ---- theorem verification ---------------------------------------------------

std::string report_text(const gls::VerificationReport& rep) {
    std::ostringstream os;
    os << "theorem " << rep.theorem << "  n = " << rep.n;
    if (rep.theorem == "3B") os << "  beta = " << fmt_10(rep.beta);
    os << "  interval = (" << fmt_10(rep.interval_used.a) << ", " << fmt_10(rep.interval_used.b)
       << ")\n";
    os << "ratio = " << fmt_10(rep.ratio) << "  (bound 1 + " << fmt_10(rep.tolerance) << ")\n";
    os << "argmax p = " << fmt_10(rep.lhs.argmax_p) << "\n";
    os << "per-p margins " << (rep.margins_ok ? "ok" : "VIOLATED") << "\n";
    os << (rep.passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

int run_verify_hr(int n, const std::string& fspec, const std::string& psi_spec, double a,
                  double b, double tol, const CommonOpts& common) {
    const gls::RadialProfile f = gls::profile_from_spec(fspec, n);
    const gls::PNormCache lap_map = gls::make_lp_map(gls::radial_laplacian(f));
    const gls::PsiFunction psi = parse_psi(psi_spec, a, b, lap_map);
    const gls::VerificationReport rep = gls::verify_theorem_3A(f, psi, n, tol);
    gls::ReportMeta meta{"verify-hr", !common.no_timestamp, {}, gls::kGlsGridPoints,
                         gls::PsiFunction::kNaturalSamples};
    if (common.format == "text")
        emit(report_text(rep), common.out);
    else
        emit(gls::report_to_json(rep, meta).dump(2), common.out);
    return rep.passed ? kExitOk : kExitTheoremFailed;
}

int run_verify_sobolev(int n, double beta, const std::string& fspec, const std::string& gspec,
                       const std::string& psi_spec, double a, double b, double tol,
                       const CommonOpts& common) {
    if (!fspec.empty() && !gspec.empty())
        throw gls::DomainError("verify-sobolev: give either --f or --g, not both");
    const bool given_g = fspec.empty();
    const std::string spec = given_g ? (gspec.empty() ? "gaussian(1)" : gspec) : fspec;
    const gls::RadialProfile profile = gls::profile_from_spec(spec, n);

    gls::RadialProfile g = profile;
    if (!given_g) g = gls::fractional_laplacian(profile, beta);
    const gls::PNormCache g_map = gls::make_lp_map(g);
    const gls::PsiFunction psi = parse_psi(psi_spec, a, b, g_map);

    const gls::VerificationReport rep =
        gls::verify_theorem_3B(profile, beta, psi, n, tol,
                               given_g ? gls::GivenSide::G : gls::GivenSide::F);
    gls::ReportMeta meta{"verify-sobolev", !common.no_timestamp, {}, gls::kGlsGridPoints,
                         gls::PsiFunction::kNaturalSamples};
    if (common.format == "text")
        emit(report_text(rep), common.out);
    else
        emit(gls::report_to_json(rep, meta).dump(2), common.out);
    return rep.passed ? kExitOk : kExitTheoremFailed;
}

int run_sharpness(int n, double p_star, const std::string& eps_csv, double tol,
                  const CommonOpts& common) {
    std::vector<double> eps;
    std::stringstream ss(eps_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) eps.push_back(std::stod(item));
    const gls::SharpnessResult res = gls::sharpness_probe_3A(n, p_star, eps, tol);
    gls::ReportMeta meta{"sharpness", !common.no_timestamp, {}, gls::kGlsGridPoints,
                         gls::PsiFunction::kNaturalSamples};
    if (common.format == "text") {
        std::ostringstream os;
        for (const auto& [e, ratio] : res.points)
            os << "eps = " << fmt_10(e) << "  ratio = " << fmt_10(ratio) << '\n';
        os << (res.strictly_increasing ? "strictly increasing\n" : "NOT increasing\n");
        os << (res.strictly_increasing && res.ratios_bounded ? "PASS" : "FAIL") << '\n';
        emit(os.str(), common.out);
    } else {
        emit(gls::sharpness_to_json(res, tol, meta).dump(2), common.out);
    }
    return res.strictly_increasing && res.ratios_bounded ? kExitOk : kExitTheoremFailed;
}

// ---- sweep -------------------------------------------------------------------

int run_sweep(const std::string& kind, int n, std::optional<double> beta, int points,
              const CommonOpts& common) {
    if (points < 2) throw gls::DomainError("sweep: empty grid (--points must be >= 2)");
    if (points > 1000000) throw gls::DomainError("sweep: grid too large (max 1e6 points)");

    std::ostringstream os;
    os << "# " << gls::kToolName << " " << gls::kToolVersion << " sweep kind=" << kind
       << " n=" << n;
    if (beta) os << " beta=" << fmt_full(*beta);
    os << " points=" << points << " grid=open-interval offset=1e-6\n";

    auto grid = [points](double lo, double hi, auto&& row) {
        const double off = 1e-6 * (hi - lo);
        for (int j = 0; j < points; ++j) row((lo + off) + (hi - lo - 2.0 * off) * j / (points - 1));
    };

    if (kind == "envelope-hr") {
        os << "p,k_hr,envelope_hr\n";
        grid(1.0, 0.5 * n, [&](double p) {
            os << fmt_full(p) << ',' << fmt_full(gls::k_hr({n, p})) << ','
               << fmt_full(gls::envelope_hr(n, p)) << '\n';
        });
    } else if (kind == "envelope-s") {
        if (!beta) throw gls::DomainError("sweep envelope-s: requires --beta");
        os << "p,k_s,envelope_s\n";
        grid(1.0, n / *beta, [&](double p) {
            os << fmt_full(p) << ',' << fmt_full(gls::k_s({n, *beta, p})) << ','
               << fmt_full(gls::envelope_s(n, *beta, p)) << '\n';
        });
    } else if (kind == "ks-vs-khr") {
        os << "p,k_hr,k_s_beta2,abs_diff\n";
        grid(1.0, 0.5 * n, [&](double p) {
            const double khr = gls::k_hr({n, p});
            const double ks = gls::k_s({n, 2.0, p});
            os << fmt_full(p) << ',' << fmt_full(khr) << ',' << fmt_full(ks) << ','
               << fmt_full(std::fabs(ks - khr)) << '\n';
        });
    } else {
        throw gls::DomainError("sweep: unknown kind '" + kind +
                               "' (envelope-hr | envelope-s | ks-vs-khr)");
    }
    emit(os.str(), common.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grand Lebesgue Space norms and sharp Hardy-Rellich / weighted Sobolev constants"};
    app.require_subcommand(1);

    CommonOpts common;
    int n = 0;
    double beta_flag = std::nan("");
    double p_flag = std::nan("");
    double a = 1.0, b = std::nan("");
    double tol = std::nan("");
    double p_star = std::nan("");
    int points = 0;
    std::string fspec, gspec, psi_spec, kind, eps_csv;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", common.out, "output file (default stdout)");
        cmd->add_flag("--no-timestamp", common.no_timestamp,
                      "suppress the timestamp field for byte-identical reports");
        cmd->add_option("--config", common.config, "JSON config file; flags override it");
    };

    CLI::App* c_const = app.add_subcommand("constants", "sharp constants K_HR / K_S");
    c_const->add_option("--n", n)->required();
    c_const->add_option("--beta", beta_flag);
    c_const->add_option("--p", p_flag);
    c_const->add_option("--points", points);
    add_common(c_const);

    CLI::App* c_lp = app.add_subcommand("lpnorm", "L_p norm of a catalog profile");
    c_lp->add_option("--n", n)->required();
    c_lp->add_option("--f", fspec)->required();
    c_lp->add_option("--p", p_flag)->required();
    add_common(c_lp);

    CLI::App* c_gls = app.add_subcommand("glsnorm", "Grand Lebesgue norm sup_p |f|_p/psi(p)");
    c_gls->add_option("--n", n)->required();
    c_gls->add_option("--f", fspec)->required();
    c_gls->add_option("--psi", psi_spec)->required();
    c_gls->add_option("--a", a);
    c_gls->add_option("--b", b);
    add_common(c_gls);

    CLI::App* c_hr = app.add_subcommand("verify-hr", "Hardy-Rellich GLS bound (exit 1 on failure)");
    c_hr->add_option("--n", n)->required();
    c_hr->add_option("--f", fspec);
    c_hr->add_option("--psi", psi_spec);
    c_hr->add_option("--a", a);
    c_hr->add_option("--b", b);
    c_hr->add_option("--tol", tol);
    add_common(c_hr);

    CLI::App* c_sob = app.add_subcommand("verify-sobolev", "weighted Sobolev GLS bound");
    c_sob->add_option("--n", n)->required();
    c_sob->add_option("--beta", beta_flag)->required();
    c_sob->add_option("--f", fspec);
    c_sob->add_option("--g", gspec);
    c_sob->add_option("--psi", psi_spec);
    c_sob->add_option("--a", a);
    c_sob->add_option("--b", b);
    c_sob->add_option("--tol", tol);
    add_common(c_sob);

    CLI::App* c_sharp = app.add_subcommand("sharpness", "extremizing-sequence probe");
    c_sharp->add_option("--n", n)->required();
    c_sharp->add_option("--p-star", p_star)->required();
    c_sharp->add_option("--eps", eps_csv);
    c_sharp->add_option("--tol", tol);
    add_common(c_sharp);

    CLI::App* c_sweep = app.add_subcommand("sweep", "CSV tables over p-grids");
    c_sweep->add_option("--kind", kind)->required();
    c_sweep->add_option("--n", n)->required();
    c_sweep->add_option("--beta", beta_flag);
    c_sweep->add_option("--points", points);
    add_common(c_sweep);

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* cmd = app.get_subcommands().front();
        const json cfg = load_config(common.config);
        merge_config(cmd, cfg, "format", "format", common.format);
        merge_config(cmd, cfg, "out", "out", common.out);
        merge_config(cmd, cfg, "n", "n", n);
        merge_config(cmd, cfg, "beta", "beta", beta_flag);
        merge_config(cmd, cfg, "p", "p", p_flag);
        merge_config(cmd, cfg, "a", "a", a);
        merge_config(cmd, cfg, "b", "b", b);
        merge_config(cmd, cfg, "tol", "tol", tol);
        merge_config(cmd, cfg, "points", "points", points);
        merge_config(cmd, cfg, "f", "f", fspec);
        merge_config(cmd, cfg, "g", "g", gspec);
        merge_config(cmd, cfg, "psi", "psi", psi_spec);
        merge_config(cmd, cfg, "kind", "kind", kind);
        merge_config(cmd, cfg, "eps", "eps", eps_csv);
        merge_config(cmd, cfg, "p-star", "p_star", p_star);
        if (cfg.contains("no_timestamp") && !common.no_timestamp)
            common.no_timestamp = cfg["no_timestamp"].get<bool>();

        if (cmd == c_const) {
            std::optional<double> beta_opt, p_opt;
            if (!std::isnan(beta_flag)) beta_opt = beta_flag;
            if (!std::isnan(p_flag)) p_opt = p_flag;
            if (!p_opt && points == 0) points = 50;
            return run_constants(n, beta_opt, p_opt, points, common);
        }
        if (cmd == c_lp) return run_lpnorm(n, fspec, p_flag, common);
        if (cmd == c_gls) {
            if (std::isnan(b)) throw gls::DomainError("glsnorm: --b is required for named psi");
            return run_glsnorm(n, fspec, psi_spec, a, b, common);
        }
        if (cmd == c_hr) {
            if (fspec.empty()) fspec = "gaussian(1)";
            if (psi_spec.empty()) psi_spec = "natural";
            if (std::isnan(b)) b = 0.5 * n;
            if (std::isnan(tol)) tol = 1e-6;
            return run_verify_hr(n, fspec, psi_spec, a, b, tol, common);
        }
        if (cmd == c_sob) {
            if (psi_spec.empty()) psi_spec = "natural";
            if (std::isnan(b)) b = n / beta_flag;
            if (std::isnan(tol)) tol = 1e-4;
            return run_verify_sobolev(n, beta_flag, fspec, gspec, psi_spec, a, b, tol, common);
        }
        if (cmd == c_sharp) {
            if (eps_csv.empty()) eps_csv = "0.1,0.03,0.01,0.003";
            if (std::isnan(tol)) tol = 1e-6;
            return run_sharpness(n, p_star, eps_csv, tol, common);
        }
        if (cmd == c_sweep) {
            std::optional<double> beta_opt;
            if (!std::isnan(beta_flag)) beta_opt = beta_flag;
            if (points == 0) points = 100;
            return run_sweep(kind, n, beta_opt, points, common);
        }
        throw gls::DomainError("unknown subcommand");
    } catch (const gls::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gls::NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
