#include "gls/json_io.hpp"
#include "gls/errors.hpp"

#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

namespace gls {

using nlohmann::json;

json psi_to_json(const PsiFunction& psi) {
    json j;
    j["kind"] = psi_kind_name(psi.kind());
    j["a"] = psi.domain().a;
    j["b"] = psi.domain().finite() ? json(psi.domain().b) : json("inf");
    j["beta"] = psi.beta();
    j["gamma"] = psi.gamma();
    j["r"] = psi.concentration_r();
    j["h"] = psi.crossover_h();
    json samples = json::array();
    const auto& ps = psi.sample_points();
    const auto& vs = psi.sample_values();
    for (std::size_t i = 0; i < ps.size(); ++i) samples.push_back({ps[i], vs[i]});
    j["samples"] = samples;
    return j;
}

PsiFunction psi_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const double a = j.at("a").get<double>();
    double b = std::numeric_limits<double>::infinity();
    if (j.contains("b") && !j["b"].is_string()) b = j["b"].get<double>();
    if (kind == "power")
        return PsiFunction::power(a, b, j.at("beta").get<double>(), j.at("gamma").get<double>());
    if (kind == "power_infinite")
        return PsiFunction::power_infinite(a, j.at("beta").get<double>(),
                                           j.at("gamma").get<double>());
    if (kind == "degenerate_r")
        return PsiFunction::degenerate(j.at("r").get<double>(), make_interval(a, b));
    if (kind == "natural" || kind == "family_natural") {
        std::vector<std::pair<double, double>> samples;
        for (const auto& s : j.at("samples"))
            samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
        return PsiFunction::natural_sampled(std::move(samples), make_interval(a, b));
    }
    throw DomainError("psi_from_json: unknown kind '" + kind + "'");
}

namespace {

std::vector<double> parse_args(const std::string& s, std::size_t open, std::size_t close) {
    std::vector<double> args;
    std::string inner = s.substr(open + 1, close - open - 1);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        args.push_back(std::stod(item));
    }
    return args;
}

RadialProfile profile_from_json(const json& j, int n) {
    if (!j.is_array()) throw DomainError("profile spec: mixture JSON must be an array");
    std::vector<std::pair<double, double>> comps;
    for (const auto& item : j) {
        const std::string kind = item.value("kind", "gaussian");
        if (kind != "gaussian")
            throw DomainError("profile spec: only gaussian mixture components are supported");
        comps.emplace_back(item.value("coef", 1.0), item.value("t", 1.0));
    }
    return make_gaussian_mixture(n, comps);
}

} // namespace

RadialProfile profile_from_spec(const std::string& spec, int n) {
    if (spec.empty()) throw DomainError("profile spec: empty");
    if (spec.front() == '[' || spec.front() == '{')
        return profile_from_json(json::parse(spec), n);
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
        std::ifstream in(spec);
        if (!in) throw DomainError("profile spec: cannot open file '" + spec + "'");
        json j;
        in >> j;
        return profile_from_json(j, n);
    }

    const std::size_t open = spec.find('(');
    const std::string name = open == std::string::npos ? spec : spec.substr(0, open);
    std::vector<double> args;
    if (open != std::string::npos) {
        const std::size_t close = spec.rfind(')');
        if (close == std::string::npos || close < open)
            throw DomainError("profile spec: unbalanced parentheses in '" + spec + "'");
        args = parse_args(spec, open, close);
    }

    if (name == "gaussian") return make_gaussian(n, args.empty() ? 1.0 : args[0]);
    if (name == "ball_indicator") return make_ball_indicator(n, args.empty() ? 1.0 : args[0]);
    if (name == "power_trunc") {
        if (args.size() != 3)
            throw DomainError("profile spec: power_trunc needs (sigma, eps, smoothing)");
        return make_power_trunc(n, args[0], args[1], args[2]);
    }
    throw DomainError("profile spec: unknown catalog profile '" + name + "'");
}

json make_provenance(const ReportMeta& meta) {
    json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = meta.command;
    j["quadrature"] = {{"rel_tol", meta.quad.rel_tol},
                       {"max_subdivisions", meta.quad.max_subdivisions}};
    j["grid"] = {{"gls_grid_points", meta.gls_grid_points},
                 {"natural_samples", meta.natural_samples},
                 {"endpoint_offset_factor", 1e-6}};
    if (meta.include_timestamp) {
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["timestamp"] = buf;
    }
    return j;
}

json gls_result_to_json(const GlsNormResult& r) {
    json samples = json::array();
    for (const auto& [p, v] : r.samples) samples.push_back({p, v});
    return json{{"value", r.value},
                {"argmax_p", r.argmax_p},
                {"refined", r.refined},
                {"endpoint_offset", r.endpoint_offset},
                {"samples", samples}};
}

json report_to_json(const VerificationReport& rep, const ReportMeta& meta) {
    json j;
    j["theorem"] = rep.theorem;
    j["n"] = rep.n;
    if (rep.theorem == "3B") j["beta"] = rep.beta;
    j["interval"] = {rep.interval_used.a, rep.interval_used.b};
    j["ratio"] = rep.ratio;
    j["passed"] = rep.passed;
    j["margins_ok"] = rep.margins_ok;
    j["tolerance"] = rep.tolerance;
    j["argmax_p"] = rep.lhs.argmax_p;
    j["constant_label"] = rep.constant_label;
    j["lhs"] = {{"value", rep.lhs.value}, {"argmax_p", rep.lhs.argmax_p}};
    j["rhs"] = {{"value", rep.rhs.value}, {"argmax_p", rep.rhs.argmax_p}};
    json samples = json::array();
    for (const auto& s : rep.per_p)
        samples.push_back(
            {{"p", s.p}, {"lhs_p", s.lhs}, {"rhs_p", s.rhs}, {"margin", s.margin}});
    j["samples"] = samples;
    j["provenance"] = make_provenance(meta);
    return j;
}

json sharpness_to_json(const SharpnessResult& s, double tolerance, const ReportMeta& meta) {
    json pts = json::array();
    for (const auto& [eps, ratio] : s.points) pts.push_back({{"eps", eps}, {"ratio", ratio}});
    json j;
    j["theorem"] = "3A-sharpness";
    j["n"] = s.n;
    j["p_star"] = s.p_star;
    j["tolerance"] = tolerance;
    j["points"] = pts;
    j["strictly_increasing"] = s.strictly_increasing;
    j["ratios_bounded"] = s.ratios_bounded;
    j["passed"] = s.strictly_increasing && s.ratios_bounded;
    j["provenance"] = make_provenance(meta);
    return j;
}

} // namespace gls
