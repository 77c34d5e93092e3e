#include "gls/psi.hpp"
#include "gls/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gls {

namespace {

// Sampling grid for natural functions: Chebyshev points pulled strictly
// inside the open domain. For b = inf the grid lives in u-space under
// p = a + u/(1-u).
std::vector<double> natural_grid(const Interval& dom, int m) {
    const double off = 1e-6;
    if (dom.finite()) {
        const double d = off * dom.width();
        return chebyshev_points(dom.a + d, dom.b - d, m);
    }
    std::vector<double> us = chebyshev_points(off, 1.0 - off, m);
    for (double& u : us) u = dom.a + u / (1.0 - u);
    return us;
}

} // namespace

Interval make_interval(double a, double b) {
    if (!(a >= 1.0)) throw DomainError("Interval: requires a >= 1, got a = " + std::to_string(a));
    if (!(b > a)) throw DomainError("Interval: requires b > a");
    return Interval{a, b};
}

const char* psi_kind_name(PsiKind kind) {
    switch (kind) {
        case PsiKind::Power: return "power";
        case PsiKind::PowerInfinite: return "power_infinite";
        case PsiKind::Natural: return "natural";
        case PsiKind::FamilyNatural: return "family_natural";
        case PsiKind::DegenerateR: return "degenerate_r";
    }
    return "?";
}

double PsiFunction::base_value(double p) const {
    switch (kind_) {
        case PsiKind::Power:
            return std::pow(p - domain_.a, -beta_) * std::pow(domain_.b - p, -gamma_);
        case PsiKind::PowerInfinite:
            return p < h_ ? std::pow(p - domain_.a, -beta_) : std::pow(p, std::fabs(gamma_));
        case PsiKind::Natural:
        case PsiKind::FamilyNatural:
            return exact_ ? exact_(p) : interp_.value(p);
        case PsiKind::DegenerateR:
            return p == r_ ? 1.0 : kInf;
    }
    throw DomainError("PsiFunction: invalid kind");
}

double PsiFunction::value(double p) const {
    if (!domain_.contains(p))
        throw DomainError("psi: p = " + std::to_string(p) + " outside open domain (" +
                          std::to_string(domain_.a) + ", " + std::to_string(domain_.b) + ")");
    double v = base_value(p);
    if (weight_ && std::isfinite(v)) v *= weight_(p);
    return v;
}

PsiFunction PsiFunction::scaled_by(std::function<double(double)> weight, Interval sub) const {
    if (!(sub.a >= domain_.a && sub.b <= domain_.b))
        throw DomainError("psi.scaled_by: sub-interval not contained in psi domain");
    PsiFunction out = *this;
    out.domain_ = sub;
    if (weight_) {
        auto inner = weight_;
        out.weight_ = [inner, weight](double p) { return inner(p) * weight(p); };
    } else {
        out.weight_ = std::move(weight);
    }
    return out;
}

PsiFunction PsiFunction::power(double a, double b, double beta, double gamma) {
    if (!(a >= 1.0 && b > a && std::isfinite(b)))
        throw DomainError("power psi: requires 1 <= a < b < inf");
    if (!(beta >= 0.0 && gamma >= 0.0))
        throw DomainError("power psi: requires beta, gamma >= 0");
    PsiFunction psi;
    psi.kind_ = PsiKind::Power;
    psi.domain_ = Interval{a, b};
    psi.beta_ = beta;
    psi.gamma_ = gamma;
    return psi;
}

PsiFunction PsiFunction::power_infinite(double a, double beta, double gamma) {
    const double h = solve_continuity_h(a, beta, gamma);
    PsiFunction psi;
    psi.kind_ = PsiKind::PowerInfinite;
    psi.domain_ = Interval{a, kInf};
    psi.beta_ = beta;
    psi.gamma_ = gamma;
    psi.h_ = h;
    return psi;
}

PsiFunction PsiFunction::natural(std::function<double(double)> pnorm, Interval domain,
                                 int samples) {
    if (!pnorm) throw DomainError("natural psi: null evaluator");
    PsiFunction psi;
    psi.kind_ = PsiKind::Natural;
    psi.domain_ = domain;
    psi.sample_p_ = natural_grid(domain, samples);
    psi.sample_v_.reserve(psi.sample_p_.size());
    for (double p : psi.sample_p_) {
        const double v = pnorm(p);
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("natural psi: |xi|_p not positive and finite at p = " +
                              std::to_string(p) + " (value " + std::to_string(v) + ")");
        psi.sample_v_.push_back(v);
    }
    psi.interp_ = PchipInterpolant(psi.sample_p_, psi.sample_v_);
    psi.exact_ = std::move(pnorm);
    return psi;
}

PsiFunction PsiFunction::natural_sampled(std::vector<std::pair<double, double>> pnorms,
                                         Interval domain) {
    if (pnorms.size() < 2) throw DomainError("natural psi: need at least 2 samples");
    std::sort(pnorms.begin(), pnorms.end());
    PsiFunction psi;
    psi.kind_ = PsiKind::Natural;
    psi.domain_ = domain;
    for (const auto& [p, v] : pnorms) {
        if (!domain.contains(p))
            throw DomainError("natural psi: sample p = " + std::to_string(p) + " outside domain");
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("natural psi: sample at p = " + std::to_string(p) +
                              " not positive and finite");
        psi.sample_p_.push_back(p);
        psi.sample_v_.push_back(v);
    }
    psi.interp_ = PchipInterpolant(psi.sample_p_, psi.sample_v_);
    return psi;
}

PsiFunction PsiFunction::natural_family(std::vector<std::function<double(double)>> members,
                                        Interval domain, int samples) {
    if (members.empty()) throw DomainError("family natural psi: empty family");
    auto sup = [members = std::move(members)](double p) {
        double best = -kInf;
        for (const auto& m : members) best = std::max(best, m(p));
        return best;
    };
    PsiFunction psi = natural(sup, domain, samples);
    psi.kind_ = PsiKind::FamilyNatural;
    return psi;
}

PsiFunction PsiFunction::degenerate(double r, Interval domain) {
    if (!domain.contains(r))
        throw DomainError("degenerate psi: r = " + std::to_string(r) + " outside open domain");
    PsiFunction psi;
    psi.kind_ = PsiKind::DegenerateR;
    psi.domain_ = domain;
    psi.r_ = r;
    return psi;
}

double solve_continuity_h(double a, double beta, double gamma) {
    if (!(a >= 1.0)) throw DomainError("solve_continuity_h: requires a >= 1");
    if (!(beta >= 0.0)) throw DomainError("solve_continuity_h: requires beta >= 0");
    if (!(gamma < 0.0)) throw DomainError("solve_continuity_h: requires gamma < 0");
    const double ag = std::fabs(gamma);
    if (beta == 0.0)
        throw DomainError("solve_continuity_h: beta = 0 gives 1 = h^{|gamma|}, no root in (a, inf)");

    // log form: G(h) = -beta log(h-a) - |gamma| log h, strictly decreasing,
    // +inf at a+, -inf at infinity
    auto G = [a, beta, ag](double h) { return -beta * std::log(h - a) - ag * std::log(h); };
    double lo = a + 1e-12 * std::max(1.0, a);
    while (!(G(lo) > 0.0)) lo = a + 0.5 * (lo - a);
    double hi = a + 1.0;
    int guard = 0;
    while (G(hi) > 0.0) {
        hi = a + 2.0 * (hi - a);
        if (++guard > 200)
            throw NumericError("solve_continuity_h: failed to bracket a root");
    }
    const double h = find_root_bracketed(G, lo, hi);
    const double lhs = std::pow(h - a, -beta);
    const double rhs = std::pow(h, ag);
    if (std::fabs(lhs - rhs) > 1e-12 * std::max(std::fabs(lhs), std::fabs(rhs)))
        throw NumericError("solve_continuity_h: residual above 1e-12 at h = " + std::to_string(h));
    return h;
}

PsiFunction make_power_psi(double a, double b, double beta, double gamma) {
    return PsiFunction::power(a, b, beta, gamma);
}

PsiFunction make_power_psi_infinite(double a, double beta, double gamma) {
    return PsiFunction::power_infinite(a, beta, gamma);
}

PsiFunction degenerate_psi_r(double r, Interval domain) {
    return PsiFunction::degenerate(r, domain);
}

} // namespace gls
