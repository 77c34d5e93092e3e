#include "gls/gls_core.hpp"
#include "gls/errors.hpp"
#include "gls/sharp_constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gls {

PNormCache make_lp_map(const RadialProfile& f, const QuadratureSpec& quad) {
    RadialProfile copy = f;
    return PNormCache([copy, quad](double p) { return lp_norm(copy, p, quad); });
}

namespace {

// Chebyshev grid strictly inside the open working interval; for b = inf the
// grid lives in u-space under p = a + u/(1-u).
std::vector<double> working_grid(const Interval& iv, int m, double* offset_out) {
    if (iv.finite()) {
        const double off = 1e-6 * iv.width();
        *offset_out = off;
        return chebyshev_points(iv.a + off, iv.b - off, m);
    }
    const double off = 1e-6;
    *offset_out = off;
    std::vector<double> grid = chebyshev_points(off, 1.0 - off, m);
    for (double& u : grid) u = iv.a + u / (1.0 - u);
    return grid;
}

} // namespace

GlsNormResult gls_norm(const PNormCache& pnorm, const GlsSpace& space, int grid_points) {
    const Interval& iv = space.interval;
    if (!(iv.b > iv.a)) throw DomainError("gls_norm: empty working interval");
    if (!(iv.a >= space.psi.domain().a && iv.b <= space.psi.domain().b))
        throw DomainError("gls_norm: working interval not contained in psi domain");

    GlsNormResult res;

    if (space.psi.degenerate()) {
        // C/inf = 0 everywhere except the concentration exponent
        const double r = space.psi.concentration_r();
        if (!iv.contains(r))
            throw DomainError("gls_norm: degenerate exponent r = " + std::to_string(r) +
                              " outside the working interval; the ratio is 0 everywhere");
        res.value = pnorm(r) / space.psi.value(r);
        res.argmax_p = r;
        res.samples = {{r, res.value}};
        return res;
    }

    std::vector<double> grid = working_grid(iv, grid_points, &res.endpoint_offset);
    auto ratio = [&pnorm, &space](double p) {
        const double psi = space.psi.value(p);
        if (std::isinf(psi)) return 0.0;
        const double v = pnorm(p);
        if (std::isinf(v))
            throw DomainError("gls_norm: |f|_p infinite at p = " + std::to_string(p) +
                              " inside the working interval");
        return v / psi;
    };

    res.samples.reserve(grid.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        res.samples.emplace_back(grid[i], ratio(grid[i]));
        if (res.samples[i].second > res.samples[best].second) best = i;
    }
    res.value = res.samples[best].second;
    res.argmax_p = res.samples[best].first;

    const double lo = grid[best > 0 ? best - 1 : 0];
    const double hi = grid[std::min(best + 1, grid.size() - 1)];
    if (hi > lo) {
        const MaxResult refined = golden_section_max(ratio, lo, hi, 1e-10 * (hi - lo) + 1e-14);
        if (refined.value > res.value) {
            res.value = refined.value;
            res.argmax_p = refined.x;
        }
    }
    res.refined = true;
    return res;
}

Interval interval_IHR(int n, double a, double b) {
    if (n < 3) throw DomainError("interval_IHR: requires n >= 3");
    if (!(a >= 1.0 && b > a)) throw DomainError("interval_IHR: requires 1 <= a < b");
    const double lo = std::max(1.0, a);
    const double hi = std::min(0.5 * n, b);
    if (!(hi > lo))
        throw DomainError("interval_IHR: (1, n/2) cap (a, b) is empty (non-triviality violated)");
    return Interval{lo, hi};
}

Interval interval_JW(int n, double beta, double a, double b) {
    if (n < 2) throw DomainError("interval_JW: requires n >= 2");
    if (!(beta > 0.0 && beta < n)) throw DomainError("interval_JW: beta outside (0, n)");
    if (!(a >= 1.0 && b > a)) throw DomainError("interval_JW: requires 1 <= a < b");
    const double lo = std::max(1.0, a);
    const double hi = std::min(n / beta, b);
    if (!(hi > lo))
        throw DomainError("interval_JW: (1, n/beta) cap (a, b) is empty (non-triviality violated)");
    return Interval{lo, hi};
}

PsiFunction build_psi_V(int n, const PsiFunction& psi) {
    const Interval iv = interval_IHR(n, psi.domain().a, psi.domain().b);
    return psi.scaled_by([n](double p) { return k_hr({n, p}); }, iv);
}

PsiFunction build_psi_W(int n, double beta, const PsiFunction& psi) {
    const Interval iv = interval_JW(n, beta, psi.domain().a, psi.domain().b);
    return psi.scaled_by([n, beta](double p) { return k_s({n, beta, p}); }, iv);
}

GlsNormResult sobolev_gls_seminorm(const RadialProfile& f, const GlsSpace& space,
                                   const SobolevOrder& order, const QuadratureSpec& quad,
                                   const HankelSpec& hankel) {
    const RadialProfile deriv = order.kind == SobolevOrder::Kind::Laplacian
                                    ? radial_laplacian(f)
                                    : fractional_laplacian(f, order.beta, hankel);
    return gls_norm(make_lp_map(deriv, quad), space);
}

namespace {

VerificationReport verify_common(const std::string& theorem, int n, double beta,
                                 Interval interval, const PNormCache& lhs_map,
                                 const PNormCache& rhs_map,
                                 const std::function<double(double)>& constant,
                                 const PsiFunction& psi_scaled, const PsiFunction& psi,
                                 double tolerance, const std::string& constant_label) {
    VerificationReport rep;
    rep.theorem = theorem;
    rep.n = n;
    rep.beta = beta;
    rep.interval_used = interval;
    rep.tolerance = tolerance;
    rep.constant_label = constant_label;

    rep.lhs = gls_norm(lhs_map, {psi_scaled, interval});
    rep.rhs = gls_norm(rhs_map, {psi, interval});
    if (!(rep.rhs.value > 0.0))
        throw DomainError("verify_theorem_" + theorem + ": vanishing Sobolev seminorm");
    rep.ratio = rep.lhs.value / rep.rhs.value;

    rep.per_p.reserve(rep.lhs.samples.size());
    rep.margins_ok = true;
    for (const auto& [p, unused] : rep.lhs.samples) {
        const double lhs_p = lhs_map(p);
        const double rhs_p = constant(p) * rhs_map(p);
        const double margin = (rhs_p - lhs_p) / rhs_p;
        rep.per_p.push_back({p, lhs_p, rhs_p, margin});
        if (margin < -tolerance) rep.margins_ok = false;
    }
    rep.passed = (rep.ratio <= 1.0 + tolerance) && rep.margins_ok;
    return rep;
}

} // namespace

VerificationReport verify_theorem_3A(const RadialProfile& f, const PsiFunction& psi, int n,
                                     double tolerance, const QuadratureSpec& quad) {
    if (f.dim != n)
        throw DomainError("verify_theorem_3A: profile dimension " + std::to_string(f.dim) +
                          " != n = " + std::to_string(n));
    const Interval iv = interval_IHR(n, psi.domain().a, psi.domain().b);
    const PsiFunction psi_v = psi.scaled_by([n](double p) { return k_hr({n, p}); }, iv);
    const PNormCache lhs_map = make_lp_map(apply_V(f), quad);
    const PNormCache rhs_map = make_lp_map(radial_laplacian(f), quad);
    return verify_common("3A", n, 0.0, iv, lhs_map, rhs_map,
                         [n](double p) { return k_hr({n, p}); }, psi_v, psi, tolerance,
                         "K_HR(n,p)");
}

VerificationReport verify_theorem_3B(const RadialProfile& profile, double beta,
                                     const PsiFunction& psi, int n, double tolerance,
                                     GivenSide given, const QuadratureSpec& quad,
                                     const HankelSpec& hankel) {
    if (profile.dim != n)
        throw DomainError("verify_theorem_3B: profile dimension mismatch");
    const Interval iv = interval_JW(n, beta, psi.domain().a, psi.domain().b);

    RadialProfile f, g;
    if (given == GivenSide::G) {
        g = profile;
        f = fractional_seminorm_input(g, beta, hankel);
    } else {
        f = profile;
        g = fractional_laplacian(f, beta, hankel);
    }

    const PsiFunction psi_w = psi.scaled_by([n, beta](double p) { return k_s({n, beta, p}); }, iv);
    const PNormCache lhs_map = make_lp_map(apply_W(f, beta), quad);
    const PNormCache rhs_map = make_lp_map(g, quad);
    return verify_common("3B", n, beta, iv, lhs_map, rhs_map,
                         [n, beta](double p) { return k_s({n, beta, p}); }, psi_w, psi,
                         tolerance, "K_W(p), read as K_S(n,beta,p)");
}

SharpnessResult sharpness_probe_3A(int n, double p_star,
                                   const std::vector<double>& eps_sequence, double tolerance,
                                   const QuadratureSpec& quad) {
    if (!(p_star > 1.0 && p_star < 0.5 * n))
        throw DomainError("sharpness_probe_3A: p_star outside (1, n/2)");
    if (eps_sequence.empty()) throw DomainError("sharpness_probe_3A: empty eps sequence");
    for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
        if (!(eps_sequence[i] > 0.0 && eps_sequence[i] < 0.5))
            throw DomainError("sharpness_probe_3A: eps must lie in (0, 0.5)");
        if (i > 0 && !(eps_sequence[i] < eps_sequence[i - 1]))
            throw DomainError("sharpness_probe_3A: eps sequence must decrease strictly");
    }

    SharpnessResult out;
    out.n = n;
    out.p_star = p_star;
    const Interval domain{1.0, 0.5 * n};
    for (double eps : eps_sequence) {
        const RadialProfile f = extremal_family(n, p_star, eps, 0.05);
        const PNormCache lap_map = make_lp_map(radial_laplacian(f), quad);
        const PsiFunction psi = PsiFunction::natural(lap_map, domain);
        const VerificationReport rep = verify_theorem_3A(f, psi, n, tolerance, quad);
        out.points.emplace_back(eps, rep.ratio);
    }
    out.ratios_bounded = std::all_of(out.points.begin(), out.points.end(),
                                     [tolerance](const auto& pr) {
                                         return pr.second <= 1.0 + tolerance;
                                     });
    out.strictly_increasing = true;
    for (std::size_t i = 1; i < out.points.size(); ++i)
        if (!(out.points[i].second > out.points[i - 1].second)) out.strictly_increasing = false;
    return out;
}

} // namespace gls
