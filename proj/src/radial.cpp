#include "gls/radial.hpp"
#include "gls/errors.hpp"
#include "gls/numerics.hpp"
#include "gls/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

namespace gls {

TailClass TailClass::gaussian(double rate) {
    if (!(rate > 0.0)) throw DomainError("TailClass::gaussian: rate must be > 0");
    TailClass t;
    t.kind = Kind::Gaussian;
    t.rate = rate;
    return t;
}

TailClass TailClass::power(double exponent, double anchor_r, double coefficient) {
    if (!(anchor_r > 0.0)) throw DomainError("TailClass::power: anchor_r must be > 0");
    TailClass t;
    t.kind = Kind::Power;
    t.exponent = exponent;
    t.anchor_r = anchor_r;
    t.coefficient = coefficient;
    return t;
}

TailClass TailClass::compact(double support_radius) {
    if (!(support_radius > 0.0)) throw DomainError("TailClass::compact: support_radius must be > 0");
    TailClass t;
    t.kind = Kind::Compact;
    t.support_radius = support_radius;
    return t;
}

const char* TailClass::name() const {
    switch (kind) {
        case Kind::Gaussian: return "gaussian";
        case Kind::Power: return "power";
        case Kind::Compact: return "compact";
    }
    return "?";
}

double RadialProfile::value(double r) const {
    if (!(r > 0.0)) throw DomainError("RadialProfile: evaluation requires r > 0");
    return f(r);
}

double RadialProfile::deriv1(double r) const {
    if (!df) throw SmoothnessError("RadialProfile '" + label + "': no analytic derivative");
    return df(r);
}

double RadialProfile::deriv2(double r) const {
    if (!d2f) throw SmoothnessError("RadialProfile '" + label + "': no analytic 2nd derivative");
    return d2f(r);
}

// ---- catalog -------------------------------------------------------------

RadialProfile make_gaussian(int n, double t) {
    if (n < 2) throw DomainError("make_gaussian: n >= 2");
    if (!(t > 0.0)) throw DomainError("make_gaussian: rate t must be > 0");
    RadialProfile g;
    g.dim = n;
    g.f = [t](double r) { return std::exp(-t * r * r); };
    g.df = [t](double r) { return -2.0 * t * r * std::exp(-t * r * r); };
    g.d2f = [t](double r) {
        return (4.0 * t * t * r * r - 2.0 * t) * std::exp(-t * r * r);
    };
    g.tail = TailClass::gaussian(t);
    g.label = "gaussian(" + std::to_string(t) + ")";
    return g;
}

RadialProfile make_gaussian_mixture(int n,
                                    const std::vector<std::pair<double, double>>& coef_rate) {
    if (coef_rate.empty()) throw DomainError("make_gaussian_mixture: empty mixture");
    double min_rate = coef_rate.front().second;
    for (const auto& [c, t] : coef_rate) {
        if (!(t > 0.0)) throw DomainError("make_gaussian_mixture: rates must be > 0");
        min_rate = std::min(min_rate, t);
    }
    auto mix = std::make_shared<std::vector<std::pair<double, double>>>(coef_rate);
    RadialProfile g;
    g.dim = n;
    g.f = [mix](double r) {
        double s = 0.0;
        for (const auto& [c, t] : *mix) s += c * std::exp(-t * r * r);
        return s;
    };
    g.df = [mix](double r) {
        double s = 0.0;
        for (const auto& [c, t] : *mix) s += c * (-2.0 * t * r) * std::exp(-t * r * r);
        return s;
    };
    g.d2f = [mix](double r) {
        double s = 0.0;
        for (const auto& [c, t] : *mix)
            s += c * (4.0 * t * t * r * r - 2.0 * t) * std::exp(-t * r * r);
        return s;
    };
    g.tail = TailClass::gaussian(min_rate);
    g.label = "gaussian_mixture[" + std::to_string(coef_rate.size()) + "]";
    return g;
}

RadialProfile make_ball_indicator(int n, double radius) {
    if (n < 2) throw DomainError("make_ball_indicator: n >= 2");
    if (!(radius > 0.0)) throw DomainError("make_ball_indicator: radius must be > 0");
    RadialProfile g;
    g.dim = n;
    g.f = [radius](double r) { return r <= radius ? 1.0 : 0.0; };
    g.tail = TailClass::compact(radius);
    g.split_points = {radius};
    g.label = "ball_indicator(" + std::to_string(radius) + ")";
    return g;
}

namespace {

// quintic smoothstep: C^2 ramp with S(0)=0, S(1)=1, S'=S''=0 at both ends
double smooth5(double u) { return u * u * u * (10.0 + u * (-15.0 + 6.0 * u)); }
double smooth5_d1(double u) { return 30.0 * u * u * (1.0 - u) * (1.0 - u); }
double smooth5_d2(double u) { return 60.0 * u * (1.0 - u) * (1.0 - 2.0 * u); }

struct Window {
    double lo, lo_top, hi_top, hi; // 0 | ramp | 1 | ramp | 0

    double w(double r) const {
        if (r <= lo || r >= hi) return 0.0;
        if (r < lo_top) return smooth5((r - lo) / (lo_top - lo));
        if (r <= hi_top) return 1.0;
        return smooth5((hi - r) / (hi - hi_top));
    }
    double dw(double r) const {
        if (r <= lo || r >= hi) return 0.0;
        if (r < lo_top) return smooth5_d1((r - lo) / (lo_top - lo)) / (lo_top - lo);
        if (r <= hi_top) return 0.0;
        return -smooth5_d1((hi - r) / (hi - hi_top)) / (hi - hi_top);
    }
    double d2w(double r) const {
        if (r <= lo || r >= hi) return 0.0;
        if (r < lo_top) {
            const double s = lo_top - lo;
            return smooth5_d2((r - lo) / s) / (s * s);
        }
        if (r <= hi_top) return 0.0;
        const double s = hi - hi_top;
        return smooth5_d2((hi - r) / s) / (s * s);
    }
};

} // namespace

RadialProfile make_power_trunc(int n, double sigma, double eps, double smoothing) {
    if (n < 2) throw DomainError("make_power_trunc: n >= 2");
    if (!(eps > 0.0 && eps < 0.5)) throw DomainError("make_power_trunc: eps in (0, 0.5)");
    if (!(smoothing > 0.0)) throw DomainError("make_power_trunc: smoothing must be > 0");
    const double lo_top = eps * (1.0 + smoothing);
    const double hi_top = 1.0 - smoothing;
    if (!(lo_top < hi_top))
        throw DomainError("make_power_trunc: blending zones overlap (eps(1+s) >= 1-s)");
    auto win = std::make_shared<Window>(Window{eps, lo_top, hi_top, 1.0});

    RadialProfile g;
    g.dim = n;
    g.f = [win, sigma](double r) {
        const double w = win->w(r);
        return w == 0.0 ? 0.0 : w * std::pow(r, sigma);
    };
    g.df = [win, sigma](double r) {
        if (r <= win->lo || r >= win->hi) return 0.0;
        const double rs = std::pow(r, sigma);
        return win->dw(r) * rs + sigma * win->w(r) * rs / r;
    };
    g.d2f = [win, sigma](double r) {
        if (r <= win->lo || r >= win->hi) return 0.0;
        const double rs = std::pow(r, sigma);
        return win->d2w(r) * rs + 2.0 * sigma * win->dw(r) * rs / r +
               sigma * (sigma - 1.0) * win->w(r) * rs / (r * r);
    };
    g.tail = TailClass::compact(1.0);
    g.split_points = {eps, lo_top, hi_top, 1.0};
    g.label = "power_trunc(" + std::to_string(sigma) + "," + std::to_string(eps) + "," +
              std::to_string(smoothing) + ")";
    return g;
}

RadialProfile extremal_family(int n, double p_star, double eps, double smoothing) {
    if (n < 3) throw DomainError("extremal_family: n >= 3");
    if (!(p_star > 1.0 && p_star < 0.5 * n))
        throw DomainError("extremal_family: p_star in (1, n/2)");
    if (!(eps > 0.0 && eps < 0.5)) throw DomainError("extremal_family: eps in (0, 0.5)");
    RadialProfile g = make_power_trunc(n, 2.0 - n / p_star, eps, smoothing);
    g.label = "extremal(n=" + std::to_string(n) + ",p*=" + std::to_string(p_star) +
              ",eps=" + std::to_string(eps) + ")";
    return g;
}

RadialProfile make_sampled_profile(int n, std::vector<double> rs, std::vector<double> ys,
                                   double origin_exponent, TailClass tail, std::string label) {
    if (rs.size() < 4) throw DomainError("make_sampled_profile: need >= 4 samples");
    auto interp = std::make_shared<PchipInterpolant>(std::move(rs), std::move(ys));
    const double r0 = interp->front_x();
    const double r1 = interp->back_x();
    const double y0 = interp->front_y();
    const double y1 = interp->back_y();
    if (tail.kind == TailClass::Kind::Power) {
        tail.anchor_r = r1;
        if (!std::isnan(tail.coefficient) && tail.coefficient != 0.0)
            tail.correction = (y1 * std::pow(r1, tail.exponent) / tail.coefficient - 1.0) * r1 * r1;
    }

    RadialProfile g;
    g.dim = n;
    g.origin_exponent = origin_exponent;
    g.tail = tail;
    g.split_points = {r0, r1};
    g.label = std::move(label);
    g.f = [interp, r0, r1, y0, y1, origin_exponent, tail](double r) {
        if (r < r0) return y0 * std::pow(r / r0, origin_exponent);
        if (r <= r1) return interp->value(r);
        switch (tail.kind) {
            case TailClass::Kind::Compact:
                return 0.0;
            case TailClass::Kind::Power:
                return std::isnan(tail.coefficient)
                           ? y1 * std::pow(r / r1, -tail.exponent)
                           : tail.coefficient * std::pow(r, -tail.exponent) *
                                 (1.0 + tail.correction / (r * r));
            case TailClass::Kind::Gaussian:
                return y1 * std::exp(-tail.rate * (r * r - r1 * r1));
        }
        return 0.0;
    };
    return g;
}

// ---- L_p norm ------------------------------------------------------------

namespace {

// segment edges strictly inside (lo, hi)
std::vector<double> inner_splits(const std::vector<double>& splits, double lo, double hi) {
    std::vector<double> out;
    for (double s : splits)
        if (s > lo && s < hi) out.push_back(s);
    return out;
}

} // namespace

double lp_norm(const RadialProfile& prof, double p, const QuadratureSpec& quad) {
    quad.validate();
    if (!(p >= 1.0)) throw DomainError("lp_norm: requires p >= 1");
    if (prof.dim < 2) throw DomainError("lp_norm: requires dim >= 2");
    const int n = prof.dim;
    const double sigma = prof.origin_exponent;

    // convergence prechecks (origin, then tail)
    const double eps0 = n + p * sigma;
    if (!(eps0 > 0.0))
        throw DivergenceError("lp_norm: origin integrand r^{" + std::to_string(eps0 - 1.0) +
                              "} diverges for '" + prof.label + "' at p = " + std::to_string(p));
    if (prof.tail.kind == TailClass::Kind::Power && !(p * prof.tail.exponent > n))
        throw DivergenceError("lp_norm: tail decay r^{-" + std::to_string(prof.tail.exponent) +
                              "} gives a divergent integral for '" + prof.label +
                              "' at p = " + std::to_string(p));

    auto integrand = [&prof, p, n](double r) {
        const double v = prof.f(r);
        return v == 0.0 ? 0.0 : std::pow(std::fabs(v), p) * std::pow(r, n - 1.0);
    };

    std::vector<double> splits = prof.split_points;
    std::sort(splits.begin(), splits.end());
    // mandatory breakpoint at r = 1 (blend edges of catalog profiles sit near it)
    splits.push_back(1.0);

    // origin segment: integrate r^{eps0-1} |f r^{-sigma}|^p in weighted form,
    // exact for the leading power even when eps0 is arbitrarily small
    double s1 = 1.0;
    for (double s : splits)
        if (s > 0.0) { s1 = std::min(s1, s); break; }
    s1 = std::min(s1, 1.0);
    auto origin_w = [&prof, p, sigma](double r) {
        const double v = prof.f(r);
        return v == 0.0 ? 0.0 : std::pow(std::fabs(v) * std::pow(r, -sigma), p);
    };
    double total = integrate_power_origin(origin_w, eps0, s1, quad.rel_tol, 1e-300,
                                          quad.max_subdivisions);

    // interior + tail split radius
    double r_tail;
    switch (prof.tail.kind) {
        case TailClass::Kind::Compact:
            r_tail = prof.tail.support_radius;
            break;
        case TailClass::Kind::Power:
            r_tail = prof.tail.anchor_r;
            break;
        case TailClass::Kind::Gaussian:
            // e^{-p t r^2} r^{n-1} is negligible beyond this radius
            r_tail = std::sqrt(95.0 / (prof.tail.rate * p)) + 1.0;
            break;
        default:
            r_tail = 10.0;
    }
    for (double s : splits) r_tail = std::max(r_tail, s);

    if (r_tail > s1) {
        const std::vector<double> mids = inner_splits(splits, s1, r_tail);
        const double interior = integrate_adaptive(integrand, s1, r_tail, quad.rel_tol,
                                                   std::max(1e-300, quad.rel_tol * total),
                                                   quad.max_subdivisions, mids);
        total += interior;
    }

    switch (prof.tail.kind) {
        case TailClass::Kind::Compact:
            break;
        case TailClass::Kind::Gaussian:
            total += integrate_semi_infinite(integrand, r_tail, quad.rel_tol,
                                             std::max(1e-300, quad.rel_tol * total),
                                             quad.max_subdivisions);
            break;
        case TailClass::Kind::Power: {
            // beyond the anchor the profile is its asymptotic power; the tail
            // integral c^p r^{n-qp}/(qp-n) is exact for that form and stays
            // finite however close qp is to n. A known correction term adds
            // c^p p b R^{n-qp-2}/(qp-n+2), whose relative weight vanishes at
            // the near-divergent endpoint.
            const double q = prof.tail.exponent;
            const double qpn = q * p - n;
            if (std::isnan(prof.tail.coefficient)) {
                const double c = std::fabs(prof.f(r_tail)) * std::pow(r_tail, q);
                total += std::pow(c, p) * std::pow(r_tail, -qpn) / qpn;
            } else {
                const double cp = std::pow(std::fabs(prof.tail.coefficient), p);
                const double b = prof.tail.correction;
                total += cp * (std::pow(r_tail, -qpn) / qpn +
                               p * b * std::pow(r_tail, -qpn - 2.0) / (qpn + 2.0));
            }
            break;
        }
    }

    if (!(total >= 0.0) || !std::isfinite(total))
        throw NumericError("lp_norm: non-finite integral for '" + prof.label + "' at p = " +
                           std::to_string(p));
    return std::pow(sphere_area(n) * total, 1.0 / p);
}

// ---- differential / multiplier operators ---------------------------------

RadialProfile radial_laplacian(const RadialProfile& prof, bool allow_finite_differences) {
    const int n = prof.dim;
    RadialProfile out;
    out.dim = n;
    out.origin_exponent = prof.origin_exponent == 0.0 ? 0.0 : prof.origin_exponent - 2.0;
    out.tail = prof.tail;
    if (prof.tail.kind == TailClass::Kind::Power) {
        out.tail.exponent = prof.tail.exponent + 2.0;
        out.tail.coefficient = std::numeric_limits<double>::quiet_NaN();
    }
    out.split_points = prof.split_points;
    out.label = "laplacian(" + prof.label + ")";

    if (prof.has_derivatives()) {
        auto d1 = prof.df;
        auto d2 = prof.d2f;
        out.f = [d1, d2, n](double r) { return d2(r) + (n - 1.0) * d1(r) / r; };
        return out;
    }
    if (!allow_finite_differences)
        throw SmoothnessError("radial_laplacian: '" + prof.label +
                              "' has no analytic derivatives (finite differences not enabled)");
    auto f = prof.f;
    out.f = [f, n](double r) {
        // centered 5-point stencil; the 1/r factor amplifies noise near the
        // origin, so the step floor keeps the stencil well-scaled
        const double h = std::max(1e-5, 1e-5 * r);
        const double rr = std::max(r, 2.5 * h);
        const double fm2 = f(rr - 2.0 * h), fm1 = f(rr - h), f0 = f(rr),
                     fp1 = f(rr + h), fp2 = f(rr + 2.0 * h);
        const double der1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        const double der2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
        return der2 + (n - 1.0) * der1 / rr;
    };
    return out;
}

namespace {

// f(r) * r^s with metadata shifted accordingly
RadialProfile multiply_by_power(const RadialProfile& prof, double s, const std::string& label) {
    RadialProfile out;
    out.dim = prof.dim;
    out.origin_exponent = prof.origin_exponent + s;
    out.tail = prof.tail;
    if (prof.tail.kind == TailClass::Kind::Power) out.tail.exponent = prof.tail.exponent - s;
    out.split_points = prof.split_points;
    out.label = label;
    auto f = prof.f;
    out.f = [f, s](double r) {
        const double v = f(r);
        return v == 0.0 ? 0.0 : v * std::pow(r, s);
    };
    if (prof.has_derivatives()) {
        auto d1 = prof.df;
        out.df = [f, d1, s](double r) {
            return d1(r) * std::pow(r, s) + s * f(r) * std::pow(r, s - 1.0);
        };
        auto d2 = prof.d2f;
        out.d2f = [f, d1, d2, s](double r) {
            return d2(r) * std::pow(r, s) + 2.0 * s * d1(r) * std::pow(r, s - 1.0) +
                   s * (s - 1.0) * f(r) * std::pow(r, s - 2.0);
        };
    }
    return out;
}

} // namespace

RadialProfile apply_V(const RadialProfile& f) {
    return multiply_by_power(f, -2.0, "V(" + f.label + ")");
}

RadialProfile apply_W(const RadialProfile& f, double beta) {
    if (!(beta > 0.0 && beta < f.dim))
        throw DomainError("apply_W: beta must lie in (0, n), got " + std::to_string(beta));
    return multiply_by_power(f, -beta, "W_" + std::to_string(beta) + "(" + f.label + ")");
}

// ---- radial Poisson solver -----------------------------------------------

RadialProfile radial_poisson_solve(const RadialProfile& g, const QuadratureSpec& quad) {
    quad.validate();
    const int n = g.dim;
    if (n < 3) throw DomainError("radial_poisson_solve: requires n >= 3");
    double r_src;
    switch (g.tail.kind) {
        case TailClass::Kind::Compact:
            r_src = g.tail.support_radius;
            break;
        case TailClass::Kind::Gaussian:
            r_src = std::sqrt(95.0 / g.tail.rate) + 1.0;
            break;
        default:
            throw DomainError("radial_poisson_solve: source must be compact or gaussian-tailed");
    }

    // cached cumulative moment M(t) = int_0^t s^{n-1} g(s) ds, stored as the
    // reduced function M(t)/t^n which is smooth and O(1) at the origin, so
    // the interpolant keeps *relative* accuracy where M itself vanishes
    const double t0 = 1e-6 * r_src;
    std::vector<double> grid{t0};
    {
        std::vector<double> edges = g.split_points;
        edges.push_back(r_src);
        std::sort(edges.begin(), edges.end());
        double prev = t0;
        for (double e : edges) {
            if (!(e > prev && e <= r_src)) continue;
            const int m = std::max(16, static_cast<int>(384 * (e - prev) / r_src));
            for (int j = 1; j <= m; ++j) grid.push_back(prev + (e - prev) * j / m);
            prev = e;
        }
    }
    auto src = g.f;
    auto moment_integrand = [src, n](double s) {
        const double v = src(s);
        return v == 0.0 ? 0.0 : v * std::pow(s, n - 1.0);
    };
    std::vector<double> reduced, reduced_slope;
    reduced.reserve(grid.size());
    reduced_slope.reserve(grid.size());
    double acc = integrate_adaptive(moment_integrand, 0.0, t0, 1e-12, 1e-300,
                                    quad.max_subdivisions);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        if (i > 0)
            acc += integrate_adaptive(moment_integrand, grid[i - 1], t, 1e-12,
                                      std::max(1e-300, 1e-12 * std::fabs(acc)),
                                      quad.max_subdivisions);
        reduced.push_back(acc / std::pow(t, n));
        // exact derivative of M(t)/t^n, since M'(t) = t^{n-1} g(t)
        reduced_slope.push_back(src(t) / t - n * reduced.back() / t);
    }
    auto moment = std::make_shared<PchipInterpolant>(grid, reduced, reduced_slope);
    const double m_total = acc;
    const double reduced0 = reduced.front();

    auto m_at = [moment, m_total, r_src, t0, reduced0, n](double t) {
        if (t >= r_src) return m_total;
        if (t <= t0) return reduced0 * std::pow(t, n);
        return moment->value(t) * std::pow(t, n);
    };

    RadialProfile out;
    out.dim = n;
    out.tail = TailClass::power(n - 2.0, r_src);
    out.split_points = {r_src};
    out.label = "poisson(" + g.label + ")";
    // tight value tolerance so probe differentiation stays noise-free
    const double rel = std::min(quad.rel_tol, 1e-12);
    const int max_sub = quad.max_subdivisions;
    out.f = [m_at, m_total, r_src, n, rel, max_sub](double r) {
        // f(r) = -int_r^inf t^{1-n} M(t) dt; beyond the source radius M is
        // constant and the integral is closed-form
        const double r_hi = std::max(r, r_src);
        double acc = m_total * std::pow(r_hi, 2.0 - n) / (n - 2.0);
        if (r < r_src) {
            auto outer = [m_at, n](double t) { return m_at(t) * std::pow(t, 1.0 - n); };
            acc += integrate_adaptive(outer, r, r_src, rel, 1e-300, max_sub);
        }
        return -acc;
    };
    out.df = [m_at, n](double r) { return m_at(r) * std::pow(r, 1.0 - n); };
    out.d2f = [m_at, src, r_src, n](double r) {
        const double s = r < r_src ? src(r) : 0.0;
        return (1.0 - n) * std::pow(r, -static_cast<double>(n)) * m_at(r) + s;
    };

    // probe verification of Delta f = g in flux form: differentiating the
    // *values* of f must reproduce r^{n-1} f'(r) = int_0^r s^{n-1} g ds, with
    // the right side re-integrated from the source independently of the
    // cached moment. A first-difference check keeps quadrature noise from
    // being amplified the way a direct second-difference Laplacian would.
    if (m_total != 0.0) {
        const std::vector<double> probes = log_spaced_points(r_src / 30.0, 0.97 * r_src, 16);
        double gap = r_src;
        {
            std::vector<double> sp = g.split_points;
            std::sort(sp.begin(), sp.end());
            for (std::size_t i = 1; i < sp.size(); ++i)
                if (sp[i] - sp[i - 1] > 1e-12) gap = std::min(gap, sp[i] - sp[i - 1]);
        }
        for (double r : probes) {
            double dist = r_src; // keep the stencil clear of source kinks
            for (double s : g.split_points) dist = std::min(dist, std::fabs(r - s));
            if (dist < 1e-4 * r_src) continue;
            const double h = std::min({0.02 * r, 0.2 * gap, 0.3 * dist});
            const double fm2 = out.f(r - 2.0 * h), fm1 = out.f(r - h), fp1 = out.f(r + h),
                         fp2 = out.f(r + 2.0 * h);
            const double der1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
            const double flux = std::pow(r, n - 1.0) * der1;
            const double fresh = integrate_adaptive(moment_integrand, 0.0, r, 1e-12, 1e-300,
                                                    quad.max_subdivisions,
                                                    g.split_points);
            const double scale = std::fabs(fresh) + 0.01 * std::fabs(m_total);
            if (std::fabs(flux - fresh) > 1e-6 * scale)
                throw RoundTripError("radial_poisson_solve: flux mismatch at probe r = " +
                                     std::to_string(r) + " (|diff| = " +
                                     std::to_string(std::fabs(flux - fresh)) + ", scale " +
                                     std::to_string(scale) + ")");
        }
    }
    return out;
}

void check_profile_metadata(const RadialProfile& prof) {
    // origin: f(r)/f(2r) should look like 2^{-sigma} once r is small
    const double r0 = 1e-5;
    const double v1 = prof.f(r0), v2 = prof.f(2.0 * r0);
    if (v1 != 0.0 && v2 != 0.0) {
        const double measured = std::log2(std::fabs(v1 / v2));
        const double expected = -prof.origin_exponent;
        if (std::fabs(measured - expected) > 1.0)
            throw DomainError("profile '" + prof.label + "': origin_exponent " +
                              std::to_string(prof.origin_exponent) +
                              " inconsistent with measured slope " + std::to_string(-measured));
    }
    switch (prof.tail.kind) {
        case TailClass::Kind::Compact: {
            const double r = prof.tail.support_radius * 1.01 + 1e-9;
            if (prof.f(r) != 0.0)
                throw DomainError("profile '" + prof.label + "': nonzero beyond declared support");
            break;
        }
        case TailClass::Kind::Power: {
            const double r = std::max(prof.tail.anchor_r, 1.0);
            const double w1 = prof.f(r), w2 = prof.f(2.0 * r);
            if (w1 != 0.0 && w2 != 0.0) {
                const double measured = std::log2(std::fabs(w1 / w2));
                if (std::fabs(measured - prof.tail.exponent) > 1.0)
                    throw DomainError("profile '" + prof.label + "': tail exponent " +
                                      std::to_string(prof.tail.exponent) +
                                      " inconsistent with measured slope " + std::to_string(measured));
            }
            break;
        }
        case TailClass::Kind::Gaussian: {
            const double r = 2.0 / std::sqrt(prof.tail.rate);
            const double w1 = prof.f(r), w2 = prof.f(1.25 * r);
            if (w1 != 0.0 && w2 != 0.0) {
                const double measured = std::log(std::fabs(w1 / w2)) / (r * r * (1.25 * 1.25 - 1.0));
                if (!(measured > 0.5 * prof.tail.rate && measured < 2.0 * prof.tail.rate))
                    throw DomainError("profile '" + prof.label + "': gaussian rate " +
                                      std::to_string(prof.tail.rate) +
                                      " inconsistent with measured " + std::to_string(measured));
            }
            break;
        }
    }
}

} // namespace gls
