#ifndef GLS_RADIAL_HPP
#define GLS_RADIAL_HPP

#include "gls/quadrature.hpp"

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace gls {

// Decay classification of a radial profile, used by the L_p machinery to
// pick tail treatment and to pre-check integral convergence.
struct TailClass {
    enum class Kind { Gaussian, Power, Compact };

    Kind kind = Kind::Gaussian;
    double exponent = 0.0;       // Power: f ~ c r^{-exponent} beyond anchor_r
    double support_radius = 0.0; // Compact: f = 0 for r > support_radius
    double rate = 1.0;           // Gaussian: f ~ c e^{-rate r^2}
    double anchor_r = 10.0;      // Power: radius where the asymptotic form is anchored
    // Power: known asymptotic constant c; when NaN the tail is anchored at
    // the profile value at anchor_r instead. With a known c the extension is
    // c r^{-q} (1 + correction/r^2), the correction chosen so the extension
    // stays continuous at anchor_r.
    double coefficient = std::numeric_limits<double>::quiet_NaN();
    double correction = 0.0;

    static TailClass gaussian(double rate = 1.0);
    static TailClass power(double exponent, double anchor_r,
                           double coefficient = std::numeric_limits<double>::quiet_NaN());
    static TailClass compact(double support_radius);
    const char* name() const;
};

// A radial function on R^n given by its profile r -> f(r) on (0, inf).
// Profiles are never evaluated at r = 0; origin behavior is carried by
// origin_exponent (leading power of r as r -> 0). Analytic radial
// derivatives are optional; operations that need them say so.
struct RadialProfile {
    int dim = 3;
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
    double origin_exponent = 0.0;
    TailClass tail;
    std::vector<double> split_points; // kinks / truncation radii
    std::string label;

    double value(double r) const;
    bool has_derivatives() const { return static_cast<bool>(df) && static_cast<bool>(d2f); }
    double deriv1(double r) const;
    double deriv2(double r) const;
};

// ---- catalog -------------------------------------------------------------

RadialProfile make_gaussian(int n, double t = 1.0);
RadialProfile make_gaussian_mixture(int n, const std::vector<std::pair<double, double>>& coef_rate);
// Non-smooth: no derivatives, radial_laplacian rejects it.
RadialProfile make_ball_indicator(int n, double radius = 1.0);
// r^sigma on [eps(1+smoothing), 1-smoothing], C^2-blended to 0 outside [eps, 1]
// by quintic Hermite windows.
RadialProfile make_power_trunc(int n, double sigma, double eps, double smoothing);
// Sampled profile on strictly increasing radii, monotone cubic between
// samples, power/gaussian/compact extension outside the sampled range.
RadialProfile make_sampled_profile(int n, std::vector<double> rs, std::vector<double> ys,
                                   double origin_exponent, TailClass tail, std::string label);

// Approximate extremizer family for the Hardy-Rellich ratio: the profile
// r^{2 - n/p_star} truncated to [eps, 1]. The ratio |V f|_p / |Delta f|_p at
// p = p_star approaches K_HR(n, p_star) from below as eps -> 0.
RadialProfile extremal_family(int n, double p_star, double eps, double smoothing);

// ---- operations ----------------------------------------------------------

// |f|_p = (omega_{n-1} int_0^inf |f(r)|^p r^{n-1} dr)^{1/p}. Adaptive
// Gauss-Kronrod on finite segments, mapped rule on the tail; near-divergent
// origin/tail powers are integrated in closed form against the profile's
// declared leading behavior, so exponents arbitrarily close to the
// divergence boundary remain accurate.
double lp_norm(const RadialProfile& f, double p, const QuadratureSpec& quad = {});

// f'' + (n-1) f'/r. Uses analytic derivatives when present; with
// allow_finite_differences a centered 5-point stencil (h = max(1e-5, 1e-5 r))
// is permitted instead.
RadialProfile radial_laplacian(const RadialProfile& f, bool allow_finite_differences = false);

// Hardy-Rellich multiplier V[f](x) = f(x)/|x|^2.
RadialProfile apply_V(const RadialProfile& f);
// Weighted multiplier W[f](x) = |x|^{-beta} f(x), 0 < beta < n.
RadialProfile apply_W(const RadialProfile& f, double beta);

// Decaying solution of Delta f = g for n >= 3, g compact or gaussian-tailed:
// f(r) = -int_r^inf t^{1-n} (int_0^t s^{n-1} g ds) dt. The inner cumulative
// integral is cached on a grid. Construction verifies Delta f = g by finite
// differences at 16 probe radii (1e-6 relative to the source scale) and
// throws RoundTripError on failure.
RadialProfile radial_poisson_solve(const RadialProfile& g, const QuadratureSpec& quad = {});

// Factor-of-2 sanity check that origin_exponent and tail_class describe the
// profile; throws DomainError on mismatch.
void check_profile_metadata(const RadialProfile& f);

} // namespace gls

#endif
