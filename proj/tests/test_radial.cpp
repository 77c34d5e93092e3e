#include "gls/radial.hpp"
#include "gls/errors.hpp"
#include "gls/numerics.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace gls;
using gls_test::check_rel;

namespace {

constexpr double kPi = std::numbers::pi;

double gaussian_lp(int n, double t, double p) {
    // |e^{-t|x|^2}|_p = (pi/(t p))^{n/(2p)}
    return std::pow(kPi / (t * p), 0.5 * n / p);
}

RadialProfile scaled(const RadialProfile& f, double c) {
    RadialProfile out = f;
    auto base = f.f;
    out.f = [base, c](double r) { return c * base(r); };
    if (f.has_derivatives()) {
        auto d1 = f.df, d2 = f.d2f;
        out.df = [d1, c](double r) { return c * d1(r); };
        out.d2f = [d2, c](double r) { return c * d2(r); };
    }
    return out;
}

} // namespace

TEST_CASE("lp_norm: Gaussian closed form across n and p") {
    for (int n : {3, 4, 5, 6})
        for (double p : {1.1, 2.0, 3.0})
            check_rel(lp_norm(make_gaussian(n), p), gaussian_lp(n, 1.0, p), 1e-8);
    // the n=3, p=2 value is (pi/2)^{3/4}
    check_rel(lp_norm(make_gaussian(3), 2.0), 1.40310414553421602669092820, 1e-10);
}

TEST_CASE("lp_norm: ball indicator gives the ball volume") {
    for (double p : {1.0, 2.0, 3.7})
        check_rel(lp_norm(make_ball_indicator(3), p), std::pow(4.0 * kPi / 3.0, 1.0 / p), 1e-10);
}

TEST_CASE("lp_norm: homogeneity is exact to rounding") {
    const RadialProfile f = make_gaussian(4, 0.7);
    const double base = lp_norm(f, 2.3);
    for (double c : {7.0, -3.5, 0.013})
        check_rel(lp_norm(scaled(f, c), 2.3), std::fabs(c) * base, 1e-12);
}

TEST_CASE("lp_norm: divergent origin and tail are rejected") {
    RadialProfile pure_power;
    pure_power.dim = 3;
    pure_power.f = [](double r) { return std::pow(r, -4.0); };
    pure_power.origin_exponent = -4.0;
    pure_power.tail = TailClass::power(4.0, 1.0);
    pure_power.label = "r^-4";
    CHECK_THROWS_AS(lp_norm(pure_power, 1.0), DivergenceError); // origin r^{-4} r^2

    RadialProfile slow_tail;
    slow_tail.dim = 3;
    slow_tail.f = [](double r) { return 1.0 / (1.0 + std::pow(r, 1.2)); };
    slow_tail.origin_exponent = 0.0;
    slow_tail.tail = TailClass::power(1.2, 10.0);
    slow_tail.label = "slow tail";
    CHECK_THROWS_AS(lp_norm(slow_tail, 2.0), DivergenceError); // 2*1.2 < 3
}

TEST_CASE("lp_norm: near-critical exponents stay finite and accurate") {
    // |W f|_p with f == 1 on the unit ball, beta = 1, n = 3, p = 2:
    // integrand r^{-2} r^2 = 1, norm = sqrt(4 pi)
    const RadialProfile wf = apply_W(make_ball_indicator(3), 1.0);
    check_rel(lp_norm(wf, 2.0), std::sqrt(4.0 * kPi), 1e-10);
    // p close to the convergence boundary n/beta = 3: integral = 4 pi/(3-p)
    const double p = 3.0 - 1e-6;
    check_rel(lp_norm(wf, p), std::pow(4.0 * kPi / (3.0 - p), 1.0 / p), 1e-8);
}

TEST_CASE("radial_laplacian: Gaussian closed form and origin limit") {
    const RadialProfile f = make_gaussian(3);
    const RadialProfile lap = radial_laplacian(f);
    for (double r : {0.3, 1.0, 2.2})
        check_rel(lap.value(r), (4.0 * r * r - 6.0) * std::exp(-r * r), 1e-12);
    // r -> 0 tends to n f''(0) = -2n
    check_rel(lap.value(1e-9), -6.0, 1e-9);

    RadialProfile constant;
    constant.dim = 3;
    constant.f = [](double) { return 1.0; };
    constant.df = [](double) { return 0.0; };
    constant.d2f = [](double) { return 0.0; };
    constant.tail = TailClass::compact(1.0);
    CHECK(radial_laplacian(constant).value(0.7) == 0.0);
}

TEST_CASE("radial_laplacian: linearity at probe radii") {
    const RadialProfile mix = make_gaussian_mixture(4, {{1.0, 1.0}, {0.5, 2.0}});
    const RadialProfile la = radial_laplacian(make_gaussian(4, 1.0));
    const RadialProfile lb = radial_laplacian(make_gaussian(4, 2.0));
    const RadialProfile lmix = radial_laplacian(mix);
    for (double r : {0.2, 0.9, 1.7, 3.0})
        check_rel(lmix.value(r), la.value(r) + 0.5 * lb.value(r), 1e-13);
}

TEST_CASE("radial_laplacian: finite differences need the flag") {
    RadialProfile f = make_gaussian(3);
    f.df = nullptr;
    f.d2f = nullptr;
    CHECK_THROWS_AS(radial_laplacian(f), SmoothnessError);
    const RadialProfile lap_fd = radial_laplacian(f, true);
    const RadialProfile lap = radial_laplacian(make_gaussian(3));
    // the h = 1e-5 stencil floor caps accuracy near 1e-6 in double precision
    for (double r : {0.5, 1.0, 2.0}) check_rel(lap_fd.value(r), lap.value(r), 1e-6);
}

TEST_CASE("apply_V and apply_W: multiplier arithmetic") {
    // f = r^2 truncated: V[f] == 1 on the plateau
    const RadialProfile f = make_power_trunc(3, 2.0, 0.1, 0.05);
    const RadialProfile vf = apply_V(f);
    check_rel(vf.value(0.5), 1.0, 1e-13);
    CHECK(vf.origin_exponent == f.origin_exponent - 2.0);

    const RadialProfile g = make_gaussian(5);
    const RadialProfile vg = apply_V(g);
    const RadialProfile wg = apply_W(g, 2.0);
    for (double r : {0.3, 1.1, 2.4}) CHECK(vg.value(r) == wg.value(r));
    CHECK_THROWS_AS(apply_W(g, 0.0), DomainError);
    CHECK_THROWS_AS(apply_W(g, 5.0), DomainError);
}

TEST_CASE("power_trunc: C2 blending and the pure-power identity") {
    const int n = 5;
    const double p_star = 1.8;
    const double sigma = 2.0 - n / p_star;
    const RadialProfile f = extremal_family(n, p_star, 0.1, 0.05);
    // on the plateau, Delta(r^sigma) = sigma (sigma + n - 2) r^{sigma-2}
    const RadialProfile lap = radial_laplacian(f);
    for (double r : {0.2, 0.5, 0.8})
        check_rel(lap.value(r), sigma * (sigma + n - 2.0) * std::pow(r, sigma - 2.0), 1e-12);
    // analytic derivatives are consistent with finite differences in the blend zone
    for (double r : {0.102, 0.104, 0.97, 0.99}) {
        const double h = 1e-6;
        const double fd1 = (f.value(r + h) - f.value(r - h)) / (2.0 * h);
        check_rel(f.deriv1(r), fd1, 1e-5, 1e-8);
        const double fd2 = (f.value(r + h) - 2.0 * f.value(r) + f.value(r - h)) / (h * h);
        check_rel(f.deriv2(r), fd2, 1e-3, 1e-5);
    }
    CHECK_THROWS_AS(make_power_trunc(3, 1.0, 0.4, 0.8), DomainError); // overlapping zones
    CHECK_THROWS_AS(extremal_family(5, 1.8, 0.7, 0.05), DomainError); // eps >= 0.5
}

TEST_CASE("extremal family: truncated ratio approaches the sharp constant from below") {
    const int n = 5;
    const double p_star = 1.8;
    const double k = 1.8 * (1.8 / 0.8) / (5.0 * (5.0 - 3.6)); // K_HR(5, 1.8)
    double prev = 0.0;
    for (double eps : {0.1, 0.03}) {
        const RadialProfile f = extremal_family(n, p_star, eps, 0.05);
        const double ratio =
            lp_norm(apply_V(f), p_star) / lp_norm(radial_laplacian(f), p_star);
        CHECK(ratio < k);
        CHECK(ratio > prev);
        prev = ratio;
    }
}

TEST_CASE("radial_poisson_solve: Newtonian potential of the unit ball") {
    const RadialProfile ball = make_ball_indicator(3);
    const RadialProfile f = radial_poisson_solve(ball);
    for (double r : {1.0, 2.0, 5.0}) check_rel(f.value(r), -1.0 / (3.0 * r), 1e-6);
    // interior: f'(r) = r/3
    for (double r : {0.2, 0.5, 0.9}) check_rel(f.deriv1(r), r / 3.0, 1e-8);

    RadialProfile zero;
    zero.dim = 3;
    zero.f = [](double) { return 0.0; };
    zero.tail = TailClass::compact(1.0);
    zero.label = "zero";
    const RadialProfile fz = radial_poisson_solve(zero);
    CHECK(fz.value(0.5) == 0.0);
    CHECK(fz.value(2.0) == 0.0);
}

TEST_CASE("radial_poisson_solve: gaussian source against the erf closed form") {
    // n = 3, g = e^{-t r^2}: M(r) = -r e^{-t r^2}/(2t) + sqrt(pi) erf(sqrt(t) r)/(4 t^{3/2})
    const double t = 2.0;
    const RadialProfile g = make_gaussian(3, t);
    const RadialProfile f = radial_poisson_solve(g);
    auto moment = [t](double r) {
        return -r * std::exp(-t * r * r) / (2.0 * t) +
               std::sqrt(kPi) * std::erf(std::sqrt(t) * r) / (4.0 * std::pow(t, 1.5));
    };
    for (double r : {0.3, 0.8, 1.5, 3.0})
        check_rel(f.deriv1(r), moment(r) / (r * r), 1e-8);
    const double m_total = std::sqrt(kPi) / (4.0 * std::pow(t, 1.5));
    check_rel(f.value(5.0), -m_total / 5.0, 1e-8);
}

TEST_CASE("sampled profiles: interpolation plus declared extensions") {
    const int n = 3;
    const auto rs = log_spaced_points(1e-3, 12.0, 600);
    std::vector<double> ys;
    for (double r : rs) ys.push_back(std::exp(-r * r));
    const RadialProfile f =
        make_sampled_profile(n, rs, ys, 0.0, TailClass::gaussian(1.0), "sampled gaussian");
    check_rel(f.value(0.7), std::exp(-0.49), 1e-6);
    check_rel(f.value(1e-4), 1.0, 1e-6);                    // origin extension (constant)
    check_rel(f.value(13.0), std::exp(-169.0), 2e-2);       // gaussian extension
    check_rel(lp_norm(f, 2.0), gaussian_lp(n, 1.0, 2.0), 1e-6);
}

TEST_CASE("profile metadata sanity check") {
    CHECK_NOTHROW(check_profile_metadata(make_gaussian(3, 2.0)));
    CHECK_NOTHROW(check_profile_metadata(make_ball_indicator(4)));
    RadialProfile wrong = make_gaussian(3);
    wrong.origin_exponent = 3.0; // gaussian is flat at the origin
    CHECK_THROWS_AS(check_profile_metadata(wrong), DomainError);
}
