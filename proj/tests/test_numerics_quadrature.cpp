#include "gls/numerics.hpp"
#include "gls/quadrature.hpp"
#include "gls/errors.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace gls;
using gls_test::check_rel;

TEST_CASE("find_root_bracketed: sqrt(2)") {
    const double r = find_root_bracketed([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    check_rel(r, std::sqrt(2.0), 1e-13);
    CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1.0; }, 0.0, 2.0),
                    NumericError);
}

TEST_CASE("golden_section_max finds a smooth interior maximum") {
    const MaxResult m =
        golden_section_max([](double x) { return -(x - 1.3) * (x - 1.3); }, 0.0, 2.0, 1e-12);
    check_rel(m.x, 1.3, 1e-9);
    CHECK(m.value <= 0.0);
}

TEST_CASE("chebyshev_points: endpoints, ordering, count") {
    const auto pts = chebyshev_points(1.0, 3.0, 9);
    CHECK(pts.size() == 9);
    CHECK(pts.front() == 1.0);
    CHECK(pts.back() == 3.0);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i] > pts[i - 1]);
}

TEST_CASE("pchip: interpolation and the no-overshoot hull property") {
    std::vector<double> xs{0.0, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys{1.0, 0.2, 0.5, 3.0, 2.8};
    PchipInterpolant interp(xs, ys);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(interp.value(xs[i]) == ys[i]);
    double min_y = 0.2, max_y = 3.0;
    for (double x = 0.0; x <= 4.0; x += 0.001) {
        CHECK(interp.value(x) >= min_y - 1e-12);
        CHECK(interp.value(x) <= max_y + 1e-12);
    }
}

TEST_CASE("integrate_adaptive: polynomial, oscillation, kink") {
    check_rel(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12, 0.0, 100),
              1.0 / 3.0, 1e-12);
    check_rel(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi,
                                 1e-12, 0.0, 200),
              2.0, 1e-12);
    check_rel(integrate_adaptive([](double x) { return std::fabs(x - 0.5); }, 0.0, 1.0, 1e-12,
                                 0.0, 200, {0.5}),
              0.25, 1e-12);
}

TEST_CASE("integrate_adaptive: subdivision budget is enforced") {
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::pow(x, -0.95); }, 0.0, 1.0,
                                       1e-12, 0.0, 4),
                    ConvergenceError);
}

TEST_CASE("integrate_semi_infinite: exponential and power tails") {
    check_rel(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, 1e-11, 0.0, 400),
              1.0, 1e-10);
    check_rel(integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 1.0, 1e-11, 0.0, 400),
              1.0, 1e-10);
}

TEST_CASE("integrate_power_origin: near-divergent exponents stay exact") {
    // w == 1: the integral is r1^eps / eps for any eps > 0
    for (double eps : {1e-6, 1e-3, 0.5, 1.0, 2.0})
        check_rel(integrate_power_origin([](double) { return 1.0; }, eps, 1.0, 1e-12, 0.0, 200),
                  1.0 / eps, 1e-11);
    // r^{-1/2} (1 + r): 2 + 2/3
    check_rel(integrate_power_origin([](double r) { return 1.0 + r; }, 0.5, 1.0, 1e-12, 0.0, 400),
              2.0 + 2.0 / 3.0, 1e-10);
    CHECK_THROWS_AS(integrate_power_origin([](double) { return 1.0; }, -0.1, 1.0, 1e-10, 0.0, 100),
                    DivergenceError);
}

TEST_CASE("QuadratureSpec validation") {
    QuadratureSpec q;
    q.split_points = {1.0, 0.5};
    CHECK_THROWS_AS(q.validate(), DomainError);
}
