#include "gls/special_functions.hpp"
#include "gls/errors.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace gls;
using gls_test::check_rel;
using gls_test::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gamma: factorial and half-integer identities") {
    check_rel(gls::gamma(5.0), 24.0, 1e-13);
    check_rel(gls::gamma(0.5), std::sqrt(kPi), 1e-13);
    check_rel(gls::gamma(1.0), 1.0, 1e-14);
    // reflection oracle at x = 0.3: pi / sin(0.3 pi)
    check_rel(gls::gamma(0.3) * gls::gamma(0.7), 3.88322207745093315469373126, 1e-12);
}

TEST_CASE("gamma: negative arguments carry the right sign") {
    check_rel(gls::gamma(-0.5), -3.544907701811032054596335, 1e-12);
    check_rel(gls::gamma(-2.5), -0.9453087204829418812256893, 1e-12);
}

TEST_CASE("gamma: poles and overflow are errors") {
    CHECK_THROWS_AS(gls::gamma(0.0), DomainError);
    CHECK_THROWS_AS(gls::gamma(-3.0), DomainError);
    CHECK_THROWS_AS(gls::gamma(172.0), NumericError);
}

TEST_CASE("gamma: recurrence on a grid") {
    for (double x = 0.1; x <= 50.0; x += 0.7)
        check_rel(gls::gamma(x + 1.0), x * gls::gamma(x), 1e-12);
}

TEST_CASE("gamma: reflection identity on (0,1)") {
    for (double x = 0.05; x < 1.0; x += 0.05)
        check_rel(gls::gamma(x) * gls::gamma(1.0 - x) * sin_pi(x) / kPi, 1.0, 1e-12);
}

TEST_CASE("log_gamma agrees with the C library") {
    for (double x : {0.01, 0.3, 1.0, 2.5, 7.0, 41.5, 137.0, 1000.0})
        check_rel(log_gamma(x), std::lgamma(x), 1e-13, 1e-14);
}

TEST_CASE("bessel_j: frozen reference values") {
    check_rel(bessel_j(0.5, 2.0), 0.513016136561827751665691849, 1e-12);
    check_rel(bessel_j(1.5, 2.0), 0.491293778687162345006880608, 1e-12);
    check_rel(bessel_j(0.0, 11.9), 0.02504944169958956372832169, 1e-10);
    check_rel(bessel_j(0.0, 12.1), 0.06966677360680738849844282, 1e-10);
    check_rel(bessel_j(0.0, 300.0), -0.03329855487630566800748309, 1e-9);
    check_rel(bessel_j(2.7, 8.3), -0.2414494170587991155928843, 1e-11);
    check_rel(bessel_j(2.7, 40.0), -0.1105956031129081378275265, 1e-10);
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(1.0, 0.0) == 0.0);
}

TEST_CASE("bessel_j: half-integer closed form across the branch crossover") {
    for (double x : {0.5, 2.0, 8.0, 11.9, 12.1, 50.0, 300.0}) {
        const double closed = std::sqrt(2.0 / (kPi * x)) * std::sin(x);
        check_rel(bessel_j(0.5, x), closed, 1e-11, 1e-13);
    }
}

TEST_CASE("bessel_j: agrees with the C++17 library implementation") {
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.3}) {
        for (double x : {0.1, 1.0, 4.0, 9.0, 15.0, 40.0}) {
            const double envelope = std::sqrt(2.0 / (kPi * std::max(x, 1.0)));
            const double diff = std::fabs(bessel_j(nu, x) - std::cyl_bessel_j(nu, x));
            INFO("nu = ", nu, ", x = ", x);
            CHECK(diff <= 1e-10 * envelope);
        }
    }
}

TEST_CASE("bessel_j: three-term recurrence") {
    const double tol = 10.0 * EvalPolicy{}.rel_tol;
    for (double nu : {1.0, 1.5, 2.5, 4.0}) {
        for (double x : {0.7, 3.0, 9.5, 13.0, 30.0, 120.0}) {
            const double lhs = bessel_j(nu - 1.0, x) + bessel_j(nu + 1.0, x);
            const double rhs = (2.0 * nu / x) * bessel_j(nu, x);
            const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-3});
            INFO("nu = ", nu, ", x = ", x);
            CHECK(std::fabs(lhs - rhs) <= 100.0 * tol * scale);
        }
    }
}

TEST_CASE("bessel_j_scaled: stable at tiny arguments") {
    const double nu = 1.5;
    const double limit = std::exp(-nu * std::log(2.0) - log_gamma(nu + 1.0));
    check_rel(bessel_j_scaled(nu, 1e-200), limit, 1e-13);
    check_rel(bessel_j_scaled(nu, 3.0) * std::pow(3.0, nu), bessel_j(nu, 3.0), 1e-12);
}

TEST_CASE("bessel_j_zero: McMahon + Newton matches references") {
    check_rel(bessel_j_zero(0.0, 1), 2.404825557695772768621632, 1e-12);
    check_rel(bessel_j_zero(0.0, 5), 14.93091770848778594776259, 1e-12);
    check_rel(bessel_j_zero(1.0, 1), 3.831705970207512315614436, 1e-12);
    check_rel(bessel_j_zero(1.5, 1), 4.493409457909064175307881, 1e-12);
    check_rel(bessel_j_zero(4.0, 2), 11.06470948850118488271832, 1e-12);
    // J_{1/2} zeros are exactly k pi
    for (int k = 1; k <= 6; ++k) check_rel(bessel_j_zero(0.5, k), k * kPi, 1e-12);
}

TEST_CASE("sphere_area: low dimensions and the Gamma identity") {
    check_rel(sphere_area(1), 2.0, 1e-13);
    check_rel(sphere_area(2), 2.0 * kPi, 1e-13);
    check_rel(sphere_area(3), 4.0 * kPi, 1e-13);
    check_rel(sphere_area(4), 2.0 * kPi * kPi, 1e-13);
    for (int n = 1; n <= 25; ++n)
        check_rel(sphere_area(n) * gls::gamma(0.5 * n), 2.0 * std::pow(kPi, 0.5 * n), 1e-12);
    CHECK_THROWS_AS(sphere_area(0), DomainError);
}

TEST_CASE("EvalPolicy validation") {
    CHECK_THROWS_AS(gls::gamma(1.0, EvalPolicy{-1.0, 0.0, 100}), DomainError);
    CHECK_THROWS_AS(gls::gamma(1.0, EvalPolicy{1e-12, 0.0, 0}), DomainError);
    CHECK(bessel_j_validated(1.5, 100.0));
    CHECK(!bessel_j_validated(80.0, 100.0));
}
