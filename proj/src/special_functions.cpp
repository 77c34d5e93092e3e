#include "gls/special_functions.hpp"
#include "gls/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gls {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
constexpr double kLogDblMax = 709.782712893384;

// Lanczos coefficients, g = 7, truncated at 1/(z+8).
constexpr double kLanczos7[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// log Gamma(x) for x >= 0.5 via Lanczos.
double log_gamma_lanczos(double x) {
    const double z = x - 1.0;
    double ag = kLanczos7[0];
    for (int k = 1; k <= 8; ++k) ag += kLanczos7[k] / (z + k);
    const double base = z + 7.5;
    return (z + 0.5) * std::log(base) - base + kLogSqrt2Pi + std::log(ag);
}

} // namespace

void EvalPolicy::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("EvalPolicy: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw DomainError("EvalPolicy: abs_tol must be >= 0");
    if (max_terms < 1) throw DomainError("EvalPolicy: max_terms must be >= 1");
}

double sin_pi(double x) {
    // sin(pi x) = (-1)^m sin(pi r), r = x - m in [0, 1); fold r onto [0, 1/2].
    double m = std::floor(x);
    double r = x - m;
    double s = (r <= 0.5) ? std::sin(kPi * r) : std::sin(kPi * (1.0 - r));
    bool odd = std::fmod(m, 2.0) != 0.0;
    return odd ? -s : s;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0, got " + std::to_string(x));
    if (x >= 0.5) return log_gamma_lanczos(x);
    // reflection keeps the Lanczos argument away from 0
    return std::log(kPi / std::fabs(sin_pi(x))) - log_gamma_lanczos(1.0 - x);
}

double gamma(double x, const EvalPolicy& policy) {
    policy.validate();
    if (is_nonpositive_integer(x))
        throw DomainError("gamma: pole at non-positive integer x = " + std::to_string(x));
    if (x >= 0.5) {
        const double lg = log_gamma_lanczos(x);
        if (lg > kLogDblMax)
            throw NumericError("gamma: overflow at x = " + std::to_string(x));
        return std::exp(lg);
    }
    // Gamma(x) = pi / (sin(pi x) Gamma(1 - x)); sign carried by sin(pi x)
    const double s = sin_pi(x);
    const double lg = std::log(kPi / std::fabs(s)) - log_gamma_lanczos(1.0 - x);
    if (lg > kLogDblMax)
        throw NumericError("gamma: overflow at x = " + std::to_string(x));
    const double mag = std::exp(lg);
    return s < 0.0 ? -mag : mag;
}

namespace {

// Ascending series: J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k).
double bessel_j_series(double nu, double x, const EvalPolicy& policy) {
    const double q = -0.25 * x * x;
    double log_pref = nu * std::log(0.5 * x) - log_gamma(nu + 1.0);
    if (log_pref < -740.0) return 0.0; // below denormal range
    const double pref = std::exp(log_pref);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= policy.max_terms; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::fabs(term) <= policy.rel_tol * std::fabs(sum) ||
            std::fabs(term) * std::fabs(pref) <= policy.abs_tol)
            return pref * sum;
    }
    throw ConvergenceError("bessel_j: series did not converge at nu = " +
                           std::to_string(nu) + ", x = " + std::to_string(x));
}

// Hankel asymptotic expansion: J_nu(x) ~ sqrt(2/(pi x)) [P cos w - Q sin w],
// w = x - nu pi/2 - pi/4. P collects even terms, Q odd ones; the series is
// summed to its smallest term.
double bessel_j_asymptotic(double nu, double x, const EvalPolicy& policy) {
    const double mu = 4.0 * nu * nu;
    double p_sum = 1.0;
    double q_sum = 0.0;
    double c = 1.0;
    double prev_abs = std::numeric_limits<double>::max();
    for (int k = 1; k <= policy.max_terms; ++k) {
        const double odd = 2.0 * k - 1.0;
        c *= (mu - odd * odd) / (k * 8.0 * x);
        const double ac = std::fabs(c);
        if (ac >= prev_abs) break; // smallest term reached
        prev_abs = ac;
        const int phase = k % 4;
        switch (phase) {
            case 0: p_sum += c; break;
            case 1: q_sum += c; break;
            case 2: p_sum -= c; break;
            default: q_sum -= c; break;
        }
        if (ac < policy.rel_tol) break;
    }
    const double w = x - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (std::cos(w) * p_sum - std::sin(w) * q_sum);
}

} // namespace

double bessel_j(double nu, double x, const EvalPolicy& policy) {
    policy.validate();
    if (!(nu >= 0.0)) throw DomainError("bessel_j: requires nu >= 0");
    if (!(x >= 0.0)) throw DomainError("bessel_j: requires x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double crossover = std::max(12.0, 2.0 * nu);
    if (x < crossover) return bessel_j_series(nu, x, policy);
    return bessel_j_asymptotic(nu, x, policy);
}

double bessel_j_scaled(double nu, double x, const EvalPolicy& policy) {
    policy.validate();
    if (!(nu >= 0.0)) throw DomainError("bessel_j_scaled: requires nu >= 0");
    if (!(x >= 0.0)) throw DomainError("bessel_j_scaled: requires x >= 0");
    const double crossover = std::max(12.0, 2.0 * nu);
    if (x >= crossover) return bessel_j_asymptotic(nu, x, policy) * std::pow(x, -nu);
    // series without the x^nu prefactor
    const double q = -0.25 * x * x;
    const double pref = std::exp(-nu * std::log(2.0) - log_gamma(nu + 1.0));
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= policy.max_terms; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::fabs(term) <= policy.rel_tol * std::fabs(sum)) return pref * sum;
    }
    throw ConvergenceError("bessel_j_scaled: series did not converge at x = " + std::to_string(x));
}

bool bessel_j_validated(double nu, double x) {
    return nu <= 50.0 && x <= 1e3;
}

double bessel_j_zero(double nu, int k, const EvalPolicy& policy) {
    if (!(nu >= 0.0)) throw DomainError("bessel_j_zero: requires nu >= 0");
    if (k < 1) throw DomainError("bessel_j_zero: requires k >= 1");
    const double mu = 4.0 * nu * nu;
    const double b = (k + 0.5 * nu - 0.25) * kPi;
    const double b8 = 8.0 * b;
    // McMahon expansion, three correction terms
    double x = b - (mu - 1.0) / b8
               - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8)
               - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) /
                     (15.0 * b8 * b8 * b8 * b8 * b8);
    if (!(x > 0.0)) x = b;
    for (int it = 0; it < 8; ++it) {
        const double j = bessel_j(nu, x, policy);
        const double jp = (nu / x) * j - bessel_j(nu + 1.0, x, policy);
        if (jp == 0.0) break;
        double step = j / jp;
        // the true zero is within half a period of the McMahon estimate
        if (std::fabs(step) > 0.5 * kPi) step = std::copysign(0.5 * kPi, step);
        x -= step;
        if (std::fabs(step) < 1e-14 * x) break;
    }
    return x;
}

double sphere_area(int n) {
    if (n < 1) throw DomainError("sphere_area: requires n >= 1");
    return 2.0 * std::exp(0.5 * n * std::log(kPi) - log_gamma(0.5 * n));
}

} // namespace gls
