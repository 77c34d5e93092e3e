#include "gls/sharp_constants.hpp"
#include "gls/errors.hpp"
#include "gls/numerics.hpp"
#include "gls/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace gls {

void HardyRellichQuery::validate() const {
    if (n < 3) throw DomainError("HardyRellichQuery: requires n >= 3, got n = " + std::to_string(n));
    if (!(p > 1.0 && p < 0.5 * n))
        throw DomainError("HardyRellichQuery: p = " + std::to_string(p) +
                          " outside (1, n/2) = (1, " + std::to_string(0.5 * n) + ")");
}

void SobolevQuery::validate() const {
    if (n < 2) throw DomainError("SobolevQuery: requires n >= 2, got n = " + std::to_string(n));
    if (!(beta > 0.0 && beta < n))
        throw DomainError("SobolevQuery: beta = " + std::to_string(beta) + " outside (0, n)");
    if (!(p > 1.0 && p < n / beta))
        throw DomainError("SobolevQuery: p = " + std::to_string(p) + " outside (1, n/beta) = (1, " +
                          std::to_string(n / beta) + ")");
}

double k_hr(const HardyRellichQuery& q) {
    q.validate();
    const double pprime = q.p / (q.p - 1.0);
    return q.p * pprime / (q.n * (q.n - 2.0 * q.p));
}

double k_s(const SobolevQuery& q) {
    q.validate();
    const double n = q.n, b = q.beta, p = q.p;
    const double arg1 = (b / (2.0 * p)) * (n / b - p);
    const double arg2 = 0.5 * n - n / (2.0 * p);
    const double arg3 = 0.5 * (n + b) - n / (2.0 * p);
    const double arg4 = n / (2.0 * p);
    // all four arguments are strictly positive on the open domain
    const double lg = -b * std::log(2.0) + log_gamma(arg1) + log_gamma(arg2) -
                      log_gamma(arg3) - log_gamma(arg4);
    return std::exp(lg);
}

double k_hr_asymptotic(int n, BoundaryEnd end) {
    if (n < 3) throw DomainError("k_hr_asymptotic: requires n >= 3");
    if (end == BoundaryEnd::Lower) return 1.0 / (n * (n - 2.0));
    return n / (4.0 * (n - 2.0));
}

double k_s_asymptotic(int n, double beta, BoundaryEnd end) {
    if (n < 2) throw DomainError("k_s_asymptotic: requires n >= 2");
    if (!(beta > 0.0 && beta < n)) throw DomainError("k_s_asymptotic: beta outside (0, n)");
    const double gq = std::exp(log_gamma(0.5 * (n - beta)) - log_gamma(0.5 * beta) -
                               log_gamma(0.5 * n));
    if (end == BoundaryEnd::Lower)
        return std::pow(2.0, 1.0 - beta) * gq / n;
    // K_S(n,beta,p) (n/beta - p) -> 2^{1-beta} n beta^{-2} G[(n-beta)/2]/(G[beta/2] G[n/2]);
    // the limit of Gamma(x)~1/x applied to the first factor of the closed form.
    // At beta = 2 this reduces to the Hardy-Rellich upper coefficient n/(4(n-2)).
    return std::pow(2.0, 1.0 - beta) * n / (beta * beta) * gq;
}

double riesz_reciprocal(const SobolevQuery& q) {
    q.validate();
    const double n = q.n, b = q.beta;
    const double lambda = n / q.p - b;
    const double lg = log_gamma(0.5 * lambda) + log_gamma(0.5 * (n - lambda - b)) -
                      b * std::log(2.0) - log_gamma(0.5 * (lambda + b)) -
                      log_gamma(0.5 * (n - lambda));
    return std::exp(lg);
}

double envelope_hr(int n, double p) {
    return k_hr({n, p}) * (p - 1.0) * (0.5 * n - p);
}

double envelope_s(int n, double beta, double p) {
    return k_s({n, beta, p}) * (p - 1.0) * (n / beta - p);
}

namespace {

EnvelopeBounds scan_envelope(double lo, double hi, int m,
                             const std::function<double(double)>& env) {
    if (m < 2) throw DomainError("envelope_bounds: need >= 2 grid points");
    EnvelopeBounds b{1e308, -1e308, m};
    // open-interval grid with the usual 1e-6-width offset
    const double off = 1e-6 * (hi - lo);
    for (int j = 0; j < m; ++j) {
        const double p = (lo + off) + (hi - lo - 2.0 * off) * j / (m - 1);
        const double v = env(p);
        b.inf = std::min(b.inf, v);
        b.sup = std::max(b.sup, v);
    }
    return b;
}

} // namespace

EnvelopeBounds envelope_bounds_hr(int n, int grid_points) {
    if (n < 3) throw DomainError("envelope_bounds_hr: requires n >= 3");
    return scan_envelope(1.0, 0.5 * n, grid_points,
                         [n](double p) { return envelope_hr(n, p); });
}

EnvelopeBounds envelope_bounds_s(int n, double beta, int grid_points) {
    if (n < 2) throw DomainError("envelope_bounds_s: requires n >= 2");
    if (!(beta > 0.0 && beta < n)) throw DomainError("envelope_bounds_s: beta outside (0, n)");
    return scan_envelope(1.0, n / beta, grid_points,
                         [n, beta](double p) { return envelope_s(n, beta, p); });
}

} // namespace gls
