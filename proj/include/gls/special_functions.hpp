#ifndef GLS_SPECIAL_FUNCTIONS_HPP
#define GLS_SPECIAL_FUNCTIONS_HPP

#include <cstddef>

namespace gls {

// Evaluation contract for the special-function kernel. rel_tol is the target
// relative accuracy of series/asymptotic summation, abs_tol an absolute floor
// below which terms are treated as zero, max_terms a hard cap on summation.
struct EvalPolicy {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    int max_terms = 500;

    void validate() const;
};

// log |Gamma(x)| for x > 0, Lanczos approximation (g = 7, 9 coefficients).
// Relative accuracy ~1e-14 over [1e-10, 1e6]; this is the primary path, and
// gamma() is exp(log_gamma) with reflection/sign tracking for x < 0.5.
double log_gamma(double x);

// Gamma(x) for x in [-170, 170] away from the poles {0, -1, -2, ...}.
// Throws DomainError at a pole, NumericError when the result is not
// representable in double.
double gamma(double x, const EvalPolicy& policy = {});

// sin(pi*x) with argument reduction that stays exact for half-integer x.
double sin_pi(double x);

// Bessel function of the first kind, real order nu >= 0, x >= 0.
// Ascending series below the crossover x = max(12, 2*nu), Hankel asymptotic
// expansion above it. Accuracy target is policy.rel_tol relative to the
// oscillation envelope sqrt(2/(pi x)) for x <= 1e3; near zeros of J_nu the
// pointwise relative error is necessarily larger. Argument reduction limits
// the asymptotic branch to ~1e-13 absolute per unit of x, so very large x
// degrades gracefully.
double bessel_j(double nu, double x, const EvalPolicy& policy = {});

// J_nu(x) / x^nu, stable for small x where J_nu itself underflows; the
// x -> 0 limit is 2^{-nu} / Gamma(nu + 1).
double bessel_j_scaled(double nu, double x, const EvalPolicy& policy = {});

// k-th positive zero of J_nu (k >= 1): McMahon expansion refined by Newton.
double bessel_j_zero(double nu, int k, const EvalPolicy& policy = {});

// True when (nu, x) lies in the range the kernel is validated for. Outside it
// bessel_j still evaluates but with reduced accuracy.
bool bessel_j_validated(double nu, double x);

// Surface measure of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2), n >= 1.
double sphere_area(int n);

} // namespace gls

#endif
