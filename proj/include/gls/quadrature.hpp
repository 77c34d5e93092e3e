#ifndef GLS_QUADRATURE_HPP
#define GLS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace gls {

// Quadrature contract. split_points are mandatory breakpoints (truncation
// radii, blend-zone edges) that subdivision must respect.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    std::vector<double> split_points;

    void validate() const;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) integration of f on [a, b]. Initial
// breakpoints from `splits` (values outside (a,b) are ignored); panels with
// the largest error estimates are bisected until the accumulated error is
// below max(rel_tol * |integral|, abs_tol). Deterministic: panel order and
// the final summation order depend only on the inputs.
double integrate_adaptive(const Integrand& f, double a, double b,
                          double rel_tol, double abs_tol, int max_subdivisions,
                          const std::vector<double>& splits = {});

// Integral of f over [a, +inf) via the map r = a + t/(1-t).
double integrate_semi_infinite(const Integrand& f, double a, double rel_tol,
                               double abs_tol, int max_subdivisions);

// Integral of r^{eps-1} w(r) over [0, r1] for eps > 0 and w smooth at the
// origin. The possibly near-divergent power factor is integrated in closed
// form against w(0+), the remainder numerically; this stays accurate for
// eps arbitrarily close to 0 where plain subdivision cannot concentrate
// enough panels near the origin.
double integrate_power_origin(const Integrand& w, double eps, double r1,
                              double rel_tol, double abs_tol, int max_subdivisions);

} // namespace gls

#endif
