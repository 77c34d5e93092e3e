#include "gls/numerics.hpp"
#include "gls/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace gls {

double find_root_bracketed(const std::function<double(double)>& f,
                           double lo, double hi, double rel_tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NumericError("find_root_bracketed: endpoints do not bracket a root");
    double a = lo, b = hi, fa = flo, fb = fhi;
    for (int it = 0; it < max_iter; ++it) {
        // secant candidate, bisection fallback when it leaves the bracket
        double m = b - fb * (b - a) / (fb - fa);
        const double mid = 0.5 * (a + b);
        if (!(m > std::min(a, b) && m < std::max(a, b))) m = mid;
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
        // alternate with bisection so the bracket provably shrinks
        if (it % 2 == 1) {
            double c = 0.5 * (a + b);
            double fc = f(c);
            if (fc == 0.0) return c;
            if ((fc > 0.0) == (fa > 0.0)) {
                a = c;
                fa = fc;
            } else {
                b = c;
                fb = fc;
            }
        }
        if (std::fabs(b - a) <= rel_tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b))))
            return 0.5 * (a + b);
    }
    throw ConvergenceError("find_root_bracketed: no convergence in " +
                           std::to_string(max_iter) + " iterations");
}

MaxResult golden_section_max(const std::function<double(double)>& f,
                             double a, double b, double x_tol, int max_iter) {
    constexpr double inv_phi = 0.6180339887498948482;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 >= f2 ? MaxResult{x1, f1} : MaxResult{x2, f2};
}

std::vector<double> chebyshev_points(double a, double b, int m) {
    if (m < 2) throw DomainError("chebyshev_points: need m >= 2");
    std::vector<double> pts(m);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int j = 0; j < m; ++j)
        pts[j] = mid - half * std::cos(std::numbers::pi * j / (m - 1));
    pts.front() = a;
    pts.back() = b;
    return pts;
}

std::vector<double> log_spaced_points(double a, double b, int m) {
    if (!(a > 0.0 && b > a)) throw DomainError("log_spaced_points: need 0 < a < b");
    if (m < 2) throw DomainError("log_spaced_points: need m >= 2");
    std::vector<double> pts(m);
    const double la = std::log(a), lb = std::log(b);
    for (int j = 0; j < m; ++j)
        pts[j] = std::exp(la + (lb - la) * j / (m - 1));
    pts.front() = a;
    pts.back() = b;
    return pts;
}

PchipInterpolant::PchipInterpolant(std::vector<double> xs, std::vector<double> ys,
                                   std::vector<double> slopes)
    : xs_(std::move(xs)), ys_(std::move(ys)), slopes_(std::move(slopes)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n || slopes_.size() != n)
        throw DomainError("PchipInterpolant: need >= 2 nodes with matching values and slopes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw DomainError("PchipInterpolant: nodes must be strictly increasing");
}

PchipInterpolant::PchipInterpolant(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n)
        throw DomainError("PchipInterpolant: need >= 2 nodes and matching values");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw DomainError("PchipInterpolant: nodes must be strictly increasing");

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs_[i + 1] - xs_[i];
        delta[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }
    slopes_.assign(n, 0.0);
    // Fritsch-Carlson slopes: weighted harmonic mean where secants agree in
    // sign, zero at local extrema
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] == 0.0 || delta[i] == 0.0 ||
            (delta[i - 1] > 0.0) != (delta[i] > 0.0)) {
            slopes_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if ((s > 0.0) != (d0 > 0.0) || d0 == 0.0) s = 0.0;
        else if ((d0 > 0.0) != (d1 > 0.0) && std::fabs(s) > 3.0 * std::fabs(d0))
            s = 3.0 * d0;
        return s;
    };
    if (n == 2) {
        slopes_[0] = slopes_[1] = delta[0];
    } else {
        slopes_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
        slopes_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    }
}

double PchipInterpolant::value(double x) const {
    if (xs_.empty()) throw DomainError("PchipInterpolant: empty");
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
}

} // namespace gls
