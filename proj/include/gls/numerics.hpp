#ifndef GLS_NUMERICS_HPP
#define GLS_NUMERICS_HPP

#include <functional>
#include <vector>

namespace gls {

// Root of a continuous function on [lo, hi] with f(lo), f(hi) of opposite
// sign. Bisection/secant hybrid; converges to rel_tol on the abscissa.
double find_root_bracketed(const std::function<double(double)>& f,
                           double lo, double hi, double rel_tol = 1e-14,
                           int max_iter = 200);

struct MaxResult {
    double x;
    double value;
};

// Golden-section maximization of a continuous function on [a, b].
MaxResult golden_section_max(const std::function<double(double)>& f,
                             double a, double b, double x_tol = 1e-10,
                             int max_iter = 200);

// m Chebyshev-Lobatto points on [a, b], endpoints included, ascending.
std::vector<double> chebyshev_points(double a, double b, int m);

// m log-spaced points on [a, b], 0 < a < b.
std::vector<double> log_spaced_points(double a, double b, int m);

// Monotone cubic (Fritsch-Carlson) interpolant on strictly increasing nodes.
// Within each interval the interpolant stays inside the hull of the two
// endpoint values, so it never undershoots the sampled minimum.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> xs, std::vector<double> ys);
    // exact-slope cubic Hermite: O(h^4) accurate, no monotonicity filtering
    PchipInterpolant(std::vector<double> xs, std::vector<double> ys,
                     std::vector<double> slopes);

    // Evaluation clamps to the node range; extrapolation policy is the
    // caller's business.
    double value(double x) const;
    double front_x() const { return xs_.front(); }
    double back_x() const { return xs_.back(); }
    double front_y() const { return ys_.front(); }
    double back_y() const { return ys_.back(); }
    bool empty() const { return xs_.empty(); }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

private:
    std::vector<double> xs_, ys_, slopes_;
};

} // namespace gls

#endif
