#ifndef GLS_PSI_HPP
#define GLS_PSI_HPP

#include "gls/numerics.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace gls {

// Open exponent interval (a, b), 1 <= a < b <= +inf.
struct Interval {
    double a = 1.0;
    double b = 2.0;

    bool finite() const { return std::isfinite(b); }
    double width() const { return b - a; }
    bool contains(double p) const { return p > a && p < b; }
};

Interval make_interval(double a, double b);

enum class PsiKind {
    Power,         // (p-a)^{-beta} (b-p)^{-gamma} on finite (a,b)
    PowerInfinite, // (p-a)^{-beta} on (a,h), p^{|gamma|} on [h,inf)
    Natural,       // p -> |xi|_p of a fixed function
    FamilyNatural, // sup over a family of natural functions
    DegenerateR,   // 1 at p=r, +inf elsewhere (recovers the L_r norm)
};

const char* psi_kind_name(PsiKind kind);

// A positive weight p -> psi(p) on an open exponent interval; the generating
// object of a Grand Lebesgue Space. Immutable after construction; evaluation
// is pure. Degenerate weights return +inf off their concentration point and
// downstream code applies the C/inf = 0 convention.
class PsiFunction {
public:
    PsiFunction() = default;

    double value(double p) const;
    const Interval& domain() const { return domain_; }
    PsiKind kind() const { return kind_; }
    bool degenerate() const { return kind_ == PsiKind::DegenerateR; }

    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double concentration_r() const { return r_; }
    double crossover_h() const { return h_; }
    const std::vector<double>& sample_points() const { return sample_p_; }
    const std::vector<double>& sample_values() const { return sample_v_; }
    bool has_exact_evaluator() const { return static_cast<bool>(exact_); }

    // Pointwise reweighted copy on a sub-interval (psi_V, psi_W). The weight
    // must be positive on the interval; degenerate sentinels propagate.
    PsiFunction scaled_by(std::function<double(double)> weight, Interval sub) const;

    static PsiFunction power(double a, double b, double beta, double gamma);
    static PsiFunction power_infinite(double a, double beta, double gamma);
    static PsiFunction natural(std::function<double(double)> pnorm, Interval domain,
                               int samples = kNaturalSamples);
    static PsiFunction natural_sampled(std::vector<std::pair<double, double>> pnorms,
                                       Interval domain);
    static PsiFunction natural_family(std::vector<std::function<double(double)>> members,
                                      Interval domain, int samples = kNaturalSamples);
    static PsiFunction degenerate(double r, Interval domain);

    static constexpr int kNaturalSamples = 257;
    static constexpr double kInf = std::numeric_limits<double>::infinity();

private:
    PsiKind kind_ = PsiKind::Power;
    Interval domain_;
    double beta_ = 0.0;
    double gamma_ = 0.0;
    double r_ = 0.0;
    double h_ = 0.0;
    std::vector<double> sample_p_, sample_v_;
    PchipInterpolant interp_;
    std::function<double(double)> exact_;
    std::function<double(double)> weight_; // reweighting hook for psi_V/psi_W

    double base_value(double p) const;
};

// Crossover exponent for the b = inf power family: the unique root of
// (h-a)^{-beta} = h^{-gamma} in (a, inf), with gamma < 0 so the second
// branch p^{|gamma|} grows. Residual is verified to 1e-12 relative.
double solve_continuity_h(double a, double beta, double gamma);

PsiFunction make_power_psi(double a, double b, double beta, double gamma);
PsiFunction make_power_psi_infinite(double a, double beta, double gamma);
PsiFunction degenerate_psi_r(double r, Interval domain);

} // namespace gls

#endif
