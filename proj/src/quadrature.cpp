#include "gls/quadrature.hpp"
#include "gls/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace gls {

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be > 0");
    if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
    for (std::size_t i = 1; i < split_points.size(); ++i)
        if (!(split_points[i] > split_points[i - 1]))
            throw DomainError("QuadratureSpec: split_points must be strictly increasing");
}

namespace {

// (G7, K15) nodes and weights, positive half.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel gk15(const Integrand& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = kWgk[7] * f(mid);
    double gauss = kWg[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kronrod += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    const double diff = std::fabs(kronrod - gauss);
    // QUADPACK-style sharpened error estimate
    const double err = diff > 0.0 ? diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::fabs(kronrod), 1e-300), 1.5)) : 0.0;
    return Panel{a, b, kronrod, std::max(err, diff * 1e-6)};
}

} // namespace

double integrate_adaptive(const Integrand& f, double a, double b,
                          double rel_tol, double abs_tol, int max_subdivisions,
                          const std::vector<double>& splits) {
    if (!(b > a)) return 0.0;

    std::vector<double> edges;
    edges.push_back(a);
    for (double s : splits)
        if (s > a && s < b) edges.push_back(s);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    auto worse = [](const Panel& lhs, const Panel& rhs) {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a; // deterministic tie-break
    };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);

    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = gk15(f, edges[i], edges[i + 1]);
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }

    int splits_done = 0;
    while (total_err > std::max(rel_tol * std::fabs(total), abs_tol)) {
        if (splits_done >= max_subdivisions)
            throw ConvergenceError("integrate_adaptive: " + std::to_string(max_subdivisions) +
                                   " subdivisions exhausted (err=" + std::to_string(total_err) + ")");
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at floating-point resolution; accept its estimate
            total_err -= worst.error;
            continue;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++splits_done;
    }

    // re-sum panels in ascending interval order for a reproducible value
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& lhs, const Panel& rhs) { return lhs.a < rhs.a; });
    double sum = 0.0, comp = 0.0;
    for (const Panel& p : panels) {
        const double y = p.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double integrate_semi_infinite(const Integrand& f, double a, double rel_tol,
                               double abs_tol, int max_subdivisions) {
    auto mapped = [&f, a](double t) {
        const double om = 1.0 - t;
        const double r = a + t / om;
        const double v = f(r);
        return v == 0.0 ? 0.0 : v / (om * om);
    };
    // split at t = 1/2 (r = a+1) so the map's distortion gets its own panels
    return integrate_adaptive(mapped, 0.0, 1.0, rel_tol, abs_tol, max_subdivisions, {0.5});
}

double integrate_power_origin(const Integrand& w, double eps, double r1,
                              double rel_tol, double abs_tol, int max_subdivisions) {
    if (!(eps > 0.0))
        throw DivergenceError("integrate_power_origin: exponent eps must be > 0, got " +
                              std::to_string(eps));
    if (!(r1 > 0.0)) return 0.0;
    const double probe = std::min(1e-7, 1e-6 * r1);
    const double w0 = w(probe);

    // subtraction zone: shrink until w is within 12.5% of its origin value,
    // so the closed-form piece and the residual never cancel badly
    double s = r1;
    if (w0 != 0.0) {
        while (s > 8.0 * probe && std::fabs(w(s) - w0) > 0.125 * std::fabs(w0)) s *= 0.5;
    }

    const double exact = w0 * std::pow(s, eps) / eps;
    auto residual = [&w, w0, eps](double r) {
        const double d = w(r) - w0;
        return d == 0.0 ? 0.0 : std::pow(r, eps - 1.0) * d;
    };
    const double floor = std::max(abs_tol, rel_tol * std::fabs(exact));
    double total = exact + integrate_adaptive(residual, 0.0, s, rel_tol, floor, max_subdivisions);
    if (s < r1) {
        auto raw = [&w, eps](double r) {
            const double v = w(r);
            return v == 0.0 ? 0.0 : std::pow(r, eps - 1.0) * v;
        };
        total += integrate_adaptive(raw, s, r1, rel_tol,
                                    std::max(abs_tol, rel_tol * std::fabs(total)),
                                    max_subdivisions);
    }
    return total;
}

} // namespace gls
