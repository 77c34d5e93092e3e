#include "gls/psi.hpp"
#include "gls/errors.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace gls;
using gls_test::check_rel;

TEST_CASE("power psi: hand-substituted values") {
    const PsiFunction psi = make_power_psi(1.0, 2.0, 1.0, 1.0);
    check_rel(psi.value(1.5), 4.0, 1e-14);
    const PsiFunction flat = make_power_psi(1.0, 2.0, 0.0, 0.0);
    CHECK(flat.value(1.2) == 1.0);
    CHECK(flat.value(1.9) == 1.0);
    const PsiFunction one_sided = make_power_psi(1.0, 3.0, 1.0, 0.0);
    check_rel(one_sided.value(2.0), 1.0, 1e-14);
}

TEST_CASE("power psi: evaluation outside the open domain is an error") {
    const PsiFunction psi = make_power_psi(1.0, 2.0, 1.0, 1.0);
    CHECK_THROWS_AS(psi.value(1.0), DomainError);
    CHECK_THROWS_AS(psi.value(2.0), DomainError);
    CHECK_THROWS_AS(psi.value(0.5), DomainError);
}

TEST_CASE("solve_continuity_h: quadratic reductions") {
    check_rel(solve_continuity_h(1.0, 1.0, -1.0), (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
    check_rel(solve_continuity_h(2.0, 1.0, -1.0), 1.0 + std::sqrt(2.0), 1e-12);
    CHECK_THROWS_AS(solve_continuity_h(1.0, 0.0, -1.0), DomainError);
}

TEST_CASE("power_infinite psi: branches and continuity at h") {
    const PsiFunction psi = make_power_psi_infinite(1.0, 1.0, -1.0);
    const double h = psi.crossover_h();
    check_rel(h, (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
    check_rel(psi.value(1.2), 5.0, 1e-12);   // (0.2)^{-1}
    check_rel(psi.value(3.0), 3.0, 1e-12);   // growing branch p^{|gamma|}
    check_rel(psi.value(h), h, 1e-10);
    // continuity across the crossover
    const double d = 1e-6;
    CHECK(std::fabs(psi.value(h - d) - psi.value(h + d)) <= 1e-4 * psi.value(h));
}

TEST_CASE("natural psi: closed-form Gaussian L_p map") {
    // |e^{-|x|^2}|_p in R^3 is (pi/p)^{3/(2p)}
    auto pnorm = [](double p) { return std::pow(std::numbers::pi / p, 1.5 / p); };
    const PsiFunction psi = PsiFunction::natural(pnorm, make_interval(1.0, 4.0));
    for (double p : {1.3, 2.0, 3.7}) check_rel(psi.value(p), pnorm(p), 1e-14);
    CHECK(psi.has_exact_evaluator());
    CHECK(psi.sample_points().size() == static_cast<std::size_t>(PsiFunction::kNaturalSamples));
}

TEST_CASE("natural psi: sampled-only evaluation interpolates") {
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i <= 40; ++i) {
        const double p = 1.1 + 2.8 * i / 40.0;
        samples.emplace_back(p, std::pow(std::numbers::pi / p, 1.5 / p));
    }
    const PsiFunction psi = PsiFunction::natural_sampled(samples, make_interval(1.0, 4.0));
    CHECK(!psi.has_exact_evaluator());
    check_rel(psi.value(2.05), std::pow(std::numbers::pi / 2.05, 1.5 / 2.05), 1e-5);
}

TEST_CASE("natural psi: non-positive or infinite samples are rejected") {
    auto bad = [](double p) { return p < 2.0 ? 1.0 : -1.0; };
    CHECK_THROWS_AS(PsiFunction::natural(bad, make_interval(1.0, 4.0)), DomainError);
    auto inf = [](double) { return std::numeric_limits<double>::infinity(); };
    CHECK_THROWS_AS(PsiFunction::natural(inf, make_interval(1.0, 4.0)), DomainError);
}

TEST_CASE("family natural psi: pointwise supremum of two Gaussians") {
    auto n1 = [](double p) { return std::pow(std::numbers::pi / p, 1.5 / p); };
    auto n2 = [](double p) { return std::pow(std::numbers::pi / (2.0 * p), 1.5 / p); };
    const PsiFunction psi =
        PsiFunction::natural_family({n1, n2}, make_interval(1.0, 4.0));
    for (double p : {1.5, 2.5, 3.5})
        check_rel(psi.value(p), std::max(n1(p), n2(p)), 1e-13);
    CHECK(psi.kind() == PsiKind::FamilyNatural);
}

TEST_CASE("degenerate psi: sentinel semantics") {
    const PsiFunction psi = degenerate_psi_r(2.0, make_interval(1.0, 3.0));
    CHECK(psi.value(2.0) == 1.0);
    CHECK(std::isinf(psi.value(1.7)));
    CHECK(std::isinf(psi.value(2.3)));
    CHECK_THROWS_AS(degenerate_psi_r(5.0, make_interval(1.0, 3.0)), DomainError);
}

TEST_CASE("psi positivity on interior grids") {
    const PsiFunction power = make_power_psi(1.0, 6.0, 0.7, 1.3);
    const PsiFunction inf_psi = make_power_psi_infinite(1.5, 2.0, -0.5);
    for (int i = 1; i < 64; ++i) {
        const double p1 = 1.0 + 5.0 * i / 64.0;
        CHECK(power.value(p1) > 0.0);
        CHECK(std::isfinite(power.value(p1)));
        const double p2 = 1.5 + 20.0 * i / 64.0;
        CHECK(inf_psi.value(p2) > 0.0);
        CHECK(std::isfinite(inf_psi.value(p2)));
    }
}

TEST_CASE("sampled natural psi never undershoots its minimum sample") {
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i <= 24; ++i) {
        const double p = 1.2 + i * 0.1;
        samples.emplace_back(p, 0.5 + 0.4 * std::sin(3.0 * i));
    }
    double min_sample = 1e300;
    for (const auto& s : samples) min_sample = std::min(min_sample, s.second);
    const PsiFunction psi = PsiFunction::natural_sampled(samples, make_interval(1.0, 4.0));
    for (double p = 1.2; p <= 3.6; p += 0.003)
        CHECK(psi.value(p) >= min_sample - 1e-12);
}

TEST_CASE("scaled_by: reweighting and sentinel propagation") {
    const PsiFunction base = make_power_psi(1.0, 4.0, 0.0, 0.0);
    const PsiFunction scaled = base.scaled_by([](double p) { return p * p; }, Interval{1.5, 3.0});
    check_rel(scaled.value(2.0), 4.0, 1e-14);
    CHECK_THROWS_AS(scaled.value(1.2), DomainError); // outside narrowed domain

    const PsiFunction deg = degenerate_psi_r(2.0, make_interval(1.0, 3.0));
    const PsiFunction deg_scaled = deg.scaled_by([](double) { return 7.0; }, Interval{1.0, 3.0});
    CHECK(deg_scaled.value(2.0) == 7.0);
    CHECK(std::isinf(deg_scaled.value(2.5)));
}
