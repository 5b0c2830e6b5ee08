#include "ujl/asymptotics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

namespace ujl {
namespace {

// Normalized (1/8pi^2) integrals from an independent adaptive cubature
// (scipy.integrate.dblquad, panels split at pi, epsabs = epsrel = 1e-13).
constexpr double ref_sqrt_a = 1.4519918243984367;
constexpr double ref_sqrt_b = 0.9172649712736054;
constexpr double ref_sqrt_c = 1.4936870867686816;
constexpr double ref_sqrt_d = 0.8483349055466018;

// Low-discrepancy points on [0, 2pi)^2 (additive recurrence with the plastic
// number).
std::pair<double, double> r2_point(std::size_t k) {
    constexpr double g = 1.32471795724474602596;
    constexpr double a1 = 1.0 / g;
    constexpr double a2 = 1.0 / (g * g);
    const double u = std::fmod(0.5 + a1 * static_cast<double>(k), 1.0);
    const double v = std::fmod(0.5 + a2 * static_cast<double>(k), 1.0);
    return {2.0 * std::numbers::pi * u, 2.0 * std::numbers::pi * v};
}

TEST(ComponentIntegral, MatchesIndependentCubature) {
    const std::pair<IntegrandKind, double> cases[] = {
        {IntegrandKind::sqrt_a, ref_sqrt_a},
        {IntegrandKind::sqrt_b, ref_sqrt_b},
        {IntegrandKind::sqrt_c, ref_sqrt_c},
        {IntegrandKind::sqrt_d, ref_sqrt_d},
    };
    for (const auto& [kind, ref] : cases) {
        const auto r = component_integral(kind, 1e-10);
        EXPECT_TRUE(r.converged) << to_string(kind);
        EXPECT_LE(r.error_estimate, 1e-10);
        EXPECT_NEAR(r.value, ref, 2e-10) << to_string(kind);
    }
}

TEST(ComponentIntegral, TorusMeansReproduceFourDigitValues) {
    // The mean over [0, 2pi]^2 (1/4pi^2 normalization) is twice the per-site
    // component. The commonly quoted four-digit values are these means.
    EXPECT_NEAR(2.0 * component_integral(IntegrandKind::sqrt_a, 1e-6).value, 2.9040, 5e-4);
    EXPECT_NEAR(2.0 * component_integral(IntegrandKind::sqrt_b, 1e-6).value, 1.8345, 5e-4);
    EXPECT_NEAR(2.0 * component_integral(IntegrandKind::sqrt_c, 1e-6).value, 2.9874, 5e-4);
    EXPECT_NEAR(2.0 * component_integral(IntegrandKind::sqrt_d, 1e-6).value, 1.6967, 5e-4);
}

TEST(ComponentIntegral, BranchOrderingAndPositivity) {
    const double a = component_integral(IntegrandKind::sqrt_a, 1e-8).value;
    const double b = component_integral(IntegrandKind::sqrt_b, 1e-8).value;
    const double c = component_integral(IntegrandKind::sqrt_c, 1e-8).value;
    const double d = component_integral(IntegrandKind::sqrt_d, 1e-8).value;
    EXPECT_GT(b, 0.0);
    EXPECT_GT(d, 0.0);
    EXPECT_GT(a, b);
    EXPECT_GT(c, d);
}

TEST(Constants, PerSiteAndPerCell) {
    const auto ie = asymptotic_constant(InvariantKind::incidence_energy, 1e-8);
    const auto le = asymptotic_constant(InvariantKind::lel, 1e-8);
    EXPECT_NEAR(ie.per_site(), ref_sqrt_a + ref_sqrt_b, 1e-8);
    EXPECT_NEAR(le.per_site(), ref_sqrt_c + ref_sqrt_d, 1e-8);
    EXPECT_EQ(ie.per_cell(), 2.0 * ie.per_site());
    // Per unit cell: 4.73851 and 4.68404. Adding the rounded torus means
    // (2.9874 + 1.6967) gives 4.6841, one unit off in the last place.
    EXPECT_NEAR(ie.per_cell(), 4.7385, 5e-5);
    EXPECT_NEAR(le.per_cell(), 4.6840, 5e-5);
    EXPECT_NEAR(le.per_cell(), 4.6841, 1e-4);
    EXPECT_EQ(ie_constant(1e-8), ie.per_site());
    EXPECT_EQ(lel_constant(1e-8), le.per_site());
}

TEST(Constants, StableAcrossTolerances) {
    EXPECT_LT(std::abs(ie_constant(1e-4) - ie_constant(1e-7)), 2e-4);
    EXPECT_LT(std::abs(lel_constant(1e-4) - lel_constant(1e-7)), 2e-4);
}

TEST(Constants, IncidenceLimitMatchesEigensolverOnModerateLattice) {
    // The IE lattice sum converges spectrally; at 12x12 it already agrees
    // with the limit far below 1e-9. Use the Jacobi oracle, not the closed form.
    const auto oracle = incidence_energy(LatticeSize(12, 12), Method::numeric_oracle);
    EXPECT_NEAR(oracle.per_site, ie_constant(1e-10), 1e-9);
}

TEST(Integrands, FiniteAndNonNegativeIncludingSingularPoints) {
    const double pi = std::numbers::pi;
    for (auto kind : {IntegrandKind::sqrt_a, IntegrandKind::sqrt_b, IntegrandKind::sqrt_c, IntegrandKind::sqrt_d}) {
        const Integrand f{kind};
        for (auto [x, y] : {std::pair{0.0, 0.0}, std::pair{pi, pi}, std::pair{2 * pi, 0.0}, std::pair{pi, 0.0}}) {
            const double v = f(x, y);
            EXPECT_TRUE(std::isfinite(v));
            EXPECT_GE(v, 0.0);
        }
        for (std::size_t k = 0; k < 2000; ++k) {
            const auto [x, y] = r2_point(k);
            const double v = f(x, y);
            EXPECT_TRUE(std::isfinite(v) && v >= 0.0);
        }
    }
    EXPECT_EQ(Integrand{IntegrandKind::sqrt_d}(0.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(Integrand{IntegrandKind::sqrt_b}(pi, pi), 2.0);
}

TEST(Integrands, VietaIdentitiesAtQuasiRandomPoints) {
    for (std::size_t k = 0; k < 10000; ++k) {
        const auto [x, y] = r2_point(k);
        const double cx = std::cos(x), cy = std::cos(y);
        const RootPair q = signless_roots_at(x, y);
        const RootPair l = laplacian_roots_at(x, y);
        EXPECT_NEAR(q.plus + q.minus, 2.0 * (6.0 + cx + cy), 1e-9);
        EXPECT_NEAR(q.plus * q.minus, 4.0 * (7.0 + cx + cy - cx * cy), 1e-9);
        EXPECT_NEAR(l.plus + l.minus, 2.0 * (6.0 - cx - cy), 1e-9);
        EXPECT_NEAR(l.plus * l.minus, 4.0 * (7.0 - 3.0 * cx - 3.0 * cy - cx * cy), 1e-9);
    }
}

TEST(ConvergenceStudy, IncidenceGapClosesSpectrally) {
    const std::vector<LatticeSize> sizes{LatticeSize(8, 8), LatticeSize(16, 16), LatticeSize(32, 32),
                                         LatticeSize(64, 64)};
    const auto rows = convergence_study_to_limit(InvariantKind::incidence_energy, sizes, 1e-11);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_GT(rows[0].gap, rows[1].gap);
    EXPECT_GT(rows[0].gap, 1e-9);
    for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_LT(rows[k].gap, 1e-9);
    for (std::size_t k = 0; k < rows.size(); ++k) EXPECT_EQ(rows[k].size, sizes[k]);
}

TEST(ConvergenceStudy, LelGapShrinksMonotonically) {
    const std::vector<LatticeSize> sizes{LatticeSize(8, 8), LatticeSize(16, 16), LatticeSize(32, 32),
                                         LatticeSize(64, 64)};
    const auto rows = convergence_study_to_limit(InvariantKind::lel, sizes, 1e-11);
    for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_LT(rows[k].gap, rows[k - 1].gap);
    EXPECT_LT(rows[0].gap, 0.2);
    // Regression: the cone of D at the origin gives roughly h^3 decay.
    EXPECT_NEAR(rows[0].gap, 1.41077873e-3, 1e-9);
    EXPECT_NEAR(rows[3].gap, 2.74248e-6, 1e-10);
}

TEST(ConvergenceStudy, EmptyInput) {
    EXPECT_TRUE(convergence_study_to_limit(InvariantKind::lel, {}, 1e-6).empty());
    EXPECT_TRUE(convergence_study(InvariantKind::lel, {}, 2.0).empty());
}

TEST(Report, JsonHasAllFields) {
    std::ostringstream os;
    write_constants_json(os, compute_constants(1e-6));
    const std::string text = os.str();
    for (const char* key : {"\"sqrtA\"", "\"sqrtB\"", "\"sqrtC\"", "\"sqrtD\"", "\"ie_per_site\"", "\"lel_per_site\"",
                            "\"ie_per_cell\"", "\"lel_per_cell\"", "\"tolerance\"", "\"evaluations\""})
        EXPECT_NE(text.find(key), std::string::npos) << key;
    EXPECT_NE(text.find("\"tolerance\": 9.9999999999999995e-07"), std::string::npos);
}

} // namespace
} // namespace ujl
