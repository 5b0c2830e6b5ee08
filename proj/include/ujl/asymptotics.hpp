#pragma once

// Per-site limits of the incidence energy and the LEL invariant. As n, m grow
// the closed-form sums become periodic rectangle rules for
//
//   (1 / 8 pi^2) * integral over [0, 2pi]^2 of sqrt(root(cos x, cos y))
//
// one integral per root branch: A/B for the signless Laplacian, C/D for the
// Laplacian. A+B gives IE / (2nm), C+D gives LEL / (2nm).

#include "ujl/errors.hpp"
#include "ujl/format.hpp"
#include "ujl/invariants.hpp"
#include "ujl/quadrature.hpp"
#include "ujl/spectra.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ujl {

enum class IntegrandKind { sqrt_a, sqrt_b, sqrt_c, sqrt_d };

inline std::string_view to_string(IntegrandKind k) noexcept {
    switch (k) {
    case IntegrandKind::sqrt_a: return "sqrtA";
    case IntegrandKind::sqrt_b: return "sqrtB";
    case IntegrandKind::sqrt_c: return "sqrtC";
    case IntegrandKind::sqrt_d: return "sqrtD";
    }
    return "?";
}

/// 1 / (8 pi^2): normalizes an integral over [0, 2pi]^2 to a per-site value.
inline constexpr double per_site_normalization = 1.0 / (8.0 * std::numbers::pi * std::numbers::pi);

/// Root branches as functions of continuous angles.
inline RootPair signless_roots_at(double x, double y) { return signless_roots(std::cos(x), std::cos(y)); }
inline RootPair laplacian_roots_at(double x, double y) { return laplacian_roots(std::cos(x), std::cos(y)); }

struct Integrand {
    IntegrandKind kind;

    double operator()(double x, double y) const {
        switch (kind) {
        case IntegrandKind::sqrt_a: return std::sqrt(signless_roots_at(x, y).plus);
        case IntegrandKind::sqrt_b: return std::sqrt(signless_roots_at(x, y).minus);
        case IntegrandKind::sqrt_c: return std::sqrt(laplacian_roots_at(x, y).plus);
        case IntegrandKind::sqrt_d: return std::sqrt(laplacian_roots_at(x, y).minus);
        }
        return 0.0;
    }
};

/// Panels are cut at pi in both directions. That puts the kink of A, B at
/// (pi, pi) and the cone of D at (0, 0) (and its periodic images) on panel
/// corners.
inline QuadratureOptions torus_quadrature_options() {
    QuadratureOptions opts;
    opts.x_breaks = {std::numbers::pi};
    opts.y_breaks = {std::numbers::pi};
    return opts;
}

/// Normalized integral (1/8pi^2) * integral of sqrt(kind). tol applies to the
/// normalized value.
inline QuadratureResult component_integral(IntegrandKind kind, double tol) {
    QuadratureResult raw = integrate2d(Integrand{kind}, tol / per_site_normalization, torus_quadrature_options());
    raw.value *= per_site_normalization;
    raw.error_estimate *= per_site_normalization;
    return raw;
}

struct AsymptoticConstant {
    QuadratureResult plus_branch;
    QuadratureResult minus_branch;

    double per_site() const noexcept { return plus_branch.value + minus_branch.value; }
    /// Per unit cell: 2 sites per cell.
    double per_cell() const noexcept { return 2.0 * per_site(); }
    double error_estimate() const noexcept { return plus_branch.error_estimate + minus_branch.error_estimate; }
    std::size_t evaluations() const noexcept { return plus_branch.evaluations + minus_branch.evaluations; }
    bool converged() const noexcept { return plus_branch.converged && minus_branch.converged; }
};

/// Both branch integrals for one invariant, each to tol/2.
inline AsymptoticConstant asymptotic_constant(InvariantKind kind, double tol) {
    const bool ie = kind == InvariantKind::incidence_energy;
    AsymptoticConstant c{component_integral(ie ? IntegrandKind::sqrt_a : IntegrandKind::sqrt_c, 0.5 * tol),
                         component_integral(ie ? IntegrandKind::sqrt_b : IntegrandKind::sqrt_d, 0.5 * tol)};
    if (!c.converged())
        throw convergence_error("quadrature for the " + std::string(to_string(kind)) +
                                " constant did not reach tolerance " + format_double(tol));
    return c;
}

/// lim IE(UJL(n, m)) / (2nm).
inline double ie_constant(double tol) { return asymptotic_constant(InvariantKind::incidence_energy, tol).per_site(); }

/// lim LEL(UJL(n, m)) / (2nm).
inline double lel_constant(double tol) { return asymptotic_constant(InvariantKind::lel, tol).per_site(); }

struct ConstantsReport {
    AsymptoticConstant ie;
    AsymptoticConstant lel;
    double tolerance;
};

inline ConstantsReport compute_constants(double tol) {
    return {asymptotic_constant(InvariantKind::incidence_energy, tol), asymptotic_constant(InvariantKind::lel, tol),
            tol};
}

inline void write_constants_json(std::ostream& os, const ConstantsReport& r) {
    const auto field = [&](const char* key, double v, bool last = false) {
        os << "  \"" << key << "\": " << format_double(v) << (last ? "\n" : ",\n");
    };
    os << "{\n";
    field("sqrtA", r.ie.plus_branch.value);
    field("sqrtB", r.ie.minus_branch.value);
    field("sqrtC", r.lel.plus_branch.value);
    field("sqrtD", r.lel.minus_branch.value);
    field("ie_per_site", r.ie.per_site());
    field("lel_per_site", r.lel.per_site());
    field("ie_per_cell", r.ie.per_cell());
    field("lel_per_cell", r.lel.per_cell());
    field("tolerance", r.tolerance);
    os << "  \"evaluations\": " << r.ie.evaluations() + r.lel.evaluations() << "\n}\n";
}

inline void write_constants_csv(std::ostream& os, const ConstantsReport& r) {
    os << "name,value\n";
    os << "sqrtA," << format_double(r.ie.plus_branch.value) << '\n';
    os << "sqrtB," << format_double(r.ie.minus_branch.value) << '\n';
    os << "sqrtC," << format_double(r.lel.plus_branch.value) << '\n';
    os << "sqrtD," << format_double(r.lel.minus_branch.value) << '\n';
    os << "ie_per_site," << format_double(r.ie.per_site()) << '\n';
    os << "lel_per_site," << format_double(r.lel.per_site()) << '\n';
    os << "ie_per_cell," << format_double(r.ie.per_cell()) << '\n';
    os << "lel_per_cell," << format_double(r.lel.per_cell()) << '\n';
    os << "tolerance," << format_double(r.tolerance) << '\n';
    os << "evaluations," << r.ie.evaluations() + r.lel.evaluations() << '\n';
}

struct ConvergenceRow {
    LatticeSize size;
    double per_site;
    double limit;
    double gap; // |per_site - limit|
};

/// Closed-form per-site values against a given limit constant.
inline std::vector<ConvergenceRow> convergence_study(InvariantKind kind, std::span<const LatticeSize> sizes,
                                                     double limit) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(sizes.size());
    for (const auto& s : sizes) {
        const double ps = compute_invariant(s, kind).per_site;
        rows.push_back({s, ps, limit, std::abs(ps - limit)});
    }
    return rows;
}

/// Same, with the limit computed by quadrature to tol.
inline std::vector<ConvergenceRow> convergence_study_to_limit(InvariantKind kind, std::span<const LatticeSize> sizes,
                                                              double tol) {
    if (sizes.empty()) return {};
    return convergence_study(kind, sizes, asymptotic_constant(kind, tol).per_site());
}

inline void write_convergence_csv(std::ostream& os, InvariantKind kind, std::span<const ConvergenceRow> rows) {
    os << "n,m,kind,per_site,limit,gap\n";
    for (const auto& r : rows)
        os << r.size.n() << ',' << r.size.m() << ',' << to_string(kind) << ',' << format_double(r.per_site) << ','
           << format_double(r.limit) << ',' << format_double(r.gap) << '\n';
}

} // namespace ujl
