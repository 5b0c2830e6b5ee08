#pragma once

// Incidence energy (sum of sqrt of signless-Laplacian eigenvalues) and the
// Laplacian-energy-like invariant (sum of sqrt of Laplacian eigenvalues) of
// the toroidal Union Jack lattice.

#include "ujl/format.hpp"
#include "ujl/lattice.hpp"
#include "ujl/spectra.hpp"
#include "ujl/summation.hpp"

#include <cmath>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace ujl {

enum class InvariantKind { incidence_energy, lel };
enum class Method { closed_form, numeric_oracle };

inline std::string_view to_string(InvariantKind k) noexcept { return k == InvariantKind::incidence_energy ? "ie" : "lel"; }
inline std::string_view to_string(Method m) noexcept { return m == Method::closed_form ? "closed" : "numeric"; }

inline SpectrumKind spectrum_kind(InvariantKind k) noexcept {
    return k == InvariantKind::incidence_energy ? SpectrumKind::signless_laplacian : SpectrumKind::laplacian;
}

struct InvariantReport {
    LatticeSize size;
    InvariantKind kind;
    Method method;
    double value;
    double per_site; // value / (2nm)
};

/// Numeric eigenvalues this far below zero are treated as the zero mode.
inline constexpr double zero_mode_clamp = 1e-9;

namespace detail {

inline double clamped_sqrt(double x) {
    if (x < 0.0) {
        if (x < -zero_mode_clamp) throw std::domain_error("negative eigenvalue " + format_double(x));
        return 0.0;
    }
    return std::sqrt(x);
}

inline InvariantReport make_report(const LatticeSize& size, InvariantKind kind, Method method, double value) {
    return {size, kind, method, value, value / static_cast<double>(2 * size.cells())};
}

} // namespace detail

/// Sum of square roots of the chosen UJL(n, m) spectrum. Closed form sums in
/// (i, j, branch) order; the oracle sums the ascending Jacobi eigenvalues.
/// Both use Kahan accumulation.
inline InvariantReport compute_invariant(const LatticeSize& size, InvariantKind kind, Method method = Method::closed_form,
                                         const JacobiOptions& jacobi = {}) {
    KahanSum sum;
    if (method == Method::closed_form) {
        for (const auto& e : closed_form_spectrum(size, spectrum_kind(kind)).entries)
            sum.add(detail::clamped_sqrt(e.value));
    } else {
        const Graph g = build_union_jack(size).first;
        const IntSymmetricMatrix mat =
            kind == InvariantKind::incidence_energy ? signless_laplacian(g) : laplacian(g);
        JacobiOptions opts = jacobi;
        opts.compute_residual = false;
        for (double q : numeric_spectrum(mat, opts).values) sum.add(detail::clamped_sqrt(q));
    }
    return detail::make_report(size, kind, method, sum.value());
}

inline InvariantReport incidence_energy(const LatticeSize& size, Method method = Method::closed_form) {
    return compute_invariant(size, InvariantKind::incidence_energy, method);
}

/// The zero Laplacian eigenvalue contributes nothing, so all 2nm terms are
/// summed.
inline InvariantReport lel(const LatticeSize& size, Method method = Method::closed_form) {
    return compute_invariant(size, InvariantKind::lel, method);
}

inline std::vector<InvariantReport> invariant_table(std::span<const LatticeSize> sizes, InvariantKind kind,
                                                    Method method = Method::closed_form) {
    std::vector<InvariantReport> out;
    out.reserve(sizes.size());
    for (const auto& s : sizes) out.push_back(compute_invariant(s, kind, method));
    return out;
}

/// Same, validating raw (n, m) pairs one at a time; throws size_error at the
/// first invalid entry.
inline std::vector<InvariantReport> invariant_table(std::span<const std::pair<std::size_t, std::size_t>> sizes,
                                                    InvariantKind kind, Method method = Method::closed_form) {
    std::vector<InvariantReport> out;
    out.reserve(sizes.size());
    for (const auto& [n, m] : sizes) out.push_back(compute_invariant(LatticeSize(n, m), kind, method));
    return out;
}

inline void write_report_csv(std::ostream& os, std::span<const InvariantReport> reports) {
    os << "n,m,kind,method,value,per_site\n";
    for (const auto& r : reports)
        os << r.size.n() << ',' << r.size.m() << ',' << to_string(r.kind) << ',' << to_string(r.method) << ','
           << format_double(r.value) << ',' << format_double(r.per_site) << '\n';
}

} // namespace ujl
