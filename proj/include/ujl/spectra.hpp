#pragma once

// Closed-form Laplacian / signless-Laplacian spectra of the toroidal Union
// Jack lattice, and a cyclic Jacobi eigensolver used as an independent check.
//
// Each Fourier mode (i, j), with a = cos(2*pi*i/n) and b = cos(2*pi*j/m),
// contributes the two roots of x^2 - 2Sx + P:
//   signless:  S = 6 + a + b,  P = 4(7 + a + b - ab)
//   laplacian: S = 6 - a - b,  P = 4(7 - 3a - 3b - ab)

#include "ujl/errors.hpp"
#include "ujl/format.hpp"
#include "ujl/lattice.hpp"
#include "ujl/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ujl {

enum class Branch { plus, minus };

inline char branch_symbol(Branch b) noexcept { return b == Branch::plus ? '+' : '-'; }

/// Which graph matrix a spectrum belongs to.
enum class SpectrumKind { signless_laplacian, laplacian };

/// Discriminants in [-discriminant_clamp, 0) are rounding noise and map to 0.
inline constexpr double discriminant_clamp = 1e-12;

struct RootPair {
    double plus;
    double minus;
};

/// Roots S +- sqrt(S^2 - P) of x^2 - 2Sx + P. The smaller root is formed as
/// P / (S + sqrt(.)) to avoid cancellation when it approaches zero.
inline RootPair quadratic_roots(double s, double p) {
    double disc = s * s - p;
    if (disc < 0.0) {
        if (disc < -discriminant_clamp)
            throw std::domain_error("negative discriminant " + format_double(disc));
        disc = 0.0;
    }
    const double r = std::sqrt(disc);
    const double big = s + r;
    if (p < 0.0 && p >= -discriminant_clamp) p = 0.0;
    return {big, big > 0.0 ? p / big : 0.0};
}

inline double signless_sum(double a, double b) noexcept { return 6.0 + a + b; }
inline double signless_product(double a, double b) noexcept { return 4.0 * (7.0 + a + b - a * b); }
inline double laplacian_sum(double a, double b) noexcept { return 6.0 - a - b; }
inline double laplacian_product(double a, double b) noexcept { return 4.0 * (7.0 - 3.0 * a - 3.0 * b - a * b); }

inline RootPair signless_roots(double a, double b) { return quadratic_roots(signless_sum(a, b), signless_product(a, b)); }
inline RootPair laplacian_roots(double a, double b) { return quadratic_roots(laplacian_sum(a, b), laplacian_product(a, b)); }

inline RootPair mode_roots(SpectrumKind kind, double a, double b) {
    return kind == SpectrumKind::signless_laplacian ? signless_roots(a, b) : laplacian_roots(a, b);
}

/// cos(2*pi*i/n) evaluated on the reduced index min(i, n-i), so that modes i
/// and n-i give bit-identical values.
inline double cos_turn(std::size_t i, std::size_t n) noexcept {
    i %= n;
    const std::size_t k = std::min(i, n - i);
    return std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

struct SpectrumEntry {
    std::size_t i;
    std::size_t j;
    Branch sign;
    double value;
};

/// 2nm eigenvalues in lexicographic (i, j, sign) order, '+' before '-'.
struct ClosedFormSpectrum {
    LatticeSize size;
    SpectrumKind kind;
    std::vector<SpectrumEntry> entries;

    std::vector<double> values() const {
        std::vector<double> v;
        v.reserve(entries.size());
        for (const auto& e : entries) v.push_back(e.value);
        return v;
    }

    std::vector<double> sorted_values() const {
        auto v = values();
        std::sort(v.begin(), v.end());
        return v;
    }
};

inline ClosedFormSpectrum closed_form_spectrum(const LatticeSize& size, SpectrumKind kind) {
    ClosedFormSpectrum out{size, kind, {}};
    out.entries.reserve(2 * size.cells());
    for (std::size_t i = 0; i < size.n(); ++i) {
        const double a = cos_turn(i, size.n());
        for (std::size_t j = 0; j < size.m(); ++j) {
            const RootPair r = mode_roots(kind, a, cos_turn(j, size.m()));
            out.entries.push_back({i, j, Branch::plus, r.plus});
            out.entries.push_back({i, j, Branch::minus, r.minus});
        }
    }
    return out;
}

inline ClosedFormSpectrum closed_form_q_spectrum(const LatticeSize& size) {
    return closed_form_spectrum(size, SpectrumKind::signless_laplacian);
}

inline ClosedFormSpectrum closed_form_l_spectrum(const LatticeSize& size) {
    return closed_form_spectrum(size, SpectrumKind::laplacian);
}

/// Adjacency eigenvalues of C_n: 2cos(2*pi*i/n), i = 0..n-1.
inline std::vector<double> cycle_spectrum(std::size_t n) {
    if (n < LatticeSize::min_extent)
        throw size_error("cycle length " + std::to_string(n) + " is too small: must be >= 3");
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 2.0 * cos_turn(i, n);
    return v;
}

inline void write_spectrum_csv(std::ostream& os, const ClosedFormSpectrum& spec) {
    os << "i,j,sign,value\n";
    for (const auto& e : spec.entries)
        os << e.i << ',' << e.j << ',' << branch_symbol(e.sign) << ',' << format_double(e.value) << '\n';
}

// --- Jacobi eigensolver ------------------------------------------------------

struct JacobiOptions {
    std::size_t max_order = 2048;
    std::size_t max_sweeps = 100;
    /// Stop once the off-diagonal Frobenius norm is below this times the
    /// initial Frobenius norm.
    double relative_tolerance = 1e-12;
    /// Accumulate eigenvectors to report max |Av - lambda v|.
    bool compute_residual = true;
};

struct NumericSpectrum {
    std::vector<double> values; // ascending
    double residual = 0.0;
    std::size_t sweeps = 0;
};

namespace detail {

inline double off_diagonal_norm(const Matrix<double>& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
}

inline double frobenius_norm(const Matrix<double>& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

} // namespace detail

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline NumericSpectrum numeric_spectrum(const SymmetricMatrix<double>& matrix, const JacobiOptions& opts = {}) {
    const std::size_t n = matrix.order();
    if (n > opts.max_order)
        throw size_error("matrix order " + std::to_string(n) + " exceeds eigensolver cap " +
                         std::to_string(opts.max_order));

    Matrix<double> a = matrix.matrix();
    // Rows of vt are the eigenvector estimates.
    Matrix<double> vt;
    if (opts.compute_residual) vt = Matrix<double>::identity(n);

    const double target = opts.relative_tolerance * detail::frobenius_norm(a);
    NumericSpectrum out;
    bool converged = false;
    for (std::size_t sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= target) {
            converged = true;
            out.sweeps = sweep;
            break;
        }
        if (sweep == opts.max_sweeps) break;

        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                // Negligible against both diagonal entries: drop it.
                const double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }

                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Rows p and q are contiguous; columns are mirrored from them.
                double* row_p = &a(p, 0);
                double* row_q = &a(q, 0);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = row_p[k];
                    const double akq = row_q[k];
                    const double new_kp = c * akp - s * akq;
                    const double new_kq = s * akp + c * akq;
                    row_p[k] = a(k, p) = new_kp;
                    row_q[k] = a(k, q) = new_kq;
                }
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;

                if (opts.compute_residual) {
                    double* vp = &vt(p, 0);
                    double* vq = &vt(q, 0);
                    for (std::size_t k = 0; k < n; ++k) {
                        const double x = vp[k];
                        const double y = vq[k];
                        vp[k] = c * x - s * y;
                        vq[k] = s * x + c * y;
                    }
                }
            }
    }
    if (!converged)
        throw convergence_error("Jacobi eigensolver did not converge within " + std::to_string(opts.max_sweeps) +
                                " sweeps");

    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.values[k] = a(k, k);

    if (opts.compute_residual) {
        const Matrix<double>& orig = matrix.matrix();
        for (std::size_t k = 0; k < n; ++k) {
            const double* vk = &vt(k, 0);
            for (std::size_t i = 0; i < n; ++i) {
                const double* row = &orig(i, 0);
                double av = 0.0;
                for (std::size_t j = 0; j < n; ++j) av += row[j] * vk[j];
                out.residual = std::max(out.residual, std::abs(av - out.values[k] * vk[i]));
            }
        }
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

template <typename T>
NumericSpectrum numeric_spectrum(const SymmetricMatrix<T>& matrix, const JacobiOptions& opts = {}) {
    return numeric_spectrum(matrix.template cast<double>(), opts);
}

struct SpectrumComparison {
    double max_abs_diff;
    bool pass;
};

/// Max elementwise difference between two spectra compared as sorted multisets.
inline SpectrumComparison compare_spectra(std::span<const double> a, std::span<const double> b, double tol) {
    if (a.size() != b.size())
        throw std::invalid_argument("spectra have different lengths: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double diff = 0.0;
    for (std::size_t k = 0; k < sa.size(); ++k) diff = std::max(diff, std::abs(sa[k] - sb[k]));
    return {diff, diff <= tol};
}

} // namespace ujl
