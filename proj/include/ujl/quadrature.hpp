#pragma once

// Globally adaptive 2D quadrature on rectangles. Each panel is integrated with
// the tensor product of the 15-point Gauss-Kronrod rule; the embedded tensor
// 7-point Gauss rule gives the local error estimate |K15 - G7|. The panel with
// the largest estimate is split into four until the summed estimate meets the
// tolerance.

#include "ujl/errors.hpp"
#include "ujl/format.hpp"
#include "ujl/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace ujl {

struct Rect {
    double x0, x1, y0, y1;
};

struct QuadratureOptions {
    Rect domain{0.0, 2.0 * std::numbers::pi, 0.0, 2.0 * std::numbers::pi};
    /// Interior coordinates where the initial panels are cut, so that known
    /// singular points lie on panel edges.
    std::vector<double> x_breaks;
    std::vector<double> y_breaks;
    int max_depth = 30;
    std::size_t max_evaluations = 100'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

namespace gauss_kronrod {

// 15-point Kronrod abscissae on [-1, 1] (non-negative half, descending); odd
// indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for nodes[1], nodes[3], nodes[5], nodes[7].
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Rule1D {
    std::array<double, 15> x;  // on [-1, 1], ascending
    std::array<double, 15> wk; // Kronrod weights
    std::array<double, 15> wg; // Gauss weights, 0 off the Gauss nodes
};

inline const Rule1D& rule() {
    static const Rule1D r = [] {
        Rule1D out{};
        for (std::size_t k = 0; k < 8; ++k) {
            const double gw = (k % 2 == 1) ? gauss_weights[k / 2] : 0.0;
            out.x[k] = -nodes[k];
            out.wk[k] = kronrod_weights[k];
            out.wg[k] = gw;
            out.x[14 - k] = nodes[k];
            out.wk[14 - k] = kronrod_weights[k];
            out.wg[14 - k] = gw;
        }
        return out;
    }();
    return r;
}

} // namespace gauss_kronrod

namespace detail {

struct Panel {
    Rect rect;
    int depth;
    double value;
    double error;
};

struct PanelOrder {
    // Largest error first; ties broken by position for a deterministic order.
    bool operator()(const Panel& a, const Panel& b) const noexcept {
        return std::tie(a.error, b.rect.y0, b.rect.x0) < std::tie(b.error, a.rect.y0, a.rect.x0);
    }
};

template <class F>
Panel evaluate_panel(F& f, const Rect& r, int depth) {
    const auto& rule = gauss_kronrod::rule();
    const double hx = 0.5 * (r.x1 - r.x0);
    const double hy = 0.5 * (r.y1 - r.y0);
    const double cx = 0.5 * (r.x0 + r.x1);
    const double cy = 0.5 * (r.y0 + r.y1);

    double kron = 0.0;
    double gauss = 0.0;
    for (std::size_t a = 0; a < 15; ++a) {
        const double x = cx + hx * rule.x[a];
        double row_k = 0.0;
        double row_g = 0.0;
        for (std::size_t b = 0; b < 15; ++b) {
            const double y = cy + hy * rule.x[b];
            const double v = f(x, y);
            if (!std::isfinite(v))
                throw integrand_error("integrand is not finite at (" + format_double(x) + ", " + format_double(y) +
                                      ")");
            row_k += rule.wk[b] * v;
            row_g += rule.wg[b] * v;
        }
        kron += rule.wk[a] * row_k;
        gauss += rule.wg[a] * row_g;
    }
    const double area = hx * hy;
    return {r, depth, kron * area, std::abs(kron - gauss) * area};
}

inline std::vector<double> cut_points(double lo, double hi, const std::vector<double>& breaks) {
    std::vector<double> pts{lo};
    std::vector<double> inner;
    for (double b : breaks)
        if (b > lo && b < hi) inner.push_back(b);
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    pts.insert(pts.end(), inner.begin(), inner.end());
    pts.push_back(hi);
    return pts;
}

} // namespace detail

/// Integral of f(x, y) over opts.domain to absolute tolerance tol.
/// converged == false if the depth cap or evaluation budget stops refinement
/// first. Non-finite integrand values throw integrand_error.
template <class F>
QuadratureResult integrate2d(F&& f, double tol, const QuadratureOptions& opts = {}) {
    if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    const Rect& dom = opts.domain;
    if (!(dom.x1 > dom.x0) || !(dom.y1 > dom.y0)) throw std::invalid_argument("empty integration domain");

    constexpr std::size_t evals_per_panel = 15 * 15;
    std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::PanelOrder> active;
    std::vector<detail::Panel> finished; // panels at the depth cap
    std::size_t evaluations = 0;
    double total_error = 0.0;

    const auto xs = detail::cut_points(dom.x0, dom.x1, opts.x_breaks);
    const auto ys = detail::cut_points(dom.y0, dom.y1, opts.y_breaks);
    for (std::size_t j = 0; j + 1 < ys.size(); ++j)
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            auto p = detail::evaluate_panel(f, {xs[i], xs[i + 1], ys[j], ys[j + 1]}, 0);
            evaluations += evals_per_panel;
            total_error += p.error;
            active.push(p);
        }

    auto exact_error = [&] {
        KahanSum s;
        for (const auto& p : finished) s.add(p.error);
        auto copy = active;
        while (!copy.empty()) {
            s.add(copy.top().error);
            copy.pop();
        }
        return s.value();
    };

    while (!active.empty()) {
        if (total_error <= tol) {
            // The running total drifts; confirm before stopping.
            total_error = exact_error();
            if (total_error <= tol) break;
        }
        if (evaluations + 4 * evals_per_panel > opts.max_evaluations) break;

        const detail::Panel worst = active.top();
        active.pop();
        if (worst.depth >= opts.max_depth) {
            finished.push_back(worst);
            continue;
        }
        total_error -= worst.error;
        const Rect& r = worst.rect;
        const double mx = 0.5 * (r.x0 + r.x1);
        const double my = 0.5 * (r.y0 + r.y1);
        for (const Rect& child : {Rect{r.x0, mx, r.y0, my}, Rect{mx, r.x1, r.y0, my}, Rect{r.x0, mx, my, r.y1},
                                  Rect{mx, r.x1, my, r.y1}}) {
            auto p = detail::evaluate_panel(f, child, worst.depth + 1);
            evaluations += evals_per_panel;
            total_error += p.error;
            active.push(p);
        }
    }

    std::vector<detail::Panel> all = std::move(finished);
    while (!active.empty()) {
        all.push_back(active.top());
        active.pop();
    }
    std::sort(all.begin(), all.end(), [](const detail::Panel& a, const detail::Panel& b) {
        return std::tie(a.rect.y0, a.rect.x0, a.depth) < std::tie(b.rect.y0, b.rect.x0, b.depth);
    });
    std::vector<double> values;
    std::vector<double> errors;
    values.reserve(all.size());
    errors.reserve(all.size());
    for (const auto& p : all) {
        values.push_back(p.value);
        errors.push_back(p.error);
    }

    QuadratureResult out;
    out.value = pairwise_sum(values);
    out.error_estimate = pairwise_sum(errors);
    out.evaluations = evaluations;
    out.converged = out.error_estimate <= tol;
    return out;
}

} // namespace ujl
