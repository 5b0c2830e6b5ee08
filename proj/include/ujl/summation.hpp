#pragma once

#include <cstddef>
#include <span>

namespace ujl {

/// Kahan-compensated running sum. Results depend only on the order of add()
/// calls, so a fixed iteration order gives bit-identical totals.
class KahanSum {
public:
    void add(double x) noexcept {
        const double y = x - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Recursive pairwise sum in index order.
inline double pairwise_sum(std::span<const double> xs) noexcept {
    if (xs.empty()) return 0.0;
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace ujl
