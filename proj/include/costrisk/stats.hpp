#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

namespace costrisk {

// Quantile of a sorted sample using Hazen plotting positions p_k = (k - 0.5)/n
// with linear interpolation between adjacent order statistics, clamped to the
// sample minimum/maximum outside [p_1, p_n]. The same estimator is used for
// reference-class queries and simulation results so quantile reports are
// comparable across the toolkit.
//
// Precondition: `sorted` is nonempty and ascending. Throws
// std::invalid_argument("probability out of range") unless 0 < p < 1.
inline double hazen_quantile(std::span<const double> sorted, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("probability out of range");
    }
    const double n = static_cast<double>(sorted.size());
    if (p <= 0.5 / n) {
        return sorted.front();
    }
    if (p >= (n - 0.5) / n) {
        return sorted.back();
    }
    const double h = p * n + 0.5;  // continuous 1-based index
    const auto k = static_cast<std::size_t>(h);
    const double t = h - static_cast<double>(k);
    return sorted[k - 1] + t * (sorted[k] - sorted[k - 1]);
}

}  // namespace costrisk
