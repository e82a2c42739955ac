#include "centropy/smoothing.hpp"

#include <stdexcept>

#include "centropy/errors.hpp"

namespace centropy {

smoothed_sample moving_average_smooth(const censored_sample& s, int k) {
    const int r = s.r;
    if (k < 1 || k > r) {
        throw std::invalid_argument("moving-average order k must satisfy 1 <= k <= r");
    }
    const auto& x = s.values;
    std::vector<double> y(static_cast<std::size_t>(r));
    // Windows past position r-k+1 shrink to the remaining tail.
    for (int i = 1; i <= r; ++i) {
        const int hi = std::min(i + k - 1, r);
        double acc = 0.0;
        for (int j = i; j <= hi; ++j) {
            acc += x[static_cast<std::size_t>(j - 1)];
        }
        y[static_cast<std::size_t>(i - 1)] = acc / (hi - i + 1);
    }
    return smoothed_sample{std::move(y), k, s};
}

double fhat(const smoothed_sample& sm, int i) {
    const int r = sm.source.r;
    const int n = sm.source.n;
    if (i < 1 || i > r) {
        throw std::invalid_argument("fhat index out of range");
    }
    if (r < 2) {
        throw std::invalid_argument("fhat needs at least two values");
    }
    const auto& y = sm.y;
    double ratio;
    if (i == 1) {
        ratio = 0.0; // y_(0) := y_(1)
    } else if (i == r) {
        ratio = 1.0; // y_(r+1) := y_(r)
    } else {
        const double denom = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(i - 2)];
        if (!(denom > 0.0)) {
            throw tie_error("tied smoothed values in empirical CDF denominator");
        }
        ratio = (y[static_cast<std::size_t>(i - 1)] - y[static_cast<std::size_t>(i - 2)]) / denom;
    }
    const double c = static_cast<double>(r - 1) / (static_cast<double>(r) * (n + 1));
    return c * (i + 1.0 / (r - 1) + ratio);
}

std::vector<double> fhat_all(const smoothed_sample& sm) {
    std::vector<double> out(static_cast<std::size_t>(sm.source.r));
    for (int i = 1; i <= sm.source.r; ++i) {
        out[static_cast<std::size_t>(i - 1)] = fhat(sm, i);
    }
    return out;
}

} // namespace centropy
