#include "centropy/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "centropy/errors.hpp"

namespace centropy {

std::string_view to_string(estimator_kind kind) {
    switch (kind) {
    case estimator_kind::vasicek: return "vasicek";
    case estimator_kind::park_hbar: return "hbar";
    case estimator_kind::hbar1: return "hbar1";
    case estimator_kind::hbar2: return "hbar2";
    }
    return "unknown";
}

namespace {

inline int clamp_index(int i, int lo, int hi) {
    return std::min(std::max(i, lo), hi);
}

// (1 - r/n) ln(1 - r/n) with the 0 ln 0 = 0 convention at r = n.
double censoring_correction(int n, int r) {
    if (r == n) {
        return 0.0;
    }
    const double tail = 1.0 - static_cast<double>(r) / n;
    return -tail * std::log(tail);
}

} // namespace

entropy_estimate vasicek(std::span<const double> sample, int m) {
    const int n = static_cast<int>(sample.size());
    if (n < 3) {
        throw std::invalid_argument("vasicek estimator needs n >= 3");
    }
    if (m < 1 || 2 * m >= n) {
        throw std::invalid_argument("window size must satisfy 1 <= m < n/2");
    }
    double acc = 0.0;
    const double width = 2.0 * m / n;
    for (int i = 1; i <= n; ++i) {
        const double hi = sample[static_cast<std::size_t>(clamp_index(i + m, 1, n) - 1)];
        const double lo = sample[static_cast<std::size_t>(clamp_index(i - m, 1, n) - 1)];
        const double spacing = hi - lo;
        if (!(spacing > 0.0)) {
            throw tie_error("tied order statistics in spacing");
        }
        acc += std::log(spacing / width);
    }
    return {estimator_kind::vasicek, acc / n, m, n, n, std::nullopt};
}

entropy_estimate park_hbar(const censored_sample& s, int m) {
    const int n = s.n;
    const int r = s.r;
    if (r < 3) {
        throw std::invalid_argument("censored spacing estimator needs r >= 3");
    }
    if (m < 1) {
        throw std::invalid_argument("window size must be positive");
    }
    double acc = 0.0;
    const double width = 2.0 * m / n;
    for (int i = 1; i <= r; ++i) {
        const double hi = s.values[static_cast<std::size_t>(clamp_index(i + m, 1, r) - 1)];
        const double lo = s.values[static_cast<std::size_t>(clamp_index(i - m, 1, r) - 1)];
        const double spacing = hi - lo;
        if (!(spacing > 0.0)) {
            throw tie_error("tied order statistics in spacing");
        }
        acc += std::log(spacing / width);
    }
    return {estimator_kind::park_hbar, acc / n + censoring_correction(n, r), m, n, r, std::nullopt};
}

double harmonic_mean(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("harmonic mean of an empty set");
    }
    double recip = 0.0;
    for (double v : values) {
        if (!(v > 0.0)) {
            throw std::domain_error("harmonic mean requires positive values");
        }
        recip += 1.0 / v;
    }
    return static_cast<double>(values.size()) / recip;
}

entropy_estimate hbar1(const censored_sample& s, int m) {
    const int n = s.n;
    const int r = s.r;
    if (r < 3) {
        throw std::invalid_argument("censored spacing estimator needs r >= 3");
    }
    if (m < 1) {
        throw std::invalid_argument("window size must be positive");
    }
    const auto& x = s.values;

    // Prefix sums of reciprocals give each harmonic-mean window in O(1).
    std::vector<double> recip(static_cast<std::size_t>(r) + 1, 0.0);
    for (int j = 1; j <= r; ++j) {
        const double v = x[static_cast<std::size_t>(j - 1)];
        if (!(v > 0.0)) {
            throw std::domain_error("harmonic-mean estimator requires positive data");
        }
        recip[static_cast<std::size_t>(j)] = recip[static_cast<std::size_t>(j - 1)] + 1.0 / v;
    }
    const auto window_hm = [&](int lo, int hi) {
        const double sum = recip[static_cast<std::size_t>(hi)] - recip[static_cast<std::size_t>(lo - 1)];
        return static_cast<double>(hi - lo + 1) / sum;
    };

    double acc = 0.0;
    const double width = static_cast<double>(m) / n;
    for (int i = 1; i <= r; ++i) {
        // Upper window x_(i)..x_(i-1+m), lower window x_(i-1-m)..x_(i);
        // both index ranges are intersected with [1, r].
        const double hm_up = window_hm(i, std::min(i - 1 + m, r));
        const double hm_dn = window_hm(std::max(i - 1 - m, 1), i);
        const double spacing = hm_up - hm_dn;
        if (!(spacing > 0.0)) {
            throw degenerate_spacing_error("harmonic-mean windows collapsed at the sample boundary");
        }
        acc += std::log(spacing / width);
    }
    return {estimator_kind::hbar1, acc / n + censoring_correction(n, r), m, n, r, std::nullopt};
}

entropy_estimate hbar2(const smoothed_sample& sm, int m) {
    const int n = sm.source.n;
    const int r = sm.source.r;
    const int k = sm.k;
    if (r < 3) {
        throw std::invalid_argument("censored spacing estimator needs r >= 3");
    }
    if (m < 1 || 2 * m >= r + 2 * k) {
        throw std::invalid_argument("window size must satisfy 1 <= m < r/2 + k");
    }
    const auto& y = sm.y;
    const std::vector<double> f = fhat_all(sm);

    double acc = 0.0;
    for (int i = 1; i <= r; ++i) {
        const int hi = clamp_index(i + m, 1, r);
        const int lo = clamp_index(i - m, 1, r);
        const double dy = y[static_cast<std::size_t>(hi - 1)] - y[static_cast<std::size_t>(lo - 1)];
        const double df = f[static_cast<std::size_t>(hi - 1)] - f[static_cast<std::size_t>(lo - 1)];
        if (!(dy > 0.0) || !(df > 0.0)) {
            throw tie_error("tied smoothed values in spacing");
        }
        acc += std::log(dy / df);
    }
    return {estimator_kind::hbar2, acc / n + censoring_correction(n, r), m, n, r, k};
}

entropy_estimate hbar2(const censored_sample& s, int m, int k) {
    return hbar2(moving_average_smooth(s, k), m);
}

double exact_reference_hbar(int n, int r) {
    if (r < 1 || r > n) {
        throw std::invalid_argument("need 1 <= r <= n");
    }
    // For the unit exponential the defining integral
    //   int_0^q -ln(1-p) dp - (1-q) ln(1-q),  q = r/n,
    // telescopes to q exactly.
    return static_cast<double>(r) / n;
}

} // namespace centropy
