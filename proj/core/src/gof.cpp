#include "centropy/gof.hpp"

#include <cmath>
#include <stdexcept>

namespace centropy {

std::string_view to_string(statistic_kind kind) {
    switch (kind) {
    case statistic_kind::park_t: return "t";
    case statistic_kind::t1: return "t1";
    case statistic_kind::t2: return "t2";
    case statistic_kind::brain_shapiro_z: return "z";
    case statistic_kind::brain_shapiro_big_z: return "bigz";
    }
    return "unknown";
}

std::optional<statistic_kind> statistic_from_string(std::string_view name) {
    if (name == "t") return statistic_kind::park_t;
    if (name == "t1") return statistic_kind::t1;
    if (name == "t2") return statistic_kind::t2;
    if (name == "z") return statistic_kind::brain_shapiro_z;
    if (name == "bigz" || name == "Z") return statistic_kind::brain_shapiro_big_z;
    return std::nullopt;
}

bool is_t_family(statistic_kind kind) noexcept {
    return kind == statistic_kind::park_t || kind == statistic_kind::t1 ||
           kind == statistic_kind::t2;
}

double mle_theta(std::span<const double> z, int n) {
    const int r = static_cast<int>(z.size());
    if (r < 1) {
        throw std::invalid_argument("mle_theta needs at least one value");
    }
    if (n < r) {
        throw std::invalid_argument("original sample size n must be >= r");
    }
    if (!(z.front() > 0.0)) {
        throw std::domain_error("exponential MLE requires positive data");
    }
    double sum = 0.0;
    for (double v : z) {
        sum += v;
    }
    return (sum + static_cast<double>(n - r) * z.back()) / r;
}

namespace {

// Shared tail: T = -hbar + (r/n)(ln theta_hat + 1). z holds the values the
// likelihood term is evaluated on (raw or smoothed order statistics).
double kl_statistic(double hbar_value, std::span<const double> z, int n, int r) {
    const double theta = mle_theta(z, n);
    return -hbar_value + (static_cast<double>(r) / n) * (std::log(theta) + 1.0);
}

} // namespace

double statistic_t(const censored_sample& s, int m) {
    return kl_statistic(park_hbar(s, m).value, s.values, s.n, s.r);
}

double statistic_t1(const censored_sample& s, int m) {
    return kl_statistic(hbar1(s, m).value, s.values, s.n, s.r);
}

double statistic_t2(const censored_sample& s, int m, int k) {
    const smoothed_sample sm = moving_average_smooth(s, k);
    return kl_statistic(hbar2(sm, m).value, sm.y, s.n, s.r);
}

std::vector<double> normalized_spacings(const censored_sample& s) {
    std::vector<double> y(static_cast<std::size_t>(s.r));
    y[0] = static_cast<double>(s.n) * s.values[0];
    for (int i = 2; i <= s.r; ++i) {
        y[static_cast<std::size_t>(i - 1)] =
            static_cast<double>(s.n - i + 1) *
            (s.values[static_cast<std::size_t>(i - 1)] - s.values[static_cast<std::size_t>(i - 2)]);
    }
    return y;
}

brain_shapiro_result brain_shapiro(const censored_sample& s) {
    const int r = s.r;
    if (r < 4) {
        throw std::invalid_argument("Brain-Shapiro statistics need r >= 4");
    }
    const std::vector<double> y = normalized_spacings(s);

    // Both statistics are ratios of forms linear in the spacings Y_2..Y_r,
    // hence exactly scale invariant.
    double sum_y = 0.0;
    double lin = 0.0;  // sum (i - r/2) Y_{i+1}
    double quad = 0.0; // sum (i - r/2)^2 Y_{i+1}
    for (int i = 1; i <= r - 1; ++i) {
        const double w = i - 0.5 * r;
        const double v = y[static_cast<std::size_t>(i)];
        sum_y += v;
        lin += w * v;
        quad += w * w * v;
    }
    const double z = std::sqrt(12.0 / (r - 2)) * lin / sum_y;
    const double big_z =
        z * z + std::sqrt(5.0 / (4.0 * (r + 1.0) * (r - 2.0) * (r - 3.0))) *
                    (12.0 * quad - static_cast<double>(r) * (r - 2) * sum_y) / sum_y;
    return {z, big_z};
}

double evaluate_statistic(statistic_kind kind, const censored_sample& s, int m, int k) {
    switch (kind) {
    case statistic_kind::park_t: return statistic_t(s, m);
    case statistic_kind::t1: return statistic_t1(s, m);
    case statistic_kind::t2: return statistic_t2(s, m, k);
    case statistic_kind::brain_shapiro_z: return brain_shapiro(s).z;
    case statistic_kind::brain_shapiro_big_z: return brain_shapiro(s).big_z;
    }
    throw std::invalid_argument("unknown statistic kind");
}

test_outcome decide(statistic_kind kind, double statistic, const critical_region& region,
                    double alpha, std::optional<int> m, std::optional<double> theta_hat) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must be in (0, 1)");
    }
    test_outcome outcome;
    outcome.kind = kind;
    outcome.statistic = statistic;
    outcome.m = m;
    outcome.region = region;
    outcome.alpha = alpha;
    outcome.reject = region.rejects(statistic);
    outcome.theta_hat = theta_hat;
    return outcome;
}

} // namespace centropy
