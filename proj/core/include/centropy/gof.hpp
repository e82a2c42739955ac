#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "centropy/censoring.hpp"
#include "centropy/estimators.hpp"

namespace centropy {

// Exponentiality test statistics for Type-II censored data. park_t, t1 and
// t2 estimate the Kullback-Leibler information against the fitted
// exponential null and reject for large values; the Brain-Shapiro pair are
// the classical regression-on-spacings baselines.
enum class statistic_kind {
    park_t,
    t1,
    t2,
    brain_shapiro_z,
    brain_shapiro_big_z,
};

std::string_view to_string(statistic_kind kind);

// Parses the CLI spellings "t", "t1", "t2", "z", "bigz".
std::optional<statistic_kind> statistic_from_string(std::string_view name);

// true for the KL-based statistics (the ones that take a window size).
bool is_t_family(statistic_kind kind) noexcept;

// Maximum likelihood estimate of the exponential scale under Type-II
// censoring: (sum z_(i) + (n-r) z_(r)) / r. Values must be ascending and
// positive.
double mle_theta(std::span<const double> z, int n);

// T = -Hbar + (r/n) { ln theta_hat + 1 } on the raw order statistics.
double statistic_t(const censored_sample& s, int m);

// Same form built on hbar1; raw order statistics enter the MLE term.
double statistic_t1(const censored_sample& s, int m);

// Same form built on hbar2; the smoothed values enter both the entropy
// term and the MLE term.
double statistic_t2(const censored_sample& s, int m, int k = 3);

// Normalized spacings: Y_1 = n x_(1), Y_i = (n-i+1)(x_(i) - x_(i-1)).
std::vector<double> normalized_spacings(const censored_sample& s);

struct brain_shapiro_result {
    double z = 0.0;
    double big_z = 0.0;
};

// Brain-Shapiro z and Z computed from the normalized spacings. Requires
// r >= 4. z is approximately standard normal under the null (two-sided
// test); Z augments z^2 with a quadratic contrast (upper-tailed test).
brain_shapiro_result brain_shapiro(const censored_sample& s);

// Dispatch by kind; m and k are ignored for the Brain-Shapiro statistics.
double evaluate_statistic(statistic_kind kind, const censored_sample& s, int m, int k = 3);

// Rejection region. T-family and Z reject above `upper`; the two-sided z
// test also rejects below `lower`.
struct critical_region {
    double upper = 0.0;
    std::optional<double> lower;

    bool rejects(double statistic) const {
        return statistic > upper || (lower.has_value() && statistic < *lower);
    }
};

struct test_outcome {
    statistic_kind kind = statistic_kind::t1;
    double statistic = 0.0;
    std::optional<int> m;
    critical_region region;
    double alpha = 0.0;
    bool reject = false;
    std::optional<double> theta_hat;
};

test_outcome decide(statistic_kind kind, double statistic, const critical_region& region,
                    double alpha, std::optional<int> m = std::nullopt,
                    std::optional<double> theta_hat = std::nullopt);

} // namespace centropy
