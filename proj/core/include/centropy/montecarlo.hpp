#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "centropy/distributions.hpp"
#include "centropy/gof.hpp"
#include "centropy/tables.hpp"

namespace centropy {

// One Monte Carlo study cell. Replicate i draws its stream from
// (base_seed, i), so a study is reproducible bit-for-bit regardless of the
// worker count.
struct simulation_config {
    statistic_kind statistic = statistic_kind::t1;
    int n = 0;
    int r = 0;
    std::optional<int> m;                         // default: window_for(statistic, r)
    int k = 3;                                    // moving-average order (t2)
    std::vector<double> alpha_levels{0.1, 0.05, 0.025};
    int reps = 10000;
    std::uint64_t base_seed = 0;
    std::optional<distribution_spec> alternative; // nullopt = unit exponential null
    int workers = 1;                              // 0 = all hardware threads

    int resolved_m() const;
    const distribution_spec& distribution() const;

    // Throws std::invalid_argument: reps >= 100, 1 <= r <= n, alphas in (0,1).
    void validate() const;
};

// How many statistic values to evaluate together on each replicate sample.
struct statistic_request {
    statistic_kind kind = statistic_kind::t1;
    int m = 0;
    int k = 3;
};

// values[s][i] = statistic s evaluated on replicate i. All requested
// statistics see the same censored sample per replicate, which is what a
// paired power comparison needs. A replicate failure (tie or degenerate
// spacing) aborts the study.
std::vector<std::vector<double>> simulate_statistics(std::span<const statistic_request> requests,
                                                     int n, int r, const distribution_spec& dist,
                                                     int reps, std::uint64_t base_seed,
                                                     int workers = 1);

std::vector<double> simulate_statistic(const statistic_request& request, int n, int r,
                                       const distribution_spec& dist, int reps,
                                       std::uint64_t base_seed, int workers = 1);

// k-th smallest with k = ceil(p * N): exactly floor((1-p) * N) values lie
// above the result. Throws std::invalid_argument on empty input.
double empirical_quantile(std::vector<double> values, double p);

// Null critical values: for each alpha level, the empirical (1 - alpha)
// quantile of the statistic over reps censored exponential samples.
// Requires a null config (no alternative).
critical_value_table estimate_critical_values(const simulation_config& config);

// The candidate m with the smallest Monte Carlo critical value at the given
// alpha; ties break toward smaller m.
int select_window(statistic_kind st, int n, int r, double alpha,
                  std::span<const int> candidates, int reps,
                  std::uint64_t base_seed, int workers = 1);

struct power_result {
    double power = 0.0;
    double std_error = 0.0; // binomial sqrt(p(1-p)/reps)
    int reps = 0;
    std::uint64_t base_seed = 0;
};

// Rejection rate of the configured statistic against the configured
// alternative at the supplied rejection region.
power_result estimate_power(const simulation_config& config, const critical_region& region);

struct power_comparison {
    power_result first;
    power_result second;
    double diff = 0.0;      // first.power - second.power
    double paired_se = 0.0; // std error of diff on the shared samples
};

// Paired comparison: both statistics are evaluated on the same replicate
// samples, removing between-run noise from the difference.
power_comparison compare_power(const statistic_request& first, const critical_region& first_region,
                               const statistic_request& second, const critical_region& second_region,
                               int n, int r, const distribution_spec& alternative,
                               int reps, std::uint64_t base_seed, int workers = 1);

struct bias_rmse_row {
    int n = 0;
    int r = 0;
    estimator_kind estimator = estimator_kind::hbar1;
    double bias = 0.0;
    double rmse = 0.0;
};

// Bias and RMSE of hbar1, hbar2 and park_hbar against the analytic
// reference r/n over censored unit-exponential replicates. Window sizes
// come from the published rules (t1's rule for hbar1/park_hbar, t2's for
// hbar2).
std::vector<bias_rmse_row> bias_rmse_study(int n, std::span<const int> r_values,
                                           int reps, std::uint64_t base_seed, int workers = 1);

struct histogram_row {
    double midpoint = 0.0;
    double density = 0.0;
};

// Normalized histogram of the null distribution of a statistic; the
// densities integrate to 1 over the covered range.
std::vector<histogram_row> empirical_density(statistic_kind st, int n, int r,
                                             int reps, std::uint64_t base_seed,
                                             int bins = 60, int workers = 1);

} // namespace centropy
