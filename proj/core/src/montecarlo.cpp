#include "centropy/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "centropy/errors.hpp"

namespace centropy {

namespace {

int resolve_workers(int workers) {
    if (workers > 0) {
        return workers;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count). Work is split into contiguous blocks, one
// per worker; every unit writes only to its own slot, so the result does
// not depend on the partition. The first exception wins and is rethrown
// after all workers join.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    workers = std::min(resolve_workers(workers), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const int begin = static_cast<int>(static_cast<long long>(count) * w / workers);
        const int end = static_cast<int>(static_cast<long long>(count) * (w + 1) / workers);
        pool.emplace_back([&, begin, end] {
            try {
                for (int i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

const distribution_spec& unit_exponential() {
    static const distribution_spec null_spec = distribution_spec::exponential(1.0);
    return null_spec;
}

} // namespace

int simulation_config::resolved_m() const {
    if (m) {
        return *m;
    }
    return window_for(statistic, r);
}

const distribution_spec& simulation_config::distribution() const {
    return alternative ? *alternative : unit_exponential();
}

void simulation_config::validate() const {
    if (n < 1 || r < 1 || r > n) {
        throw std::invalid_argument("need 1 <= r <= n");
    }
    if (reps < 100) {
        throw std::invalid_argument("need reps >= 100");
    }
    for (double a : alpha_levels) {
        if (!(a > 0.0 && a < 1.0)) {
            throw std::invalid_argument("alpha levels must be in (0, 1)");
        }
    }
    if (alternative) {
        alternative->validate();
    }
}

std::vector<std::vector<double>> simulate_statistics(std::span<const statistic_request> requests,
                                                     int n, int r, const distribution_spec& dist,
                                                     int reps, std::uint64_t base_seed,
                                                     int workers) {
    if (requests.empty()) {
        throw std::invalid_argument("no statistics requested");
    }
    dist.validate();
    std::vector<std::vector<double>> values(requests.size(),
                                            std::vector<double>(static_cast<std::size_t>(reps)));
    parallel_for(reps, workers, [&](int i) {
        auto stream = random_stream::for_replicate(base_seed, static_cast<std::uint64_t>(i));
        const censored_sample cs = type2_censor(sample(dist, n, stream), r);
        for (std::size_t s = 0; s < requests.size(); ++s) {
            values[s][static_cast<std::size_t>(i)] =
                evaluate_statistic(requests[s].kind, cs, requests[s].m, requests[s].k);
        }
    });
    return values;
}

std::vector<double> simulate_statistic(const statistic_request& request, int n, int r,
                                       const distribution_spec& dist, int reps,
                                       std::uint64_t base_seed, int workers) {
    auto values = simulate_statistics(std::span(&request, 1), n, r, dist, reps, base_seed, workers);
    return std::move(values.front());
}

double empirical_quantile(std::vector<double> values, double p) {
    if (values.empty()) {
        throw std::invalid_argument("empirical quantile of an empty sample");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("quantile level must be in (0, 1)");
    }
    const auto count = static_cast<double>(values.size());
    // ceil(p*N) computed with a nudge so that exact multiples (0.9 * 10000)
    // do not round up through floating-point excess.
    int k = static_cast<int>(std::ceil(p * count - 1e-9));
    k = std::clamp(k, 1, static_cast<int>(values.size()));
    std::nth_element(values.begin(), values.begin() + (k - 1), values.end());
    return values[static_cast<std::size_t>(k - 1)];
}

critical_value_table estimate_critical_values(const simulation_config& config) {
    config.validate();
    if (config.alternative) {
        throw std::invalid_argument("critical values are defined by the null distribution");
    }
    const int m = config.resolved_m();
    const statistic_request request{config.statistic, m, config.k};
    const std::vector<double> values =
        simulate_statistic(request, config.n, config.r, config.distribution(), config.reps,
                           config.base_seed, config.workers);

    critical_value_table table;
    table.provenance = table_provenance::generated;
    table.seed = config.base_seed;
    table.reps = config.reps;
    for (double alpha : config.alpha_levels) {
        table.rows.push_back({config.statistic, config.n, config.r, m, alpha,
                              empirical_quantile(values, 1.0 - alpha)});
    }
    return table;
}

int select_window(statistic_kind st, int n, int r, double alpha,
                  std::span<const int> candidates, int reps,
                  std::uint64_t base_seed, int workers) {
    if (candidates.empty()) {
        throw std::invalid_argument("no window candidates");
    }
    std::optional<int> best_m;
    double best_cv = 0.0;
    for (int m : candidates) {
        simulation_config config;
        config.statistic = st;
        config.n = n;
        config.r = r;
        config.m = m;
        config.alpha_levels = {alpha};
        config.reps = reps;
        config.base_seed = base_seed;
        config.workers = workers;
        double cv;
        try {
            cv = estimate_critical_values(config).rows.front().critical_value;
        } catch (const std::invalid_argument&) {
            continue; // candidate outside the estimator's window bound
        }
        if (!best_m || cv < best_cv || (cv == best_cv && m < *best_m)) {
            best_m = m;
            best_cv = cv;
        }
    }
    if (!best_m) {
        throw std::invalid_argument("all window candidates invalid");
    }
    return *best_m;
}

power_result estimate_power(const simulation_config& config, const critical_region& region) {
    config.validate();
    const statistic_request request{config.statistic, config.resolved_m(), config.k};
    const std::vector<double> values =
        simulate_statistic(request, config.n, config.r, config.distribution(), config.reps,
                           config.base_seed, config.workers);
    int rejected = 0;
    for (double v : values) {
        rejected += region.rejects(v) ? 1 : 0;
    }
    const double p = static_cast<double>(rejected) / config.reps;
    return {p, std::sqrt(p * (1.0 - p) / config.reps), config.reps, config.base_seed};
}

power_comparison compare_power(const statistic_request& first, const critical_region& first_region,
                               const statistic_request& second, const critical_region& second_region,
                               int n, int r, const distribution_spec& alternative,
                               int reps, std::uint64_t base_seed, int workers) {
    const statistic_request requests[2] = {first, second};
    const auto values =
        simulate_statistics(std::span(requests, 2), n, r, alternative, reps, base_seed, workers);

    int reject_first = 0;
    int reject_second = 0;
    long long diff_sum = 0;  // sum of per-replicate (reject1 - reject2)
    long long diff_sq = 0;   // sum of squares of the same
    for (int i = 0; i < reps; ++i) {
        const int a = first_region.rejects(values[0][static_cast<std::size_t>(i)]) ? 1 : 0;
        const int b = second_region.rejects(values[1][static_cast<std::size_t>(i)]) ? 1 : 0;
        reject_first += a;
        reject_second += b;
        diff_sum += a - b;
        diff_sq += (a - b) * (a - b);
    }
    const double pa = static_cast<double>(reject_first) / reps;
    const double pb = static_cast<double>(reject_second) / reps;
    const double mean_diff = static_cast<double>(diff_sum) / reps;
    const double var_diff = static_cast<double>(diff_sq) / reps - mean_diff * mean_diff;

    power_comparison out;
    out.first = {pa, std::sqrt(pa * (1.0 - pa) / reps), reps, base_seed};
    out.second = {pb, std::sqrt(pb * (1.0 - pb) / reps), reps, base_seed};
    out.diff = pa - pb;
    out.paired_se = std::sqrt(std::max(var_diff, 0.0) / reps);
    return out;
}

std::vector<bias_rmse_row> bias_rmse_study(int n, std::span<const int> r_values,
                                           int reps, std::uint64_t base_seed, int workers) {
    if (r_values.empty()) {
        throw std::invalid_argument("no censoring depths given");
    }
    if (reps < 100) {
        throw std::invalid_argument("need reps >= 100");
    }
    std::vector<bias_rmse_row> rows;
    rows.reserve(r_values.size() * 3);

    for (std::size_t cell = 0; cell < r_values.size(); ++cell) {
        const int r = r_values[cell];
        if (r < 1 || r > n) {
            throw std::invalid_argument("need 1 <= r <= n");
        }
        const int m_spacing = window_for(statistic_kind::t1, r); // hbar1 and park_hbar
        const int m_smooth = window_for(statistic_kind::t2, r);  // hbar2
        const double reference = exact_reference_hbar(n, r);

        // One flat replicate index space across cells keeps streams disjoint.
        const std::uint64_t cell_offset = static_cast<std::uint64_t>(cell) *
                                          static_cast<std::uint64_t>(reps);
        std::vector<double> e1(static_cast<std::size_t>(reps));
        std::vector<double> e2(static_cast<std::size_t>(reps));
        std::vector<double> eb(static_cast<std::size_t>(reps));
        parallel_for(reps, workers, [&](int i) {
            auto stream = random_stream::for_replicate(
                base_seed, cell_offset + static_cast<std::uint64_t>(i));
            const censored_sample cs = type2_censor(sample(unit_exponential(), n, stream), r);
            e1[static_cast<std::size_t>(i)] = hbar1(cs, m_spacing).value;
            e2[static_cast<std::size_t>(i)] = hbar2(cs, m_smooth, 3).value;
            eb[static_cast<std::size_t>(i)] = park_hbar(cs, m_spacing).value;
        });

        const auto summarize = [&](const std::vector<double>& values, estimator_kind kind) {
            double bias_acc = 0.0;
            double sq_acc = 0.0;
            for (double v : values) {
                const double err = v - reference;
                bias_acc += err;
                sq_acc += err * err;
            }
            rows.push_back({n, r, kind, bias_acc / reps, std::sqrt(sq_acc / reps)});
        };
        summarize(e1, estimator_kind::hbar1);
        summarize(e2, estimator_kind::hbar2);
        summarize(eb, estimator_kind::park_hbar);
    }
    return rows;
}

std::vector<histogram_row> empirical_density(statistic_kind st, int n, int r,
                                             int reps, std::uint64_t base_seed,
                                             int bins, int workers) {
    if (bins < 1) {
        throw std::invalid_argument("need at least one bin");
    }
    int m = 0;
    if (is_t_family(st)) {
        m = window_for(st, r);
    }
    const statistic_request request{st, m, 3};
    const std::vector<double> values =
        simulate_statistic(request, n, r, unit_exponential(), reps, base_seed, workers);

    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double width = (hi - lo) / bins;
    if (!(width > 0.0)) {
        throw std::invalid_argument("degenerate statistic range");
    }
    std::vector<int> counts(static_cast<std::size_t>(bins), 0);
    for (double v : values) {
        int b = static_cast<int>((v - lo) / width);
        b = std::clamp(b, 0, bins - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    std::vector<histogram_row> rows(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
        rows[static_cast<std::size_t>(b)] = {lo + (b + 0.5) * width,
                                             counts[static_cast<std::size_t>(b)] /
                                                 (static_cast<double>(reps) * width)};
    }
    return rows;
}

} // namespace centropy
