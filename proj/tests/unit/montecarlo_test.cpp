#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "centropy/montecarlo.hpp"

using namespace centropy;

TEST_CASE("empirical quantile uses the ceil(pN) order statistic") {
    std::vector<double> v(10);
    std::iota(v.begin(), v.end(), 1.0);
    CHECK(empirical_quantile(v, 0.9) == 9.0);
    CHECK(empirical_quantile(v, 0.95) == 10.0);
    CHECK(empirical_quantile(std::vector<double>{5.0}, 0.3) == 5.0);
    CHECK_THROWS_AS(empirical_quantile({}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(empirical_quantile(v, 0.0), std::invalid_argument);
}

TEST_CASE("quantile index survives inexact p*N products") {
    // 0.9 * 10000 evaluates above 9000 in floating point; the index must
    // still be 9000 so that exactly 1000 values lie above the result.
    std::vector<double> v(10000);
    std::iota(v.begin(), v.end(), 1.0);
    std::reverse(v.begin(), v.end());
    CHECK(empirical_quantile(v, 0.9) == 9000.0);
    CHECK(empirical_quantile(v, 0.975) == 9750.0);
}

TEST_CASE("simulation is invariant to the worker count") {
    const statistic_request request{statistic_kind::t1, 3, 3};
    const auto dist = distribution_spec::exponential(1.0);
    const auto serial = simulate_statistic(request, 10, 5, dist, 500, 99, 1);
    const auto threaded = simulate_statistic(request, 10, 5, dist, 500, 99, 3);
    CHECK(serial == threaded); // bitwise

    const auto other_seed = simulate_statistic(request, 10, 5, dist, 500, 100, 1);
    CHECK(serial != other_seed);
}

TEST_CASE("critical values reproduce the published cells") {
    simulation_config config;
    config.statistic = statistic_kind::t1;
    config.n = 10;
    config.r = 5;
    config.reps = 10000;
    config.base_seed = 7000;
    config.workers = 0;
    const auto t1_table = estimate_critical_values(config);
    REQUIRE(t1_table.rows.size() == 3);
    CHECK(t1_table.rows[0].critical_value == doctest::Approx(0.5962).epsilon(0.035));
    CHECK(t1_table.provenance == table_provenance::generated);
    CHECK(t1_table.seed == 7000);
    CHECK(t1_table.rows[0].m == 3);

    config.statistic = statistic_kind::t2;
    config.n = 30;
    config.r = 15;
    const auto t2_table = estimate_critical_values(config);
    CHECK(t2_table.rows[0].critical_value == doctest::Approx(0.0865).epsilon(0.25));
    // absolute comparison, the published tolerance
    CHECK(std::abs(t2_table.rows[0].critical_value - 0.0865) < 0.02);
}

TEST_CASE("critical values require a null configuration") {
    simulation_config config;
    config.statistic = statistic_kind::t1;
    config.n = 10;
    config.r = 5;
    config.alternative = distribution_spec::weibull(0.5);
    CHECK_THROWS_AS(estimate_critical_values(config), std::invalid_argument);
}

TEST_CASE("config validation") {
    simulation_config config;
    config.n = 10;
    config.r = 12;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.r = 5;
    config.reps = 50;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.reps = 1000;
    config.alpha_levels = {1.2};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("window selection finds the published minima") {
    const std::vector<int> candidates{2, 3, 4, 5, 6, 7};
    CHECK(select_window(statistic_kind::t1, 30, 15, 0.1, candidates, 10000, 2024, 0) == 3);
    CHECK(select_window(statistic_kind::t1, 30, 25, 0.1, candidates, 10000, 2024, 0) == 4);
    const std::vector<int> one{5};
    CHECK(select_window(statistic_kind::t1, 30, 20, 0.1, one, 200, 1, 0) == 5);
    CHECK_THROWS_AS(select_window(statistic_kind::t1, 30, 20, 0.1, {}, 200, 1, 0),
                    std::invalid_argument);

    // candidates beyond the smoothed estimator's bound are skipped, and a
    // set with none left is an error
    const std::vector<int> mixed{9, 10, 99};
    const int chosen = select_window(statistic_kind::t2, 30, 15, 0.1, mixed, 400, 2, 0);
    CHECK((chosen == 9 || chosen == 10));
    const std::vector<int> hopeless{99};
    CHECK_THROWS_AS(select_window(statistic_kind::t2, 30, 15, 0.1, hopeless, 400, 2, 0),
                    std::invalid_argument);
}

TEST_CASE("size equals level by construction on shared seeds") {
    // critical value and power evaluated on the same replicates: the
    // rejection rate is exactly floor(alpha * reps) / reps
    simulation_config config;
    config.statistic = statistic_kind::t1;
    config.n = 20;
    config.r = 10;
    config.reps = 1000;
    config.base_seed = 31415;
    config.alpha_levels = {0.1};
    const auto table = estimate_critical_values(config);
    const critical_region region{table.rows[0].critical_value, std::nullopt};

    config.alternative = distribution_spec::exponential(1.0);
    const auto result = estimate_power(config, region);
    CHECK(result.power == doctest::Approx(0.1));
}

TEST_CASE("size stays near the level on fresh seeds") {
    simulation_config config;
    config.statistic = statistic_kind::t1;
    config.n = 30;
    config.r = 20;
    config.reps = 10000;
    config.base_seed = 900;
    config.workers = 0;
    config.alternative = distribution_spec::exponential(1.0);
    const critical_region region{embedded_critical_value(statistic_kind::t1, 30, 20, 0.1),
                                 std::nullopt};
    const auto result = estimate_power(config, region);
    CHECK(std::abs(result.power - 0.1) < 0.01);
    CHECK(result.std_error == doctest::Approx(std::sqrt(result.power * (1 - result.power) / 10000)));
}

TEST_CASE("paired comparison separates the KL statistics on a decreasing-hazard alternative") {
    const int n = 30, r = 20;
    const int m1 = window_for(statistic_kind::t1, r);
    const int mt = window_for(statistic_kind::park_t, r);

    simulation_config null_config;
    null_config.n = n;
    null_config.r = r;
    null_config.reps = 10000;
    null_config.base_seed = 5150;
    null_config.alpha_levels = {0.1};
    null_config.workers = 0;

    null_config.statistic = statistic_kind::t1;
    const critical_region region_t1{
        estimate_critical_values(null_config).rows[0].critical_value, std::nullopt};
    null_config.statistic = statistic_kind::park_t;
    const critical_region region_t{
        estimate_critical_values(null_config).rows[0].critical_value, std::nullopt};

    const auto comparison = compare_power(
        {statistic_kind::t1, m1, 3}, region_t1, {statistic_kind::park_t, mt, 3}, region_t,
        n, r, find_alternative("A3")->spec, 5000, 6060, 0);
    CHECK(comparison.diff > 2.0 * comparison.paired_se);
    CHECK(comparison.first.power > comparison.second.power);
    CHECK(comparison.first.power <= 1.0);
}

TEST_CASE("bias/RMSE study shape and internal consistency") {
    const std::vector<int> r_values{15, 16};
    const auto rows = bias_rmse_study(30, r_values, 600, 123, 2);
    REQUIRE(rows.size() == 6); // 2 cells x 3 estimators
    for (const auto& row : rows) {
        CHECK(row.rmse >= std::abs(row.bias)); // rmse^2 = bias^2 + variance
        CHECK(row.n == 30);
    }
    CHECK(rows[0].estimator == estimator_kind::hbar1);
    CHECK(rows[1].estimator == estimator_kind::hbar2);
    CHECK(rows[2].estimator == estimator_kind::park_hbar);

    const auto again = bias_rmse_study(30, r_values, 600, 123, 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].bias == again[i].bias); // worker-count invariant
        CHECK(rows[i].rmse == again[i].rmse);
    }
}

TEST_CASE("bias/RMSE study matches the published n=30 r=15 cell") {
    const std::vector<int> r_values{15};
    const auto rows = bias_rmse_study(30, r_values, 10000, 77, 0);
    REQUIRE(rows.size() == 3);
    const auto& h2 = rows[1];
    CHECK(h2.estimator == estimator_kind::hbar2);
    CHECK(std::abs(h2.bias - (-0.0100)) < 0.01);
    CHECK(std::abs(h2.rmse - 0.1426) < 0.01);
}

TEST_CASE("empirical density integrates to one") {
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{40, 25}, {50, 35}}) {
        for (const auto kind : {statistic_kind::t1, statistic_kind::t2, statistic_kind::park_t}) {
            const auto rows = empirical_density(kind, n, r, 2000, 404, 40, 2);
            REQUIRE(rows.size() == 40);
            const double width = rows[1].midpoint - rows[0].midpoint;
            double mass = 0.0;
            for (const auto& row : rows) {
                mass += row.density * width;
            }
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
    const auto first = empirical_density(statistic_kind::t1, 40, 25, 1000, 11, 30, 1);
    const auto second = empirical_density(statistic_kind::t1, 40, 25, 1000, 11, 30, 3);
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].midpoint == second[i].midpoint);
        CHECK(first[i].density == second[i].density);
    }
}
