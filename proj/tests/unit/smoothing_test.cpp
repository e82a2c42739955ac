#include <doctest.h>

#include <stdexcept>

#include "centropy/censoring.hpp"
#include "centropy/distributions.hpp"
#include "centropy/errors.hpp"
#include "centropy/smoothing.hpp"

using namespace centropy;

TEST_CASE("order-3 smoothing of 1..5") {
    const auto cs = make_censored({1, 2, 3, 4, 5}, 5);
    const auto sm = moving_average_smooth(cs, 3);
    CHECK(sm.y == std::vector<double>{2.0, 3.0, 4.0, 4.5, 5.0});
    CHECK(sm.k == 3);
}

TEST_CASE("order-1 smoothing is the identity") {
    const auto cs = make_censored({0.3, 1.1, 2.7}, 6);
    const auto sm = moving_average_smooth(cs, 1);
    CHECK(sm.y == cs.values);
}

TEST_CASE("the last smoothed value equals the last order statistic") {
    random_stream stream(21);
    const auto cs = type2_censor(sample(distribution_spec::exponential(1.0), 30, stream), 25);
    for (int k = 1; k <= 25; ++k) {
        const auto sm = moving_average_smooth(cs, k);
        CHECK(sm.y.back() == cs.values.back());
    }
}

TEST_CASE("smoothed values are strictly ascending and windowed") {
    random_stream stream(22);
    const auto cs = type2_censor(sample(distribution_spec::exponential(1.0), 40, stream), 30);
    const auto sm = moving_average_smooth(cs, 5);
    for (std::size_t i = 1; i < sm.y.size(); ++i) {
        CHECK(sm.y[i] > sm.y[i - 1]);
    }
    // each y_i is a mean of x_(i)..x_(min(i+k-1, r)) and stays inside it
    for (int i = 1; i <= cs.r; ++i) {
        const int hi = std::min(i + 5 - 1, cs.r);
        CHECK(sm.y[static_cast<std::size_t>(i - 1)] >=
              cs.values[static_cast<std::size_t>(i - 1)]);
        CHECK(sm.y[static_cast<std::size_t>(i - 1)] <=
              cs.values[static_cast<std::size_t>(hi - 1)]);
    }
}

TEST_CASE("k outside [1, r] is rejected") {
    const auto cs = make_censored({1, 2, 3}, 5);
    CHECK_THROWS_AS(moving_average_smooth(cs, 4), std::invalid_argument);
    CHECK_THROWS_AS(moving_average_smooth(cs, 0), std::invalid_argument);
}

TEST_CASE("empirical CDF boundary values") {
    // r = 5, n = 8 with y = [2, 3, 4, 4.5, 5]
    const auto cs = make_censored({1, 2, 3, 4, 5}, 8);
    const auto sm = moving_average_smooth(cs, 3);
    CHECK(fhat(sm, 1) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(fhat(sm, 5) == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
    // interior values, hand-evaluated
    CHECK(fhat(sm, 2) == doctest::Approx(11.0 / 45.0).epsilon(1e-12));
    CHECK(fhat(sm, 3) == doctest::Approx(47.0 / 135.0).epsilon(1e-12));
    CHECK(fhat(sm, 4) == doctest::Approx(19.0 / 45.0).epsilon(1e-12));
}

TEST_CASE("first and last CDF values follow the support bounds") {
    // F(y_(1)) = 1/(n+1) and F(y_(r)) = r/(n+1) whatever the data
    random_stream stream(5);
    const auto cs = type2_censor(sample(distribution_spec::exponential(1.0), 10, stream), 5);
    const auto sm = moving_average_smooth(cs, 3);
    CHECK(fhat(sm, 1) == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
    CHECK(fhat(sm, 5) == doctest::Approx(5.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("empirical CDF is strictly increasing on random samples") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        random_stream stream(seed);
        const auto cs = type2_censor(sample(distribution_spec::exponential(1.0), 15, stream), 10);
        const auto sm = moving_average_smooth(cs, 3);
        const auto f = fhat_all(sm);
        for (std::size_t i = 1; i < f.size(); ++i) {
            CHECK(f[i] > f[i - 1]);
        }
        CHECK(f.front() > 0.0);
        CHECK(f.back() < 1.0);
    }
}

TEST_CASE("tied smoothed values raise tie_error") {
    smoothed_sample sm;
    sm.y = {1.0, 2.0, 2.0, 2.0, 3.0};
    sm.k = 1;
    sm.source = censored_sample{sm.y, 8, 5};
    CHECK_THROWS_AS(fhat(sm, 3), tie_error);
}

TEST_CASE("fhat index must be in [1, r]") {
    const auto cs = make_censored({1, 2, 3}, 5);
    const auto sm = moving_average_smooth(cs, 2);
    CHECK_THROWS_AS(fhat(sm, 0), std::invalid_argument);
    CHECK_THROWS_AS(fhat(sm, 4), std::invalid_argument);
}
