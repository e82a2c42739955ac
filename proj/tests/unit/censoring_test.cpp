#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "centropy/censoring.hpp"
#include "centropy/distributions.hpp"
#include "centropy/errors.hpp"

using namespace centropy;

TEST_CASE("keeps the r smallest in ascending order") {
    const auto cs = type2_censor({3.0, 1.0, 2.0, 5.0}, 2);
    CHECK(cs.values == std::vector<double>{1.0, 2.0});
    CHECK(cs.n == 4);
    CHECK(cs.r == 2);
}

TEST_CASE("r = n is the full ordered sample") {
    const auto cs = type2_censor({3.0, 1.0, 2.0}, 3);
    CHECK(cs.values == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(cs.n == cs.r);
}

TEST_CASE("r outside [1, n] is rejected") {
    CHECK_THROWS_AS(type2_censor({1.0, 2.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(type2_censor({1.0, 2.0}, 0), std::invalid_argument);
}

TEST_CASE("ties among retained values fail loudly") {
    CHECK_THROWS_AS(type2_censor({1.0, 1.0, 2.0}, 2), tie_error);
    // a tie entirely beyond the censoring point is invisible
    CHECK_NOTHROW(type2_censor({1.0, 2.0, 3.0, 3.0}, 2));
}

TEST_CASE("re-censoring with the same r is a no-op") {
    random_stream stream(99);
    const auto raw = sample(distribution_spec::exponential(1.0), 30, stream);
    const auto once = type2_censor(raw, 25);
    const auto twice = type2_censor(once.values, 25);
    CHECK(once.values == twice.values);
    CHECK(twice.r == 25);
}

TEST_CASE("censored prefix agrees with an independent full sort") {
    random_stream stream(7);
    auto raw = sample(distribution_spec::exponential(1.0), 30, stream);
    const auto cs = type2_censor(raw, 25);

    auto sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 25; ++i) {
        CHECK(cs.values[static_cast<std::size_t>(i)] == sorted[static_cast<std::size_t>(i)]);
    }
    // every discarded value dominates the retained maximum
    for (int i = 25; i < 30; ++i) {
        CHECK(sorted[static_cast<std::size_t>(i)] >= cs.values.back());
    }
}

TEST_CASE("make_censored validates its input") {
    const auto cs = make_censored({0.5, 1.5, 2.5}, 10);
    CHECK(cs.n == 10);
    CHECK(cs.r == 3);
    CHECK_THROWS_AS(make_censored({2.0, 1.0}, 5), tie_error);
    CHECK_THROWS_AS(make_censored({1.0, 2.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_censored({}, 5), std::invalid_argument);
}
