#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "centropy/censoring.hpp"
#include "centropy/distributions.hpp"
#include "centropy/gof.hpp"

using namespace centropy;

namespace {

censored_sample exp_censored(std::uint64_t seed, int n, int r) {
    random_stream stream(seed);
    return type2_censor(sample(distribution_spec::exponential(1.0), n, stream), r);
}

censored_sample scaled(const censored_sample& s, double c) {
    std::vector<double> values;
    values.reserve(s.values.size());
    for (double v : s.values) values.push_back(c * v);
    return make_censored(std::move(values), s.n);
}

} // namespace

TEST_CASE("censored exponential MLE") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    CHECK(mle_theta(a, 5) == doctest::Approx(4.0));
    // r = n: censoring term vanishes, plain mean
    CHECK(mle_theta(a, 3) == doctest::Approx(2.0));
    const std::vector<double> b{0.2, 0.5, 1.1, 1.8};
    CHECK(mle_theta(b, 10) == doctest::Approx(3.6));
    const std::vector<double> bad{-0.5, 1.0};
    CHECK_THROWS_AS(mle_theta(bad, 4), std::domain_error);
    CHECK_THROWS_AS(mle_theta(a, 2), std::invalid_argument);
}

TEST_CASE("statistic kinds round-trip through names") {
    for (const auto kind : {statistic_kind::park_t, statistic_kind::t1, statistic_kind::t2,
                            statistic_kind::brain_shapiro_z, statistic_kind::brain_shapiro_big_z}) {
        const auto parsed = statistic_from_string(to_string(kind));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == kind);
    }
    CHECK(!statistic_from_string("t3").has_value());
    CHECK(is_t_family(statistic_kind::t2));
    CHECK(!is_t_family(statistic_kind::brain_shapiro_z));
}

TEST_CASE("KL statistic, hand-traced chain") {
    const auto cs = make_censored({1.0, 2.0, 4.0}, 6);
    // -hbar + (1/2)(ln(19/3) + 1) with hbar = 1.1945063128187033
    CHECK(statistic_t(cs, 1) == doctest::Approx(0.22840703243046205).epsilon(1e-12));
}

TEST_CASE("harmonic-mean KL statistic, hand-traced chain") {
    const auto cs = make_censored({1.0, 2.0, 4.0, 8.0, 16.0}, 10);
    // -hbar1 + (1/2)(ln(111/5) + 1)
    CHECK(statistic_t1(cs, 2) == doctest::Approx(0.3905841436321012).epsilon(1e-12));
}

TEST_CASE("all five statistics are exactly scale invariant") {
    const auto cs = exp_censored(12, 30, 20);
    const int m1 = 4;
    const int m2 = 12; // largest window below r/2 + k
    for (double c : {0.01, 100.0}) {
        const auto cx = scaled(cs, c);
        CHECK(statistic_t(cx, m1) == doctest::Approx(statistic_t(cs, m1)).epsilon(1e-12));
        CHECK(statistic_t1(cx, m1) == doctest::Approx(statistic_t1(cs, m1)).epsilon(1e-12));
        CHECK(statistic_t2(cx, m2) == doctest::Approx(statistic_t2(cs, m2)).epsilon(1e-12));
        const auto bs = brain_shapiro(cs);
        const auto bsx = brain_shapiro(cx);
        CHECK(bsx.z == doctest::Approx(bs.z).epsilon(1e-12));
        CHECK(bsx.big_z == doctest::Approx(bs.big_z).epsilon(1e-12));
    }
}

TEST_CASE("normalized spacings") {
    const auto cs = make_censored({1.0, 2.0, 3.0}, 5);
    CHECK(normalized_spacings(cs) == std::vector<double>{5.0, 4.0, 3.0});
}

TEST_CASE("Brain-Shapiro statistics, hand-traced") {
    const auto cs = make_censored({0.3, 0.7, 1.1, 1.9, 2.4}, 8);
    const auto bs = brain_shapiro(cs);
    CHECK(bs.z == doctest::Approx(-1.0 / 14.0).epsilon(1e-12));
    CHECK(bs.big_z == doctest::Approx(-0.3143362416836434).epsilon(1e-12));
}

TEST_CASE("Brain-Shapiro needs r >= 4") {
    const auto cs = make_censored({1.0, 2.0, 3.0}, 5);
    CHECK_THROWS_AS(brain_shapiro(cs), std::invalid_argument);
}

TEST_CASE("z is centred under the exponential null") {
    double acc = 0.0;
    const int reps = 10000;
    for (int i = 0; i < reps; ++i) {
        auto stream = random_stream::for_replicate(555, static_cast<std::uint64_t>(i));
        const auto cs = type2_censor(sample(distribution_spec::exponential(1.0), 30, stream), 20);
        acc += brain_shapiro(cs).z;
    }
    CHECK(std::abs(acc / reps) < 0.05);
}

TEST_CASE("statistic dispatch matches the direct calls") {
    const auto cs = exp_censored(9, 20, 12);
    CHECK(evaluate_statistic(statistic_kind::park_t, cs, 3) == statistic_t(cs, 3));
    CHECK(evaluate_statistic(statistic_kind::t1, cs, 3) == statistic_t1(cs, 3));
    CHECK(evaluate_statistic(statistic_kind::t2, cs, 8, 3) == statistic_t2(cs, 8, 3));
    CHECK(evaluate_statistic(statistic_kind::brain_shapiro_z, cs, 0) == brain_shapiro(cs).z);
    CHECK(evaluate_statistic(statistic_kind::brain_shapiro_big_z, cs, 0) == brain_shapiro(cs).big_z);
}

TEST_CASE("decide applies the rejection region") {
    critical_region upper_only{0.5962, std::nullopt};
    const auto rejected = decide(statistic_kind::t1, 0.70, upper_only, 0.1, 3, 1.2);
    CHECK(rejected.reject);
    CHECK(rejected.m == 3);
    CHECK(rejected.theta_hat == 1.2);

    const auto kept = decide(statistic_kind::t1, 0.50, upper_only, 0.1);
    CHECK(!kept.reject);

    critical_region two_sided{2.0, -2.0};
    CHECK(decide(statistic_kind::brain_shapiro_z, -3.0, two_sided, 0.1).reject);
    CHECK(!decide(statistic_kind::brain_shapiro_z, 0.0, two_sided, 0.1).reject);
    CHECK(decide(statistic_kind::brain_shapiro_z, 3.0, two_sided, 0.1).reject);

    CHECK_THROWS_AS(decide(statistic_kind::t1, 0.5, upper_only, 1.5), std::invalid_argument);
}
