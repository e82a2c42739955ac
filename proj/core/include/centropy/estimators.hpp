#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "centropy/censoring.hpp"
#include "centropy/smoothing.hpp"

namespace centropy {

enum class estimator_kind { vasicek, park_hbar, hbar1, hbar2 };

std::string_view to_string(estimator_kind kind);

// An entropy estimate in nats together with the sample geometry it came
// from.
struct entropy_estimate {
    estimator_kind kind = estimator_kind::vasicek;
    double value = 0.0;
    int m = 0;
    int n = 0;
    int r = 0;
    std::optional<int> k; // moving-average order, hbar2 only
};

// Vasicek's spacing estimator for a complete sample of size n:
//
//   H(m,n) = (1/n) sum_i ln[ (x_(i+m) - x_(i-m)) / (2m/n) ]
//
// with indices clamped to [1, n]. Requires n >= 3 and m < n/2.
entropy_estimate vasicek(std::span<const double> sample, int m);

// Spacing estimator of the scaled joint entropy of a Type-II censored
// sample:
//
//   Hbar = (1/n) sum_{i=1..r} ln[ (x_(i+m) - x_(i-m)) / (2m/n) ]
//          - (1 - r/n) ln(1 - r/n)
//
// with indices clamped to [1, r] and the convention 0 ln 0 = 0, so the
// correction term vanishes at r = n and the estimator reduces to Vasicek's.
// Any m >= 1 is accepted: the published window recommendations exceed the
// asymptotic bound m < r/2 at small r, and the formula stays well defined
// under clamping.
entropy_estimate park_hbar(const censored_sample& s, int m);

// length / sum of reciprocals. Throws std::domain_error on values <= 0.
double harmonic_mean(std::span<const double> values);

// Harmonic-mean spacing estimator for censored samples:
//
//   Hbar1 = (1/n) sum_{i=1..r} ln[ (hm_up(i) - hm_dn(i)) / (m/n) ]
//           - (1 - r/n) ln(1 - r/n)
//
// where hm_up(i) is the harmonic mean of x_(i)..x_(i-1+m) and hm_dn(i) the
// harmonic mean of x_(i-1-m)..x_(i), window index ranges intersected with
// [1, r]. Requires strictly positive data. Throws degenerate_spacing_error
// when a clamped window pair collapses (always the case at i = 1 for m = 1).
entropy_estimate hbar1(const censored_sample& s, int m);

// Moving-average spacing estimator: spacings of the smoothed values over
// the corresponding empirical-CDF increments,
//
//   Hbar2 = (1/n) sum_{i=1..r} ln[ (y_(i+m) - y_(i-m)) / (F(y_(i+m)) - F(y_(i-m))) ]
//           - (1 - r/n) ln(1 - r/n)
//
// with indices clamped to [1, r] and F the Yousefzadeh-Arghami empirical
// CDF of the smoothed sample. Requires m < r/2 + k.
entropy_estimate hbar2(const smoothed_sample& sm, int m);
entropy_estimate hbar2(const censored_sample& s, int m, int k = 3);

// The value the censored estimators target under the unit exponential:
// the defining integral collapses analytically to r/n. Used as the
// reference point for bias and RMSE studies.
double exact_reference_hbar(int n, int r);

} // namespace centropy
