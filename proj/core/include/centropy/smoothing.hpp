#pragma once

#include <vector>

#include "centropy/censoring.hpp"

namespace centropy {

// Moving-average transform of a censored sample. y_i is the mean of
// x_(i)..x_(i+k-1); past position r-k+1 the window shrinks to the remaining
// tail, so y_r = x_(r) exactly.
struct smoothed_sample {
    std::vector<double> y; // ascending, size r
    int k = 0;
    censored_sample source;
};

// Order-k smoothing; k = 3 is the customary default. Throws
// std::invalid_argument unless 1 <= k <= r.
smoothed_sample moving_average_smooth(const censored_sample& s, int k);

// Yousefzadeh-Arghami empirical CDF at the i-th smoothed value (1-based):
//
//   F(y_(i)) = (r-1)/(r(n+1)) * (i + 1/(r-1) + (y_(i)-y_(i-1))/(y_(i+1)-y_(i-1)))
//
// with the ratio term 0 at i=1 and 1 at i=r, so F(y_(1)) = 1/(n+1) and
// F(y_(r)) = r/(n+1). Throws tie_error when an interior denominator
// y_(i+1) - y_(i-1) vanishes.
double fhat(const smoothed_sample& sm, int i);

// All r values of fhat.
std::vector<double> fhat_all(const smoothed_sample& sm);

} // namespace centropy
