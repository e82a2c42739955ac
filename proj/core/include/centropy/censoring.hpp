#pragma once

#include <vector>

namespace centropy {

// The r smallest order statistics of an original sample of size n
// (Type-II right censoring: the experiment stops at the r-th failure).
struct censored_sample {
    std::vector<double> values; // strictly ascending, size r
    int n = 0;
    int r = 0;
};

// Sorts raw and keeps the r smallest values. Throws std::invalid_argument
// when r is out of [1, n] and tie_error when the retained values are not
// strictly ascending.
censored_sample type2_censor(std::vector<double> raw, int r);

// Wraps values that already are the r smallest order statistics (e.g. data
// read from a file) together with the original sample size n.
censored_sample make_censored(std::vector<double> sorted_values, int n);

} // namespace centropy
