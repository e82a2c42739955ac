#include "centropy/censoring.hpp"

#include <algorithm>
#include <stdexcept>

#include "centropy/errors.hpp"

namespace centropy {

namespace {

void check_strictly_ascending(const std::vector<double>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw tie_error("censored sample values must be strictly ascending");
        }
    }
}

} // namespace

censored_sample type2_censor(std::vector<double> raw, int r) {
    const int n = static_cast<int>(raw.size());
    if (r < 1 || r > n) {
        throw std::invalid_argument("censoring depth r must satisfy 1 <= r <= n");
    }
    std::sort(raw.begin(), raw.end());
    raw.resize(static_cast<std::size_t>(r));
    check_strictly_ascending(raw);
    return censored_sample{std::move(raw), n, r};
}

censored_sample make_censored(std::vector<double> sorted_values, int n) {
    const int r = static_cast<int>(sorted_values.size());
    if (r < 1 || r > n) {
        throw std::invalid_argument("need 1 <= r <= n");
    }
    check_strictly_ascending(sorted_values);
    return censored_sample{std::move(sorted_values), n, r};
}

} // namespace centropy
