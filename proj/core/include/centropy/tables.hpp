#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "centropy/gof.hpp"

namespace centropy {

// Window recommendation for a statistic at censoring depth r. When the
// published rule value violates the estimator's window bound the value is
// clamped downward and `clamped` records the adjustment.
struct window_choice {
    int m = 0;
    int rule_m = 0;
    bool clamped = false;
};

// Published window-size rules. t1 (and park_t, which shares the same
// spacing family): m = 3 for r in [5,19], 4 for [20,40], 5 for [41,50].
// t2: paired steps 5,6,7,8,9 for r in [4,13], then floor(r/2)+3, clamped
// to m < r/2 + 3. Throws table_miss_error outside the covered r range and
// std::invalid_argument for the Brain-Shapiro statistics.
window_choice window_rule(statistic_kind st, int r);
int window_for(statistic_kind st, int r);

enum class table_provenance { paper, generated };

// `alpha` is the upper-tail probability: critical_value is the empirical
// (1 - alpha) quantile of the null distribution. A two-sided z test at
// level a uses the rows alpha = a/2 (upper bound) and alpha = 1 - a/2
// (lower bound).
struct critical_value_row {
    statistic_kind statistic = statistic_kind::t1;
    int n = 0;
    int r = 0;
    int m = 0;
    double alpha = 0.0;
    double critical_value = 0.0;
};

struct critical_value_table {
    std::vector<critical_value_row> rows;
    table_provenance provenance = table_provenance::paper;
    std::optional<std::uint64_t> seed; // generated tables only
    std::optional<int> reps;

    std::optional<double> find(statistic_kind st, int n, int r, double alpha) const;
};

// The published critical-value tables (available for t1 and t2 at
// n in {10, 20, 30} and alpha in {0.1, 0.05, 0.025}).
const critical_value_table& embedded_table(statistic_kind st);
double embedded_critical_value(statistic_kind st, int n, int r, double alpha);

// CSV persistence. Schema:
//   statistic,n,r,m,alpha,critical_value,provenance,seed,reps
// provenance "paper" rows leave seed/reps empty. Doubles round-trip
// losslessly. load_table throws parse_error with the offending line.
void save_table(const critical_value_table& table, const std::filesystem::path& path);
critical_value_table load_table(const std::filesystem::path& path);

} // namespace centropy
