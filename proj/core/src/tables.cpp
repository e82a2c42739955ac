#include "centropy/tables.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "centropy/errors.hpp"

namespace centropy {

namespace {

constexpr double kAlphaTolerance = 1e-12;

int t1_rule(int r) {
    if (r <= 19) return 3;
    if (r <= 40) return 4;
    return 5;
}

int t2_rule(int r) {
    switch (r) {
    case 4:
    case 5: return 5;
    case 6:
    case 7: return 6;
    case 8:
    case 9: return 7;
    case 10:
    case 11: return 8;
    case 12:
    case 13: return 9;
    default: return r / 2 + 3; // consecutive (even, odd) pairs share the value
    }
}

} // namespace

window_choice window_rule(statistic_kind st, int r) {
    switch (st) {
    case statistic_kind::park_t:
    case statistic_kind::t1: {
        if (r < 5 || r > 50) {
            throw table_miss_error("window rule covers r in [5, 50] for this statistic");
        }
        const int rule = t1_rule(r);
        // The rule values are used as published; the spacing estimator is
        // well defined for any m >= 1 under index clamping.
        return {rule, rule, false};
    }
    case statistic_kind::t2: {
        if (r < 4) {
            throw table_miss_error("window rule covers r >= 4 for this statistic");
        }
        const int rule = t2_rule(r);
        // Largest integer strictly below the smoothed-estimator bound
        // m < r/2 + 3; the published rule touches the bound at even r.
        const int max_valid = (r % 2 == 0) ? r / 2 + 2 : r / 2 + 3;
        const int m = std::min(rule, max_valid);
        return {m, rule, m != rule};
    }
    default:
        throw std::invalid_argument("window rules apply to the KL-based statistics only");
    }
}

int window_for(statistic_kind st, int r) {
    return window_rule(st, r).m;
}

namespace {

struct embedded_row {
    int n;
    int r;
    double a100;
    double a050;
    double a025;
};

// Published critical values for t1, alpha = 0.1 / 0.05 / 0.025.
constexpr std::array<embedded_row, 28> kT1Rows{{
    {10, 5, 0.5962, 0.6855, 0.7692},
    {10, 6, 0.6155, 0.7185, 0.8039},
    {10, 7, 0.6398, 0.7333, 0.8185},
    {10, 8, 0.6676, 0.7607, 0.8648},
    {10, 9, 0.7152, 0.8075, 0.9025},
    {20, 10, 0.3148, 0.3640, 0.4061},
    {20, 11, 0.3188, 0.3689, 0.4148},
    {20, 12, 0.3285, 0.3727, 0.4183},
    {20, 13, 0.3374, 0.3825, 0.4329},
    {20, 14, 0.3442, 0.3911, 0.4371},
    {20, 15, 0.3613, 0.4113, 0.4587},
    {20, 16, 0.3677, 0.4157, 0.4634},
    {20, 17, 0.3830, 0.4333, 0.4795},
    {20, 18, 0.4022, 0.4521, 0.5024},
    {20, 19, 0.4223, 0.4717, 0.5172},
    {30, 15, 0.2239, 0.2599, 0.2904},
    {30, 16, 0.2293, 0.2625, 0.2922},
    {30, 17, 0.2320, 0.2659, 0.2945},
    {30, 18, 0.2376, 0.2707, 0.3009},
    {30, 19, 0.2425, 0.2757, 0.3077},
    {30, 20, 0.2470, 0.2800, 0.3108},
    {30, 21, 0.2537, 0.2834, 0.3121},
    {30, 22, 0.2568, 0.2918, 0.3259},
    {30, 23, 0.2634, 0.2949, 0.3272},
    {30, 24, 0.2691, 0.3017, 0.3318},
    {30, 25, 0.2736, 0.3090, 0.3398},
    {30, 26, 0.2822, 0.3136, 0.3488},
    {30, 27, 0.2910, 0.3239, 0.3538},
}};

// Published critical values for t2.
constexpr std::array<embedded_row, 28> kT2Rows{{
    {10, 5, 0.3445, 0.4253, 0.5087},
    {10, 6, 0.3251, 0.4128, 0.5026},
    {10, 7, 0.3136, 0.4099, 0.4929},
    {10, 8, 0.3104, 0.4046, 0.4915},
    {10, 9, 0.3101, 0.4038, 0.4902},
    {20, 10, 0.1474, 0.1913, 0.2310},
    {20, 11, 0.1426, 0.1830, 0.2229},
    {20, 12, 0.1408, 0.1828, 0.2197},
    {20, 13, 0.1369, 0.1805, 0.2181},
    {20, 14, 0.1322, 0.1773, 0.2168},
    {20, 15, 0.1294, 0.1740, 0.2160},
    {20, 16, 0.1281, 0.1742, 0.2161},
    {20, 17, 0.1280, 0.1739, 0.2073},
    {20, 18, 0.1268, 0.1649, 0.2072},
    {20, 19, 0.1200, 0.1620, 0.1988},
    {30, 15, 0.0865, 0.1168, 0.1500},
    {30, 16, 0.0859, 0.1152, 0.1430},
    {30, 17, 0.0843, 0.1124, 0.1383},
    {30, 18, 0.0829, 0.1090, 0.1380},
    {30, 19, 0.0824, 0.1083, 0.1355},
    {30, 20, 0.0815, 0.1079, 0.1311},
    {30, 21, 0.0806, 0.1043, 0.1294},
    {30, 22, 0.0777, 0.1038, 0.1281},
    {30, 23, 0.0759, 0.1027, 0.1280},
    {30, 24, 0.0741, 0.0988, 0.1275},
    {30, 25, 0.0699, 0.0976, 0.1265},
    {30, 26, 0.0662, 0.0977, 0.1219},
    {30, 27, 0.0635, 0.0910, 0.1200},
}};

critical_value_table build_embedded(statistic_kind st, const std::array<embedded_row, 28>& rows) {
    critical_value_table table;
    table.provenance = table_provenance::paper;
    table.rows.reserve(rows.size() * 3);
    for (const auto& row : rows) {
        // The m column records the published window rule for the row's r
        // (evaluation uses window_for, which may clamp t2's value).
        const int m = (st == statistic_kind::t1) ? t1_rule(row.r) : t2_rule(row.r);
        table.rows.push_back({st, row.n, row.r, m, 0.1, row.a100});
        table.rows.push_back({st, row.n, row.r, m, 0.05, row.a050});
        table.rows.push_back({st, row.n, row.r, m, 0.025, row.a025});
    }
    return table;
}

} // namespace

std::optional<double> critical_value_table::find(statistic_kind st, int n, int r,
                                                 double alpha) const {
    for (const auto& row : rows) {
        if (row.statistic == st && row.n == n && row.r == r &&
            std::abs(row.alpha - alpha) < kAlphaTolerance) {
            return row.critical_value;
        }
    }
    return std::nullopt;
}

const critical_value_table& embedded_table(statistic_kind st) {
    static const critical_value_table t1_table = build_embedded(statistic_kind::t1, kT1Rows);
    static const critical_value_table t2_table = build_embedded(statistic_kind::t2, kT2Rows);
    switch (st) {
    case statistic_kind::t1: return t1_table;
    case statistic_kind::t2: return t2_table;
    default:
        throw table_miss_error("no published critical values for this statistic");
    }
}

double embedded_critical_value(statistic_kind st, int n, int r, double alpha) {
    const auto value = embedded_table(st).find(st, n, r, alpha);
    if (!value) {
        std::ostringstream msg;
        msg << "no published critical value for " << to_string(st) << " at n=" << n
            << " r=" << r << " alpha=" << alpha;
        throw table_miss_error(msg.str());
    }
    return *value;
}

namespace {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

double parse_double(const std::string& field, int line) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw parse_error("malformed number '" + field + "'", line);
    }
    return value;
}

long long parse_int(const std::string& field, int line) {
    long long value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw parse_error("malformed integer '" + field + "'", line);
    }
    return value;
}

std::uint64_t parse_uint64(const std::string& field, int line) {
    std::uint64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw parse_error("malformed seed '" + field + "'", line);
    }
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

constexpr std::string_view kTableHeader =
    "statistic,n,r,m,alpha,critical_value,provenance,seed,reps";

} // namespace

void save_table(const critical_value_table& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << kTableHeader << '\n';
    const bool generated = table.provenance == table_provenance::generated;
    for (const auto& row : table.rows) {
        out << to_string(row.statistic) << ',' << row.n << ',' << row.r << ',' << row.m << ','
            << format_double(row.alpha) << ',' << format_double(row.critical_value) << ','
            << (generated ? "generated" : "paper") << ',';
        if (generated && table.seed) {
            out << *table.seed;
        }
        out << ',';
        if (generated && table.reps) {
            out << *table.reps;
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

critical_value_table load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) {
        throw parse_error("empty critical-value table", 1);
    }
    ++line_no;
    if (line != kTableHeader) {
        throw parse_error("unexpected header, want '" + std::string(kTableHeader) + "'", line_no);
    }

    critical_value_table table;
    bool provenance_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 9) {
            throw parse_error("expected 9 columns, got " + std::to_string(fields.size()), line_no);
        }
        critical_value_row row;
        const auto kind = statistic_from_string(fields[0]);
        if (!kind) {
            throw parse_error("unknown statistic '" + fields[0] + "'", line_no);
        }
        row.statistic = *kind;
        row.n = static_cast<int>(parse_int(fields[1], line_no));
        row.r = static_cast<int>(parse_int(fields[2], line_no));
        row.m = static_cast<int>(parse_int(fields[3], line_no));
        row.alpha = parse_double(fields[4], line_no);
        row.critical_value = parse_double(fields[5], line_no);

        table_provenance prov;
        if (fields[6] == "paper") {
            prov = table_provenance::paper;
        } else if (fields[6] == "generated") {
            prov = table_provenance::generated;
        } else {
            throw parse_error("unknown provenance '" + fields[6] + "'", line_no);
        }
        if (provenance_seen && prov != table.provenance) {
            throw parse_error("mixed provenance values in one table", line_no);
        }
        table.provenance = prov;
        provenance_seen = true;

        if (prov == table_provenance::generated) {
            if (!fields[7].empty()) {
                table.seed = parse_uint64(fields[7], line_no);
            }
            if (!fields[8].empty()) {
                table.reps = static_cast<int>(parse_int(fields[8], line_no));
            }
        }
        table.rows.push_back(row);
    }
    return table;
}

} // namespace centropy
