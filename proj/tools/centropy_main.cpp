// centropy -- exponentiality testing and entropy estimation for Type-II
// censored samples.
//
// Subcommands:
//   test             run one goodness-of-fit test on a data file (JSON out)
//   critical-values  Monte Carlo critical-value table (CSV)
//   power            power study over alternative distributions (CSV)
//   bias-rmse        estimator bias/RMSE study (CSV)
//   smooth           moving-average smoothing of a data file (CSV)
//
// Exit codes: 0 success / null not rejected, 3 null rejected, 1 usage or
// parse error, 2 critical-value table miss, 4 domain error in the data.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centropy/errors.hpp"
#include "centropy/montecarlo.hpp"
#include "centropy/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitTableMiss = 2;
constexpr int kExitReject = 3;
constexpr int kExitDomain = 4;

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// One real per line; blank lines skipped, '#' starts a comment.
std::vector<double> read_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw centropy::parse_error("cannot open data file " + path, 0);
    }
    std::vector<double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            continue;
        }
        const auto end = line.find_last_not_of(" \t\r");
        const std::string field = line.substr(begin, end - begin + 1);
        double v = 0.0;
        const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
        if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
            throw centropy::parse_error("malformed value '" + field + "'", line_no);
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw centropy::parse_error("no data in " + path, line_no);
    }
    return values;
}

// "5", "5,7,9" or "5..9" (inclusive).
std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        const auto dots = piece.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(piece));
            continue;
        }
        const int lo = std::stoi(piece.substr(0, dots));
        const int hi = std::stoi(piece.substr(dots + 2));
        if (hi < lo) {
            throw std::invalid_argument("empty range '" + piece + "'");
        }
        for (int v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty range '" + text + "'");
    }
    return out;
}

std::vector<double> parse_alphas(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        out.push_back(std::stod(piece));
    }
    if (out.empty()) {
        throw std::invalid_argument("no alpha levels in '" + text + "'");
    }
    return out;
}

centropy::statistic_kind parse_statistic(const std::string& name) {
    const auto kind = centropy::statistic_from_string(name);
    if (!kind) {
        throw std::invalid_argument("unknown statistic '" + name + "' (want t, t1, t2, z or bigz)");
    }
    return *kind;
}

// --m accepts "auto" or a positive integer.
std::optional<int> parse_window(const std::string& text) {
    if (text == "auto") {
        return std::nullopt;
    }
    return std::stoi(text);
}

struct manifest_info {
    std::string command;
    ordered_json parameters;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string output;
};

// Sidecar <output>.manifest.json recording everything needed to reproduce
// the output file byte-for-byte.
void write_manifest(const manifest_info& info, std::chrono::steady_clock::time_point started) {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    ordered_json doc;
    doc["tool"] = "centropy";
    doc["version"] = std::string(centropy::version_string);
    doc["command"] = info.command;
    doc["parameters"] = info.parameters;
    doc["seed"] = info.seed;
    doc["workers"] = info.workers;
    doc["output"] = info.output;
    doc["duration_seconds"] = elapsed.count();
    std::ofstream out(info.output + ".manifest.json", std::ios::binary);
    out << doc.dump(2) << '\n';
}

// Critical-value resolution for tests and power studies. Order: explicit
// table file, then the published tables, then (if allowed) Monte Carlo
// generation from a seed derived from `seed`. The alpha column of a table
// is an upper-tail probability; a two-sided z test reads the a/2 and
// 1 - a/2 rows.
struct region_resolver {
    std::optional<centropy::critical_value_table> file_table;
    bool allow_generation = false;
    int reps = 10000;
    std::uint64_t seed = 0;
    int workers = 0;

    std::optional<double> lookup(centropy::statistic_kind st, int n, int r, double alpha) const {
        if (file_table) {
            return file_table->find(st, n, r, alpha);
        }
        if (st == centropy::statistic_kind::t1 || st == centropy::statistic_kind::t2) {
            return centropy::embedded_table(st).find(st, n, r, alpha);
        }
        return std::nullopt;
    }

    centropy::critical_region resolve(centropy::statistic_kind st, int n, int r,
                                      double alpha, int m) const {
        const bool two_sided = st == centropy::statistic_kind::brain_shapiro_z;
        const double upper_level = two_sided ? alpha / 2.0 : alpha;

        auto upper = lookup(st, n, r, upper_level);
        auto lower = two_sided ? lookup(st, n, r, 1.0 - alpha / 2.0)
                               : std::optional<double>{};
        if ((!upper || (two_sided && !lower)) && allow_generation) {
            centropy::simulation_config config;
            config.statistic = st;
            config.n = n;
            config.r = r;
            config.m = m;
            config.reps = reps;
            // disjoint from the study streams
            config.base_seed = centropy::mix64(seed ^ 0x63726974766c7565ull);
            config.workers = workers;
            config.alpha_levels = two_sided
                                      ? std::vector<double>{upper_level, 1.0 - alpha / 2.0}
                                      : std::vector<double>{upper_level};
            const auto table = centropy::estimate_critical_values(config);
            upper = table.rows[0].critical_value;
            if (two_sided) {
                lower = table.rows[1].critical_value;
            }
            std::cerr << "note: generated critical value(s) for " << centropy::to_string(st)
                      << " at n=" << n << " r=" << r << " alpha=" << alpha
                      << " (reps=" << reps << ")\n";
        }
        if (!upper || (two_sided && !lower)) {
            std::ostringstream msg;
            msg << "no critical value for " << centropy::to_string(st) << " at n=" << n
                << " r=" << r << " alpha=" << alpha;
            throw centropy::table_miss_error(msg.str());
        }
        centropy::critical_region region;
        region.upper = *upper;
        if (two_sided) {
            region.lower = lower;
        }
        return region;
    }
};

int cmd_test(const std::string& data_path, int n, std::optional<int> r_flag,
             const std::string& stat_name, double alpha, const std::string& m_text,
             int k, const std::string& table_path) {
    const auto kind = parse_statistic(stat_name);
    const auto values_raw = read_data_file(data_path);
    const int r = static_cast<int>(values_raw.size());
    if (r_flag && *r_flag != r) {
        std::cerr << "error: --r " << *r_flag << " does not match " << r
                  << " values in " << data_path << "\n";
        return kExitParse;
    }

    auto sorted = values_raw;
    std::sort(sorted.begin(), sorted.end());
    const auto cs = centropy::make_censored(std::move(sorted), n);

    int m = 0;
    if (centropy::is_t_family(kind)) {
        const auto m_choice = parse_window(m_text);
        if (m_choice) {
            m = *m_choice;
        } else {
            const auto rule = centropy::window_rule(kind, r);
            m = rule.m;
            if (rule.clamped) {
                std::cerr << "note: window rule m=" << rule.rule_m << " clamped to m=" << m
                          << " for r=" << r << "\n";
            }
        }
    }

    region_resolver resolver;
    if (!table_path.empty()) {
        resolver.file_table = centropy::load_table(table_path);
    }
    const auto region = resolver.resolve(kind, n, r, alpha, m);

    const double statistic = centropy::evaluate_statistic(kind, cs, m, k);
    std::optional<double> theta;
    if (centropy::is_t_family(kind)) {
        if (kind == centropy::statistic_kind::t2) {
            theta = centropy::mle_theta(centropy::moving_average_smooth(cs, k).y, n);
        } else {
            theta = centropy::mle_theta(cs.values, n);
        }
    }
    const auto outcome = centropy::decide(kind, statistic, region, alpha,
                                          centropy::is_t_family(kind) ? std::optional<int>(m)
                                                                      : std::nullopt,
                                          theta);

    ordered_json doc;
    doc["statistic_kind"] = std::string(centropy::to_string(kind));
    doc["value"] = outcome.statistic;
    if (outcome.m) {
        doc["m"] = *outcome.m;
    } else {
        doc["m"] = nullptr;
    }
    doc["alpha"] = alpha;
    doc["critical_value"] = outcome.region.upper;
    if (outcome.region.lower) {
        doc["critical_value_lower"] = *outcome.region.lower;
    }
    doc["reject"] = outcome.reject;
    if (outcome.theta_hat) {
        doc["theta_hat"] = *outcome.theta_hat;
    } else {
        doc["theta_hat"] = nullptr;
    }
    std::cout << doc.dump(2) << '\n';
    return outcome.reject ? kExitReject : kExitOk;
}

int cmd_critical_values(const std::string& stat_name, int n, const std::string& r_text,
                        const std::string& alphas_text, int reps, std::uint64_t seed,
                        const std::string& m_text, int workers, const std::string& out_path) {
    const auto started = std::chrono::steady_clock::now();
    const auto kind = parse_statistic(stat_name);
    const auto r_values = parse_range(r_text);
    const auto alphas = parse_alphas(alphas_text);
    const auto m_choice = parse_window(m_text);

    // For the two-sided z statistic each requested level a needs both tail
    // rows a/2 and 1-a/2.
    std::vector<double> levels;
    for (double a : alphas) {
        if (kind == centropy::statistic_kind::brain_shapiro_z) {
            levels.push_back(a / 2.0);
            levels.push_back(1.0 - a / 2.0);
        } else {
            levels.push_back(a);
        }
    }

    centropy::critical_value_table merged;
    merged.provenance = centropy::table_provenance::generated;
    merged.seed = seed;
    merged.reps = reps;
    for (std::size_t cell = 0; cell < r_values.size(); ++cell) {
        const int r = r_values[cell];
        centropy::simulation_config config;
        config.statistic = kind;
        config.n = n;
        config.r = r;
        if (m_choice) {
            config.m = *m_choice;
        } else if (centropy::is_t_family(kind)) {
            const auto rule = centropy::window_rule(kind, r);
            config.m = rule.m;
            if (rule.clamped) {
                std::cerr << "note: window rule m=" << rule.rule_m << " clamped to m="
                          << rule.m << " for r=" << r << "\n";
            }
        } else {
            config.m = 0;
        }
        config.alpha_levels = levels;
        config.reps = reps;
        // One stream block per cell so rows never share replicates.
        config.base_seed = seed + 0x100000000ull * cell;
        config.workers = workers;
        const auto table = centropy::estimate_critical_values(config);
        merged.rows.insert(merged.rows.end(), table.rows.begin(), table.rows.end());
    }
    centropy::save_table(merged, out_path);

    manifest_info info;
    info.command = "critical-values";
    info.parameters = {{"stat", stat_name}, {"n", n},       {"r", r_text},
                       {"alphas", alphas_text}, {"reps", reps}, {"m", m_text}};
    info.seed = seed;
    info.workers = workers;
    info.output = out_path;
    write_manifest(info, started);
    return kExitOk;
}

int cmd_power(const std::string& stats_text, const std::string& alts_text, int n,
              const std::string& r_text, double alpha, int reps, std::uint64_t seed,
              int cv_reps, int workers, const std::string& table_path,
              const std::string& out_path) {
    const auto started = std::chrono::steady_clock::now();
    const auto r_values = parse_range(r_text);

    std::vector<centropy::statistic_kind> kinds;
    {
        std::istringstream in(stats_text);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            kinds.push_back(parse_statistic(piece));
        }
    }
    std::vector<std::string> alt_codes;
    {
        std::istringstream in(alts_text);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            alt_codes.push_back(piece);
        }
    }
    if (kinds.empty() || alt_codes.empty()) {
        throw std::invalid_argument("need at least one statistic and one alternative");
    }

    // Validate codes up front: "null" is the unit exponential sanity row.
    std::vector<centropy::distribution_spec> alt_specs;
    for (const auto& code : alt_codes) {
        if (code == "null") {
            alt_specs.push_back(centropy::distribution_spec::exponential(1.0));
            continue;
        }
        const auto* entry = centropy::find_alternative(code);
        if (entry == nullptr) {
            throw centropy::parse_error("unknown alternative code '" + code + "'", 0);
        }
        alt_specs.push_back(entry->spec);
    }

    region_resolver resolver;
    resolver.allow_generation = true;
    resolver.reps = cv_reps > 0 ? cv_reps : reps;
    resolver.seed = seed;
    resolver.workers = workers;
    if (!table_path.empty()) {
        resolver.file_table = centropy::load_table(table_path);
        resolver.allow_generation = false;
    }

    std::ostringstream csv;
    csv << "statistic,alternative,n,r,alpha,power,se,reps,seed\n";
    for (const auto kind : kinds) {
        for (int r : r_values) {
            const int m = centropy::is_t_family(kind) ? centropy::window_for(kind, r) : 0;
            const auto region = resolver.resolve(kind, n, r, alpha, m);
            for (std::size_t a = 0; a < alt_codes.size(); ++a) {
                centropy::simulation_config config;
                config.statistic = kind;
                config.n = n;
                config.r = r;
                config.m = m;
                config.reps = reps;
                config.base_seed = seed;
                config.alternative = alt_specs[a];
                config.workers = workers;
                const auto result = centropy::estimate_power(config, region);
                csv << centropy::to_string(kind) << ',' << alt_codes[a] << ',' << n << ',' << r
                    << ',' << format_double(alpha) << ',' << format_double(result.power) << ','
                    << format_double(result.std_error) << ',' << reps << ',' << seed << '\n';
            }
        }
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + out_path + " for writing");
    }
    out << csv.str();
    out.close();

    manifest_info info;
    info.command = "power";
    info.parameters = {{"stats", stats_text}, {"alts", alts_text}, {"n", n},
                       {"r", r_text},         {"alpha", alpha},    {"reps", reps},
                       {"cv_reps", resolver.reps}, {"table", table_path}};
    info.seed = seed;
    info.workers = workers;
    info.output = out_path;
    write_manifest(info, started);
    return kExitOk;
}

int cmd_bias_rmse(int n, const std::string& r_text, int reps, std::uint64_t seed, int workers,
                  const std::string& out_path) {
    const auto started = std::chrono::steady_clock::now();
    const auto r_values = parse_range(r_text);
    const auto rows = centropy::bias_rmse_study(n, r_values, reps, seed, workers);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + out_path + " for writing");
    }
    out << "n,r,estimator,bias,rmse,reps,seed\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.r << ',' << centropy::to_string(row.estimator) << ','
            << format_double(row.bias) << ',' << format_double(row.rmse) << ',' << reps << ','
            << seed << '\n';
    }
    out.close();

    manifest_info info;
    info.command = "bias-rmse";
    info.parameters = {{"n", n}, {"r", r_text}, {"reps", reps}};
    info.seed = seed;
    info.workers = workers;
    info.output = out_path;
    write_manifest(info, started);
    return kExitOk;
}

int cmd_smooth(const std::string& data_path, int n_flag, int k, const std::string& out_path) {
    const auto started = std::chrono::steady_clock::now();
    auto values = read_data_file(data_path);
    std::sort(values.begin(), values.end());
    const int r = static_cast<int>(values.size());
    const int n = n_flag > 0 ? n_flag : r;
    const auto cs = centropy::make_censored(std::move(values), n);
    const auto sm = centropy::moving_average_smooth(cs, k);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + out_path + " for writing");
    }
    out << "index,x,y\n";
    for (int i = 1; i <= r; ++i) {
        out << i << ',' << format_double(cs.values[static_cast<std::size_t>(i - 1)]) << ','
            << format_double(sm.y[static_cast<std::size_t>(i - 1)]) << '\n';
    }
    out.close();

    manifest_info info;
    info.command = "smooth";
    info.parameters = {{"data", data_path}, {"n", n}, {"k", k}};
    info.seed = 0;
    info.workers = 1;
    info.output = out_path;
    write_manifest(info, started);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy estimation and exponentiality tests for Type-II censored samples"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(centropy::version_string));

    // test
    auto* test = app.add_subcommand("test", "Test one data file for exponentiality");
    std::string data_path, stat_name = "t1", m_text = "auto", table_path;
    int n = 0, k = 3;
    std::optional<int> r_flag;
    double alpha = 0.1;
    test->add_option("--data", data_path, "Data file, one value per line")->required();
    test->add_option("--n", n, "Original sample size")->required();
    test->add_option("--r", r_flag, "Observed count (must match the file)");
    test->add_option("--stat", stat_name, "Statistic: t, t1, t2, z, bigz");
    test->add_option("--alpha", alpha, "Significance level");
    test->add_option("--m", m_text, "Window size or 'auto'");
    test->add_option("--k", k, "Moving-average order (t2)");
    test->add_option("--table", table_path, "Critical-value table CSV");

    // critical-values
    auto* cv = app.add_subcommand("critical-values", "Generate a Monte Carlo critical-value table");
    std::string cv_stat = "t1", cv_r, cv_alphas = "0.1,0.05,0.025", cv_m = "auto", cv_out;
    int cv_n = 0, cv_reps_opt = 10000, cv_workers = 0;
    std::uint64_t cv_seed = 0;
    cv->add_option("--stat", cv_stat, "Statistic: t, t1, t2, z, bigz");
    cv->add_option("--n", cv_n, "Original sample size")->required();
    cv->add_option("--r", cv_r, "Censoring depths, e.g. 15..27 or 5,7,9")->required();
    cv->add_option("--alphas", cv_alphas, "Comma-separated levels");
    cv->add_option("--reps", cv_reps_opt, "Monte Carlo replicates");
    cv->add_option("--seed", cv_seed, "Base seed");
    cv->add_option("--m", cv_m, "Window size or 'auto'");
    cv->add_option("--workers", cv_workers, "Worker threads (0 = all)");
    cv->add_option("--out", cv_out, "Output CSV path")->required();

    // power
    auto* pw = app.add_subcommand("power", "Power study against catalog alternatives");
    std::string pw_stats = "t1,t2,t,z,bigz", pw_alts, pw_r, pw_table, pw_out;
    int pw_n = 30, pw_reps = 10000, pw_cv_reps = 0, pw_workers = 0;
    double pw_alpha = 0.1;
    std::uint64_t pw_seed = 0;
    pw->add_option("--stats", pw_stats, "Comma-separated statistics");
    pw->add_option("--alts", pw_alts, "Alternative codes (A1..C4) or 'null'")->required();
    pw->add_option("--n", pw_n, "Original sample size");
    pw->add_option("--r", pw_r, "Censoring depths")->required();
    pw->add_option("--alpha", pw_alpha, "Significance level");
    pw->add_option("--reps", pw_reps, "Monte Carlo replicates");
    pw->add_option("--cv-reps", pw_cv_reps, "Replicates for generated critical values (default --reps)");
    pw->add_option("--seed", pw_seed, "Base seed");
    pw->add_option("--table", pw_table, "Critical-value table CSV (disables generation)");
    pw->add_option("--workers", pw_workers, "Worker threads (0 = all)");
    pw->add_option("--out", pw_out, "Output CSV path")->required();

    // bias-rmse
    auto* br = app.add_subcommand("bias-rmse", "Estimator bias and RMSE under the exponential null");
    std::string br_r, br_out;
    int br_n = 30, br_reps = 10000, br_workers = 0;
    std::uint64_t br_seed = 0;
    br->add_option("--n", br_n, "Original sample size");
    br->add_option("--r", br_r, "Censoring depths")->required();
    br->add_option("--reps", br_reps, "Monte Carlo replicates");
    br->add_option("--seed", br_seed, "Base seed");
    br->add_option("--workers", br_workers, "Worker threads (0 = all)");
    br->add_option("--out", br_out, "Output CSV path")->required();

    // smooth
    auto* sm = app.add_subcommand("smooth", "Moving-average smoothing of a data file");
    std::string sm_data, sm_out;
    int sm_n = 0, sm_k = 3;
    sm->add_option("--data", sm_data, "Data file, one value per line")->required();
    sm->add_option("--n", sm_n, "Original sample size (default: value count)");
    sm->add_option("--k", sm_k, "Moving-average order");
    sm->add_option("--out", sm_out, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (test->parsed()) {
            return cmd_test(data_path, n, r_flag, stat_name, alpha, m_text, k, table_path);
        }
        if (cv->parsed()) {
            return cmd_critical_values(cv_stat, cv_n, cv_r, cv_alphas, cv_reps_opt, cv_seed, cv_m,
                                       cv_workers, cv_out);
        }
        if (pw->parsed()) {
            return cmd_power(pw_stats, pw_alts, pw_n, pw_r, pw_alpha, pw_reps, pw_seed, pw_cv_reps,
                             pw_workers, pw_table, pw_out);
        }
        if (br->parsed()) {
            return cmd_bias_rmse(br_n, br_r, br_reps, br_seed, br_workers, br_out);
        }
        if (sm->parsed()) {
            return cmd_smooth(sm_data, sm_n, sm_k, sm_out);
        }
    } catch (const centropy::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const centropy::table_miss_error& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: generate a table with 'centropy critical-values' and pass --table\n";
        return kExitTableMiss;
    } catch (const centropy::tie_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const centropy::degenerate_spacing_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
