#include "ogl/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "ogl/count.hpp"
#include "ogl/errors.hpp"
#include "ogl/generate.hpp"
#include "ogl/rng.hpp"
#include "ogl/theory.hpp"

namespace ogl {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
    if (xs.empty()) return {};
    double sum = 0.0;
    for (double x : xs) sum += x;
    double mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

// Runs fn(i) for i in [0, count) on a pool. Results must be written to
// disjoint slots; the pool adds no synchronization beyond the task counter.
void parallel_for(std::uint64_t count, unsigned threads,
                  const std::function<void(std::uint64_t)>& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::uint64_t resolve_m(const ExperimentConfig& cfg, std::size_t n_index) {
    if (const auto* ratio = std::get_if<double>(&cfg.m_rule)) {
        double m = std::round(*ratio * static_cast<double>(cfg.n_values[n_index]));
        if (!(m >= 0)) throw config_error("m ratio produces negative layer count");
        return static_cast<std::uint64_t>(m);
    }
    const auto& list = std::get<std::vector<std::uint64_t>>(cfg.m_rule);
    if (list.size() == 1) return list[0];
    if (n_index < list.size()) return list[n_index];
    throw config_error("m list does not cover all n values");
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.n_values.empty()) throw config_error("experiment: no n values");
    if (cfg.patterns.empty()) throw config_error("experiment: no patterns");
    if (cfg.replicates < 1) throw config_error("experiment: replicates must be >= 1");
    if (cfg.output.empty()) throw config_error("experiment: no output path");
    if (const auto* ratio = std::get_if<double>(&cfg.m_rule)) {
        if (!(*ratio > 0)) throw config_error("experiment: m ratio must be positive");
    } else if (std::get<std::vector<std::uint64_t>>(cfg.m_rule).empty()) {
        throw config_error("experiment: m rule unset (use m or m_ratio)");
    }
    std::uint32_t max_x = cfg.dist.max_size();
    for (std::size_t i = 0; i < cfg.n_values.size(); ++i) {
        if (cfg.n_values[i] < max_x)
            throw config_error("experiment: n=" + std::to_string(cfg.n_values[i]) +
                               " smaller than max attainable layer size " +
                               std::to_string(max_x));
        resolve_m(cfg, i);  // throws if unresolvable
    }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    auto t0 = Clock::now();

    struct TaskOut {
        std::uint32_t n = 0;
        std::uint64_t m = 0;
        std::uint32_t replicate = 0;
        std::uint64_t seed = 0;
        bool aborted = false;
        std::string abort_reason;
        std::vector<std::uint64_t> counts;  // per pattern
    };

    const std::size_t npat = cfg.patterns.size();
    const std::uint64_t tasks =
        static_cast<std::uint64_t>(cfg.n_values.size()) * cfg.replicates;
    std::vector<TaskOut> results(tasks);

    // leading terms once per (n-index, pattern)
    std::vector<std::vector<double>> leading(cfg.n_values.size(),
                                             std::vector<double>(npat, 0.0));
    for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni)
        for (std::size_t pi = 0; pi < npat; ++pi)
            leading[ni][pi] =
                pattern_leading_term(cfg.patterns[pi], resolve_m(cfg, ni), cfg.dist);

    parallel_for(tasks, cfg.threads, [&](std::uint64_t idx) {
        std::size_t ni = static_cast<std::size_t>(idx / cfg.replicates);
        auto rep = static_cast<std::uint32_t>(idx % cfg.replicates);
        TaskOut& out = results[idx];
        out.n = cfg.n_values[ni];
        out.m = resolve_m(cfg, ni);
        out.replicate = rep;
        out.seed = child_seed(cfg.base_seed, out.n, rep);
        try {
            Graph g = generate({out.n, out.m, cfg.dist, out.seed});
            out.counts.resize(npat);
            for (std::size_t pi = 0; pi < npat; ++pi)
                out.counts[pi] = count_pattern(g, cfg.patterns[pi]).count;
        } catch (const guard_error& e) {
            out.aborted = true;
            out.abort_reason = e.what();
        }
    });

    // CSV rows sorted by (n, pattern, replicate)
    struct Row {
        std::uint32_t n;
        std::uint64_t m;
        std::size_t pattern_idx;
        std::uint32_t replicate;
        std::uint64_t seed;
        std::uint64_t count;
        double leading;
    };
    std::vector<Row> rows;
    rows.reserve(tasks * npat);
    std::uint64_t aborted = 0;
    for (std::uint64_t idx = 0; idx < tasks; ++idx) {
        const TaskOut& out = results[idx];
        if (out.aborted) {
            ++aborted;
            continue;
        }
        std::size_t ni = static_cast<std::size_t>(idx / cfg.replicates);
        for (std::size_t pi = 0; pi < npat; ++pi)
            rows.push_back({out.n, out.m, pi, out.replicate, out.seed, out.counts[pi],
                            leading[ni][pi]});
    }
    std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        if (a.n != b.n) return a.n < b.n;
        const std::string& pa = cfg.patterns[a.pattern_idx].name();
        const std::string& pb = cfg.patterns[b.pattern_idx].name();
        if (pa != pb) return pa < pb;
        return a.replicate < b.replicate;
    });

    ExperimentResult res;
    res.csv_path = cfg.output;
    res.replicates_aborted = aborted;

    std::ofstream out(cfg.output);
    if (!out) throw config_error("cannot open output path: " + cfg.output);
    out << kCsvVersionComment << '\n' << kCsvHeader << '\n';
    for (const Row& r : rows) {
        out << r.n << ',' << r.m << ',' << cfg.patterns[r.pattern_idx].name() << ','
            << r.replicate << ',' << r.seed << ',' << r.count << ','
            << fmt_double(r.leading) << ',';
        if (r.leading > 0.0)
            out << fmt_double(static_cast<double>(r.count) / r.leading);
        out << '\n';
    }
    res.rows_written = rows.size();

    // summary blocks per (n, pattern), in row order
    for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
        std::vector<std::size_t> pat_order(npat);
        for (std::size_t pi = 0; pi < npat; ++pi) pat_order[pi] = pi;
        std::sort(pat_order.begin(), pat_order.end(), [&](std::size_t a, std::size_t b) {
            return cfg.patterns[a].name() < cfg.patterns[b].name();
        });
        for (std::size_t pi : pat_order) {
            SummaryBlock blk;
            blk.n = cfg.n_values[ni];
            blk.m = resolve_m(cfg, ni);
            blk.pattern = cfg.patterns[pi].name();
            std::vector<double> counts, ratios;
            for (std::uint32_t rep = 0; rep < cfg.replicates; ++rep) {
                const TaskOut& t = results[ni * cfg.replicates + rep];
                if (t.aborted) {
                    ++blk.aborted;
                    continue;
                }
                counts.push_back(static_cast<double>(t.counts[pi]));
                if (leading[ni][pi] > 0.0)
                    ratios.push_back(static_cast<double>(t.counts[pi]) / leading[ni][pi]);
            }
            blk.replicates = static_cast<std::uint32_t>(counts.size());
            MeanSd cs = mean_sd(counts);
            blk.mean_count = cs.mean;
            blk.sd_count = cs.sd;
            if (!ratios.empty()) {
                blk.has_ratio = true;
                blk.mean_ratio = mean_sd(ratios).mean;
            }
            if (cs.mean > 0.0 && blk.replicates > 0)
                blk.rel_halfwidth95 =
                    1.96 * cs.sd / (std::sqrt(static_cast<double>(blk.replicates)) * cs.mean);
            res.summaries.push_back(std::move(blk));
        }
    }

    for (const SummaryBlock& b : res.summaries) {
        out << "# summary,n=" << b.n << ",m=" << b.m << ",pattern=" << b.pattern
            << ",replicates=" << b.replicates << ",mean_count=" << fmt_double(b.mean_count)
            << ",sd_count=" << fmt_double(b.sd_count);
        if (b.has_ratio) out << ",mean_ratio=" << fmt_double(b.mean_ratio);
        out << ",rel_halfwidth95=" << fmt_double(b.rel_halfwidth95);
        if (b.aborted) out << ",aborted=" << b.aborted;
        out << '\n';
    }
    if (!out) throw config_error("failed writing: " + cfg.output);
    out.close();

    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

ConvergenceTable summarize_convergence(const std::vector<std::string>& csv_paths) {
    if (csv_paths.empty()) throw config_error("summarize: no input files");

    struct Key {
        std::string pattern;
        std::uint32_t n;
        bool operator<(const Key& o) const {
            return pattern != o.pattern ? pattern < o.pattern : n < o.n;
        }
    };
    std::map<Key, std::vector<double>> groups;
    std::set<std::uint32_t> distinct_n;

    for (const std::string& path : csv_paths) {
        std::ifstream in(path);
        if (!in) throw config_error("summarize: cannot open " + path);
        std::string line;
        bool have_header = false;
        int col_n = -1, col_pattern = -1, col_ratio = -1;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto fields = split_csv_line(line);
            if (!have_header) {
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (fields[i] == "n") col_n = static_cast<int>(i);
                    if (fields[i] == "pattern") col_pattern = static_cast<int>(i);
                    if (fields[i] == "ratio") col_ratio = static_cast<int>(i);
                }
                if (col_n < 0) throw config_error("summarize: " + path + " missing column: n");
                if (col_pattern < 0)
                    throw config_error("summarize: " + path + " missing column: pattern");
                if (col_ratio < 0)
                    throw config_error("summarize: " + path + " missing column: ratio");
                have_header = true;
                continue;
            }
            if (static_cast<int>(fields.size()) <=
                std::max({col_n, col_pattern, col_ratio}))
                throw config_error("summarize: " + path + " has a short row");
            const std::string& ratio_s = fields[static_cast<std::size_t>(col_ratio)];
            if (ratio_s.empty()) continue;  // leading term was zero
            std::uint32_t n;
            double ratio;
            try {
                n = static_cast<std::uint32_t>(
                    std::stoul(fields[static_cast<std::size_t>(col_n)]));
                ratio = std::stod(ratio_s);
            } catch (const std::exception&) {
                throw config_error("summarize: " + path + " has a malformed row");
            }
            groups[{fields[static_cast<std::size_t>(col_pattern)], n}].push_back(ratio);
            distinct_n.insert(n);
        }
        if (!have_header) throw config_error("summarize: " + path + " has no header row");
    }

    if (distinct_n.size() < 2)
        throw config_error("summarize: needs rows for at least 2 distinct n values");

    ConvergenceTable table;
    for (const auto& [key, ratios] : groups) {
        MeanSd ms = mean_sd(ratios);
        table.rows.push_back({key.pattern, key.n, ratios.size(), ms.mean, ms.sd});
    }
    // per-pattern monotonicity flag over ascending n
    for (std::size_t i = 0; i < table.rows.size();) {
        std::size_t j = i;
        bool ok = true;
        while (j + 1 < table.rows.size() &&
               table.rows[j + 1].pattern == table.rows[i].pattern) {
            if (table.rows[j + 1].sd_ratio > table.rows[j].sd_ratio) ok = false;
            ++j;
        }
        table.sd_non_increasing.emplace_back(table.rows[i].pattern, ok);
        i = j + 1;
    }
    return table;
}

RegimeDemoResult run_regime_demo(const RegimeDemoParams& params) {
    if (params.n < 1000) throw config_error("regime-demo: n must be >= 1000");
    if (params.replicates < 1) throw config_error("regime-demo: replicates must be >= 1");

    RegimeDemoResult res;
    res.exponent_in_range = params.exponent > 0.125 && params.exponent < 0.25;
    res.p = std::pow(static_cast<double>(params.n), -params.exponent);
    LayerDistribution dist = LayerDistribution::point_mass(5, res.p);
    std::uint64_t m = params.n;
    res.leading_c4 = expected_cycles_leading(m, dist, 4).leading;
    res.leading_k4 = expected_cliques_leading(m, dist, 4).leading;

    std::vector<std::uint64_t> c4(params.replicates), k4(params.replicates);
    parallel_for(params.replicates, params.threads, [&](std::uint64_t rep) {
        std::uint64_t seed = child_seed(params.base_seed, params.n, rep);
        Graph g = generate({params.n, m, dist, seed});
        c4[rep] = count_cycles(g, 4).count;
        k4[rep] = count_cliques(g, 4).count;
    });
    double sc = 0, sk = 0;
    for (std::uint32_t i = 0; i < params.replicates; ++i) {
        sc += static_cast<double>(c4[i]);
        sk += static_cast<double>(k4[i]);
    }
    res.mean_c4 = sc / params.replicates;
    res.mean_k4 = sk / params.replicates;
    return res;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::uint64_t lineno = 0;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error(path + " line " + std::to_string(lineno) +
                               ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw config_error(path + " line " + std::to_string(lineno) + ": empty key");
        if (!kv.emplace(key, value).second)
            throw config_error(path + " line " + std::to_string(lineno) +
                               ": duplicate key " + key);
    }
    return kv;
}

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& value, const std::string& key) {
    std::vector<T> out;
    std::istringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("");
            out.push_back(static_cast<T>(v));
        } catch (const std::exception&) {
            throw config_error("config key " + key + ": bad integer \"" + tok + "\"");
        }
    }
    if (out.empty()) throw config_error("config key " + key + ": empty list");
    return out;
}

}  // namespace

ExperimentConfig config_from_kv(const std::map<std::string, std::string>& kv) {
    ExperimentConfig cfg;
    for (const auto& [key, value] : kv) {
        if (key == "n") {
            cfg.n_values = parse_list<std::uint32_t>(value, key);
        } else if (key == "m") {
            cfg.m_rule = parse_list<std::uint64_t>(value, key);
        } else if (key == "m_ratio") {
            try {
                cfg.m_rule = std::stod(value);
            } catch (const std::exception&) {
                throw config_error("config key m_ratio: bad number \"" + value + "\"");
            }
        } else if (key == "dist") {
            cfg.dist = LayerDistribution::parse(value);
        } else if (key == "patterns") {
            std::istringstream ss(value);
            std::string tok;
            while (std::getline(ss, tok, ','))
                cfg.patterns.push_back(parse_pattern(tok));
        } else if (key == "replicates") {
            cfg.replicates = parse_list<std::uint32_t>(value, key).at(0);
        } else if (key == "seed") {
            cfg.base_seed = parse_list<std::uint64_t>(value, key).at(0);
        } else if (key == "out") {
            cfg.output = value;
        } else if (key == "threads") {
            cfg.threads = parse_list<std::uint32_t>(value, key).at(0);
        } else {
            throw config_error("config: unknown key \"" + key + "\"");
        }
    }
    return cfg;
}

}  // namespace ogl
