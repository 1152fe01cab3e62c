#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ogl/layer_dist.hpp"
#include "ogl/pattern.hpp"

namespace ogl {

inline constexpr const char* kCsvVersionComment = "# overlap-graph-lab v1";
inline constexpr const char* kCsvHeader =
    "n,m,pattern,replicate,seed,count,theory_leading,ratio";

struct ExperimentConfig {
    std::vector<std::uint32_t> n_values;
    // explicit layer counts (one per n, or a single value reused) or a ratio
    // rule m = round(ratio * n)
    std::variant<std::vector<std::uint64_t>, double> m_rule =
        std::vector<std::uint64_t>{};
    LayerDistribution dist = LayerDistribution::point_mass(0, 0.0);
    std::vector<SubgraphPattern> patterns;
    std::uint32_t replicates = 1;
    std::uint64_t base_seed = 0;
    std::string output;
    unsigned threads = 0;  // 0 = hardware concurrency
};

std::uint64_t resolve_m(const ExperimentConfig& cfg, std::size_t n_index);

// Throws config_error on anything wrong before computation starts.
void validate(const ExperimentConfig& cfg);

struct SummaryBlock {
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    std::string pattern;
    std::uint32_t replicates = 0;
    std::uint32_t aborted = 0;
    double mean_count = 0.0;
    double sd_count = 0.0;
    double mean_ratio = 0.0;        // valid iff has_ratio
    double rel_halfwidth95 = 0.0;   // 1.96*sd/(sqrt(R)*mean), 0 when mean = 0
    bool has_ratio = false;
};

struct ExperimentResult {
    std::vector<SummaryBlock> summaries;
    std::string csv_path;
    std::uint64_t rows_written = 0;
    std::uint64_t replicates_aborted = 0;
    double elapsed_ms = 0.0;
};

// Generates replicate graphs (seed = child_seed(base, n, replicate)), counts
// every pattern, writes sorted CSV rows plus "# summary," comment lines.
// Replicates run on a worker pool; output is independent of thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct ConvergenceRow {
    std::string pattern;
    std::uint32_t n = 0;
    std::uint64_t rows = 0;
    double mean_ratio = 0.0;
    double sd_ratio = 0.0;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;  // sorted by (pattern, n)
    std::vector<std::pair<std::string, bool>> sd_non_increasing;
};

// Reads experiment CSVs (>= 2 distinct n required) and tabulates the ratio
// statistics per pattern. Throws config_error naming any missing column.
ConvergenceTable summarize_convergence(const std::vector<std::string>& csv_paths);

struct RegimeDemoParams {
    std::uint32_t n = 0;
    double exponent = 0.0;  // strength p = n^(-exponent)
    std::uint32_t replicates = 1;
    std::uint64_t base_seed = 0;
    unsigned threads = 0;
};

struct RegimeDemoResult {
    double p = 0.0;
    double mean_c4 = 0.0;
    double mean_k4 = 0.0;
    double leading_c4 = 0.0;
    double leading_k4 = 0.0;
    bool exponent_in_range = true;  // (1/8, 1/4)
};

// m = n, dist = point mass at size 5 with strength n^(-exponent); reports
// 4-cycle vs 4-clique frequencies against their leading terms. n >= 1000.
RegimeDemoResult run_regime_demo(const RegimeDemoParams& params);

// Flat "key = value" file; '#' lines are comments. Unknown keys rejected.
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Builds a config from parsed key/values (shared with the CLI override path).
ExperimentConfig config_from_kv(const std::map<std::string, std::string>& kv);

}  // namespace ogl
