#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ogl/combinatorics.hpp"
#include "ogl/count.hpp"
#include "ogl/covers.hpp"
#include "ogl/errors.hpp"
#include "ogl/experiment.hpp"
#include "ogl/generate.hpp"
#include "ogl/graph.hpp"
#include "ogl/kernels.hpp"
#include "ogl/layer_dist.hpp"
#include "ogl/theory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitGuard = 3;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void dump_layers(const std::vector<ogl::LayerRealization>& layers,
                 const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ogl::config_error("cannot open layer dump path: " + path);
    for (const auto& L : layers) {
        out << L.index << ' ' << L.type.x << ' ' << fmt(L.type.y) << " :";
        for (std::uint32_t v : L.nodes) out << ' ' << v;
        out << " ;";
        for (auto [u, w] : L.edges) out << ' ' << u << '-' << w;
        out << '\n';
    }
    if (!out) throw ogl::config_error("failed writing: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"overlap-graph-lab: overlapping-community random graphs, "
                 "subgraph counts, and their theoretical baselines"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string config_path, out_path;
    app.add_option("--seed", seed, "base random seed");
    app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
    app.add_option("--config", config_path, "flat key = value config file");
    app.add_option("--out", out_path, "output file path");

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "sample a graph, write its edge list");
    gen->fallthrough();
    std::uint32_t gen_n = 0;
    std::uint64_t gen_m = 0;
    std::string gen_dist, gen_layers;
    gen->add_option("--n", gen_n, "node count")->required();
    gen->add_option("--m", gen_m, "layer count")->required();
    gen->add_option("--dist", gen_dist, "layer distribution spec")->required();
    gen->add_option("--layers", gen_layers, "also dump the layer decomposition here");

    // ---- count ----
    auto* cnt = app.add_subcommand("count", "count pattern occurrences in an edge list");
    cnt->fallthrough();
    std::string cnt_in;
    std::vector<std::string> cnt_patterns;
    cnt->add_option("--in", cnt_in, "input edge list")->required();
    cnt->add_option("--pattern", cnt_patterns, "clique:R | cycle:R | custom:u-v;...")
        ->required();

    // ---- theory ----
    auto* thr = app.add_subcommand("theory", "leading terms, U/L bounds, count bracket");
    thr->fallthrough();
    std::uint32_t thr_n = 0;
    std::uint64_t thr_m = 0;
    std::string thr_dist;
    std::vector<std::string> thr_patterns;
    std::optional<double> thr_q;
    thr->add_option("--n", thr_n)->required();
    thr->add_option("--m", thr_m)->required();
    thr->add_option("--dist", thr_dist)->required();
    thr->add_option("--pattern", thr_patterns)->required();
    double thr_q_val = 0;
    auto* thr_q_opt = thr->add_option("--q", thr_q_val, "rate parameter, reported only");

    // ---- bounds ----
    auto* bnd = app.add_subcommand("bounds", "closed-form upper bounds on U and L");
    bnd->fallthrough();
    std::uint32_t bnd_n = 0;
    std::uint64_t bnd_m = 0;
    std::string bnd_dist;
    std::vector<std::string> bnd_patterns;
    double bnd_x = 0, bnd_y = 0, bnd_c = 0;
    bnd->add_option("--n", bnd_n)->required();
    bnd->add_option("--m", bnd_m)->required();
    bnd->add_option("--dist", bnd_dist)->required();
    bnd->add_option("--pattern", bnd_patterns)->required();
    bnd->add_option("--x", bnd_x, "size scale (default: max attainable size)");
    bnd->add_option("--y", bnd_y, "strength scale (default: max strength)");
    auto* bnd_c_opt = bnd->add_option("--c", bnd_c, "override the moment-ratio constant");

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "exhaustive combinatorial lemma checks");
    ver->fallthrough();
    int ver_lemma = 0;
    std::string ver_pattern, ver_pattern2;
    int ver_r = 0;
    ver->add_option("--lemma", ver_lemma, "1, 2 or 6")->required();
    ver->add_option("--pattern", ver_pattern, "pattern (lemma 1/2; clique:R for 6)");
    ver->add_option("--pattern2", ver_pattern2, "second pattern (lemma 2)");
    ver->add_option("--r", ver_r, "clique size (lemma 6 shortcut)");

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "seeded Monte Carlo experiment -> CSV");
    exp->fallthrough();
    std::vector<std::uint32_t> exp_n;
    std::vector<std::uint64_t> exp_m;
    double exp_m_ratio = 0;
    std::string exp_dist, exp_patterns;
    std::uint32_t exp_replicates = 0;
    exp->add_option("--n", exp_n, "node counts");
    exp->add_option("--m", exp_m, "layer counts (single value or one per n)");
    auto* exp_mr = exp->add_option("--m-ratio", exp_m_ratio, "m = round(ratio * n)");
    exp->add_option("--dist", exp_dist, "layer distribution spec");
    exp->add_option("--patterns", exp_patterns, "comma-separated pattern specs");
    auto* exp_rep = exp->add_option("--replicates", exp_replicates);

    // ---- regime-demo ----
    auto* reg = app.add_subcommand(
        "regime-demo", "4-cycles vs 4-cliques at strength p = n^(-e)");
    reg->fallthrough();
    std::uint32_t reg_n = 0;
    double reg_e = 0;
    std::uint32_t reg_reps = 50;
    reg->add_option("--n", reg_n)->required();
    reg->add_option("--exponent", reg_e, "e with p = n^(-e)")->required();
    reg->add_option("--replicates", reg_reps);

    // ---- summarize ----
    auto* sum = app.add_subcommand("summarize", "ratio convergence table from CSVs");
    sum->fallthrough();
    std::vector<std::string> sum_inputs;
    sum->add_option("csv", sum_inputs, "experiment CSV files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            if (out_path.empty())
                throw ogl::config_error("generate: --out is required");
            ogl::ModelParams params{gen_n, gen_m, ogl::LayerDistribution::parse(gen_dist),
                                    seed};
            if (!gen_layers.empty()) {
                auto layers = ogl::generate_layers(params);
                std::vector<std::uint64_t> keys;
                for (const auto& L : layers)
                    for (auto [u, v] : L.edges)
                        keys.push_back((static_cast<std::uint64_t>(u) << 32) | v);
                std::sort(keys.begin(), keys.end());
                keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
                ogl::write_edge_list_file(ogl::Graph::from_sorted_keys(gen_n, keys),
                                          out_path);
                dump_layers(layers, gen_layers);
            } else {
                ogl::write_edge_list_file(ogl::generate(params), out_path);
            }
            return kExitOk;
        }

        if (*cnt) {
            ogl::Graph g = ogl::read_edge_list_file(cnt_in);
            std::cout << "pattern,count,elapsed_ms\n";
            for (const std::string& ps : cnt_patterns) {
                ogl::CountResult r = ogl::count_pattern(g, ogl::parse_pattern(ps));
                std::cout << r.pattern.name() << ',' << r.count << ','
                          << fmt(r.elapsed_ms) << '\n';
            }
            return kExitOk;
        }

        if (*thr) {
            auto dist = ogl::LayerDistribution::parse(thr_dist);
            double p_er = ogl::matched_er_probability(thr_n, thr_m, dist);
            std::cout
                << "pattern,leading,U,L_upper,f_lower,f_upper,EN_lower,EN_upper,p_er\n";
            for (const std::string& ps : thr_patterns) {
                ogl::SubgraphPattern pat = ogl::parse_pattern(ps);
                double leading = ogl::pattern_leading_term(pat, thr_m, dist);
                ogl::InclusionBounds ib = ogl::inclusion_bounds(pat, thr_n, thr_m, dist);
                double scale = ogl::falling_factorial(thr_n, pat.node_count()) /
                               static_cast<double>(pat.automorphisms());
                std::cout << pat.name() << ',' << fmt(leading) << ',' << fmt(ib.u_exact)
                          << ',' << fmt(ib.l_upper) << ',' << fmt(ib.f_lower) << ','
                          << fmt(ib.f_upper) << ',' << fmt(scale * ib.f_lower) << ','
                          << fmt(scale * ib.f_upper) << ',' << fmt(p_er) << '\n';
                if (*thr_q_opt && thr_q_val > 0) {
                    double qs = std::pow(thr_q_val, pat.edge_count());
                    std::cout << "# q_rate,pattern=" << pat.name() << ",leading/(n*q^s)="
                              << fmt(leading / (static_cast<double>(thr_n) * qs)) << '\n';
                }
            }
            return kExitOk;
        }

        if (*bnd) {
            auto dist = ogl::LayerDistribution::parse(bnd_dist);
            std::cout << "pattern,x,y,c,u_bound,l_bound\n";
            for (const std::string& ps : bnd_patterns) {
                ogl::SubgraphPattern pat = ogl::parse_pattern(ps);
                ogl::BoundParams bp = ogl::default_bound_params(dist);
                if (bnd_x > 0) bp.x = bnd_x;
                if (bnd_y > 0) bp.y = bnd_y;
                double c = *bnd_c_opt ? bnd_c : ogl::lemma3_c(pat, dist, bp.x, bp.y);
                bp.c = c;
                auto [u_bound, l_bound] = ogl::lemma3_bounds(pat, bnd_n, bnd_m, dist, bp);
                std::cout << pat.name() << ',' << fmt(bp.x) << ',' << fmt(bp.y) << ','
                          << fmt(c) << ',' << fmt(u_bound) << ',' << fmt(l_bound) << '\n';
            }
            return kExitOk;
        }

        if (*ver) {
            ogl::LemmaReport rep;
            if (ver_lemma == 1) {
                if (ver_pattern.empty())
                    throw ogl::config_error("verify --lemma 1 needs --pattern");
                rep = ogl::check_lemma1(ogl::parse_pattern(ver_pattern));
            } else if (ver_lemma == 2) {
                if (ver_pattern.empty() || ver_pattern2.empty())
                    throw ogl::config_error("verify --lemma 2 needs --pattern and --pattern2");
                rep = ogl::check_lemma2(ogl::parse_pattern(ver_pattern),
                                        ogl::parse_pattern(ver_pattern2));
            } else if (ver_lemma == 6) {
                int r = ver_r;
                if (r == 0 && !ver_pattern.empty()) {
                    ogl::SubgraphPattern pat = ogl::parse_pattern(ver_pattern);
                    if (pat.kind() != ogl::PatternKind::clique)
                        throw ogl::config_error("verify --lemma 6 takes clique:R");
                    r = pat.node_count();
                }
                if (r == 0)
                    throw ogl::config_error("verify --lemma 6 needs --r or --pattern clique:R");
                rep = ogl::check_lemma6(r);
            } else {
                throw ogl::config_error("verify: --lemma must be 1, 2 or 6");
            }
            std::cout << "lemma,cases_checked,violations\n"
                      << rep.lemma << ',' << rep.cases_checked << ',' << rep.violations
                      << '\n';
            if (rep.violations) {
                std::cerr << rep.detail << '\n';
                return kExitViolation;
            }
            return kExitOk;
        }

        if (*exp) {
            std::map<std::string, std::string> kv;
            if (!config_path.empty()) kv = ogl::parse_config_file(config_path);
            ogl::ExperimentConfig cfg = ogl::config_from_kv(kv);
            // CLI flags override file values
            if (!exp_n.empty()) cfg.n_values = exp_n;
            if (!exp_m.empty()) cfg.m_rule = exp_m;
            if (*exp_mr) cfg.m_rule = exp_m_ratio;
            if (!exp_dist.empty()) cfg.dist = ogl::LayerDistribution::parse(exp_dist);
            if (!exp_patterns.empty()) {
                cfg.patterns.clear();
                std::istringstream ss(exp_patterns);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    cfg.patterns.push_back(ogl::parse_pattern(tok));
            }
            if (*exp_rep) cfg.replicates = exp_replicates;
            if (app.count("--seed")) cfg.base_seed = seed;
            if (app.count("--threads")) cfg.threads = threads;
            if (!out_path.empty()) cfg.output = out_path;

            ogl::ExperimentResult res = ogl::run_experiment(cfg);
            for (const auto& b : res.summaries) {
                std::cout << "summary n=" << b.n << " m=" << b.m
                          << " pattern=" << b.pattern << " replicates=" << b.replicates
                          << " mean_count=" << fmt(b.mean_count)
                          << " sd_count=" << fmt(b.sd_count);
                if (b.has_ratio) std::cout << " mean_ratio=" << fmt(b.mean_ratio);
                std::cout << " rel_halfwidth95=" << fmt(b.rel_halfwidth95);
                if (b.aborted) std::cout << " aborted=" << b.aborted;
                std::cout << '\n';
            }
            std::cout << "wrote " << res.rows_written << " rows to " << res.csv_path
                      << " (" << fmt(res.elapsed_ms) << " ms, kernels="
                      << ogl::kernels::backend_name() << ")\n";
            return res.replicates_aborted ? kExitGuard : kExitOk;
        }

        if (*reg) {
            ogl::RegimeDemoParams params{reg_n, reg_e, reg_reps, seed, threads};
            if (!(reg_e > 0.125 && reg_e < 0.25))
                std::cerr << "warning: exponent " << reg_e
                          << " outside (1/8, 1/4); running anyway\n";
            ogl::RegimeDemoResult r = ogl::run_regime_demo(params);
            std::cout << "regime-demo n=" << reg_n << " p=" << fmt(r.p)
                      << " replicates=" << reg_reps << '\n'
                      << "mean_c4=" << fmt(r.mean_c4) << " leading_c4=" << fmt(r.leading_c4)
                      << '\n'
                      << "mean_k4=" << fmt(r.mean_k4) << " leading_k4=" << fmt(r.leading_k4)
                      << '\n';
            if (r.mean_k4 > 0)
                std::cout << "c4_to_k4_ratio=" << fmt(r.mean_c4 / r.mean_k4) << '\n';
            return kExitOk;
        }

        if (*sum) {
            ogl::ConvergenceTable table = ogl::summarize_convergence(sum_inputs);
            std::cout << "pattern,n,rows,mean_ratio,sd_ratio\n";
            for (const auto& r : table.rows)
                std::cout << r.pattern << ',' << r.n << ',' << r.rows << ','
                          << fmt(r.mean_ratio) << ',' << fmt(r.sd_ratio) << '\n';
            for (const auto& [pattern, ok] : table.sd_non_increasing)
                std::cout << "# sd_non_increasing,pattern=" << pattern << ','
                          << (ok ? "true" : "false") << '\n';
            return kExitOk;
        }
    } catch (const ogl::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ogl::guard_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitGuard;
    }
    return kExitUsage;
}
