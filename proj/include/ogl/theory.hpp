#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ogl/layer_dist.hpp"
#include "ogl/pattern.hpp"

namespace ogl {

struct TheoryPrediction {
    double leading = 0.0;
    // the closed forms carry an unevaluated (1 + O(1/n)) factor
    const char* correction_note = "leading term only; (1+O(1/n)) factor not evaluated";
    std::optional<double> q_rate;  // user-supplied rate parameter, reporting only
};

struct BoundParams {
    double x = 0.0;                // <= 0 means "derive from the distribution"
    double y = 0.0;                // ditto
    std::optional<double> c;      // max_E (pi)_{||E||,|E|} / (x^||E|| y^|E|)
};

struct InclusionBounds {
    double u_exact = 0.0;   // U(R)
    double l_upper = 0.0;   // L(R) exactly, or an upper bound on it
    double f_lower = 0.0;   // max(U - l_upper/2, 0)
    double f_upper = 0.0;   // min(U, 1)
    bool l_is_exact = false;
};

// (1/r!) m E[(X)_r Y^(r(r-1)/2)], r >= 2.
TheoryPrediction expected_cliques_leading(std::uint64_t m, const LayerDistribution& dist,
                                          int r);
// (1/2r) m E[(X)_r Y^r], r >= 3.
TheoryPrediction expected_cycles_leading(std::uint64_t m, const LayerDistribution& dist,
                                         int r);
// m (pi)_{r,s} / |Aut(R)| — coincides with the two above on cliques/cycles.
double pattern_leading_term(const SubgraphPattern& p, std::uint64_t m,
                            const LayerDistribution& dist);

// U(R) = sum over set partitions P of E(R) of
//        (m)_|P| * prod_B (pi)_{||B||,|B|} / (n)_{||B||}.
// Guards: s <= 8, n >= r.
double exact_U(const SubgraphPattern& p, std::uint32_t n, std::uint64_t m,
               const LayerDistribution& dist);

// L(R) = sum over ordered pairs of distinct edge->layer mappings of the joint
// event probability (per-layer merged edge sets). Guards: s <= 6, m^s <= 1e6.
// Cost is O(m^(2s)) pairs.
double exact_L(const SubgraphPattern& p, std::uint32_t n, std::uint64_t m,
               const LayerDistribution& dist);

// Closed-form upper bounds (u_bound on U, l_bound on L):
//   u = (e^(r! c x m / n) - 1) s^s     x^(r-1) y^s     n^(1-r)
//   l = (e^(r! c x m / n) - 1) (2s)^2s x^r     y^(s+1) n^(-r)
// Unset BoundParams fields are derived from the distribution (x: max size,
// y: max strength, c: profile sweep over subsets of E(R)). Requires n >= x.
std::pair<double, double> lemma3_bounds(const SubgraphPattern& p, std::uint32_t n,
                                        std::uint64_t m, const LayerDistribution& dist,
                                        BoundParams bp = {});

// Resolves the BoundParams defaults without computing the bounds.
BoundParams default_bound_params(const LayerDistribution& dist);

// The constant c = max over subset profiles of (pi)_{||E||,|E|}/(x^||E|| y^|E|).
double lemma3_c(const SubgraphPattern& p, const LayerDistribution& dist, double x,
                double y);

// exact U plus the best affordable L bound (exact when the pair enumeration
// is small, lemma-3 otherwise), sandwiching f(R) = Pr(G contains R).
InclusionBounds inclusion_bounds(const SubgraphPattern& p, std::uint32_t n,
                                 std::uint64_t m, const LayerDistribution& dist);

// [ (n)_r/|Aut| * f_lower, (n)_r/|Aut| * f_upper ] bracketing E N_R.
std::pair<double, double> expected_count_bracket(const SubgraphPattern& p,
                                                 std::uint32_t n, std::uint64_t m,
                                                 const LayerDistribution& dist);

// Per-pair edge probability of the model: 1 - (1 - (pi)_{2,1}/(n)_2)^m.
double matched_er_probability(std::uint32_t n, std::uint64_t m,
                              const LayerDistribution& dist);

// G(n,p) first moment: (n)_r/|Aut(R)| * p^s.
double er_expected_count(std::uint32_t n, double p, const SubgraphPattern& pattern);

}  // namespace ogl
