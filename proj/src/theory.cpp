#include "ogl/theory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "ogl/combinatorics.hpp"
#include "ogl/covers.hpp"
#include "ogl/errors.hpp"

namespace ogl {

namespace {

// Memo for (pi)_{a,b} / (n)_a over the tiny (a,b) range a pattern produces.
class MomentCache {
public:
    MomentCache(const LayerDistribution& dist, std::uint32_t n) : dist_(dist), n_(n) {}

    double term(int a, int b) {
        auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
        if (ia >= kDim || ib >= kDim) return raw(a, b);
        if (!set_[ia][ib]) {
            val_[ia][ib] = raw(a, b);
            set_[ia][ib] = true;
        }
        return val_[ia][ib];
    }

private:
    double raw(int a, int b) const {
        return dist_.cross_moment(a, b) / falling_factorial(n_, a);
    }

    static constexpr std::size_t kDim = 18;
    const LayerDistribution& dist_;
    std::uint32_t n_;
    bool set_[kDim][kDim] = {};
    double val_[kDim][kDim] = {};
};

struct SubsetTables {
    int s = 0;
    std::vector<int> norm;  // ||subset|| per mask
    std::vector<int> pop;
};

SubsetTables subset_tables(const SubgraphPattern& p) {
    SubsetTables t;
    t.s = p.edge_count();
    std::vector<std::uint32_t> node_mask(static_cast<std::size_t>(t.s));
    for (int i = 0; i < t.s; ++i) {
        auto [u, v] = p.edges()[static_cast<std::size_t>(i)];
        node_mask[static_cast<std::size_t>(i)] = (1u << u) | (1u << v);
    }
    std::size_t lim = 1ull << t.s;
    t.norm.resize(lim);
    t.pop.resize(lim);
    for (std::size_t m = 0; m < lim; ++m) {
        std::uint32_t nodes = 0;
        for (int i = 0; i < t.s; ++i)
            if (m & (1ull << i)) nodes |= node_mask[static_cast<std::size_t>(i)];
        t.norm[m] = std::popcount(nodes);
        t.pop[m] = std::popcount(static_cast<std::uint32_t>(m));
    }
    return t;
}

}  // namespace

TheoryPrediction expected_cliques_leading(std::uint64_t m, const LayerDistribution& dist,
                                          int r) {
    if (r < 2) throw guard_error("expected_cliques_leading: r must be >= 2");
    TheoryPrediction pred;
    pred.leading = static_cast<double>(m) * dist.cross_moment(r, r * (r - 1) / 2) /
                   static_cast<double>(factorial_u64(r));
    return pred;
}

TheoryPrediction expected_cycles_leading(std::uint64_t m, const LayerDistribution& dist,
                                         int r) {
    if (r < 3) throw guard_error("expected_cycles_leading: r must be >= 3");
    TheoryPrediction pred;
    pred.leading = static_cast<double>(m) * dist.cross_moment(r, r) /
                   (2.0 * static_cast<double>(r));
    return pred;
}

double pattern_leading_term(const SubgraphPattern& p, std::uint64_t m,
                            const LayerDistribution& dist) {
    return static_cast<double>(m) * dist.cross_moment(p.node_count(), p.edge_count()) /
           static_cast<double>(p.automorphisms());
}

double exact_U(const SubgraphPattern& p, std::uint32_t n, std::uint64_t m,
               const LayerDistribution& dist) {
    int s = p.edge_count();
    int r = p.node_count();
    if (s > 8) throw guard_error("exact_U: pattern has more than 8 edges");
    if (n < static_cast<std::uint32_t>(r))
        throw guard_error("exact_U: n=" + std::to_string(n) + " smaller than pattern (" +
                          std::to_string(r) + " nodes)");
    if (m == 0) return 0.0;

    SubsetTables tk = subset_tables(p);
    MomentCache cache(dist, n);
    double total = 0.0;
    for_each_set_partition(s, [&](const int* rgs, int t) {
        double w = falling_factorial(static_cast<double>(m), t);
        if (w == 0.0) return;
        std::array<std::uint32_t, 8> bm{};
        for (int i = 0; i < s; ++i) bm[static_cast<std::size_t>(rgs[i])] |= (1u << i);
        double prod = w;
        for (int b = 0; b < t; ++b) {
            std::uint32_t mask = bm[static_cast<std::size_t>(b)];
            prod *= cache.term(tk.norm[mask], tk.pop[mask]);
        }
        total += prod;
    });
    return total;
}

double exact_L(const SubgraphPattern& p, std::uint32_t n, std::uint64_t m,
               const LayerDistribution& dist) {
    int s = p.edge_count();
    int r = p.node_count();
    if (s > 6) throw guard_error("exact_L: pattern has more than 6 edges");
    if (n < static_cast<std::uint32_t>(r)) throw guard_error("exact_L: n smaller than pattern");
    if (m <= 1) return 0.0;
    double mappings = std::pow(static_cast<double>(m), s);
    if (mappings > 1e6) throw guard_error("exact_L: m^s exceeds 1e6");

    SubsetTables tk = subset_tables(p);
    MomentCache cache(dist, n);
    auto total_maps = static_cast<std::uint64_t>(mappings + 0.5);

    // digit arrays for every mapping (edge -> layer)
    std::vector<std::uint8_t> digits;
    bool small_m = m <= 255;
    std::vector<std::uint32_t> digits32;
    if (small_m) {
        digits.resize(total_maps * static_cast<std::size_t>(s));
        for (std::uint64_t f = 0; f < total_maps; ++f) {
            std::uint64_t v = f;
            for (int e = 0; e < s; ++e) {
                digits[f * static_cast<std::uint64_t>(s) + static_cast<std::uint64_t>(e)] =
                    static_cast<std::uint8_t>(v % m);
                v /= m;
            }
        }
    } else {
        digits32.resize(total_maps * static_cast<std::size_t>(s));
        for (std::uint64_t f = 0; f < total_maps; ++f) {
            std::uint64_t v = f;
            for (int e = 0; e < s; ++e) {
                digits32[f * static_cast<std::uint64_t>(s) + static_cast<std::uint64_t>(e)] =
                    static_cast<std::uint32_t>(v % m);
                v /= m;
            }
        }
    }
    auto digit = [&](std::uint64_t f, int e) -> std::uint32_t {
        auto idx = f * static_cast<std::uint64_t>(s) + static_cast<std::uint64_t>(e);
        return small_m ? digits[idx] : digits32[idx];
    };

    // per-layer merged edge masks, tiny linear map (at most 2s layers touched)
    struct Entry {
        std::uint32_t layer;
        std::uint32_t mask;
    };
    std::array<Entry, 16> layers{};

    double total = 0.0;
    for (std::uint64_t f = 0; f < total_maps; ++f) {
        for (std::uint64_t g = 0; g < total_maps; ++g) {
            if (f == g) continue;
            int nl = 0;
            auto add = [&](std::uint32_t layer, int e) {
                for (int t = 0; t < nl; ++t)
                    if (layers[static_cast<std::size_t>(t)].layer == layer) {
                        layers[static_cast<std::size_t>(t)].mask |= (1u << e);
                        return;
                    }
                layers[static_cast<std::size_t>(nl++)] = {layer, 1u << static_cast<std::uint32_t>(e)};
            };
            for (int e = 0; e < s; ++e) {
                add(digit(f, e), e);
                add(digit(g, e), e);
            }
            double prod = 1.0;
            for (int t = 0; t < nl; ++t) {
                std::uint32_t mask = layers[static_cast<std::size_t>(t)].mask;
                prod *= cache.term(tk.norm[mask], tk.pop[mask]);
                if (prod == 0.0) break;
            }
            total += prod;
        }
    }
    return total;
}

BoundParams default_bound_params(const LayerDistribution& dist) {
    BoundParams bp;
    bp.x = std::max<double>(dist.max_size(), 1.0);
    double y = dist.max_strength();
    bp.y = y > 0.0 ? std::min(y, 1.0) : 1.0;
    return bp;
}

double lemma3_c(const SubgraphPattern& p, const LayerDistribution& dist, double x,
                double y) {
    int s = p.edge_count();
    if (s > 8) throw guard_error("lemma3_c: pattern has more than 8 edges");
    // max over the distinct (||E||,|E|) profiles of subsets of E(R)
    SubsetTables tk = subset_tables(p);
    std::array<std::array<bool, 10>, 10> seen{};
    double c = 0.0;
    std::size_t lim = 1ull << s;
    for (std::size_t mask = 0; mask < lim; ++mask) {
        int a = tk.norm[mask], b = tk.pop[mask];
        if (seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
        seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        c = std::max(c, dist.cross_moment(a, b) / (std::pow(x, a) * std::pow(y, b)));
    }
    return c;
}

std::pair<double, double> lemma3_bounds(const SubgraphPattern& p, std::uint32_t n,
                                        std::uint64_t m, const LayerDistribution& dist,
                                        BoundParams bp) {
    int s = p.edge_count();
    int r = p.node_count();
    if (s > 8) throw guard_error("lemma3_bounds: pattern has more than 8 edges");
    BoundParams defaults = default_bound_params(dist);
    double x = bp.x > 0.0 ? bp.x : defaults.x;
    double y = bp.y > 0.0 ? bp.y : defaults.y;
    if (!(x > 0.0)) throw guard_error("lemma3_bounds: x must be positive");
    if (!(y > 0.0 && y <= 1.0)) throw guard_error("lemma3_bounds: y must be in (0,1]");
    if (static_cast<double>(n) < x)
        throw guard_error("lemma3_bounds: requires n >= x");

    double c = bp.c ? *bp.c : lemma3_c(p, dist, x, y);

    double rfact = static_cast<double>(factorial_u64(r));
    double growth = std::expm1(rfact * c * x * static_cast<double>(m) /
                               static_cast<double>(n));
    double sd = static_cast<double>(s);
    double nd = static_cast<double>(n);
    double u_bound = growth * std::pow(sd, sd) * std::pow(x, r - 1) * std::pow(y, sd) *
                     std::pow(nd, 1 - r);
    double l_bound = growth * std::pow(2 * sd, 2 * sd) * std::pow(x, r) *
                     std::pow(y, sd + 1) * std::pow(nd, -r);
    return {u_bound, l_bound};
}

InclusionBounds inclusion_bounds(const SubgraphPattern& p, std::uint32_t n,
                                 std::uint64_t m, const LayerDistribution& dist) {
    InclusionBounds ib;
    ib.u_exact = exact_U(p, n, m, dist);
    int s = p.edge_count();
    if (m <= 1) {
        ib.l_upper = 0.0;
        ib.l_is_exact = true;
    } else if (s <= 6 &&
               std::pow(static_cast<double>(m), 2.0 * s) <= 4e6) {
        ib.l_upper = exact_L(p, n, m, dist);
        ib.l_is_exact = true;
    } else {
        ib.l_upper = lemma3_bounds(p, n, m, dist).second;
        ib.l_is_exact = false;
    }
    ib.f_upper = std::min(ib.u_exact, 1.0);
    ib.f_lower = std::clamp(ib.u_exact - ib.l_upper / 2.0, 0.0, ib.f_upper);
    return ib;
}

std::pair<double, double> expected_count_bracket(const SubgraphPattern& p,
                                                 std::uint32_t n, std::uint64_t m,
                                                 const LayerDistribution& dist) {
    InclusionBounds ib = inclusion_bounds(p, n, m, dist);
    double scale = falling_factorial(n, p.node_count()) /
                   static_cast<double>(p.automorphisms());
    return {scale * ib.f_lower, scale * ib.f_upper};
}

double matched_er_probability(std::uint32_t n, std::uint64_t m,
                              const LayerDistribution& dist) {
    if (m == 0) return 0.0;
    double pi21 = dist.cross_moment(2, 1);
    double n2 = falling_factorial(n, 2);
    if (pi21 == 0.0) return 0.0;
    if (n2 == 0.0 || pi21 > n2)
        throw guard_error("matched_er_probability: per-pair probability outside [0,1]");
    double q = pi21 / n2;
    if (q >= 1.0) return 1.0;
    return -std::expm1(static_cast<double>(m) * std::log1p(-q));
}

double er_expected_count(std::uint32_t n, double p, const SubgraphPattern& pattern) {
    if (!(p >= 0.0 && p <= 1.0))
        throw guard_error("er_expected_count: p must be in [0,1]");
    double base = falling_factorial(n, pattern.node_count()) /
                  static_cast<double>(pattern.automorphisms());
    return base * (pattern.edge_count() == 0
                       ? 1.0
                       : std::pow(p, static_cast<double>(pattern.edge_count())));
}

}  // namespace ogl
