#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ogl/rng.hpp"

namespace ogl {

struct LayerSample {
    std::uint32_t x;  // size
    double y;         // strength
};

// Joint law of a layer's (size X, strength Y). Three parametric families,
// each with exact cross-moments E[(X)_r Y^s] and truncated variants
// E[(X)_a Y^b 1(X > M)]; a seeded Monte Carlo estimator backs the invariant
// checks. Immutable and shareable.
class LayerDistribution {
public:
    struct TableEntry {
        std::uint32_t x;
        double y;
        double w;
    };

    static LayerDistribution point_mass(std::uint32_t x, double y);
    // Weights must be positive and sum to 1 within 1e-9; they are renormalized.
    static LayerDistribution finite_table(std::vector<TableEntry> entries);
    static LayerDistribution binomial_size(std::uint32_t n_trials, double p, double y);

    // Grammar: "point:x=5,y=0.5" | "table:(x,y,w);(x,y,w);..." |
    //          "binom:N=10,p=0.3,y=0.5"
    static LayerDistribution parse(const std::string& spec);
    std::string spec_string() const;

    LayerSample sample(RandomStream& rng) const;

    // (pi)_{r,s} = E[(X)_r Y^s], exact.
    double cross_moment(int r, int s) const;

    // (pi^M)_{a,b} = E[(X)_a Y^b 1(X > M)], exact.
    double truncated_cross_moment(int a, int b, int truncation) const;

    struct McEstimate {
        double value;
        double std_error;
    };
    // Monte Carlo estimate of (pi)_{r,s}; samples = 0 uses moment_samples().
    McEstimate cross_moment_mc(int r, int s, RandomStream& rng,
                               std::uint64_t samples = 0) const;

    // Largest size the law can produce (binomial: N when p > 0).
    std::uint32_t max_size() const;
    double max_strength() const;

    std::uint64_t moment_samples() const { return moment_samples_; }
    void set_moment_samples(std::uint64_t s) { moment_samples_ = s; }

private:
    struct PointMass {
        std::uint32_t x;
        double y;
    };
    struct FiniteTable {
        std::vector<TableEntry> entries;
        std::vector<double> cumulative;
    };
    struct BinomialSize {
        std::uint32_t n_trials;
        double p;
        double y;
    };

    LayerDistribution() = default;
    std::variant<PointMass, FiniteTable, BinomialSize> law_;
    std::uint64_t moment_samples_ = 1'000'000;
};

inline LayerSample sample_layer(const LayerDistribution& d, RandomStream& rng) {
    return d.sample(rng);
}
inline double cross_moment(const LayerDistribution& d, int r, int s) {
    return d.cross_moment(r, s);
}
inline double truncated_cross_moment(const LayerDistribution& d, int a, int b, int m) {
    return d.truncated_cross_moment(a, b, m);
}

}  // namespace ogl
