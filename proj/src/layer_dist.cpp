#include "ogl/layer_dist.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ogl/combinatorics.hpp"
#include "ogl/errors.hpp"

namespace ogl {

namespace {

void check_strength(double y, const char* who) {
    if (!(y >= 0.0 && y <= 1.0))
        throw config_error(std::string(who) + ": strength y must be in [0,1]");
}

void check_prob(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0))
        throw config_error(std::string(who) + ": probability must be in [0,1]");
}

// Binomial(N, p) pmf walk. f(0) = (1-p)^N, f(k+1) = f(k) * (N-k)/(k+1) * p/(1-p).
// fn returns false to stop early.
template <typename Fn>
void for_each_binomial_pmf(std::uint32_t n_trials, double p, Fn fn) {
    if (p <= 0.0) {
        fn(0u, 1.0);
        return;
    }
    if (p >= 1.0) {
        fn(n_trials, 1.0);
        return;
    }
    double f = std::pow(1.0 - p, static_cast<double>(n_trials));
    double odds = p / (1.0 - p);
    for (std::uint32_t k = 0;; ++k) {
        if (!fn(k, f)) break;
        if (k == n_trials) break;
        f *= odds * static_cast<double>(n_trials - k) / static_cast<double>(k + 1);
    }
}

double pow_int(double base, int e) {
    return e == 0 ? 1.0 : std::pow(base, static_cast<double>(e));
}

}  // namespace

LayerDistribution LayerDistribution::point_mass(std::uint32_t x, double y) {
    check_strength(y, "point");
    LayerDistribution d;
    d.law_ = PointMass{x, y};
    return d;
}

LayerDistribution LayerDistribution::finite_table(std::vector<TableEntry> entries) {
    if (entries.empty()) throw config_error("table: needs at least one entry");
    double total = 0.0;
    for (const auto& e : entries) {
        check_strength(e.y, "table");
        if (!(e.w > 0.0)) throw config_error("table: weights must be positive");
        total += e.w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw config_error("table: weights sum to " + std::to_string(total) +
                           ", expected 1 (tolerance 1e-9)");
    FiniteTable t;
    t.entries = std::move(entries);
    double cum = 0.0;
    for (auto& e : t.entries) {
        e.w /= total;
        cum += e.w;
        t.cumulative.push_back(cum);
    }
    t.cumulative.back() = 1.0;
    LayerDistribution d;
    d.law_ = std::move(t);
    return d;
}

LayerDistribution LayerDistribution::binomial_size(std::uint32_t n_trials, double p,
                                                   double y) {
    check_prob(p, "binom");
    check_strength(y, "binom");
    LayerDistribution d;
    d.law_ = BinomialSize{n_trials, p, y};
    return d;
}

LayerSample LayerDistribution::sample(RandomStream& rng) const {
    if (const auto* pm = std::get_if<PointMass>(&law_)) {
        rng.advance(1);  // every variant consumes one draw per sample
        return {pm->x, pm->y};
    }
    if (const auto* ft = std::get_if<FiniteTable>(&law_)) {
        double u = rng.next_double();
        auto it = std::upper_bound(ft->cumulative.begin(), ft->cumulative.end(), u);
        std::size_t idx = std::min<std::size_t>(it - ft->cumulative.begin(),
                                                ft->entries.size() - 1);
        return {ft->entries[idx].x, ft->entries[idx].y};
    }
    const auto& b = std::get<BinomialSize>(law_);
    // inverse-CDF walk, one uniform per sample; FP tail rounding falls back to N
    double u = rng.next_double();
    std::uint32_t result = b.n_trials;
    double cdf = 0.0;
    for_each_binomial_pmf(b.n_trials, b.p, [&](std::uint32_t k, double f) {
        cdf += f;
        if (u < cdf) {
            result = k;
            return false;
        }
        return true;
    });
    return {result, b.y};
}

double LayerDistribution::cross_moment(int r, int s) const {
    if (r < 0 || s < 0) throw guard_error("cross_moment: r, s must be >= 0");
    if (const auto* pm = std::get_if<PointMass>(&law_))
        return falling_factorial(pm->x, r) * pow_int(pm->y, s);
    if (const auto* ft = std::get_if<FiniteTable>(&law_)) {
        double acc = 0.0;
        for (const auto& e : ft->entries)
            acc += e.w * falling_factorial(e.x, r) * pow_int(e.y, s);
        return acc;
    }
    const auto& b = std::get<BinomialSize>(law_);
    // factorial moment of a binomial: E[(X)_r] = (N)_r p^r
    return falling_factorial(b.n_trials, r) * pow_int(b.p, r) * pow_int(b.y, s);
}

double LayerDistribution::truncated_cross_moment(int a, int b, int truncation) const {
    if (a < 0 || b < 0 || truncation < 0)
        throw guard_error("truncated_cross_moment: arguments must be >= 0");
    auto m = static_cast<std::uint32_t>(truncation);
    if (const auto* pm = std::get_if<PointMass>(&law_)) {
        if (pm->x <= m) return 0.0;
        return falling_factorial(pm->x, a) * pow_int(pm->y, b);
    }
    if (const auto* ft = std::get_if<FiniteTable>(&law_)) {
        double acc = 0.0;
        for (const auto& e : ft->entries)
            if (e.x > m) acc += e.w * falling_factorial(e.x, a) * pow_int(e.y, b);
        return acc;
    }
    const auto& bn = std::get<BinomialSize>(law_);
    double acc = 0.0;
    for_each_binomial_pmf(bn.n_trials, bn.p, [&](std::uint32_t k, double f) {
        if (k > m) acc += f * falling_factorial(k, a);
        return true;
    });
    return acc * pow_int(bn.y, b);
}

LayerDistribution::McEstimate LayerDistribution::cross_moment_mc(
    int r, int s, RandomStream& rng, std::uint64_t samples) const {
    if (samples == 0) samples = moment_samples_;
    if (samples == 0) throw guard_error("cross_moment_mc: zero samples");
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        LayerSample ls = sample(rng);
        double v = falling_factorial(ls.x, r) * pow_int(ls.y, s);
        sum += v;
        sumsq += v * v;
    }
    auto ns = static_cast<double>(samples);
    double mean = sum / ns;
    double var = std::max(0.0, (sumsq - ns * mean * mean) / std::max(1.0, ns - 1));
    return {mean, std::sqrt(var / ns)};
}

std::uint32_t LayerDistribution::max_size() const {
    if (const auto* pm = std::get_if<PointMass>(&law_)) return pm->x;
    if (const auto* ft = std::get_if<FiniteTable>(&law_)) {
        std::uint32_t mx = 0;
        for (const auto& e : ft->entries) mx = std::max(mx, e.x);
        return mx;
    }
    const auto& b = std::get<BinomialSize>(law_);
    return b.p > 0.0 ? b.n_trials : 0;
}

double LayerDistribution::max_strength() const {
    if (const auto* pm = std::get_if<PointMass>(&law_)) return pm->y;
    if (const auto* ft = std::get_if<FiniteTable>(&law_)) {
        double mx = 0.0;
        for (const auto& e : ft->entries) mx = std::max(mx, e.y);
        return mx;
    }
    return std::get<BinomialSize>(law_).y;
}

namespace {

double parse_double(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw config_error("distribution spec: bad number \"" + s + "\" in " + ctx);
    }
}

std::uint32_t parse_u32(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 0 || v > 0xFFFFFFFFll) throw std::invalid_argument("");
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        throw config_error("distribution spec: bad integer \"" + s + "\" in " + ctx);
    }
}

// "x=5,y=0.5" -> {{"x","5"},{"y","0.5"}}
std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& args,
                                                          const std::string& ctx) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw config_error("distribution spec: expected key=value in " + ctx);
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return out;
}

}  // namespace

LayerDistribution LayerDistribution::parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw config_error("distribution spec \"" + spec + "\": expected family:args");
    std::string family = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);

    if (family == "point") {
        bool have_x = false, have_y = false;
        std::uint32_t x = 0;
        double y = 0;
        for (auto& [k, v] : parse_kv(args, spec)) {
            if (k == "x") {
                x = parse_u32(v, spec);
                have_x = true;
            } else if (k == "y") {
                y = parse_double(v, spec);
                have_y = true;
            } else {
                throw config_error("distribution spec \"" + spec + "\": unknown key " + k);
            }
        }
        if (!have_x || !have_y)
            throw config_error("distribution spec \"" + spec + "\": need x= and y=");
        return point_mass(x, y);
    }
    if (family == "table") {
        std::vector<TableEntry> entries;
        std::istringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
            if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
                throw config_error("distribution spec \"" + spec +
                                   "\": expected (x,y,w) tuples");
            std::istringstream ts(tok.substr(1, tok.size() - 2));
            std::string a, b, c;
            if (!std::getline(ts, a, ',') || !std::getline(ts, b, ',') ||
                !std::getline(ts, c, ',') || ts.rdbuf()->in_avail() != 0)
                throw config_error("distribution spec \"" + spec +
                                   "\": expected (x,y,w) tuples");
            entries.push_back({parse_u32(a, spec), parse_double(b, spec),
                               parse_double(c, spec)});
        }
        return finite_table(std::move(entries));
    }
    if (family == "binom") {
        bool have_n = false, have_p = false, have_y = false;
        std::uint32_t n = 0;
        double p = 0, y = 0;
        for (auto& [k, v] : parse_kv(args, spec)) {
            if (k == "N") {
                n = parse_u32(v, spec);
                have_n = true;
            } else if (k == "p") {
                p = parse_double(v, spec);
                have_p = true;
            } else if (k == "y") {
                y = parse_double(v, spec);
                have_y = true;
            } else {
                throw config_error("distribution spec \"" + spec + "\": unknown key " + k);
            }
        }
        if (!have_n || !have_p || !have_y)
            throw config_error("distribution spec \"" + spec + "\": need N=, p=, y=");
        return binomial_size(n, p, y);
    }
    throw config_error("distribution spec \"" + spec + "\": unknown family \"" + family +
                       "\"");
}

std::string LayerDistribution::spec_string() const {
    std::ostringstream out;
    if (const auto* pm = std::get_if<PointMass>(&law_)) {
        out << "point:x=" << pm->x << ",y=" << pm->y;
    } else if (const auto* ft = std::get_if<FiniteTable>(&law_)) {
        out << "table:";
        for (std::size_t i = 0; i < ft->entries.size(); ++i) {
            if (i) out << ';';
            out << '(' << ft->entries[i].x << ',' << ft->entries[i].y << ','
                << ft->entries[i].w << ')';
        }
    } else {
        const auto& b = std::get<BinomialSize>(law_);
        out << "binom:N=" << b.n_trials << ",p=" << b.p << ",y=" << b.y;
    }
    return out.str();
}

}  // namespace ogl
