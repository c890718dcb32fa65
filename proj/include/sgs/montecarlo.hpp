#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sgs/bigint.hpp"
#include "sgs/enumerate_options.hpp"
#include "sgs/semigroup.hpp"

namespace sgs {

// SplitMix64 counter-style generator (Steele, Lea, Flood 2014).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform on [0, n) via masked rejection; n >= 1.
    std::uint64_t below(std::uint64_t n);

    // Per-trial / per-task substream.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t id);
};

BigUint uniform_biguint_below(SplitMix64& rng, const BigUint& bound);

// Sorted uniform random subset of {1..universe} with |subset| = size.
std::vector<int> sample_subset(SplitMix64& rng, int universe, int size);

// Uniform draw from B(g) = depth <= 2 semigroups of genus g.
NumericalSemigroup sample_depth2(int g, SplitMix64& rng);
// Uniform draw from B(g, m) (fixed multiplicity).
NumericalSemigroup sample_depth2_with_multiplicity(int g, int m, SplitMix64& rng);

// Exact-weight uniform sampler over B(g) plus the depth-3 classes C(g, m, l)
// with l <= l_max.  Weight tables are built once per (g, l_max).
class DepthLe3Sampler {
public:
    DepthLe3Sampler(int g, int l_max);

    const BigUint& total_weight() const { return total_; }
    const BigUint& depth2_weight() const { return depth2_total_; }
    NumericalSemigroup draw(SplitMix64& rng) const;

private:
    struct Block {
        int depth;  // 2 or 3
        int m;
        int l;  // 0 for depth 2
        BigUint weight;
    };
    int g_;
    int l_max_;
    BigUint total_;
    BigUint depth2_total_;
    std::vector<Block> blocks_;
    std::vector<std::vector<std::vector<std::uint64_t>>> pair_counts_;  // [l][u][v]
};

// pair_counts(l)[u][v] = number of valid chi-window pairs (A1, A2) with
// |A1| = u, |A2| = v, expressed in window offsets (independent of g, m).
std::vector<std::vector<std::uint64_t>> chi_pair_counts(int l);
// Convenience single draw (builds the weight tables each call).
NumericalSemigroup sample_depth_le3(int g, int l_max, SplitMix64& rng);

struct ConvergenceConfig {
    Convention conv = Convention::Genus;
    std::vector<int> scales;
    double epsilon = 0.3;
    std::vector<double> alphas = {0.1, 0.3, 0.8};
    std::uint64_t seed = 42;
    std::uint64_t trials = 100000;
    std::uint64_t exact_threshold = 10'000'000;  // full enumeration when population <=
    int l_max = 24;
    EnumOptions enum_opts;
};

struct ConvergenceRecord {
    int scale;
    std::string method;  // "exact" | "sampled"
    std::uint64_t trials;
    double tail_estimate;  // P[sup |shape - limit| > epsilon]
    double stderr_est;     // sqrt(p(1-p)/trials)
    std::vector<std::pair<double, double>> mean_shape;  // (alpha, mean shape value)
    double depth_le3_fraction;  // exact mode: population fraction; sampled mode: 1 (conditional)
};

struct ConvergenceReport {
    ConvergenceConfig config;
    std::vector<ConvergenceRecord> records;
};

ConvergenceReport convergence_experiment(const ConvergenceConfig& config);
std::string report_to_json(const ConvergenceReport& report);

}  // namespace sgs
