#include "sgs/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <json.hpp>

#include "sgs/enumerate.hpp"
#include "sgs/errors.hpp"
#include "sgs/families.hpp"
#include "sgs/kahan.hpp"
#include "sgs/shape.hpp"

namespace sgs {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0) fail(Errc::DomainError, "below(0)");
    if (n == 1) return 0;
    const int bits = 64 - std::countl_zero(n - 1);
    const std::uint64_t mask = bits == 64 ? ~0ull : (1ull << bits) - 1;
    for (;;) {
        const std::uint64_t v = next() & mask;
        if (v < n) return v;
    }
}

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t id) {
    SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ull * (id + 1)));
    return SplitMix64(mixer.next());
}

BigUint uniform_biguint_below(SplitMix64& rng, const BigUint& bound) {
    if (bound.is_zero()) fail(Errc::DomainError, "uniform draw below zero");
    const std::size_t limbs = bound.limb_count();
    const std::size_t top_bits = bound.bit_length() - 64 * (limbs - 1);
    const std::uint64_t top_mask = top_bits >= 64 ? ~0ull : (1ull << top_bits) - 1;
    for (;;) {
        std::vector<std::uint64_t> raw(limbs);
        for (std::size_t i = 0; i < limbs; ++i) raw[i] = rng.next();
        raw[limbs - 1] &= top_mask;
        BigUint val = BigUint::from_limbs(std::move(raw));
        if (val < bound) return val;
    }
}

std::vector<int> sample_subset(SplitMix64& rng, int universe, int size) {
    if (size < 0 || size > universe) fail(Errc::DomainError, "subset size out of range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size));
    int remaining = size;
    for (int i = 1; i <= universe && remaining > 0; ++i) {
        if (rng.below(static_cast<std::uint64_t>(universe - i + 1)) < static_cast<std::uint64_t>(remaining)) {
            out.push_back(i);
            --remaining;
        }
    }
    return out;
}

namespace {

std::vector<BigUint> binomial_row(int n) {
    std::vector<BigUint> row(static_cast<std::size_t>(n) + 1);
    row[0] = BigUint(1);
    for (int j = 1; j <= n; ++j) {
        row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)].mul_u64(
            static_cast<std::uint64_t>(n - j + 1));
        row[static_cast<std::size_t>(j)].divmod_u64(static_cast<std::uint64_t>(j));
    }
    return row;
}

}  // namespace

NumericalSemigroup sample_depth2_with_multiplicity(int g, int m, SplitMix64& rng) {
    const int nb = 2 * m - g - 2;
    if (nb < 0 || nb > m - 1) fail(Errc::InfeasibleFamily, "B(g,m) is empty");
    std::vector<int> b = sample_subset(rng, m - 1, nb);
    return depth2_build(g, m, b);
}

NumericalSemigroup sample_depth2(int g, SplitMix64& rng) {
    if (g < 2) fail(Errc::DomainError, "sample_depth2 needs g >= 2");
    std::vector<std::pair<int, BigUint>> weights;
    BigUint total;
    for (int m = g / 2 + 1; m <= g + 1; ++m) {
        const int nb = 2 * m - g - 2;
        if (nb < 0 || nb > m - 1) continue;
        BigUint w = binomial(static_cast<std::uint64_t>(m - 1), static_cast<std::uint64_t>(nb));
        if (w.is_zero()) continue;
        total += w;
        weights.emplace_back(m, std::move(w));
    }
    BigUint r = uniform_biguint_below(rng, total);
    for (auto& [m, w] : weights) {
        if (r < w) return sample_depth2_with_multiplicity(g, m, rng);
        r -= w;
    }
    fail(Errc::DomainError, "unreachable: weight walk exhausted");
}

std::vector<std::vector<std::uint64_t>> chi_pair_counts(int l) {
    if (l < 1 || l > 30) fail(Errc::DomainError, "chi_pair_counts needs 1 <= l <= 30");
    // A1 = m + U with U subset of [0, l], 0 in U; A2 = 2m + V with V subset of
    // [0, l-1], V >= M(U) = {u+u' <= l}; invalid when some u+u' = l (it would
    // force F into A2).  Count by (|U|, |V|).
    std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(l) + 2,
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(l) + 1, 0));
    // binomials C(free, j) fit comfortably in 64 bits for l <= 30
    std::vector<std::vector<std::uint64_t>> small_binom(static_cast<std::size_t>(l) + 1);
    for (int n = 0; n <= l; ++n) {
        small_binom[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            small_binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] =
                j == 0 || j == n
                    ? 1
                    : small_binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j - 1)] +
                          small_binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)];
        }
    }
    const std::uint64_t nmasks = 1ull << l;
    for (std::uint64_t mask = 0; mask < nmasks; ++mask) {
        const std::uint64_t u_set = (mask << 1) | 1ull;  // offsets, bit 0 = value m
        // pairwise sums of offsets, tracked up to bit l
        std::uint64_t sums = 0;
        std::uint64_t rest = u_set;
        while (rest) {
            const int off = std::countr_zero(rest);
            rest &= rest - 1;
            if (off > l) break;
            sums |= u_set << off;
        }
        if ((sums >> l) & 1ull) continue;  // some pair sums to l: F would need to be an element
        const std::uint64_t mand = sums & ((1ull << l) - 1);
        const int usz = std::popcount(u_set);
        const int msz = std::popcount(mand);
        const int free_slots = l - msz;
        for (int j = 0; j <= free_slots; ++j) {
            counts[static_cast<std::size_t>(usz)][static_cast<std::size_t>(msz + j)] +=
                small_binom[static_cast<std::size_t>(free_slots)][static_cast<std::size_t>(j)];
        }
    }
    return counts;
}

DepthLe3Sampler::DepthLe3Sampler(int g, int l_max) : g_(g), l_max_(l_max) {
    if (g < 4) fail(Errc::DomainError, "DepthLe3Sampler needs g >= 4");
    if (l_max < 1) fail(Errc::DomainError, "l_max must be >= 1");
    pair_counts_.resize(static_cast<std::size_t>(l_max) + 1);
    for (int m = g / 2 + 1; m <= g + 1; ++m) {
        const int nb = 2 * m - g - 2;
        if (nb < 0 || nb > m - 1) continue;
        BigUint w = binomial(static_cast<std::uint64_t>(m - 1), static_cast<std::uint64_t>(nb));
        if (w.is_zero()) continue;
        depth2_total_ += w;
        blocks_.push_back({2, m, 0, std::move(w)});
    }
    for (int m = 2; m <= g + 1; ++m) {
        for (int l = 1; l <= std::min(l_max, m - 1); ++l) {
            if (pair_counts_[static_cast<std::size_t>(l)].empty())
                pair_counts_[static_cast<std::size_t>(l)] = chi_pair_counts(l);
            const auto& k_table = pair_counts_[static_cast<std::size_t>(l)];
            const auto row = binomial_row(m - l - 1);
            BigUint w;
            for (std::size_t u = 1; u < k_table.size(); ++u) {
                for (std::size_t v = 1; v <= static_cast<std::size_t>(l); ++v) {
                    const std::uint64_t pairs = k_table[u][v];
                    if (!pairs) continue;
                    const int need = 2 * m - g_ + l - static_cast<int>(u) - static_cast<int>(v);
                    if (need < 0 || need > m - l - 1) continue;
                    w += row[static_cast<std::size_t>(need)].mul_u64(pairs);
                }
            }
            if (!w.is_zero()) blocks_.push_back({3, m, l, std::move(w)});
        }
    }
    for (const auto& b : blocks_) total_ += b.weight;
    if (total_.is_zero()) fail(Errc::InfeasibleFamily, "no depth <= 3 semigroups at this genus");
}

NumericalSemigroup DepthLe3Sampler::draw(SplitMix64& rng) const {
    BigUint r = uniform_biguint_below(rng, total_);
    const Block* chosen = nullptr;
    for (const auto& b : blocks_) {
        if (r < b.weight) {
            chosen = &b;
            break;
        }
        r -= b.weight;
    }
    if (!chosen) fail(Errc::DomainError, "unreachable: block walk exhausted");
    const int m = chosen->m;
    if (chosen->depth == 2) {
        return sample_depth2_with_multiplicity(g_, m, rng);
    }
    const int l = chosen->l;
    const auto& k_table = pair_counts_[static_cast<std::size_t>(l)];
    const auto row = binomial_row(m - l - 1);
    // pick (|A1|, |A2|) proportionally to pairs * C(m-l-1, need)
    int usz = -1, vsz = -1;
    {
        BigUint rr = std::move(r);
        for (std::size_t u = 1; u < k_table.size() && usz < 0; ++u) {
            for (std::size_t v = 1; v <= static_cast<std::size_t>(l); ++v) {
                const std::uint64_t pairs = k_table[u][v];
                if (!pairs) continue;
                const int need = 2 * m - g_ + l - static_cast<int>(u) - static_cast<int>(v);
                if (need < 0 || need > m - l - 1) continue;
                BigUint w = row[static_cast<std::size_t>(need)].mul_u64(pairs);
                if (rr < w) {
                    usz = static_cast<int>(u);
                    vsz = static_cast<int>(v);
                    // rr / C(m-l-1, need) is uniform over the valid (U, V) pairs
                    BigUint cfg, discarded;
                    BigUint::divmod(rr, row[static_cast<std::size_t>(need)], cfg, discarded);
                    std::uint64_t cfg_idx = cfg.to_u64();
                    const std::uint64_t nmasks = 1ull << l;
                    for (std::uint64_t mask = 0; mask < nmasks; ++mask) {
                        const std::uint64_t u_set = (mask << 1) | 1ull;
                        if (std::popcount(u_set) != usz) continue;
                        std::uint64_t sums = 0, rest = u_set;
                        while (rest) {
                            const int off = std::countr_zero(rest);
                            rest &= rest - 1;
                            sums |= u_set << off;
                        }
                        if ((sums >> l) & 1ull) continue;
                        const std::uint64_t mand = sums & ((1ull << l) - 1);
                        const int msz = std::popcount(mand);
                        if (msz > vsz || vsz - msz > l - msz) continue;
                        const std::uint64_t ways = [&] {
                            // C(l - msz, vsz - msz)
                            std::uint64_t c = 1;
                            for (int i = 1; i <= vsz - msz; ++i)
                                c = c * static_cast<std::uint64_t>(l - msz - i + 1) / static_cast<std::uint64_t>(i);
                            return c;
                        }();
                        if (cfg_idx >= ways) {
                            cfg_idx -= ways;
                            continue;
                        }
                        // materialize A1 from u_set, A2 from mand + a uniform
                        // (vsz - msz)-subset of the free offsets
                        std::vector<int> a1, a2;
                        for (int off = 0; off <= l; ++off) {
                            if ((u_set >> off) & 1ull) a1.push_back(m + off);
                        }
                        std::vector<int> free_offsets;
                        for (int off = 0; off < l; ++off) {
                            if (!((mand >> off) & 1ull)) free_offsets.push_back(off);
                        }
                        std::vector<int> extra = sample_subset(rng, static_cast<int>(free_offsets.size()), vsz - msz);
                        std::vector<bool> pick(free_offsets.size(), false);
                        for (int e : extra) pick[static_cast<std::size_t>(e - 1)] = true;
                        for (int off = 0; off < l; ++off) {
                            if ((mand >> off) & 1ull) {
                                a2.push_back(2 * m + off);
                            }
                        }
                        for (std::size_t i = 0; i < free_offsets.size(); ++i) {
                            if (pick[i]) a2.push_back(2 * m + free_offsets[i]);
                        }
                        std::sort(a2.begin(), a2.end());
                        std::vector<int> b = sample_subset(rng, m - l - 1, need);
                        return depth3_build(g_, m, l, a1, a2, b);
                    }
                    fail(Errc::DomainError, "unreachable: configuration walk exhausted");
                }
                rr -= w;
            }
        }
    }
    fail(Errc::DomainError, "unreachable: size walk exhausted");
}

NumericalSemigroup sample_depth_le3(int g, int l_max, SplitMix64& rng) {
    return DepthLe3Sampler(g, l_max).draw(rng);
}

namespace {

struct ExactState {
    std::uint64_t count = 0;
    std::uint64_t tail = 0;
    std::uint64_t depth_le3 = 0;
    std::vector<KahanSum> means;
    std::vector<int> prof;
};

}  // namespace

namespace {

// Generous population upper estimates from the known asymptotic growth rates
// (~phi^g by genus, ~sqrt(2)^F by Frobenius number); used only to decide
// between full enumeration and sampling without a counting pass.
double population_estimate(Convention conv, int scale) {
    if (conv == Convention::Genus) return 4.0 * std::pow(1.6180339887498949, scale);
    return 4.0 * std::pow(std::sqrt(2.0), scale);
}

}  // namespace

ConvergenceReport convergence_experiment(const ConvergenceConfig& config) {
    ConvergenceReport report;
    report.config = config;
    for (int scale : config.scales) {
        ConvergenceRecord rec;
        rec.scale = scale;
        if (population_estimate(config.conv, scale) <= static_cast<double>(config.exact_threshold)) {
            rec.method = "exact";
            auto make = [&] {
                ExactState st;
                st.means.resize(config.alphas.size());
                return st;
            };
            auto visit = [&](ExactState& st, const SemigroupView& v) {
                ++st.count;
                v.profile_into(st.prof, config.conv);
                if (sup_distance(st.prof, scale, config.conv) > config.epsilon) ++st.tail;
                if (v.frobenius <= 3 * v.multiplicity) ++st.depth_le3;
                for (std::size_t i = 0; i < config.alphas.size(); ++i) {
                    st.means[i].add(shape_value(st.prof, scale, config.alphas[i]));
                }
            };
            auto merge = [](ExactState& a, ExactState&& b) {
                a.count += b.count;
                a.tail += b.tail;
                a.depth_le3 += b.depth_le3;
                for (std::size_t i = 0; i < a.means.size(); ++i) a.means[i].merge(b.means[i]);
            };
            ExactState st = config.conv == Convention::Genus
                                ? reduce_by_genus(scale, config.enum_opts, make, visit, merge)
                                : reduce_by_frobenius(scale, config.enum_opts, make, visit, merge);
            rec.trials = st.count;
            const double p = static_cast<double>(st.tail) / static_cast<double>(st.count);
            rec.tail_estimate = p;
            rec.stderr_est = std::sqrt(p * (1.0 - p) / static_cast<double>(st.count));
            for (std::size_t i = 0; i < config.alphas.size(); ++i) {
                rec.mean_shape.emplace_back(config.alphas[i], st.means[i].value() / static_cast<double>(st.count));
            }
            rec.depth_le3_fraction = static_cast<double>(st.depth_le3) / static_cast<double>(st.count);
        } else {
            if (config.conv != Convention::Genus)
                fail(Errc::DomainError, "sampled mode is only available for the genus convention");
            rec.method = "sampled";
            DepthLe3Sampler sampler(scale, config.l_max);
            std::uint64_t tail = 0;
            std::vector<KahanSum> means(config.alphas.size());
            for (std::uint64_t t = 0; t < config.trials; ++t) {
                SplitMix64 rng = SplitMix64::substream(config.seed, (static_cast<std::uint64_t>(scale) << 32) + t);
                NumericalSemigroup s = sampler.draw(rng);
                ShapeProfile p = profile(s, Convention::Genus);
                if (sup_distance(p) > config.epsilon) ++tail;
                for (std::size_t i = 0; i < config.alphas.size(); ++i) {
                    means[i].add(shape_value(p, config.alphas[i]));
                }
            }
            rec.trials = config.trials;
            const double p = static_cast<double>(tail) / static_cast<double>(config.trials);
            rec.tail_estimate = p;
            rec.stderr_est = std::sqrt(p * (1.0 - p) / static_cast<double>(config.trials));
            for (std::size_t i = 0; i < config.alphas.size(); ++i) {
                rec.mean_shape.emplace_back(config.alphas[i], means[i].value() / static_cast<double>(config.trials));
            }
            rec.depth_le3_fraction = 1.0;  // estimates are conditional on depth <= 3
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::string report_to_json(const ConvergenceReport& report) {
    nlohmann::ordered_json j;
    j["algorithm"] = "splitmix64";
    j["convention"] = report.config.conv == Convention::Genus ? "genus" : "frobenius";
    j["seed"] = report.config.seed;
    j["epsilon"] = report.config.epsilon;
    j["alphas"] = report.config.alphas;
    j["trials"] = report.config.trials;
    j["exact_threshold"] = report.config.exact_threshold;
    j["l_max"] = report.config.l_max;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json jr;
        jr["scale"] = r.scale;
        jr["method"] = r.method;
        jr["trials"] = r.trials;
        jr["tail_estimate"] = r.tail_estimate;
        jr["stderr"] = r.stderr_est;
        jr["mean_psi"] = nlohmann::ordered_json::array();
        for (const auto& [a, v] : r.mean_shape) {
            jr["mean_psi"].push_back({a, v});
        }
        jr["depth_le3_fraction"] = r.depth_le3_fraction;
        j["records"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

}  // namespace sgs
