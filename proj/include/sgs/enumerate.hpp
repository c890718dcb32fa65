#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "sgs/enumerate_options.hpp"
#include "sgs/errors.hpp"
#include "sgs/regress.hpp"
#include "sgs/semigroup.hpp"
#include "sgs/shape.hpp"

namespace sgs {

// Non-owning snapshot of a semigroup during enumeration.
struct SemigroupView {
    const std::uint64_t* words;
    int word_count;
    int bound;
    int genus;
    int frobenius;
    int multiplicity;

    bool contains(int n) const {
        if (n < 0) return false;
        if (n > bound) return true;
        return (words[static_cast<std::size_t>(n) >> 6] >> (n & 63)) & 1u;
    }

    int element(int k) const {
        if (k >= frobenius + 1 - genus) return k + genus;
        int seen = 0;
        for (int n = 1; n <= bound; ++n) {
            if (contains(n) && ++seen == k) return n;
        }
        return k + genus;
    }

    void profile_into(std::vector<int>& out, Convention conv) const {
        const int scale = conv == Convention::Genus ? genus : frobenius;
        out.clear();
        const int tail_from = frobenius + 1 - genus;
        int n = 0, k = 0;
        while (k < scale) {
            if (k + 1 >= tail_from) {
                while (k < scale) {
                    ++k;
                    out.push_back(k + genus);
                }
                break;
            }
            ++n;
            if (contains(n)) {
                ++k;
                out.push_back(n);
            }
        }
    }

    NumericalSemigroup materialize() const {
        return NumericalSemigroup::from_parts(
            std::vector<std::uint64_t>(words, words + word_count), bound, frobenius);
    }
};

namespace detail {

inline constexpr int kMaxGenusWords = 8;  // bound <= 511, genus targets <= 200
inline constexpr int kMaxGenusTarget = 200;
inline constexpr int kMaxFrobenius = 120;

struct GenusNode {
    std::array<std::uint64_t, kMaxGenusWords> words;
    std::int32_t frobenius;
    std::int32_t multiplicity;
    std::int32_t genus;
};

struct FrobNode {
    std::array<std::uint64_t, 2> chosen;  // elements of [2, F-1] selected so far
    std::array<std::uint64_t, 2> sums;    // pairwise sums of chosen elements (bits < 128)
    std::int32_t next;                    // next candidate value to decide
};

// Cooperative node budget shared across tasks.
struct BudgetGate {
    std::atomic<std::uint64_t>* consumed;
    std::atomic<bool>* exceeded;
    std::uint64_t budget;
    std::uint64_t local = 0;

    bool tick() {
        if ((++local & 8191u) == 0) return flush();
        return !exceeded->load(std::memory_order_relaxed);
    }
    bool flush() {
        consumed->fetch_add(local, std::memory_order_relaxed);
        local = 0;
        if (consumed->load(std::memory_order_relaxed) > budget) {
            exceeded->store(true, std::memory_order_relaxed);
        }
        return !exceeded->load(std::memory_order_relaxed);
    }
};

inline bool node_bit(const std::array<std::uint64_t, kMaxGenusWords>& w, int i) {
    return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

inline void node_clear(std::array<std::uint64_t, kMaxGenusWords>& w, int i) {
    w[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63));
}

class GenusTree {
public:
    explicit GenusTree(int target) : target_(target) {
        if (target < 0) fail(Errc::DomainError, "genus must be >= 0");
        if (target > kMaxGenusTarget) fail(Errc::ResourceLimit, "genus beyond supported enumeration scale");
        bound_ = 2 * target + 1;
        if (bound_ < 3) bound_ = 3;
        wcount_ = bound_ / 64 + 1;
    }

    int target() const { return target_; }
    int bound() const { return bound_; }

    GenusNode root() const {
        GenusNode n{};
        n.words.fill(0);
        for (int i = 0; i <= bound_; ++i) n.words[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63);
        n.frobenius = -1;
        n.multiplicity = 1;
        n.genus = 0;
        return n;
    }

    SemigroupView view(const GenusNode& n) const {
        return {n.words.data(), wcount_, bound_, n.genus, n.frobenius, n.multiplicity};
    }

    // Calls fn(child) for each tree child of n; fn returns false to stop.
    template <class Fn>
    bool for_each_child(const GenusNode& n, Fn&& fn) const {
        if (n.frobenius < 0) {  // the only minimal generator of N_0 is 1
            GenusNode c = n;
            node_clear(c.words, 1);
            c.frobenius = 1;
            c.multiplicity = 2;
            c.genus = 1;
            return fn(c);
        }
        const int f = n.frobenius, m = n.multiplicity;
        // every child has Frobenius number <= 2(h+1)-1
        const int hi = std::min(f + m, 2 * n.genus + 1);
        // sums of two nonzero elements, on [0, hi]
        std::array<std::uint64_t, kMaxGenusWords> sums;
        const int swords = hi / 64 + 1;
        for (int i = 0; i < swords; ++i) sums[static_cast<std::size_t>(i)] = 0;
        std::array<std::uint64_t, kMaxGenusWords> nz = n.words;
        nz[0] &= ~1ull;
        for (int a = m; a <= hi - m; ++a) {
            if (!node_bit(n.words, a)) continue;
            const int ws = a >> 6, bs = a & 63;
            for (int i = 0; i + ws < swords; ++i) {
                sums[static_cast<std::size_t>(i + ws)] |= nz[static_cast<std::size_t>(i)] << bs;
                if (bs && i + ws + 1 < swords)
                    sums[static_cast<std::size_t>(i + ws + 1)] |= nz[static_cast<std::size_t>(i)] >> (64 - bs);
            }
        }
        for (int x = f + 1; x <= hi; ++x) {
            if (!node_bit(n.words, x) || node_bit(sums, x)) continue;
            GenusNode c = n;
            node_clear(c.words, x);
            c.frobenius = x;
            c.genus = n.genus + 1;
            if (x == m) {
                int nm = m + 1;
                while (!node_bit(c.words, nm)) ++nm;
                c.multiplicity = nm;
            } else {
                c.multiplicity = m;
            }
            if (!fn(c)) return false;
        }
        return true;
    }

    template <class State, class Visit>
    bool run_subtree(const GenusNode& n, State& st, Visit& visit, BudgetGate& gate) const {
        if (!gate.tick()) return false;
        if (n.genus == target_) {
            visit(st, view(n));
            return true;
        }
        return for_each_child(n, [&](const GenusNode& c) { return run_subtree(c, st, visit, gate); });
    }

    bool collect(const GenusNode& n, int split, std::vector<GenusNode>& out, BudgetGate& gate) const {
        if (!gate.tick()) return false;
        if (n.genus == target_ || n.genus == split) {
            out.push_back(n);
            return true;
        }
        return for_each_child(n, [&](const GenusNode& c) { return collect(c, split, out, gate); });
    }

private:
    int target_;
    int bound_;
    int wcount_;
};

class FrobTree {
public:
    explicit FrobTree(int f) : f_(f) {
        if (f < 1) fail(Errc::DomainError, "Frobenius number must be >= 1");
        if (f > kMaxFrobenius) fail(Errc::ResourceLimit, "Frobenius number beyond supported enumeration scale");
        bound_ = 2 * f;
        wcount_ = bound_ / 64 + 1;
    }

    int target() const { return f_; }
    int bound() const { return bound_; }

    FrobNode root() const { return FrobNode{{0, 0}, {0, 0}, 2}; }

    template <class State, class Visit>
    bool run_subtree(FrobNode n, State& st, Visit& visit, BudgetGate& gate,
                     std::vector<std::uint64_t>& scratch) const {
        for (;;) {
            if (!gate.tick()) return false;
            if (n.next >= f_) {
                visit_leaf(n, st, visit, scratch);
                return true;
            }
            const int v = n.next++;
            const bool forced = bit2(n.sums, v);
            if (!forced) {
                FrobNode ex = n;  // branch where v is a gap
                if (!run_subtree(ex, st, visit, gate, scratch)) return false;
            }
            // branch where v is an element
            if (2 * v == f_) return true;
            const int w = f_ - v;
            if (w >= 2 && w < v && bit2(n.chosen, w)) return true;
            include(n, v);
        }
    }

    bool collect(FrobNode n, int split, std::vector<FrobNode>& out, BudgetGate& gate) const {
        for (;;) {
            if (!gate.tick()) return false;
            if (n.next >= f_ || n.next - 2 == split) {
                out.push_back(n);
                return true;
            }
            const int v = n.next++;
            const bool forced = bit2(n.sums, v);
            if (!forced) {
                FrobNode ex = n;
                if (!collect(ex, split, out, gate)) return false;
            }
            if (2 * v == f_) return true;
            const int w = f_ - v;
            if (w >= 2 && w < v && bit2(n.chosen, w)) return true;
            include(n, v);
        }
    }

private:
    static bool bit2(const std::array<std::uint64_t, 2>& w, int i) {
        return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void include(FrobNode& n, int v) const {
        n.chosen[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
        // sums |= chosen << v  (covers v + a for chosen a <= v, including v+v)
        const int ws = v >> 6, bs = v & 63;
        for (int i = 0; i + ws < 2; ++i) {
            n.sums[static_cast<std::size_t>(i + ws)] |= n.chosen[static_cast<std::size_t>(i)] << bs;
            if (bs && i + ws + 1 < 2)
                n.sums[static_cast<std::size_t>(i + ws + 1)] |= n.chosen[static_cast<std::size_t>(i)] >> (64 - bs);
        }
    }

    template <class State, class Visit>
    void visit_leaf(const FrobNode& n, State& st, Visit& visit, std::vector<std::uint64_t>& scratch) const {
        scratch.assign(static_cast<std::size_t>(wcount_), 0);
        scratch[0] |= 1ull;  // 0
        scratch[0] |= n.chosen[0];
        if (wcount_ > 1) scratch[1] |= n.chosen[1];
        for (int x = f_ + 1; x <= bound_; ++x) scratch[static_cast<std::size_t>(x) >> 6] |= 1ull << (x & 63);
        const int pop = std::popcount(n.chosen[0]) + std::popcount(n.chosen[1]);
        const int genus = f_ - pop;
        int mult = f_ + 1;
        if (n.chosen[0]) {
            mult = std::countr_zero(n.chosen[0]);
        } else if (n.chosen[1]) {
            mult = 64 + std::countr_zero(n.chosen[1]);
        }
        SemigroupView view{scratch.data(), wcount_, bound_, genus, f_, mult};
        visit(st, view);
    }

    int f_;
    int bound_;
    int wcount_;
};

// Runs tasks over a thread pool, merging per-task states in task order.
template <class Node, class MakeState, class RunTask, class Merge>
auto run_tasks(std::vector<Node>&& tasks, const EnumOptions& opts, std::atomic<std::uint64_t>& consumed,
               std::atomic<bool>& exceeded, MakeState&& make, RunTask&& run_task, Merge&& merge) {
    using State = decltype(make());
    State total = make();
    int nthreads = opts.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : opts.threads;
    if (nthreads < 1) nthreads = 1;
    if (nthreads > static_cast<int>(tasks.size())) nthreads = static_cast<int>(tasks.size());
    if (tasks.empty()) return total;

    std::vector<std::optional<State>> slots(tasks.size());
    auto worker_loop = [&](std::atomic<std::size_t>& next) {
        BudgetGate gate{&consumed, &exceeded, opts.node_budget};
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= tasks.size()) break;
            State st = make();
            if (!run_task(st, tasks[i], gate)) break;
            slots[i].emplace(std::move(st));
        }
        gate.flush();
    };

    std::atomic<std::size_t> next{0};
    if (nthreads <= 1) {
        worker_loop(next);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back([&] { worker_loop(next); });
        for (auto& th : pool) th.join();
    }
    if (exceeded.load()) fail(Errc::ResourceLimit, "node budget exceeded");
    for (auto& s : slots) {
        if (!s.has_value()) fail(Errc::ResourceLimit, "task aborted");
        merge(total, std::move(*s));
    }
    return total;
}

}  // namespace detail

// Generic deterministic tree reduction over S_g.  make() -> State,
// visit(State&, const SemigroupView&), merge(State&, State&&) in task order.
template <class MakeState, class Visit, class Merge>
auto reduce_by_genus(int g, const EnumOptions& opts, MakeState&& make, Visit&& visit, Merge&& merge) {
    detail::GenusTree tree(g);
    std::atomic<std::uint64_t> consumed{0};
    std::atomic<bool> exceeded{false};
    const int split = std::clamp(opts.split_depth, 0, g);
    std::vector<detail::GenusNode> tasks;
    {
        detail::BudgetGate gate{&consumed, &exceeded, opts.node_budget};
        if (!tree.collect(tree.root(), split, tasks, gate) || !gate.flush())
            fail(Errc::ResourceLimit, "node budget exceeded");
    }
    auto run_task = [&](auto& st, detail::GenusNode& node, detail::BudgetGate& gate) {
        return tree.run_subtree(node, st, visit, gate);
    };
    return detail::run_tasks(std::move(tasks), opts, consumed, exceeded, make, run_task, merge);
}

// Generic deterministic reduction over S_Frob(F).
template <class MakeState, class Visit, class Merge>
auto reduce_by_frobenius(int f, const EnumOptions& opts, MakeState&& make, Visit&& visit, Merge&& merge) {
    detail::FrobTree tree(f);
    std::atomic<std::uint64_t> consumed{0};
    std::atomic<bool> exceeded{false};
    const int split = std::clamp(opts.split_depth, 0, std::max(f - 2, 0));
    std::vector<detail::FrobNode> tasks;
    {
        detail::BudgetGate gate{&consumed, &exceeded, opts.node_budget};
        if (!tree.collect(tree.root(), split, tasks, gate) || !gate.flush())
            fail(Errc::ResourceLimit, "node budget exceeded");
    }
    auto run_task = [&](auto& st, detail::FrobNode& node, detail::BudgetGate& gate) {
        std::vector<std::uint64_t> scratch;  // per task, reused across its leaves
        return tree.run_subtree(node, st, visit, gate, scratch);
    };
    return detail::run_tasks(std::move(tasks), opts, consumed, exceeded, make, run_task, merge);
}

// Streaming accumulator over one enumeration run.
struct Accumulator {
    bool identity = true;  // nothing accumulated yet; merges with anything
    unsigned __int128 count = 0;
    std::optional<HeatMap> heatmap;
    std::optional<RegressionSums> regression;
    std::optional<std::vector<std::uint64_t>> membership;  // counts for n in [1, 2*scale]

    void merge_from(Accumulator&& o);
};

struct AccumulatorRequest {
    bool heatmap = false;
    bool regression = false;
    bool membership = false;
};

Accumulator enumerate_by_genus(int g, const AccumulatorRequest& req, const EnumOptions& opts = {});
Accumulator enumerate_by_frobenius(int f, const AccumulatorRequest& req, const EnumOptions& opts = {});

unsigned __int128 count_by_genus(int g, const EnumOptions& opts = {});
unsigned __int128 count_by_frobenius(int f, const EnumOptions& opts = {});

// Visitor interfaces; the callback must be reentrant when opts.threads != 1.
void visit_by_genus(int g, const std::function<void(const SemigroupView&)>& fn, const EnumOptions& opts = {});
void visit_by_frobenius(int f, const std::function<void(const SemigroupView&)>& fn, const EnumOptions& opts = {});

// Regression sums over a full population (used by aggregate()).
RegressionSums accumulate_regression(int scale, Convention conv, const EnumOptions& opts = {});

}  // namespace sgs
