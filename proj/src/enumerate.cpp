#include "sgs/enumerate.hpp"

#include <algorithm>

namespace sgs {

void Accumulator::merge_from(Accumulator&& o) {
    if (o.identity) return;
    if (identity) {
        *this = std::move(o);
        return;
    }
    count += o.count;
    if (heatmap.has_value() != o.heatmap.has_value() || regression.has_value() != o.regression.has_value() ||
        membership.has_value() != o.membership.has_value()) {
        fail(Errc::DimensionMismatch, "accumulator components differ");
    }
    if (heatmap) heatmap->merge(*o.heatmap);
    if (regression) regression->merge(*o.regression);
    if (membership) {
        if (membership->size() != o.membership->size()) fail(Errc::DimensionMismatch, "membership sizes differ");
        for (std::size_t i = 0; i < membership->size(); ++i) (*membership)[i] += (*o.membership)[i];
    }
}

namespace {

struct AccState {
    Accumulator acc;
    std::vector<int> prof;
};

Accumulator run_accumulated(int scale, Convention conv, const AccumulatorRequest& req, const EnumOptions& opts) {
    const int index_count = scale;
    auto make = [&] {
        AccState st;
        if (req.heatmap) st.acc.heatmap.emplace(conv, index_count, scale);
        if (req.regression) {
            st.acc.regression.emplace();
            st.acc.regression->conv = conv;
            st.acc.regression->scale = scale;
        }
        if (req.membership) st.acc.membership.emplace(static_cast<std::size_t>(2 * scale), 0);
        return st;
    };
    const bool need_profile = req.heatmap || req.regression;
    auto visit = [&, conv, need_profile](AccState& st, const SemigroupView& v) {
        st.acc.identity = false;
        ++st.acc.count;
        if (need_profile) {
            v.profile_into(st.prof, conv);
            if (st.acc.heatmap) st.acc.heatmap->add(st.prof);
            if (st.acc.regression) st.acc.regression->add(fit_two_segments(st.prof, scale, conv));
        }
        if (st.acc.membership) {
            auto& counts = *st.acc.membership;
            for (int n = 1; n <= 2 * scale; ++n) {
                if (v.contains(n)) ++counts[static_cast<std::size_t>(n - 1)];
            }
        }
    };
    auto merge = [](AccState& a, AccState&& b) { a.acc.merge_from(std::move(b.acc)); };
    AccState total = conv == Convention::Genus ? reduce_by_genus(scale, opts, make, visit, merge)
                                               : reduce_by_frobenius(scale, opts, make, visit, merge);
    return std::move(total.acc);
}

}  // namespace

Accumulator enumerate_by_genus(int g, const AccumulatorRequest& req, const EnumOptions& opts) {
    if (g < 1) fail(Errc::DomainError, "enumerate_by_genus needs g >= 1");
    return run_accumulated(g, Convention::Genus, req, opts);
}

Accumulator enumerate_by_frobenius(int f, const AccumulatorRequest& req, const EnumOptions& opts) {
    if (f < 1) fail(Errc::DomainError, "enumerate_by_frobenius needs F >= 1");
    return run_accumulated(f, Convention::Frobenius, req, opts);
}

unsigned __int128 count_by_genus(int g, const EnumOptions& opts) {
    if (g < 0) fail(Errc::DomainError, "genus must be >= 0");
    using Count = unsigned __int128;
    return reduce_by_genus(
        g, opts, [] { return Count{0}; }, [](Count& c, const SemigroupView&) { ++c; },
        [](Count& a, Count&& b) { a += b; });
}

unsigned __int128 count_by_frobenius(int f, const EnumOptions& opts) {
    using Count = unsigned __int128;
    return reduce_by_frobenius(
        f, opts, [] { return Count{0}; }, [](Count& c, const SemigroupView&) { ++c; },
        [](Count& a, Count&& b) { a += b; });
}

namespace {
struct Nothing {};
}  // namespace

void visit_by_genus(int g, const std::function<void(const SemigroupView&)>& fn, const EnumOptions& opts) {
    reduce_by_genus(
        g, opts, [] { return Nothing{}; }, [&](Nothing&, const SemigroupView& v) { fn(v); },
        [](Nothing&, Nothing&&) {});
}

void visit_by_frobenius(int f, const std::function<void(const SemigroupView&)>& fn, const EnumOptions& opts) {
    reduce_by_frobenius(
        f, opts, [] { return Nothing{}; }, [&](Nothing&, const SemigroupView& v) { fn(v); },
        [](Nothing&, Nothing&&) {});
}

RegressionSums accumulate_regression(int scale, Convention conv, const EnumOptions& opts) {
    AccumulatorRequest req;
    req.regression = true;
    Accumulator acc = run_accumulated(scale, conv, req, opts);
    return std::move(*acc.regression);
}

HeatMap heatmap_by_genus(int g, const EnumOptions& opts) {
    AccumulatorRequest req;
    req.heatmap = true;
    return std::move(*enumerate_by_genus(g, req, opts).heatmap);
}

HeatMap heatmap_by_frobenius(int f, const EnumOptions& opts) {
    AccumulatorRequest req;
    req.heatmap = true;
    return std::move(*enumerate_by_frobenius(f, req, opts).heatmap);
}

std::vector<Rational> membership_profile(int g, const EnumOptions& opts) {
    if (g < 1) fail(Errc::DomainError, "membership_profile needs g >= 1");
    AccumulatorRequest req;
    req.membership = true;
    Accumulator acc = enumerate_by_genus(g, req, opts);
    const std::uint64_t total = static_cast<std::uint64_t>(acc.count);
    std::vector<Rational> out;
    out.reserve(acc.membership->size());
    for (std::uint64_t c : *acc.membership) {
        out.push_back(Rational(BigInt(BigUint(c)), BigUint(total)));
    }
    return out;
}

}  // namespace sgs
