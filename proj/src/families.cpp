#include "sgs/families.hpp"

#include <algorithm>

#include "sgs/errors.hpp"

namespace sgs {

namespace {

std::vector<std::uint64_t> empty_words(int bound) {
    return std::vector<std::uint64_t>(static_cast<std::size_t>(bound) / 64 + 1, 0);
}

void set_bit(std::vector<std::uint64_t>& w, int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }

void set_range(std::vector<std::uint64_t>& w, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) set_bit(w, i);
}

bool sorted_unique_in(std::span<const int> v, int lo, int hi) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < lo || v[i] > hi) return false;
        if (i > 0 && v[i] <= v[i - 1]) return false;
    }
    return true;
}

bool contains_value(std::span<const int> v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

NumericalSemigroup depth2_build(int g, int m, std::span<const int> b) {
    if (g < 2 || m < 2) fail(Errc::OutOfRange, "depth2_build needs g >= 2 and m >= 2");
    const int want = 2 * m - g - 2;
    if (want < 0 || want > m - 1) fail(Errc::BadSize, "B(g,m) is empty: required subset size infeasible");
    if (static_cast<int>(b.size()) != want) fail(Errc::BadSize, "subset size must be 2m-g-2");
    if (!sorted_unique_in(b, 1, m - 1)) fail(Errc::OutOfRange, "B must be a subset of [1, m-1]");
    const int bound = 2 * g + 1;
    auto w = empty_words(bound);
    set_bit(w, 0);
    set_bit(w, m);
    for (int x : b) set_bit(w, m + x);
    set_range(w, std::min(2 * m, bound), bound);
    // F < 2m: the largest gap below 2m
    int frob = -1;
    for (int n = std::min(2 * m, bound + 1) - 1; n >= 1; --n) {
        if (!((w[static_cast<std::size_t>(n) >> 6] >> (n & 63)) & 1u)) {
            frob = n;
            break;
        }
    }
    return NumericalSemigroup::from_parts(std::move(w), bound, frob);
}

bool chi_image_test(int g, int m, int l, std::span<const int> a1, std::span<const int> a2) {
    if (l < 1 || l > m - 1) return false;
    if (!sorted_unique_in(a1, m, m + l) || !sorted_unique_in(a2, 2 * m, 2 * m + l)) return false;
    if (!contains_value(a1, m) || !contains_value(a2, 2 * m)) return false;
    if (contains_value(a2, 2 * m + l)) return false;  // 2m+l = F is a gap
    // closure among the windows: sums of two A1 elements not exceeding F must be in A2
    for (int x : a1) {
        for (int y : a1) {
            const int s = x + y;
            if (s <= 2 * m + l && !contains_value(a2, s)) return false;
        }
    }
    const int nb = 2 * m - g + l - static_cast<int>(a1.size()) - static_cast<int>(a2.size());
    return nb >= 0 && nb <= m - l - 1;
}

NumericalSemigroup depth3_build(int g, int m, int l, std::span<const int> a1, std::span<const int> a2,
                                std::span<const int> b) {
    if (!chi_image_test(g, m, l, a1, a2)) fail(Errc::NotInImage, "(A1, A2) is not a chi image for these parameters");
    const int want = 2 * m - g + l - static_cast<int>(a1.size()) - static_cast<int>(a2.size());
    if (static_cast<int>(b.size()) != want) fail(Errc::BadSize, "subset size must be 2m-g+l-|A1|-|A2|");
    if (!sorted_unique_in(b, 1, m - l - 1)) fail(Errc::OutOfRange, "B must be a subset of [1, m-l-1]");
    const int frob = 2 * m + l;
    const int bound = std::max(2 * g + 1, frob + 1);
    auto w = empty_words(bound);
    set_bit(w, 0);
    for (int x : a1) set_bit(w, x);
    for (int x : b) set_bit(w, m + l + x);
    for (int x : a2) set_bit(w, x);
    set_range(w, frob + 1, bound);
    return NumericalSemigroup::from_parts(std::move(w), bound, frob);
}

NumericalSemigroup frob_depth2_build(int frob, std::span<const int> b) {
    if (frob < 1) fail(Errc::OutOfRange, "Frobenius number must be >= 1");
    if (!sorted_unique_in(b, 1, (frob - 1) / 2)) fail(Errc::OutOfRange, "B must be a subset of [1, floor((F-1)/2)]");
    const int bound = 2 * frob;
    auto w = empty_words(bound);
    set_bit(w, 0);
    for (int x : b) set_bit(w, frob / 2 + x);
    set_range(w, frob + 1, bound);
    return NumericalSemigroup::from_parts(std::move(w), bound, frob);
}

NumericalSemigroup frob_depth3_build(int frob, int g, int m, std::span<const int> a1, std::span<const int> a2,
                                     std::span<const int> b) {
    if (frob <= 2 * m || frob >= 3 * m) fail(Errc::OutOfRange, "depth-3 by Frobenius needs 2m < F < 3m");
    return depth3_build(g, m, frob - 2 * m, a1, a2, b);
}

std::pair<std::vector<int>, std::vector<int>> chi_project(const NumericalSemigroup& s, int g, int m, int l) {
    if (s.genus() != g || s.multiplicity() != m || s.frobenius() != 2 * m + l || l < 1 || l > m - 1)
        fail(Errc::WrongFamily, "semigroup is not in C(g, m, l)");
    std::vector<int> a1, a2;
    for (int n = m; n <= m + l; ++n) {
        if (s.contains(n)) a1.push_back(n);
    }
    for (int n = 2 * m; n <= 2 * m + l; ++n) {
        if (s.contains(n)) a2.push_back(n);
    }
    return {std::move(a1), std::move(a2)};
}

BigUint family_size(const FamilySpec& spec) {
    struct Sizer {
        BigUint operator()(const Depth2Genus& f) const {
            const int nb = 2 * f.m - f.g - 2;
            if (f.m < 2 || nb < 0 || nb > f.m - 1) return BigUint();
            return binomial(static_cast<std::uint64_t>(f.m - 1), static_cast<std::uint64_t>(nb));
        }
        BigUint operator()(const Depth3Fiber& f) const {
            if (!chi_image_test(f.g, f.m, f.l, f.a1, f.a2)) return BigUint();
            const int nb = 2 * f.m - f.g + f.l - static_cast<int>(f.a1.size()) - static_cast<int>(f.a2.size());
            return binomial(static_cast<std::uint64_t>(f.m - f.l - 1), static_cast<std::uint64_t>(nb));
        }
        BigUint operator()(const Depth2Frob& f) const {
            const int nb = f.frob - f.g;
            if (f.frob < 1 || nb < 0 || nb > (f.frob - 1) / 2) return BigUint();
            return binomial(static_cast<std::uint64_t>((f.frob - 1) / 2), static_cast<std::uint64_t>(nb));
        }
        BigUint operator()(const Depth3Frob& f) const {
            if (f.frob <= 2 * f.m || f.frob >= 3 * f.m) return BigUint();
            return family_size(Depth3Fiber{f.g, f.m, f.frob - 2 * f.m, f.a1, f.a2});
        }
    };
    return std::visit(Sizer{}, spec);
}

}  // namespace sgs
