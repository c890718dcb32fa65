#include <doctest.h>

#include <functional>
#include <vector>

#include "sgs/enumerate.hpp"
#include "sgs/families.hpp"
#include "sgs/oracle.hpp"

using namespace sgs;

namespace {

void for_each_subset(int universe, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        for (int v = next; v <= universe; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

// exact mean and variance of the k-th smallest element over all n-subsets
Moments exhaustive_moments(int universe, int subset, int k) {
    Rational sum(0), sumsq(0);
    std::int64_t count = 0;
    for_each_subset(universe, subset, [&](const std::vector<int>& s) {
        const std::int64_t v = s[static_cast<std::size_t>(k - 1)];
        sum = sum + Rational(v);
        sumsq = sumsq + Rational(v * v);
        ++count;
    });
    Rational mean = sum / Rational(count);
    Rational var = sumsq / Rational(count) - mean * mean;
    return {mean, var};
}

}  // namespace

TEST_CASE("order statistic moments: closed form equals exhaustive enumeration") {
    Moments m = order_stat_moments(5, 2, 1);
    CHECK(m.mean == Rational(2));
    CHECK(m.variance == Rational(1));

    CHECK(order_stat_moments(9, 9, 4).mean == Rational(4));
    CHECK(order_stat_moments(9, 9, 4).variance == Rational(0));
    CHECK(order_stat_moments(11, 1, 1).mean == Rational(6));

    for (int n_universe = 1; n_universe <= 10; ++n_universe) {
        for (int subset = 1; subset <= n_universe; ++subset) {
            for (int k = 1; k <= subset; ++k) {
                Moments closed = order_stat_moments(n_universe, subset, k);
                Moments brute = exhaustive_moments(n_universe, subset, k);
                CHECK(closed.mean == brute.mean);
                CHECK(closed.variance == brute.variance);
                CHECK(Rational(0) <= closed.variance);
            }
        }
    }
    CHECK_THROWS_AS(order_stat_moments(5, 6, 1), Error);
    CHECK_THROWS_AS(order_stat_moments(5, 2, 3), Error);
    CHECK_THROWS_AS(order_stat_moments(5, 2, 0), Error);
}

TEST_CASE("depth-2 genus family moments") {
    Moments m = family_moments(Depth2Genus{4, 4}, 1);
    CHECK(m.mean == Rational::of(16, 3));
    CHECK(m.variance == Rational::of(2, 9));

    // identity with the shifted order statistic
    for (int g = 4; g <= 12; ++g) {
        for (int mult = g / 2 + 1; mult <= g + 1; ++mult) {
            const int nb = 2 * mult - g - 2;
            if (nb < 1) continue;
            for (int k = 1; k <= nb; ++k) {
                Moments fam = family_moments(Depth2Genus{g, mult}, k);
                Moments ord = order_stat_moments(mult - 1, nb, k);
                CHECK(fam.mean == ord.mean + Rational(mult));
                CHECK(fam.variance == ord.variance);
            }
        }
    }
    CHECK_THROWS_AS(family_moments(Depth2Genus{4, 4}, 3), Error);   // IndexOutOfWindow
    CHECK_THROWS_AS(family_moments(Depth2Genus{9, 4}, 1), Error);   // InfeasibleFamily
}

TEST_CASE("depth-2 genus family moments equal exhaustive fiber statistics") {
    for (int g = 4; g <= 11; ++g) {
        for (int mult = g / 2 + 1; mult <= g + 1; ++mult) {
            const int nb = 2 * mult - g - 2;
            if (nb < 1 || nb > mult - 1) continue;
            for (int k = 1; k <= nb; ++k) {
                Rational sum(0), sumsq(0);
                std::int64_t count = 0;
                for_each_subset(mult - 1, nb, [&](const std::vector<int>& b) {
                    NumericalSemigroup s = depth2_build(g, mult, b);
                    const std::int64_t v = s.element(k + 1);  // a_{k+1}
                    sum = sum + Rational(v);
                    sumsq = sumsq + Rational(v * v);
                    ++count;
                });
                Moments emp{sum / Rational(count), sumsq / Rational(count) - (sum / Rational(count)) * (sum / Rational(count))};
                Moments fam = family_moments(Depth2Genus{g, mult}, k);
                CHECK(fam.mean == emp.mean);
                CHECK(fam.variance == emp.variance);
            }
        }
    }
}

TEST_CASE("depth-3 fiber moments: window errors and exhaustive equality") {
    // the fiber over (m=4, l=3, A1={4}, A2={8}) lives at genus 9 with an empty B,
    // so no index falls in the random-block window
    CHECK_THROWS_AS(family_moments(Depth3Fiber{9, 4, 3, {4}, {8}}, 2), Error);
    try {
        family_moments(Depth3Fiber{9, 4, 3, {4}, {8}}, 2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IndexOutOfWindow);
    }
    try {
        family_moments(Depth3Fiber{6, 4, 3, {4}, {8}}, 2);  // infeasible size window at g=6
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InfeasibleFamily);
    }

    for (int g = 6; g <= 10; ++g) {
        for (int mult = 3; mult <= g; ++mult) {
            for (int l = 1; l <= mult - 1; ++l) {
                for (std::uint32_t mask1 = 0; mask1 < (1u << l); ++mask1) {
                    std::vector<int> a1{mult};
                    for (int i = 0; i < l; ++i) {
                        if ((mask1 >> i) & 1u) a1.push_back(mult + i + 1);
                    }
                    for (std::uint32_t mask2 = 0; mask2 < (1u << (l - 1)); ++mask2) {
                        std::vector<int> a2{2 * mult};
                        for (int i = 0; i + 1 < l; ++i) {
                            if ((mask2 >> i) & 1u) a2.push_back(2 * mult + i + 1);
                        }
                        if (!chi_image_test(g, mult, l, a1, a2)) continue;
                        const int na1 = static_cast<int>(a1.size());
                        const int nb = 2 * mult - g + l - na1 - static_cast<int>(a2.size());
                        if (nb < 1) continue;
                        const int k = na1 + 1 + (nb > 1 ? 1 : 0);  // an interior window index
                        Rational sum(0), sumsq(0);
                        std::int64_t count = 0;
                        for_each_subset(mult - l - 1, nb, [&](const std::vector<int>& b) {
                            NumericalSemigroup s = depth3_build(g, mult, l, a1, a2, b);
                            const std::int64_t v = s.element(k);
                            sum = sum + Rational(v);
                            sumsq = sumsq + Rational(v * v);
                            ++count;
                        });
                        Rational mean = sum / Rational(count);
                        Moments fam = family_moments(Depth3Fiber{g, mult, l, a1, a2}, k);
                        CHECK(fam.mean == mean);
                        CHECK(fam.variance == sumsq / Rational(count) - mean * mean);
                    }
                }
            }
        }
    }
}

TEST_CASE("Frobenius families: moments equal exhaustive statistics") {
    for (int f = 6; f <= 13; ++f) {
        for (int g = (f + 2) / 2; g <= f; ++g) {
            const int nb = f - g;
            if (nb < 1 || nb > (f - 1) / 2) continue;
            for (int k = 1; k <= nb; ++k) {
                Rational sum(0), sumsq(0);
                std::int64_t count = 0;
                for_each_subset((f - 1) / 2, nb, [&](const std::vector<int>& b) {
                    NumericalSemigroup s = frob_depth2_build(f, b);
                    const std::int64_t v = s.element(k);
                    sum = sum + Rational(v);
                    sumsq = sumsq + Rational(v * v);
                    ++count;
                });
                Rational mean = sum / Rational(count);
                Moments fam = family_moments(Depth2Frob{f, g}, k);
                CHECK(fam.mean == mean);
                CHECK(fam.variance == sumsq / Rational(count) - mean * mean);
            }
        }
    }
    // alias family: same moments through the Frobenius naming (F = 2m + l)
    Moments via_frob = family_moments(Depth3Frob{9, 6, 4, {4}, {8}}, 2);
    Moments via_genus = family_moments(Depth3Fiber{6, 4, 1, {4}, {8}}, 2);
    CHECK(via_frob.mean == via_genus.mean);
    CHECK(via_frob.variance == via_genus.variance);
}
