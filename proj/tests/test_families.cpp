#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "sgs/enumerate.hpp"
#include "sgs/families.hpp"

using namespace sgs;

namespace {

// all subsets of {1..universe} of a given size, in colexicographic-ish order
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

}  // namespace

TEST_CASE("depth2_build examples") {
    NumericalSemigroup a = depth2_build(4, 3, std::vector<int>{});
    CHECK(a == NumericalSemigroup::parse("0,3,6->"));
    CHECK(a.frobenius() == 5);
    CHECK(a.genus() == 4);
    CHECK(a.multiplicity() == 3);

    NumericalSemigroup b = depth2_build(4, 4, std::vector<int>{1, 2});
    CHECK(b == NumericalSemigroup::parse("0,4,5,6,8->"));
    CHECK(b.element(2) == 5);

    // maximal-B boundary: m = g+1 forces B = [1, g] and yields the ordinary semigroup
    NumericalSemigroup c = depth2_build(6, 7, std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(c == ordinary_semigroup(6));

    CHECK_THROWS_AS(depth2_build(4, 4, std::vector<int>{1}), Error);      // BadSize
    CHECK_THROWS_AS(depth2_build(4, 4, std::vector<int>{1, 5}), Error);   // OutOfRange
    CHECK_THROWS_AS(depth2_build(9, 4, std::vector<int>{}), Error);       // infeasible size
}

TEST_CASE("family sizes are binomials and sum to filtered counts") {
    CHECK(family_size(Depth2Genus{4, 4}).to_u64() == 3);
    std::uint64_t total4 = 0;
    for (int m = 3; m <= 5; ++m) total4 += family_size(Depth2Genus{4, m}).to_u64();
    CHECK(total4 == 5);
    std::uint64_t filtered = 0;
    visit_by_genus(4, [&](const SemigroupView& v) {
        if (v.frobenius < 2 * v.multiplicity) ++filtered;
    });
    CHECK(filtered == 5);

    std::uint64_t frob7 = 0;
    for (int g = 4; g <= 7; ++g) frob7 += family_size(Depth2Frob{7, g}).to_u64();
    CHECK(frob7 == 8);  // 2^floor((F-1)/2)

    CHECK(family_size(Depth2Genus{9, 4}).is_zero());
}

TEST_CASE("chi projection and its image predicate") {
    NumericalSemigroup s = NumericalSemigroup::parse("0,4,8,12->");
    CHECK(s.genus() == 9);
    CHECK(s.frobenius() == 11);
    CHECK(s.depth() == 3);
    auto [a1, a2] = chi_project(s, 9, 4, 3);
    CHECK(a1 == std::vector<int>{4});
    CHECK(a2 == std::vector<int>{8});
    CHECK_THROWS_AS(chi_project(s, 6, 4, 3), Error);  // wrong genus: WrongFamily

    // windows always contain m and 2m, never F; A1-sums below F must land in A2
    CHECK(chi_image_test(9, 4, 3, a1, a2));
    CHECK_FALSE(chi_image_test(9, 4, 3, std::vector<int>{5}, a2));                   // m missing
    CHECK_FALSE(chi_image_test(9, 4, 3, a1, std::vector<int>{8, 11}));               // F in A2
    CHECK_FALSE(chi_image_test(7, 4, 3, std::vector<int>{4, 5}, std::vector<int>{8, 9}));  // 5+5=10 not in A2
    CHECK_FALSE(chi_image_test(5, 3, 0, std::vector<int>{3}, std::vector<int>{6}));  // l = 0 rejected

    // l = 1: the only image pair is ({m}, {2m}) whenever sizes are feasible
    for (int g = 6; g <= 12; ++g) {
        for (int m = 3; m <= g; ++m) {
            const int nb = 2 * m - g + 1 - 2;
            if (nb < 0 || nb > m - 2) continue;
            CHECK(chi_image_test(g, m, 1, std::vector<int>{m}, std::vector<int>{2 * m}));
            CHECK_FALSE(chi_image_test(g, m, 1, std::vector<int>{m, m + 1}, std::vector<int>{2 * m}));
        }
    }
}

TEST_CASE("depth3_build round trip") {
    NumericalSemigroup s = depth3_build(9, 4, 3, std::vector<int>{4}, std::vector<int>{8}, std::vector<int>{});
    CHECK(s == NumericalSemigroup::parse("0,4,8,12->"));
    CHECK(s.genus() == 9);
    CHECK(s.multiplicity() == 4);
    CHECK(s.frobenius() == 11);
    auto [a1, a2] = chi_project(s, 9, 4, 3);
    CHECK(a1 == std::vector<int>{4});
    CHECK(a2 == std::vector<int>{8});

    // a fiber with a nonempty middle block
    NumericalSemigroup t = depth3_build(9, 5, 2, std::vector<int>{5}, std::vector<int>{10}, std::vector<int>{1});
    CHECK(t == NumericalSemigroup::parse("0,5,8,10,13->"));
    auto [t1, t2] = chi_project(t, 9, 5, 2);
    CHECK(t1 == std::vector<int>{5});
    CHECK(t2 == std::vector<int>{10});

    CHECK_THROWS_AS(depth3_build(9, 4, 3, std::vector<int>{4}, std::vector<int>{8}, std::vector<int>{1}),
                    Error);  // BadSize (fiber has |B| = 0)
    CHECK_THROWS_AS(depth3_build(6, 4, 3, std::vector<int>{4}, std::vector<int>{8}, std::vector<int>{}),
                    Error);  // NotInImage at g=6 (size window infeasible)
    CHECK_THROWS_AS(depth3_build(7, 4, 3, std::vector<int>{4, 5}, std::vector<int>{8, 9}, std::vector<int>{}),
                    Error);  // NotInImage: 5+5 = 10 <= F would be a gap
}

TEST_CASE("frob_depth2_build examples") {
    CHECK(frob_depth2_build(6, std::vector<int>{1, 2}) == NumericalSemigroup::parse("0,4,5,7->"));
    CHECK(frob_depth2_build(6, std::vector<int>{1, 2}).genus() == 4);
    CHECK(frob_depth2_build(7, std::vector<int>{1, 2, 3}) == NumericalSemigroup::parse("0,4,5,6,8->"));
    for (int f : {3, 6, 11}) {
        NumericalSemigroup ord = frob_depth2_build(f, std::vector<int>{});
        CHECK(ord == ordinary_semigroup(f));
        CHECK(ord.frobenius() == f);
        CHECK(ord.genus() == f);
    }
    CHECK_THROWS_AS(frob_depth2_build(6, std::vector<int>{3}), Error);  // outside [1, floor((F-1)/2)]
}

TEST_CASE("depth-2 bijectivity against the enumerated population") {
    for (int g = 4; g <= 10; ++g) {
        std::map<int, std::set<std::string>> by_mult;
        visit_by_genus(g, [&](const SemigroupView& v) {
            if (v.frobenius < 2 * v.multiplicity) {
                by_mult[v.multiplicity].insert(v.materialize().to_string());
            }
        });
        for (int m = 2; m <= g + 1; ++m) {
            const int nb = 2 * m - g - 2;
            std::set<std::string> built;
            if (nb >= 0 && nb <= m - 1) {
                for_each_subset(m - 1, nb, [&](const std::vector<int>& b) {
                    NumericalSemigroup s = depth2_build(g, m, b);
                    CHECK(s.genus() == g);
                    CHECK(s.multiplicity() == m);
                    CHECK(s.frobenius() < 2 * m);
                    built.insert(s.to_string());
                });
            }
            CHECK(built.size() == family_size(Depth2Genus{g, m}).to_u64());
            auto it = by_mult.find(m);
            const std::set<std::string>& enumerated = it == by_mult.end() ? std::set<std::string>{} : it->second;
            CHECK(built == enumerated);
        }
    }
}

TEST_CASE("depth-3 fibers cover exactly the enumerated classes") {
    for (int g = 5; g <= 10; ++g) {
        // enumerated C(g, m, l) classes keyed by (m, l)
        std::map<std::pair<int, int>, std::set<std::string>> classes;
        visit_by_genus(g, [&](const SemigroupView& v) {
            const int m = v.multiplicity, f = v.frobenius;
            if (2 * m < f && f < 3 * m) {
                classes[{m, f - 2 * m}].insert(v.materialize().to_string());
            }
        });
        for (int m = 2; m <= g + 1; ++m) {
            for (int l = 1; l <= m - 1; ++l) {
                std::set<std::string> built;
                // enumerate candidate windows and keep the chi image; A1 must
                // contain m, A2 must contain 2m and omit 2m+l
                for (std::uint32_t mask1 = 0; mask1 < (1u << l); ++mask1) {
                    std::vector<int> a1{m};
                    for (int i = 0; i < l; ++i) {
                        if ((mask1 >> i) & 1u) a1.push_back(m + i + 1);
                    }
                    for (std::uint32_t mask2 = 0; mask2 < (1u << (l - 1)); ++mask2) {
                        std::vector<int> a2{2 * m};
                        for (int i = 0; i + 1 < l; ++i) {
                            if ((mask2 >> i) & 1u) a2.push_back(2 * m + i + 1);
                        }
                        if (!chi_image_test(g, m, l, a1, a2)) continue;
                        const int nb = 2 * m - g + l - static_cast<int>(a1.size()) - static_cast<int>(a2.size());
                        std::set<std::string> fiber;
                        for_each_subset(m - l - 1, nb, [&](const std::vector<int>& b) {
                            NumericalSemigroup s = depth3_build(g, m, l, a1, a2, b);
                            CHECK(s.genus() == g);
                            CHECK(s.multiplicity() == m);
                            CHECK(s.frobenius() == 2 * m + l);
                            auto [p1, p2] = chi_project(s, g, m, l);
                            CHECK(p1 == a1);
                            CHECK(p2 == a2);
                            fiber.insert(s.to_string());
                        });
                        CHECK(fiber.size() == family_size(Depth3Fiber{g, m, l, a1, a2}).to_u64());
                        built.insert(fiber.begin(), fiber.end());
                    }
                }
                auto it = classes.find({m, l});
                const std::set<std::string>& enumerated = it == classes.end() ? std::set<std::string>{} : it->second;
                CHECK(built == enumerated);
            }
        }
    }
}

TEST_CASE("Frobenius depth-2 family equals the filtered enumeration") {
    for (int f = 2; f <= 14; ++f) {
        std::set<std::string> enumerated;
        visit_by_frobenius(f, [&](const SemigroupView& v) {
            if (v.frobenius < 2 * v.multiplicity) enumerated.insert(v.materialize().to_string());
        });
        std::set<std::string> built;
        const int universe = (f - 1) / 2;
        for (int size = 0; size <= universe; ++size) {
            for_each_subset(universe, size, [&](const std::vector<int>& b) {
                NumericalSemigroup s = frob_depth2_build(f, b);
                CHECK(s.frobenius() == f);
                CHECK(s.genus() == f - static_cast<int>(b.size()));
                CHECK(s.frobenius() < 2 * s.multiplicity());
                built.insert(s.to_string());
            });
        }
        CHECK(built == enumerated);
        CHECK(built.size() == (1ull << ((f - 1) / 2)));
    }
}

TEST_CASE("Frobenius depth-3 alias") {
    // C_Frob(F, g, m) = C(g, m, F - 2m)
    NumericalSemigroup s = frob_depth3_build(11, 9, 4, std::vector<int>{4}, std::vector<int>{8}, std::vector<int>{});
    CHECK(s == NumericalSemigroup::parse("0,4,8,12->"));
    CHECK(family_size(Depth3Frob{11, 9, 4, {4}, {8}}) == family_size(Depth3Fiber{9, 4, 3, {4}, {8}}));
    CHECK(family_size(Depth3Frob{12, 9, 5, {5}, {10}}).to_u64() == 2);  // B in {1, 2}
    CHECK_THROWS_AS(frob_depth3_build(8, 7, 4, std::vector<int>{4}, std::vector<int>{8}, std::vector<int>{}),
                    Error);  // F = 2m exactly
}

TEST_CASE("chi image predicate agrees with existence in the enumeration") {
    // for every (m, l) class of S_g, the predicate must accept exactly the
    // projections that occur
    for (int g = 5; g <= 9; ++g) {
        std::set<std::string> seen_keys;
        visit_by_genus(g, [&](const SemigroupView& v) {
            const int m = v.multiplicity, f = v.frobenius;
            if (!(2 * m < f && f < 3 * m)) return;
            const int l = f - 2 * m;
            NumericalSemigroup s = v.materialize();
            auto [a1, a2] = chi_project(s, g, m, l);
            CHECK(chi_image_test(g, m, l, a1, a2));
        });
    }
}
