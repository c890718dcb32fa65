#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "sgs/bigint.hpp"
#include "sgs/semigroup.hpp"

namespace sgs {

// Parameterized families of depth-2 and depth-3 semigroups.
//
// Depth2Genus(g, m):  S = (m+B) u {0, m, 2m->} for B in {1..m-1}, |B| = 2m-g-2.
// Depth3Fiber(g, m, l, A1, A2): S = {0} u A1 u (m+l+B) u A2 u {2m+l+1->}
//   for B in {1..m-l-1}, |B| = 2m-g+l-|A1|-|A2|; windows A1 in [m, m+l],
//   A2 in [2m, 2m+l] must be in the image of the chi projection.
// Depth2Frob(F, g): S = (floor(F/2)+B) u {0, F+1->} for B in {1..floor((F-1)/2)}, |B| = F-g.
// Depth3Frob(F, g, m, A1, A2): alias of Depth3Fiber(g, m, F-2m, A1, A2).
struct Depth2Genus {
    int g, m;
};
struct Depth3Fiber {
    int g, m, l;
    std::vector<int> a1, a2;
};
struct Depth2Frob {
    int frob, g;
};
struct Depth3Frob {
    int frob, g, m;
    std::vector<int> a1, a2;
};
using FamilySpec = std::variant<Depth2Genus, Depth3Fiber, Depth2Frob, Depth3Frob>;

// Number of semigroups in the family: a single binomial coefficient
// (0 when the size constraint is infeasible).
BigUint family_size(const FamilySpec& spec);

NumericalSemigroup depth2_build(int g, int m, std::span<const int> b);
NumericalSemigroup depth3_build(int g, int m, int l, std::span<const int> a1, std::span<const int> a2,
                                std::span<const int> b);
NumericalSemigroup frob_depth2_build(int frob, std::span<const int> b);
NumericalSemigroup frob_depth3_build(int frob, int g, int m, std::span<const int> a1, std::span<const int> a2,
                                     std::span<const int> b);

// chi(S) = (S n [m, m+l], S n [2m, 2m+l]) for S with m(S)=m, g(S)=g, F(S)=2m+l.
std::pair<std::vector<int>, std::vector<int>> chi_project(const NumericalSemigroup& s, int g, int m, int l);

// True iff (A1, A2) = chi(S) for some semigroup in C(g, m, l).
bool chi_image_test(int g, int m, int l, std::span<const int> a1, std::span<const int> a2);

}  // namespace sgs
