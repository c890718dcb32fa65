#pragma once

#include "sgs/bigint.hpp"
#include "sgs/families.hpp"

namespace sgs {

struct Moments {
    Rational mean;
    Rational variance;
};

// k-th smallest element of a uniformly random n-subset of {1..N}:
// mean (N+1)k/(n+1), variance (N+1)(N-n)k(n+1-k)/((n+1)^2 (n+2)).
Moments order_stat_moments(int universe, int subset, int k);

// Moments of a profile element over a uniformly random member of the family.
// The index k is the order-statistic index within the family's random block:
// for Depth2Genus it describes a_{k+1}, for the other families a_k (whose
// valid window is |A1| < k <= |A1| + block size, shifted accordingly).
Moments family_moments(const FamilySpec& spec, int k);

}  // namespace sgs
