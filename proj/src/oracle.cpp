#include "sgs/oracle.hpp"

#include "sgs/errors.hpp"

namespace sgs {

Moments order_stat_moments(int universe, int subset, int k) {
    if (k < 1 || k > subset || subset > universe) fail(Errc::DomainError, "need 1 <= k <= n <= N");
    const std::int64_t nn = universe, n = subset, kk = k;
    Rational mean = Rational::of((nn + 1) * kk, n + 1);
    Rational variance =
        Rational(BigInt(nn + 1) * BigInt(nn - n) * BigInt(kk) * BigInt(n + 1 - kk),
                 (BigUint(static_cast<std::uint64_t>(n + 1)) * BigUint(static_cast<std::uint64_t>(n + 1))) *
                     BigUint(static_cast<std::uint64_t>(n + 2)));
    return {mean, variance};
}

namespace {

Moments shifted_order_stat(int universe, int subset, int k, int shift) {
    Moments m = order_stat_moments(universe, subset, k);
    m.mean = m.mean + Rational(shift);
    return m;
}

}  // namespace

Moments family_moments(const FamilySpec& spec, int k) {
    struct Eval {
        int k;
        Moments operator()(const Depth2Genus& f) const {
            const int nb = 2 * f.m - f.g - 2;
            if (f.m < 2 || nb < 0 || nb > f.m - 1) fail(Errc::InfeasibleFamily, "B(g,m) is empty");
            if (k < 1 || k > nb) fail(Errc::IndexOutOfWindow, "need 1 <= k <= 2m-g-2");
            // a_{k+1} = m + (k-th smallest of B)
            return shifted_order_stat(f.m - 1, nb, k, f.m);
        }
        Moments operator()(const Depth3Fiber& f) const {
            if (!chi_image_test(f.g, f.m, f.l, f.a1, f.a2))
                fail(Errc::InfeasibleFamily, "(A1, A2) is not a chi image for these parameters");
            const int na1 = static_cast<int>(f.a1.size());
            const int nb = 2 * f.m - f.g + f.l - na1 - static_cast<int>(f.a2.size());
            if (k <= na1 || k > na1 + nb) fail(Errc::IndexOutOfWindow, "need |A1| < k <= 2m-g+l-|A2|");
            // a_k = (m+l) + ((k-|A1|)-th smallest of B)
            return shifted_order_stat(f.m - f.l - 1, nb, k - na1, f.m + f.l);
        }
        Moments operator()(const Depth2Frob& f) const {
            const int nb = f.frob - f.g;
            if (f.frob < 1 || nb < 0 || nb > (f.frob - 1) / 2)
                fail(Errc::InfeasibleFamily, "B_Frob(F,g) is empty");
            if (k < 1 || k > nb) fail(Errc::IndexOutOfWindow, "need 1 <= k <= F-g");
            // a_k = floor(F/2) + (k-th smallest of B)
            return shifted_order_stat((f.frob - 1) / 2, nb, k, f.frob / 2);
        }
        Moments operator()(const Depth3Frob& f) const {
            if (f.frob <= 2 * f.m || f.frob >= 3 * f.m) fail(Errc::InfeasibleFamily, "need 2m < F < 3m");
            return Eval{k}(Depth3Fiber{f.g, f.m, f.frob - 2 * f.m, f.a1, f.a2});
        }
    };
    return std::visit(Eval{k}, spec);
}

}  // namespace sgs
