#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgs {

enum class Convention { Genus, Frobenius };

// A numerical semigroup: cofinite subset of the nonnegative integers that
// contains 0 and is closed under addition.  Membership is stored explicitly
// as one bit per integer in [0, bound]; every integer above bound is a member
// (bound >= F+1 always holds).  Immutable after construction.
class NumericalSemigroup {
public:
    // The natural numbers {0,1,2,...} (genus 0, Frobenius -1).
    static NumericalSemigroup natural_numbers(int bound = 3);

    // Membership given explicitly on [0, bound].  The Frobenius number is
    // inferred as the largest non-element; the represented tail must have
    // length >= multiplicity so that the infinite extension is unambiguous.
    static NumericalSemigroup from_elements(std::span<const int> elems, int bound);

    // Complement given as a finite gap set within [1, 2g-1].
    static NumericalSemigroup from_gaps(std::span<const int> gaps);

    // Text form: comma-separated elements with a trailing "->" on the first
    // element of the infinite tail, e.g. "0,4,5,7->".
    static NumericalSemigroup parse(std::string_view text);
    std::string to_string() const;

    // Trusted constructor for callers that know the Frobenius number
    // (enumeration, family builders).  Still fully validated.
    static NumericalSemigroup from_parts(std::vector<std::uint64_t> words, int bound, int frobenius);

    int bound() const { return bound_; }
    int genus() const { return genus_; }
    int frobenius() const { return frobenius_; }
    int multiplicity() const { return multiplicity_; }
    int depth() const { return depth_; }
    std::span<const std::uint64_t> words() const { return words_; }

    bool contains(int n) const {
        if (n < 0) return false;
        if (n > bound_) return true;
        return (words_[static_cast<std::size_t>(n) >> 6] >> (n & 63)) & 1u;
    }

    // k-th smallest nonzero element, k >= 1.
    int element(int k) const;

    std::vector<int> elements_upto(int limit) const;
    std::vector<int> gaps() const;

    // Elements not expressible as a sum of two nonzero elements.
    std::vector<int> minimal_generators() const;

    // Tree children: S minus one minimal generator exceeding F(S).
    std::vector<NumericalSemigroup> children() const;

    // Set equality (independent of bound).
    bool operator==(const NumericalSemigroup& o) const;
    bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

private:
    NumericalSemigroup() = default;
    void compute_caches_and_validate(int frobenius);

    std::vector<std::uint64_t> words_;
    int bound_ = 0;
    int genus_ = 0;
    int frobenius_ = -1;
    int multiplicity_ = 1;
    int depth_ = 0;
};

// The ordered small elements a_1..a_t of a semigroup: t = g under the Genus
// convention, t = F under the Frobenius convention; scale is the divisor used
// for normalization (g or F).
struct ShapeProfile {
    Convention convention;
    std::vector<int> values;
    int scale;
};

ShapeProfile profile(const NumericalSemigroup& s, Convention conv);

// Reference semigroups.
NumericalSemigroup ordinary_semigroup(int genus);       // {0, g+1 ->}
NumericalSemigroup hyperelliptic_semigroup(int genus);  // even numbers up to 2g, then all

}  // namespace sgs
