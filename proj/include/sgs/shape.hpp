#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sgs/bigint.hpp"
#include "sgs/enumerate_options.hpp"
#include "sgs/semigroup.hpp"

namespace sgs {

// Constants of the limiting shapes.
namespace limits {
inline constexpr double phi = 1.6180339887498948482;              // (1+sqrt 5)/2
inline constexpr double gamma = 0.72360679774997896964;           // (5+sqrt 5)/10
inline constexpr double breakpoint_genus = 0.44721359549995793928;  // 1/sqrt 5
inline constexpr double breakpoint_frob = 0.25;
}  // namespace limits

// The limiting shape: two line segments with slopes (phi, 1) for the genus
// convention and (2, 1) for the Frobenius convention.
double limit_shape(double alpha, Convention conv);

// Scaled shape function of one semigroup: a_t / scale with t = 1 + floor(alpha (scale-1)).
double shape_value(const NumericalSemigroup& s, double alpha, Convention conv);
double shape_value(const ShapeProfile& p, double alpha);
double shape_value(std::span<const int> profile_values, int scale, double alpha);

// sup over alpha in [0,1] of |shape_value - limit_shape|, computed exactly
// over the step-function knots.
double sup_distance(const NumericalSemigroup& s, Convention conv);
double sup_distance(const ShapeProfile& p);
double sup_distance(std::span<const int> profile_values, int scale, Convention conv);

// Step approximation to the membership probability P[n in S] as a function of n/g.
double f1_limit(double x);

// Integer count matrix over (index k, value j) cells, j in [1, 2*scale].
class HeatMap {
public:
    HeatMap(Convention conv, int index_count, int scale);

    Convention convention() const { return conv_; }
    int index_count() const { return index_count_; }
    int scale() const { return scale_; }
    std::uint64_t total() const { return total_; }
    std::uint64_t cell(int k, int j) const;

    // One semigroup's profile values a_1..a_{index_count}.
    void add(std::span<const int> profile_values);
    void add(const NumericalSemigroup& s);
    void merge(const HeatMap& o);

    // CSV: header "k,j,count", one row per nonzero cell, k then j ascending.
    void write_csv(std::ostream& os) const;
    // Plain PGM (P2), width index_count, height 2*scale, top row j = 2*scale.
    void write_pgm(std::ostream& os, bool log_scale = false) const;

private:
    Convention conv_;
    int index_count_;
    int scale_;
    std::uint64_t total_ = 0;
    std::vector<std::uint64_t> cells_;  // [k-1][j-1], row-major in k
};

HeatMap heatmap_by_genus(int g, const EnumOptions& opts = {});
HeatMap heatmap_by_frobenius(int F, const EnumOptions& opts = {});

// membership_profile(g)[n-1] = |{S in S_g : n in S}| / n_g for n in [1, 2g].
std::vector<Rational> membership_profile(int g, const EnumOptions& opts = {});

}  // namespace sgs
