#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "sgs/bigint.hpp"
#include "sgs/enumerate_options.hpp"
#include "sgs/kahan.hpp"
#include "sgs/semigroup.hpp"

namespace sgs {

// Split index between the left and right regression segments:
// ceil((g-1)/sqrt 5) by genus, floor((F-1)/4)+1 by Frobenius number.
int i_cut(int scale, Convention conv);

// Two-segment least squares over the points ((i-1)/(scale-1), a_i/scale):
// left segment i in [1, i_cut], right segment i in [i_cut+1, scale].
struct RegressionStats {
    double m_l, b_l, r2_l;
    double m_r, b_r, r2_r;
};

RegressionStats fit_two_segments(const ShapeProfile& p);
RegressionStats fit_two_segments(const NumericalSemigroup& s, Convention conv);
RegressionStats fit_two_segments(std::span<const int> values, int scale, Convention conv);

// Exact-rational twin of the fit, used as a cross-check oracle at small scale.
struct RegressionStatsExact {
    Rational m_l, b_l, r2_l;
    Rational m_r, b_r, r2_r;
};

RegressionStatsExact fit_two_segments_exact(const ShapeProfile& p);

// Streaming sums of per-semigroup stats; mergeable in task order.
struct RegressionSums {
    Convention conv = Convention::Genus;
    int scale = 0;
    std::array<KahanSum, 6> sums{};  // m_l, b_l, r2_l, m_r, b_r, r2_r
    unsigned __int128 count = 0;

    void add(const RegressionStats& st) {
        sums[0].add(st.m_l);
        sums[1].add(st.b_l);
        sums[2].add(st.r2_l);
        sums[3].add(st.m_r);
        sums[4].add(st.b_r);
        sums[5].add(st.r2_r);
        ++count;
    }
    void merge(const RegressionSums& o) {
        for (int i = 0; i < 6; ++i) sums[i].merge(o.sums[i]);
        count += o.count;
    }
};

// One aggregated table row: population count and the six mean columns.
struct TableRow {
    Convention conv;
    int scale;
    unsigned __int128 count;
    int icut;
    int points_right;
    std::array<double, 6> means;  // mean m_l, b_l, r2_l, m_r, b_r, r2_r
    std::array<double, 6> raw_sums;
};

TableRow aggregate(int scale, Convention conv, const EnumOptions& opts = {});
TableRow table_row_from_sums(Convention conv, int scale, unsigned __int128 count,
                             const std::array<double, 6>& sums);

// Per-scale differences between consecutive rows, plus the i_cut deltas.
struct DeltaRow {
    int scale;
    unsigned __int128 count;
    int d_icut;
    int d_points_right;
    std::array<double, 6> deltas;
};

std::vector<DeltaRow> increments(std::span<const TableRow> rows);

// CSV: scale, count, i_cut, scale - i_cut, then the six means at 6 decimals.
void write_row_csv(std::ostream& os, const TableRow& row);
void write_delta_csv(std::ostream& os, const DeltaRow& row);

}  // namespace sgs
