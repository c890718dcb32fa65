#include "sgs/regress.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "sgs/enumerate.hpp"
#include "sgs/errors.hpp"

namespace sgs {

int i_cut(int scale, Convention conv) {
    if (conv == Convention::Genus) {
        if (scale < 4) fail(Errc::DomainError, "i_cut by genus needs g >= 4");
        return static_cast<int>(std::ceil((scale - 1) / std::sqrt(5.0)));
    }
    if (scale < 6) fail(Errc::DomainError, "i_cut by Frobenius needs F >= 6");
    return (scale - 1) / 4 + 1;
}

namespace {

struct Segment {
    double m, b, r2;
};

// OLS over points ((i-1)/(scale-1), a_i/scale) for i in [lo, hi].
Segment fit_segment(std::span<const int> values, int scale, int lo, int hi) {
    const int n = hi - lo + 1;
    if (n < 2) fail(Errc::DegenerateSegment, "regression segment needs at least 2 points");
    const double xden = scale - 1;
    const double xbar = 0.5 * ((lo - 1) + (hi - 1)) / xden;
    double e = 0.0;
    for (int i = lo; i <= hi; ++i) e += values[static_cast<std::size_t>(i - 1)];
    e /= static_cast<double>(n) * scale;
    double sxy = 0.0, sxx = 0.0;
    for (int i = lo; i <= hi; ++i) {
        const double dx = xbar - (i - 1) / xden;
        const double dy = e - values[static_cast<std::size_t>(i - 1)] / static_cast<double>(scale);
        sxy += dy * dx;
        sxx += dx * dx;
    }
    const double m = sxy / sxx;
    const double b = e - m * xbar;
    double sse = 0.0, sst = 0.0;
    for (int i = lo; i <= hi; ++i) {
        const double x = (i - 1) / xden;
        const double y = values[static_cast<std::size_t>(i - 1)] / static_cast<double>(scale);
        sse += (m * x + b - y) * (m * x + b - y);
        sst += (e - y) * (e - y);
    }
    const double r2 = sst == 0.0 ? 1.0 : 1.0 - sse / sst;
    return {m, b, r2};
}

}  // namespace

RegressionStats fit_two_segments(std::span<const int> values, int scale, Convention conv) {
    const int icut = i_cut(scale, conv);
    const Segment l = fit_segment(values, scale, 1, icut);
    const Segment r = fit_segment(values, scale, icut + 1, scale);
    return {l.m, l.b, l.r2, r.m, r.b, r.r2};
}

RegressionStats fit_two_segments(const ShapeProfile& p) {
    return fit_two_segments(p.values, p.scale, p.convention);
}

RegressionStats fit_two_segments(const NumericalSemigroup& s, Convention conv) {
    return fit_two_segments(profile(s, conv));
}

namespace {

struct SegmentExact {
    Rational m, b, r2;
};

SegmentExact fit_segment_exact(std::span<const int> values, int scale, int lo, int hi) {
    const int n = hi - lo + 1;
    if (n < 2) fail(Errc::DegenerateSegment, "regression segment needs at least 2 points");
    auto x_of = [&](int i) { return Rational::of(i - 1, scale - 1); };
    auto y_of = [&](int i) { return Rational::of(values[static_cast<std::size_t>(i - 1)], scale); };
    Rational xbar = Rational::of((lo - 1) + (hi - 1), 2 * (scale - 1));
    Rational e(0);
    for (int i = lo; i <= hi; ++i) e = e + y_of(i);
    e = e / Rational(n);
    Rational sxy(0), sxx(0);
    for (int i = lo; i <= hi; ++i) {
        Rational dx = xbar - x_of(i);
        Rational dy = e - y_of(i);
        sxy = sxy + dy * dx;
        sxx = sxx + dx * dx;
    }
    Rational m = sxy / sxx;
    Rational b = e - m * xbar;
    Rational sse(0), sst(0);
    for (int i = lo; i <= hi; ++i) {
        Rational res = m * x_of(i) + b - y_of(i);
        Rational dev = e - y_of(i);
        sse = sse + res * res;
        sst = sst + dev * dev;
    }
    Rational r2 = sst.is_zero() ? Rational(1) : Rational(1) - sse / sst;
    return {m, b, r2};
}

}  // namespace

RegressionStatsExact fit_two_segments_exact(const ShapeProfile& p) {
    const int icut = i_cut(p.scale, p.convention);
    const SegmentExact l = fit_segment_exact(p.values, p.scale, 1, icut);
    const SegmentExact r = fit_segment_exact(p.values, p.scale, icut + 1, p.scale);
    return {l.m, l.b, l.r2, r.m, r.b, r.r2};
}

TableRow table_row_from_sums(Convention conv, int scale, unsigned __int128 count,
                             const std::array<double, 6>& sums) {
    TableRow row;
    row.conv = conv;
    row.scale = scale;
    row.count = count;
    row.icut = i_cut(scale, conv);
    row.points_right = scale - row.icut;
    row.raw_sums = sums;
    const double n = static_cast<double>(count);
    for (int i = 0; i < 6; ++i) row.means[static_cast<std::size_t>(i)] = sums[static_cast<std::size_t>(i)] / n;
    return row;
}

TableRow aggregate(int scale, Convention conv, const EnumOptions& opts) {
    i_cut(scale, conv);  // validate range up front
    RegressionSums total = accumulate_regression(scale, conv, opts);
    std::array<double, 6> sums;
    for (int i = 0; i < 6; ++i) sums[static_cast<std::size_t>(i)] = total.sums[static_cast<std::size_t>(i)].value();
    return table_row_from_sums(conv, scale, total.count, sums);
}

std::vector<DeltaRow> increments(std::span<const TableRow> rows) {
    if (rows.size() < 2) fail(Errc::GapInSeries, "increments need at least two consecutive rows");
    std::vector<DeltaRow> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].scale != rows[i - 1].scale + 1 || rows[i].conv != rows[i - 1].conv)
            fail(Errc::GapInSeries, "rows must have consecutive scales");
        DeltaRow d;
        d.scale = rows[i].scale;
        d.count = rows[i].count;
        d.d_icut = rows[i].icut - rows[i - 1].icut;
        d.d_points_right = rows[i].points_right - rows[i - 1].points_right;
        for (int j = 0; j < 6; ++j) {
            d.deltas[static_cast<std::size_t>(j)] =
                rows[i].means[static_cast<std::size_t>(j)] - rows[i - 1].means[static_cast<std::size_t>(j)];
        }
        out.push_back(d);
    }
    return out;
}

namespace {

void append_fixed6(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    out += buf;
}

}  // namespace

void write_row_csv(std::ostream& os, const TableRow& row) {
    std::string line = std::to_string(row.scale) + "," + u128_to_string(row.count) + "," +
                       std::to_string(row.icut) + "," + std::to_string(row.points_right);
    for (double m : row.means) {
        line += ',';
        append_fixed6(line, m);
    }
    os << line << '\n';
}

void write_delta_csv(std::ostream& os, const DeltaRow& row) {
    std::string line = std::to_string(row.scale) + "," + u128_to_string(row.count) + "," +
                       std::to_string(row.d_icut) + "," + std::to_string(row.d_points_right);
    for (double d : row.deltas) {
        line += ',';
        append_fixed6(line, d);
    }
    os << line << '\n';
}

}  // namespace sgs
