#include "sgs/shape.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "sgs/errors.hpp"

namespace sgs {

double limit_shape(double alpha, Convention conv) {
    if (alpha < 0.0 || alpha > 1.0) fail(Errc::DomainError, "alpha outside [0,1]");
    if (conv == Convention::Genus) {
        return alpha <= limits::breakpoint_genus ? limits::gamma + limits::phi * alpha : 1.0 + alpha;
    }
    return alpha <= limits::breakpoint_frob ? 0.5 + 2.0 * alpha : 0.75 + alpha;
}

namespace {

int shape_index(double alpha, int scale) {
    if (alpha < 0.0 || alpha > 1.0) fail(Errc::DomainError, "alpha outside [0,1]");
    int t = 1 + static_cast<int>(std::floor(alpha * (scale - 1)));
    return std::min(t, scale);
}

}  // namespace

double shape_value(std::span<const int> profile_values, int scale, double alpha) {
    if (scale < 2) fail(Errc::DomainError, "shape_value needs scale >= 2");
    const int t = shape_index(alpha, scale);
    return static_cast<double>(profile_values[static_cast<std::size_t>(t - 1)]) / scale;
}

double shape_value(const ShapeProfile& p, double alpha) { return shape_value(p.values, p.scale, alpha); }

double shape_value(const NumericalSemigroup& s, double alpha, Convention conv) {
    const int scale = conv == Convention::Genus ? s.genus() : s.frobenius();
    if (scale < 2) fail(Errc::DomainError, "shape_value needs genus >= 2 (or Frobenius >= 2)");
    if (alpha < 0.0 || alpha > 1.0) fail(Errc::DomainError, "alpha outside [0,1]");
    const int t = shape_index(alpha, scale);
    return static_cast<double>(s.element(t)) / scale;
}

double sup_distance(std::span<const int> profile_values, int scale, Convention conv) {
    if (scale < 2) fail(Errc::DomainError, "sup_distance needs scale >= 2");
    const int s = scale;
    const double bp = conv == Convention::Genus ? limits::breakpoint_genus : limits::breakpoint_frob;
    double sup = 0.0;
    // the step function holds value a_t/s on [ (t-1)/(s-1), t/(s-1) ); the
    // limit is continuous and monotone, so each interval's sup is attained at
    // a closed endpoint (the breakpoint is included for good measure)
    for (int t = 1; t <= s; ++t) {
        const double v = static_cast<double>(profile_values[static_cast<std::size_t>(t - 1)]) / s;
        const double lo = static_cast<double>(t - 1) / (s - 1);
        const double hi = std::min(1.0, static_cast<double>(t) / (s - 1));
        sup = std::max(sup, std::abs(v - limit_shape(lo, conv)));
        sup = std::max(sup, std::abs(v - limit_shape(hi, conv)));
        if (bp > lo && bp < hi) sup = std::max(sup, std::abs(v - limit_shape(bp, conv)));
    }
    return sup;
}

double sup_distance(const ShapeProfile& p) { return sup_distance(p.values, p.scale, p.convention); }

double sup_distance(const NumericalSemigroup& s, Convention conv) {
    const int scale = conv == Convention::Genus ? s.genus() : s.frobenius();
    if (scale < 2) fail(Errc::DomainError, "sup_distance needs genus >= 2 (or Frobenius >= 2)");
    return sup_distance(profile(s, conv));
}

double f1_limit(double x) {
    if (x < 0.0 || x > 2.0) fail(Errc::DomainError, "f1 argument outside [0,2]");
    const double g1 = limits::gamma, g2 = 2.0 * limits::gamma;
    if (x == g1 || x == g2) fail(Errc::DomainError, "f1 is undefined at its discontinuities");
    if (x < g1) return 0.0;
    if (x < g2) return 0.61803398874989484820;  // (sqrt 5 - 1)/2
    return 1.0;
}

HeatMap::HeatMap(Convention conv, int index_count, int scale)
    : conv_(conv), index_count_(index_count), scale_(scale) {
    if (index_count < 1 || scale < 1) fail(Errc::DomainError, "heat map needs positive dimensions");
    cells_.assign(static_cast<std::size_t>(index_count) * (2 * static_cast<std::size_t>(scale)), 0);
}

std::uint64_t HeatMap::cell(int k, int j) const {
    if (k < 1 || k > index_count_ || j < 1 || j > 2 * scale_) fail(Errc::OutOfRange, "heat map cell out of range");
    return cells_[static_cast<std::size_t>(k - 1) * (2 * static_cast<std::size_t>(scale_)) + (j - 1)];
}

void HeatMap::add(std::span<const int> profile_values) {
    if (static_cast<int>(profile_values.size()) != index_count_)
        fail(Errc::DimensionMismatch, "profile length does not match heat map");
    const std::size_t row = 2 * static_cast<std::size_t>(scale_);
    for (int k = 0; k < index_count_; ++k) {
        const int j = profile_values[static_cast<std::size_t>(k)];
        if (j < 1 || j > 2 * scale_) fail(Errc::DimensionMismatch, "profile value outside heat map range");
        ++cells_[static_cast<std::size_t>(k) * row + (j - 1)];
    }
    ++total_;
}

void HeatMap::add(const NumericalSemigroup& s) {
    ShapeProfile p = profile(s, conv_);
    if (p.scale != scale_) fail(Errc::DimensionMismatch, "semigroup scale does not match heat map");
    add(p.values);
}

void HeatMap::merge(const HeatMap& o) {
    if (conv_ != o.conv_ || index_count_ != o.index_count_ || scale_ != o.scale_)
        fail(Errc::DimensionMismatch, "heat map shapes differ");
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += o.cells_[i];
    total_ += o.total_;
}

void HeatMap::write_csv(std::ostream& os) const {
    os << "k,j,count\n";
    const std::size_t row = 2 * static_cast<std::size_t>(scale_);
    for (int k = 1; k <= index_count_; ++k) {
        for (int j = 1; j <= 2 * scale_; ++j) {
            const std::uint64_t c = cells_[static_cast<std::size_t>(k - 1) * row + (j - 1)];
            if (c) os << k << ',' << j << ',' << c << '\n';
        }
    }
}

void HeatMap::write_pgm(std::ostream& os, bool log_scale) const {
    std::uint64_t cmax = 0;
    for (std::uint64_t c : cells_) cmax = std::max(cmax, c);
    os << "P2\n" << index_count_ << ' ' << 2 * scale_ << "\n255\n";
    const std::size_t row = 2 * static_cast<std::size_t>(scale_);
    const double denom = log_scale ? std::log1p(static_cast<double>(cmax)) : static_cast<double>(cmax);
    for (int j = 2 * scale_; j >= 1; --j) {
        for (int k = 1; k <= index_count_; ++k) {
            const std::uint64_t c = cells_[static_cast<std::size_t>(k - 1) * row + (j - 1)];
            int pix = 0;
            if (cmax > 0) {
                const double v = log_scale ? std::log1p(static_cast<double>(c)) : static_cast<double>(c);
                pix = static_cast<int>(std::lround(255.0 * v / denom));
            }
            os << pix << (k == index_count_ ? '\n' : ' ');
        }
    }
}

}  // namespace sgs
