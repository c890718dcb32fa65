#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgs {

// Arbitrary-precision unsigned integer, little-endian 64-bit limbs.
// Canonical form never has trailing zero limbs; zero is the empty vector.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {  // NOLINT: implicit by design
        if (v) limbs_.push_back(v);
    }

    static BigUint from_decimal(const std::string& s);
    static BigUint from_limbs(std::vector<std::uint64_t> limbs);  // little-endian

    bool is_zero() const { return limbs_.empty(); }
    std::size_t limb_count() const { return limbs_.size(); }
    std::uint64_t limb(std::size_t i) const { return i < limbs_.size() ? limbs_[i] : 0; }
    std::size_t bit_length() const;
    std::uint64_t to_u64() const;  // requires the value to fit
    double to_double() const;
    std::string to_decimal() const;

    int compare(const BigUint& o) const;
    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
    bool operator>(const BigUint& o) const { return compare(o) > 0; }
    bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);  // requires *this >= o
    BigUint operator+(const BigUint& o) const { BigUint r = *this; return r += o; }
    BigUint operator-(const BigUint& o) const { BigUint r = *this; return r -= o; }
    BigUint operator*(const BigUint& o) const;
    BigUint mul_u64(std::uint64_t m) const;

    // Quotient/remainder; divisor must be nonzero.
    static void divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r);
    BigUint operator/(const BigUint& o) const;
    BigUint operator%(const BigUint& o) const;
    std::uint64_t divmod_u64(std::uint64_t d);  // in-place quotient, returns remainder

    static BigUint gcd(BigUint a, BigUint b);

private:
    void trim();
    std::vector<std::uint64_t> limbs_;
};

BigUint binomial(std::uint64_t n, std::uint64_t k);

// Signed arbitrary-precision integer.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT: implicit by design
    BigInt(BigUint mag, bool negative = false) : mag_(std::move(mag)), neg_(negative && !mag_.is_zero()) {}

    const BigUint& magnitude() const { return mag_; }
    bool negative() const { return neg_; }
    bool is_zero() const { return mag_.is_zero(); }

    BigInt operator-() const { return BigInt(mag_, !neg_); }
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const { return *this + (-o); }
    BigInt operator*(const BigInt& o) const { return BigInt(mag_ * o.mag_, neg_ != o.neg_); }
    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    int compare(const BigInt& o) const;
    bool operator<(const BigInt& o) const { return compare(o) < 0; }

    double to_double() const { return neg_ ? -mag_.to_double() : mag_.to_double(); }
    std::string to_decimal() const { return (neg_ ? "-" : "") + mag_.to_decimal(); }

private:
    BigUint mag_;
    bool neg_ = false;
};

// Exact rational with normalized representation (gcd 1, positive denominator).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt num, BigUint den);
    static Rational of(std::int64_t num, std::int64_t den);

    const BigInt& num() const { return num_; }
    const BigUint& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    int compare(const Rational& o) const;
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }

    double to_double() const;
    std::string to_string() const;  // "p/q" or "p" when q == 1

private:
    BigInt num_;
    BigUint den_;
};

// Decimal rendering of unsigned 128-bit counters.
std::string u128_to_string(unsigned __int128 v);

}  // namespace sgs
