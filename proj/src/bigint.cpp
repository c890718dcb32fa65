#include "sgs/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "sgs/errors.hpp"

namespace sgs {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

std::uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 1) fail(Errc::OutOfRange, "BigUint does not fit in 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

double BigUint::to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return r;
}

int BigUint::compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = static_cast<u128>(limbs_[i]) + (i < o.limbs_.size() ? o.limbs_[i] : 0) + carry;
        limbs_[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (compare(o) < 0) fail(Errc::OutOfRange, "BigUint subtraction would underflow");
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 sub = static_cast<u128>(i < o.limbs_.size() ? o.limbs_[i] : 0) + borrow;
        if (static_cast<u128>(limbs_[i]) >= sub) {
            limbs_[i] -= static_cast<u64>(sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<u64>((static_cast<u128>(1) << 64) + limbs_[i] - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(limbs_[i]) * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r.limbs_[i + o.limbs_.size()] += carry;
    }
    r.trim();
    return r;
}

BigUint BigUint::mul_u64(std::uint64_t m) const {
    if (m == 0 || is_zero()) return BigUint();
    BigUint r;
    r.limbs_.resize(limbs_.size());
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 cur = static_cast<u128>(limbs_[i]) * m + carry;
        r.limbs_[i] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    if (carry) r.limbs_.push_back(carry);
    return r;
}

std::uint64_t BigUint::divmod_u64(std::uint64_t d) {
    if (d == 0) fail(Errc::DomainError, "division by zero");
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<u64>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<u64>(rem);
}

// Knuth algorithm D on 32-bit digits.
void BigUint::divmod(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r) {
    if (b.is_zero()) fail(Errc::DomainError, "division by zero");
    if (a.compare(b) < 0) {
        q = BigUint();
        r = a;
        return;
    }
    if (b.limbs_.size() == 1) {
        q = a;
        r = BigUint(q.divmod_u64(b.limbs_[0]));
        return;
    }
    auto to32 = [](const BigUint& x) {
        std::vector<std::uint32_t> d;
        d.reserve(x.limbs_.size() * 2);
        for (u64 l : x.limbs_) {
            d.push_back(static_cast<std::uint32_t>(l));
            d.push_back(static_cast<std::uint32_t>(l >> 32));
        }
        while (!d.empty() && d.back() == 0) d.pop_back();
        return d;
    };
    auto from32 = [](const std::vector<std::uint32_t>& d) {
        BigUint x;
        x.limbs_.assign((d.size() + 1) / 2, 0);
        for (std::size_t i = 0; i < d.size(); ++i) {
            x.limbs_[i / 2] |= static_cast<u64>(d[i]) << (32 * (i % 2));
        }
        x.trim();
        return x;
    };
    std::vector<std::uint32_t> u = to32(a), v = to32(b);
    const std::size_t n = v.size(), m = u.size() - n;
    const int s = std::countl_zero(static_cast<std::uint32_t>(v.back()));
    // normalize so the top divisor digit has its high bit set
    auto shl = [](std::vector<std::uint32_t>& d, int k) {
        if (k == 0) return;
        std::uint32_t carry = 0;
        for (auto& w : d) {
            std::uint32_t nw = (w << k) | carry;
            carry = static_cast<std::uint32_t>((static_cast<u64>(w) << k) >> 32);
            w = nw;
        }
        if (carry) d.push_back(carry);
    };
    shl(v, s);
    u.push_back(0);
    shl(u, s);
    if (u.size() < m + n + 1) u.resize(m + n + 1, 0);
    std::vector<std::uint32_t> qd(m + 1, 0);
    const u64 base = 1ull << 32;
    for (std::size_t j = m + 1; j-- > 0;) {
        u64 num = (static_cast<u64>(u[j + n]) << 32) | u[j + n - 1];
        u64 qhat = num / v[n - 1];
        u64 rhat = num % v[n - 1];
        while (qhat >= base || qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        u64 carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u64 p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) - static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            borrow = 0;
            if (t < 0) {
                t += static_cast<std::int64_t>(base);
                borrow = 1;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add back
            t += static_cast<std::int64_t>(base);
            --qhat;
            u64 c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u64 sum = static_cast<u64>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(sum);
                c2 = sum >> 32;
            }
            t += static_cast<std::int64_t>(c2);
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        qd[j] = static_cast<std::uint32_t>(qhat);
    }
    q = from32(qd);
    // remainder = u[0..n-1] >> s
    std::vector<std::uint32_t> rd(u.begin(), u.begin() + n);
    if (s) {
        for (std::size_t i = 0; i + 1 < rd.size(); ++i) {
            rd[i] = (rd[i] >> s) | (rd[i + 1] << (32 - s));
        }
        rd.back() >>= s;
    }
    r = from32(rd);
}

BigUint BigUint::operator/(const BigUint& o) const {
    BigUint q, r;
    divmod(*this, o, q, r);
    return q;
}

BigUint BigUint::operator%(const BigUint& o) const {
    BigUint q, r;
    divmod(*this, o, q, r);
    return r;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        u64 chunk = tmp.divmod_u64(10000000000000000000ull);  // 10^19
        std::string part = std::to_string(chunk);
        if (tmp.is_zero()) {
            out.insert(0, part);
        } else {
            out.insert(0, std::string(19 - part.size(), '0') + part);
        }
    }
    return out;
}

BigUint BigUint::from_limbs(std::vector<std::uint64_t> limbs) {
    BigUint r;
    r.limbs_ = std::move(limbs);
    r.trim();
    return r;
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) fail(Errc::ParseError, "empty decimal string");
    BigUint r;
    for (char c : s) {
        if (c < '0' || c > '9') fail(Errc::ParseError, "bad digit in decimal string");
        r = r.mul_u64(10);
        r += BigUint(static_cast<u64>(c - '0'));
    }
    return r;
}

BigUint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUint();
    if (k > n - k) k = n - k;
    BigUint r(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r.mul_u64(n - k + i);
        r.divmod_u64(i);  // exact at every step: partial product is C(n-k+i, i)
    }
    return r;
}

BigInt::BigInt(std::int64_t v) {
    if (v < 0) {
        neg_ = true;
        mag_ = BigUint(static_cast<u64>(-(v + 1)) + 1);
    } else {
        mag_ = BigUint(static_cast<u64>(v));
    }
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (neg_ == o.neg_) return BigInt(mag_ + o.mag_, neg_);
    int c = mag_.compare(o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return BigInt(mag_ - o.mag_, neg_);
    return BigInt(o.mag_ - mag_, o.neg_);
}

int BigInt::compare(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = mag_.compare(o.mag_);
    return neg_ ? -c : c;
}

Rational::Rational(BigInt num, BigUint den) {
    if (den.is_zero()) fail(Errc::DomainError, "zero denominator");
    if (num.is_zero()) {
        num_ = BigInt(0);
        den_ = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(num.magnitude(), den);
    num_ = BigInt(num.magnitude() / g, num.negative());
    den_ = den / g;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(Errc::DomainError, "zero denominator");
    bool neg = (num < 0) != (den < 0);
    auto mag = [](std::int64_t v) { return BigUint(v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v)); };
    return Rational(BigInt(mag(num), neg), mag(den));
}

Rational Rational::operator+(const Rational& o) const {
    BigInt n = num_ * BigInt(o.den_) + o.num_ * BigInt(den_);
    return Rational(n, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) fail(Errc::DomainError, "division by zero rational");
    BigInt n = num_ * BigInt(o.den_);
    BigUint d = den_ * o.num_.magnitude();
    return Rational(o.num_.negative() ? -n : n, d);
}

int Rational::compare(const Rational& o) const {
    BigInt lhs = num_ * BigInt(o.den_);
    BigInt rhs = o.num_ * BigInt(den_);
    return lhs.compare(rhs);
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
    if (den_ == BigUint(1)) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace sgs
