#include "sgs/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "sgs/errors.hpp"

namespace sgs {

namespace {

std::size_t words_for(int bound) { return static_cast<std::size_t>(bound) / 64 + 1; }

void set_bit(std::vector<std::uint64_t>& w, int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }

bool get_bit(const std::vector<std::uint64_t>& w, int i) {
    return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

// dst |= src << k, truncated to dst.size() words.
void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, int k) {
    const std::size_t wshift = static_cast<std::size_t>(k) >> 6;
    const int bshift = k & 63;
    for (std::size_t i = 0; i + wshift < dst.size() && i < src.size(); ++i) {
        dst[i + wshift] |= src[i] << bshift;
        if (bshift && i + wshift + 1 < dst.size()) dst[i + wshift + 1] |= src[i] >> (64 - bshift);
    }
}

}  // namespace

void NumericalSemigroup::compute_caches_and_validate(int frobenius) {
    if (bound_ < 0) fail(Errc::OutOfRange, "negative bound");
    if (!get_bit(words_, 0)) fail(Errc::MissingZero, "0 is not an element");
    if (frobenius < -1 || frobenius >= bound_)
        fail(Errc::NotCofinite, "Frobenius number must lie below bound");
    if (frobenius >= 0 && get_bit(words_, frobenius))
        fail(Errc::NotCofinite, "stated Frobenius number is an element");
    for (int n = frobenius + 1; n <= bound_; ++n) {
        if (!get_bit(words_, n)) fail(Errc::NotCofinite, "gap above the stated Frobenius number");
    }
    frobenius_ = frobenius;

    // genus = number of gaps in [0, bound] (there are none above F)
    int pop = 0;
    for (std::uint64_t w : words_) pop += std::popcount(w);
    genus_ = bound_ + 1 - pop;

    multiplicity_ = 0;
    for (int n = 1; n <= bound_; ++n) {
        if (get_bit(words_, n)) {
            multiplicity_ = n;
            break;
        }
    }
    if (multiplicity_ == 0) fail(Errc::NotCofinite, "no nonzero element within bound");

    depth_ = frobenius_ <= 0 ? 0 : (frobenius_ + multiplicity_ - 1) / multiplicity_;

    // closure: for x in S with 1 <= x <= F, every x + y <= bound with y in S
    // must be in S (all other sums exceed F and are implicit members)
    std::vector<std::uint64_t> sums(words_.size(), 0);
    for (int x = multiplicity_; x <= frobenius_; ++x) {
        if (get_bit(words_, x)) or_shifted(sums, words_, x);
    }
    const int top = bound_ & 63;
    const std::uint64_t top_mask = top == 63 ? ~0ull : ((1ull << (top + 1)) - 1);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t bad = sums[i] & ~words_[i];
        if (i + 1 == words_.size()) bad &= top_mask;
        if (bad) {
            int n = static_cast<int>(i * 64 + std::countr_zero(bad));
            fail(Errc::NotClosed, "not closed under addition: missing " + std::to_string(n));
        }
    }
}

NumericalSemigroup NumericalSemigroup::from_parts(std::vector<std::uint64_t> words, int bound, int frobenius) {
    NumericalSemigroup s;
    s.words_ = std::move(words);
    s.bound_ = bound;
    if (s.words_.size() != words_for(bound)) fail(Errc::OutOfRange, "word count does not match bound");
    const int top = bound & 63;
    if (top != 63) s.words_.back() &= (1ull << (top + 1)) - 1;  // membership is explicit only on [0, bound]
    s.compute_caches_and_validate(frobenius);
    return s;
}

NumericalSemigroup NumericalSemigroup::natural_numbers(int bound) {
    if (bound < 1) bound = 1;
    std::vector<std::uint64_t> w(words_for(bound), ~0ull);
    return from_parts(std::move(w), bound, -1);
}

NumericalSemigroup NumericalSemigroup::from_elements(std::span<const int> elems, int bound) {
    if (bound < 0) fail(Errc::OutOfRange, "negative bound");
    std::vector<std::uint64_t> w(words_for(bound), 0);
    for (int e : elems) {
        if (e < 0 || e > bound) fail(Errc::OutOfRange, "element outside [0, bound]");
        set_bit(w, e);
    }
    if (!get_bit(w, 0)) fail(Errc::MissingZero, "0 is not an element");
    int frobenius = -1;
    for (int n = bound; n >= 1; --n) {
        if (!get_bit(w, n)) {
            frobenius = n;
            break;
        }
    }
    if (frobenius >= 0) {
        int mult = 0;
        for (int n = 1; n <= bound && !mult; ++n) {
            if (get_bit(w, n)) mult = n;
        }
        // the represented tail must be long enough to pin F: with tail length
        // >= m, any x > bound satisfies x - m in (F, bound], so the infinite
        // extension is forced
        if (mult == 0 || bound - frobenius < mult)
            fail(Errc::NotCofinite, "tail too short to determine the Frobenius number");
    }
    return from_parts(std::move(w), bound, frobenius);
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
    std::vector<int> g(gaps.begin(), gaps.end());
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    const int genus = static_cast<int>(g.size());
    if (genus == 0) return natural_numbers();
    if (g.front() < 1) fail(g.front() == 0 ? Errc::MissingZero : Errc::OutOfRange, "gap below 1");
    if (g.back() > 2 * genus - 1)
        fail(Errc::NotClosed, "gap exceeds 2g-1; complement cannot be a numerical semigroup");
    const int bound = 2 * genus + 1;
    std::vector<std::uint64_t> w(words_for(bound), ~0ull);
    const int top = bound & 63;
    w.back() &= top == 63 ? ~0ull : ((1ull << (top + 1)) - 1);
    for (int x : g) w[static_cast<std::size_t>(x) >> 6] &= ~(1ull << (x & 63));
    return from_parts(std::move(w), bound, g.back());
}

int NumericalSemigroup::element(int k) const {
    if (k < 1) fail(Errc::DomainError, "element index must be >= 1");
    if (k >= frobenius_ + 1 - genus_) return k + genus_;  // a_k = k + g beyond the gaps
    int seen = 0;
    for (int n = 1; n <= bound_; ++n) {
        if (contains(n) && ++seen == k) return n;
    }
    return k + genus_;  // unreachable given the early return
}

std::vector<int> NumericalSemigroup::elements_upto(int limit) const {
    std::vector<int> out;
    for (int n = 0; n <= limit; ++n) {
        if (contains(n)) out.push_back(n);
    }
    return out;
}

std::vector<int> NumericalSemigroup::gaps() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (int n = 1; n <= frobenius_; ++n) {
        if (!contains(n)) out.push_back(n);
    }
    return out;
}

std::vector<int> NumericalSemigroup::minimal_generators() const {
    if (frobenius_ == -1) return {1};
    const int hi = frobenius_ + multiplicity_;
    std::vector<std::uint64_t> sums(words_for(hi), 0);
    std::vector<std::uint64_t> nonzero = words_;
    nonzero[0] &= ~1ull;
    // sums of two nonzero elements, up to hi
    for (int x = multiplicity_; 2 * x <= hi; ++x) {
        if (contains(x)) or_shifted(sums, nonzero, x);
    }
    std::vector<int> gens;
    for (int n = multiplicity_; n <= hi; ++n) {
        if (contains(n) && !get_bit(sums, n)) gens.push_back(n);
    }
    return gens;
}

std::vector<NumericalSemigroup> NumericalSemigroup::children() const {
    std::vector<NumericalSemigroup> out;
    for (int x : minimal_generators()) {
        if (x <= frobenius_) continue;
        if (x >= bound_) fail(Errc::BoundExhausted, "child membership data would exceed bound");
        NumericalSemigroup child;
        child.words_ = words_;
        child.bound_ = bound_;
        child.words_[static_cast<std::size_t>(x) >> 6] &= ~(1ull << (x & 63));
        child.compute_caches_and_validate(x);
        out.push_back(std::move(child));
    }
    return out;
}

bool NumericalSemigroup::operator==(const NumericalSemigroup& o) const {
    return genus_ == o.genus_ && frobenius_ == o.frobenius_ && gaps() == o.gaps();
}

std::string NumericalSemigroup::to_string() const {
    std::string out = "0";
    for (int n = 1; n <= frobenius_; ++n) {
        if (contains(n)) {
            out += ',';
            out += std::to_string(n);
        }
    }
    if (frobenius_ >= 0) {
        out += ',';
        out += std::to_string(frobenius_ + 1);
    }
    out += "->";
    return out;
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
    std::vector<int> values;
    bool tail_marker = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        pos = comma == std::string_view::npos ? text.size() : comma + 1;
        if (tok.ends_with("->")) {
            if (pos < text.size()) fail(Errc::ParseError, "tail marker must be on the last element");
            tail_marker = true;
            tok.remove_suffix(2);
        }
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size() || v < 0)
            fail(Errc::ParseError, "bad element '" + std::string(tok) + "'");
        values.push_back(v);
    }
    if (values.empty() || !tail_marker) fail(Errc::ParseError, "expected elements with a trailing ->");
    std::sort(values.begin(), values.end());
    const int tail_start = values.back();
    std::vector<int> gap_list;
    for (int n = 1, j = 0; n < tail_start; ++n) {
        while (j < static_cast<int>(values.size()) && values[j] < n) ++j;
        if (j >= static_cast<int>(values.size()) || values[j] != n) gap_list.push_back(n);
    }
    if (values.front() != 0) fail(Errc::MissingZero, "0 is not an element");
    if (gap_list.empty()) return natural_numbers();
    const int genus = static_cast<int>(gap_list.size());
    const int frob = gap_list.back();
    const int bound = std::max(2 * genus + 1, 2 * frob);
    std::vector<std::uint64_t> w(words_for(bound), ~0ull);
    const int top = bound & 63;
    w.back() &= top == 63 ? ~0ull : ((1ull << (top + 1)) - 1);
    for (int x : gap_list) w[static_cast<std::size_t>(x) >> 6] &= ~(1ull << (x & 63));
    return from_parts(std::move(w), bound, frob);
}

ShapeProfile profile(const NumericalSemigroup& s, Convention conv) {
    const int scale = conv == Convention::Genus ? s.genus() : s.frobenius();
    if (scale < 1) fail(Errc::DomainError, "profile needs genus >= 1 (or Frobenius >= 1)");
    ShapeProfile p{conv, {}, scale};
    p.values.reserve(static_cast<std::size_t>(scale));
    int n = 0, k = 0;
    const int tail_from = s.frobenius() + 1 - s.genus();  // >= 1: a semigroup has g <= F gaps in [1, F]
    while (k < scale) {
        if (k + 1 >= tail_from) {
            // a_k = k + g from here on
            while (k < scale) {
                ++k;
                p.values.push_back(k + s.genus());
            }
            break;
        }
        ++n;
        if (s.contains(n)) {
            ++k;
            p.values.push_back(n);
        }
    }
    return p;
}

NumericalSemigroup ordinary_semigroup(int genus) {
    if (genus < 0) fail(Errc::DomainError, "genus must be >= 0");
    if (genus == 0) return NumericalSemigroup::natural_numbers();
    std::vector<int> gap_list(static_cast<std::size_t>(genus));
    for (int i = 0; i < genus; ++i) gap_list[static_cast<std::size_t>(i)] = i + 1;
    return NumericalSemigroup::from_gaps(gap_list);
}

NumericalSemigroup hyperelliptic_semigroup(int genus) {
    if (genus < 0) fail(Errc::DomainError, "genus must be >= 0");
    if (genus == 0) return NumericalSemigroup::natural_numbers();
    std::vector<int> gap_list(static_cast<std::size_t>(genus));
    for (int i = 0; i < genus; ++i) gap_list[static_cast<std::size_t>(i)] = 2 * i + 1;
    return NumericalSemigroup::from_gaps(gap_list);
}

}  // namespace sgs
