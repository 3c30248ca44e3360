// core.hpp - digits, strings and the concatenation algebra
//
// A QU string is a finite sequence of digits drawn from a base-(4n+1)
// alphabet over n axes: the zero digit (no move), atoms i+/i- (a unit
// pen-down move along axis i) and blanks i+o/i-o (the same move with the
// pen up). An optional origin marker may sit between any two digits;
// digits in front of the marker are walked to the left of the origin.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "qu/error.hpp"

namespace qu {

enum class Sign : std::uint8_t { plus, minus };

inline Sign flipped(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class DigitKind : std::uint8_t { zero, atom, blank };

// Number of axes of the ambient space. Fixes the digit alphabet, whose
// size is 4n+1.
class Dimension {
public:
    Dimension() = default;
    explicit Dimension(int n) : n_(n) {
        if (n < 1) throw DomainError("dimension must be at least 1");
    }

    int n() const { return n_; }
    int alphabet_size() const { return 4 * n_ + 1; }

    friend bool operator==(Dimension, Dimension) = default;

private:
    int n_ = 2;
};

// One symbol of the alphabet. The zero digit carries no axis or sign.
class Digit {
public:
    static Digit zero() { return Digit(DigitKind::zero, 0, Sign::plus); }
    static Digit atom(int axis, Sign sign) { return Digit(DigitKind::atom, axis, sign); }
    static Digit blank(int axis, Sign sign) { return Digit(DigitKind::blank, axis, sign); }

    DigitKind kind() const { return kind_; }
    int axis() const { return axis_; }  // 1-based; 0 for the zero digit
    Sign sign() const { return sign_; }

    bool is_zero() const { return kind_ == DigitKind::zero; }
    bool is_atom() const { return kind_ == DigitKind::atom; }
    bool is_blank() const { return kind_ == DigitKind::blank; }

    // Same kind and axis, opposite sign. Zero is its own inverse.
    Digit inverse() const {
        if (is_zero()) return *this;
        return Digit(kind_, axis_, flipped(sign_));
    }

    friend bool operator==(const Digit&, const Digit&) = default;
    friend auto operator<=>(const Digit&, const Digit&) = default;

private:
    Digit(DigitKind kind, int axis, Sign sign) : kind_(kind), axis_(axis), sign_(sign) {
        if (kind != DigitKind::zero && axis < 1)
            throw DomainError("digit axis must be at least 1");
    }

    DigitKind kind_;
    int axis_;
    Sign sign_;
};

// True when x and y erase each other as neighbours: same kind (atom/atom
// or blank/blank), same axis, opposite signs.
inline bool cancels(const Digit& x, const Digit& y) {
    return !x.is_zero() && x.kind() == y.kind() && x.axis() == y.axis() &&
           x.sign() != y.sign();
}

// A finite digit sequence with an optional origin marker. Immutable after
// construction; an absent marker means the origin sits at the front.
class QuString {
public:
    QuString() = default;
    explicit QuString(Dimension dim) : dim_(dim) {}
    QuString(Dimension dim, std::vector<Digit> digits,
             std::optional<std::size_t> origin = std::nullopt)
        : dim_(dim), digits_(std::move(digits)), origin_(origin) {
        if (origin_ && *origin_ > digits_.size())
            throw DomainError("origin marker index out of range");
        for (const Digit& d : digits_) {
            if (d.axis() > dim_.n())
                throw DomainError("digit axis exceeds ambient dimension");
        }
    }

    Dimension dimension() const { return dim_; }
    const std::vector<Digit>& digits() const { return digits_; }
    std::optional<std::size_t> origin() const { return origin_; }
    bool has_origin() const { return origin_.has_value(); }
    std::size_t effective_origin() const { return origin_.value_or(0); }

    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    // An absent marker and a marker at the front denote the same value.
    friend bool operator==(const QuString& a, const QuString& b) {
        return a.dim_ == b.dim_ && a.digits_ == b.digits_ &&
               a.effective_origin() == b.effective_origin();
    }

private:
    Dimension dim_;
    std::vector<Digit> digits_;
    std::optional<std::size_t> origin_;
};

// a followed by b. At most one operand may carry an origin marker.
inline QuString concat(const QuString& a, const QuString& b) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("concat operands live in different dimensions");
    if (a.has_origin() && b.has_origin())
        throw OriginConflict("both operands carry an origin marker");
    std::vector<Digit> digits = a.digits();
    digits.insert(digits.end(), b.digits().begin(), b.digits().end());
    std::optional<std::size_t> origin;
    if (a.has_origin()) origin = *a.origin();
    if (b.has_origin()) origin = a.size() + *b.origin();
    return QuString(a.dimension(), std::move(digits), origin);
}

namespace detail {

// Left-to-right stack reduction: drop zero digits and cascade adjacent
// inverse pairs. Yields the unique irreducible word of the segment.
inline std::vector<Digit> reduce_word(const Digit* first, const Digit* last) {
    std::vector<Digit> out;
    for (const Digit* it = first; it != last; ++it) {
        if (it->is_zero()) continue;
        if (!out.empty() && cancels(out.back(), *it))
            out.pop_back();
        else
            out.push_back(*it);
    }
    return out;
}

}  // namespace detail

// Unique normal form: zero digits removed, adjacent inverse pairs cancelled
// until none remain. The origin marker is a barrier - digits on opposite
// sides of it are not adjacent - which keeps the walk's endpoints stable
// under normalization.
inline QuString normalize(const QuString& s) {
    const Digit* base = s.digits().data();
    if (!s.has_origin()) {
        return QuString(s.dimension(), detail::reduce_word(base, base + s.size()));
    }
    std::vector<Digit> prefix = detail::reduce_word(base, base + *s.origin());
    std::vector<Digit> suffix = detail::reduce_word(base + *s.origin(), base + s.size());
    std::size_t origin = prefix.size();
    prefix.insert(prefix.end(), suffix.begin(), suffix.end());
    return QuString(s.dimension(), std::move(prefix), origin);
}

// Each digit repeated l times in place; geometrically a dilation by l.
inline QuString scalar_mul(long long l, const QuString& s) {
    if (l < 1) throw DomainError("scalar factor must be at least 1");
    std::vector<Digit> digits;
    digits.reserve(s.size() * static_cast<std::size_t>(l));
    for (const Digit& d : s.digits())
        for (long long k = 0; k < l; ++k) digits.push_back(d);
    std::optional<std::size_t> origin;
    if (s.has_origin()) origin = *s.origin() * static_cast<std::size_t>(l);
    return QuString(s.dimension(), std::move(digits), origin);
}

// Removes normalize(b) from the tail of normalize(a); the match must be
// exact digit-wise (markers ignored). a's marker survives when it sits in
// the remaining prefix.
inline QuString subtract_suffix(const QuString& a, const QuString& b) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("subtraction operands live in different dimensions");
    const QuString na = normalize(a);
    const QuString nb = normalize(b);
    if (nb.size() > na.size() ||
        !std::equal(nb.digits().begin(), nb.digits().end(),
                    na.digits().end() - static_cast<std::ptrdiff_t>(nb.size())))
        throw SuffixMismatch("subtrahend is not a suffix of the minuend");
    const std::size_t keep = na.size() - nb.size();
    std::vector<Digit> digits(na.digits().begin(),
                              na.digits().begin() + static_cast<std::ptrdiff_t>(keep));
    std::optional<std::size_t> origin;
    if (na.has_origin() && *na.origin() <= keep) origin = *na.origin();
    return QuString(a.dimension(), std::move(digits), origin);
}

// Mirror of subtract_suffix: removes normalize(a) from the front of
// normalize(b).
inline QuString subtract_prefix(const QuString& a, const QuString& b) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("subtraction operands live in different dimensions");
    const QuString na = normalize(a);
    const QuString nb = normalize(b);
    if (na.size() > nb.size() ||
        !std::equal(na.digits().begin(), na.digits().end(), nb.digits().begin()))
        throw PrefixMismatch("removed string is not a prefix of the total");
    std::vector<Digit> digits(nb.digits().begin() + static_cast<std::ptrdiff_t>(na.size()),
                              nb.digits().end());
    std::optional<std::size_t> origin;
    if (nb.has_origin() && *nb.origin() >= na.size()) origin = *nb.origin() - na.size();
    return QuString(b.dimension(), std::move(digits), origin);
}

// Reversed digits with every sign flipped, so concat(a, inverse(a))
// normalizes to the empty string. The result carries no origin marker;
// keeping one would make that concatenation ill-formed for marked a.
inline QuString inverse(const QuString& a) {
    std::vector<Digit> digits;
    digits.reserve(a.size());
    for (auto it = a.digits().rbegin(); it != a.digits().rend(); ++it)
        digits.push_back(it->inverse());
    return QuString(a.dimension(), std::move(digits));
}

}  // namespace qu
