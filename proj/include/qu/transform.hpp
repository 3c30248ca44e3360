// transform.hpp - translation, rotation and shape transformation
//
// Rotation and shape transformation act on a single-digit run: a run of p
// equal digits becomes a chosen digit pattern repeated p / (sum of the
// pattern multiplicities) times. Translation prefixes a string with pen-up
// digits; dilation repeats every digit in place.
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qu/core.hpp"
#include "qu/error.hpp"
#include "qu/notation.hpp"

namespace qu {

struct PatternPart {
    Digit digit;
    long long multiplicity = 1;

    friend bool operator==(const PatternPart&, const PatternPart&) = default;
};

// An ordered list of (digit, multiplicity) parts. Digits are atoms or
// blanks, multiplicities are nonnegative and sum to at least one.
class TransformPattern {
public:
    explicit TransformPattern(std::vector<PatternPart> parts) : parts_(std::move(parts)) {
        total_ = 0;
        for (const PatternPart& part : parts_) {
            if (part.digit.is_zero())
                throw DomainError("pattern digits must be atoms or blanks, not zero");
            if (part.multiplicity < 0)
                throw DomainError("pattern multiplicity must be nonnegative");
            total_ += part.multiplicity;
        }
        if (total_ < 1) throw DomainError("pattern must contain at least one digit");
    }

    // Reads a dotless notation string; each maximal run becomes one part
    // with the run length as its multiplicity, e.g. "1+{3}2+" or
    // "2+1-2-1+1+o1+2+1-2-".
    static TransformPattern from_text(std::string_view text, Dimension dim = Dimension()) {
        const QuString s = parse(text, dim);
        if (s.has_origin())
            throw ParseError({text.find('.'), "pattern may not contain an origin marker"});
        std::vector<PatternPart> parts;
        for (const Digit& d : s.digits()) {
            if (!parts.empty() && parts.back().digit == d)
                ++parts.back().multiplicity;
            else
                parts.push_back({d, 1});
        }
        return TransformPattern(std::move(parts));
    }

    const std::vector<PatternPart>& parts() const { return parts_; }
    long long total() const { return total_; }

    bool has_blank() const {
        for (const PatternPart& part : parts_)
            if (part.digit.is_blank() && part.multiplicity > 0) return true;
        return false;
    }

private:
    std::vector<PatternPart> parts_;
    long long total_;
};

// Moves a whole shape l units along (axis, sign) by inserting l pen-up
// digits right after the origin marker. The marker must sit at the front
// (or be absent, which means the same thing).
inline QuString translate(const QuString& a, int axis, Sign sign, long long distance) {
    if (axis < 1 || axis > a.dimension().n()) throw DomainError("translation axis out of range");
    if (distance < 0) throw DomainError("translation distance must be nonnegative");
    if (a.effective_origin() != 0)
        throw DomainError("translate requires the origin marker at the front");
    if (distance == 0) return a;
    std::vector<Digit> digits;
    digits.reserve(a.size() + static_cast<std::size_t>(distance));
    for (long long k = 0; k < distance; ++k) digits.push_back(Digit::blank(axis, sign));
    digits.insert(digits.end(), a.digits().begin(), a.digits().end());
    return QuString(a.dimension(), std::move(digits), a.origin());
}

namespace detail {

// The one digit a string reduces to, repeated p times with the marker at
// the front. Anything else refuses.
struct SingleRun {
    QuString normalized;
    Digit digit;
    long long count;
};

inline SingleRun single_run(const QuString& a) {
    QuString na = normalize(a);
    if (na.effective_origin() != 0)
        throw NotASingleRun("origin marker must sit at the front of the run");
    if (na.empty()) throw NotASingleRun("input normalizes to the empty string");
    const Digit head = na.digits().front();
    for (const Digit& d : na.digits())
        if (d != head) throw NotASingleRun("input is not a run of one digit");
    const long long count = static_cast<long long>(na.size());
    return {std::move(na), head, count};
}

}  // namespace detail

// Replaces a run of p equal digits by the pattern repeated p/total times.
// The origin marker (if any) stays at the front.
inline QuString shape_transform(const QuString& a, const TransformPattern& pattern) {
    const detail::SingleRun run = detail::single_run(a);
    for (const PatternPart& part : pattern.parts())
        if (part.digit.axis() > a.dimension().n())
            throw DomainError("pattern digit axis exceeds ambient dimension");
    if (run.count % pattern.total() != 0)
        throw IndivisibleLength("pattern length does not divide the run length");
    const long long reps = run.count / pattern.total();
    std::vector<Digit> digits;
    digits.reserve(static_cast<std::size_t>(run.count));
    for (long long rep = 0; rep < reps; ++rep)
        for (const PatternPart& part : pattern.parts())
            for (long long k = 0; k < part.multiplicity; ++k) digits.push_back(part.digit);
    std::optional<std::size_t> origin;
    if (run.normalized.has_origin()) origin = 0;
    return QuString(a.dimension(), std::move(digits), origin);
}

// The two-part special case of shape_transform. The input must reduce to
// a run of one atom digit; q + r must be positive and divide the run
// length.
inline QuString rotate(const QuString& a, Digit i, long long q, Digit j, long long r) {
    if (q < 0 || r < 0) throw DomainError("rotation multiplicities must be nonnegative");
    if (q + r < 1) throw DomainError("rotation multiplicities must sum to at least 1");
    const detail::SingleRun run = detail::single_run(a);
    if (!run.digit.is_atom()) throw NotASingleRun("rotation requires a run of one atom digit");
    std::vector<PatternPart> parts;
    if (q > 0) parts.push_back({i, q});
    if (r > 0) parts.push_back({j, r});
    return shape_transform(a, TransformPattern(std::move(parts)));
}

namespace detail {

// Axis directions on the 1-2 plane, counterclockwise degrees.
inline int direction_of(const Digit& d) {
    if (d.axis() == 1) return d.sign() == Sign::plus ? 0 : 180;
    if (d.axis() == 2) return d.sign() == Sign::plus ? 90 : 270;
    throw DomainError("angle rotation only covers axes 1 and 2");
}

inline Digit axis_digit(int direction) {
    switch (direction) {
        case 0: return Digit::atom(1, Sign::plus);
        case 90: return Digit::atom(2, Sign::plus);
        case 180: return Digit::atom(1, Sign::minus);
        default: return Digit::atom(2, Sign::minus);  // 270
    }
}

}  // namespace detail

// Counterclockwise rotation of a 2D run by a named angle (a multiple of
// 45 in 45..315). Right angles map the run onto one axis; diagonal angles
// produce the unit staircase, x digit first.
inline QuString rotate_degrees(const QuString& a, int degrees) {
    if (degrees < 45 || degrees > 315 || degrees % 45 != 0)
        throw DomainError("angle must be a multiple of 45 between 45 and 315");
    const detail::SingleRun run = detail::single_run(a);
    if (!run.digit.is_atom()) throw NotASingleRun("rotation requires a run of one atom digit");
    const int target = (detail::direction_of(run.digit) + degrees) % 360;
    if (target % 90 == 0)
        return rotate(a, detail::axis_digit(target), 1, detail::axis_digit(target), 0);
    const Digit x = Digit::atom(1, (target > 90 && target < 270) ? Sign::minus : Sign::plus);
    const Digit y = Digit::atom(2, target < 180 ? Sign::plus : Sign::minus);
    return rotate(a, x, 1, y, 1);
}

// Scales a shape by the integer factor l: each digit repeated l times.
inline QuString dilate(long long l, const QuString& a) {
    if (l < 1) throw DomainError("dilation factor must be at least 1");
    return scalar_mul(l, a);
}

}  // namespace qu
