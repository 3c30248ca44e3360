// notation.hpp - the textual form of QU strings
//
// Grammar (whitespace between items is ignored):
//
//   string  := ws (item ws)*
//   item    := '.' | unit rep?
//   unit    := digit | '(' string-without-dot ')'
//   digit   := '0' | axisnum sign blank?
//   axisnum := nonzero decimal integer
//   sign    := '+' | '-'
//   blank   := 'o'
//   rep     := '{' positive decimal integer '}'
//
// At most one '.' may appear in the whole text; a repetition expands the
// contents of its group in order. Examples: ".1+1+", "1+o2-o", "(1+2+){3}".
//
// print() emits the canonical form: no whitespace, the dot at its index,
// and maximal runs of one digit of length k >= 2 written as token{k}.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>

#include "qu/core.hpp"
#include "qu/error.hpp"

namespace qu {

// Canonical spelling of a single digit: "0", "1+", "2-", "1+o", ...
inline std::string digit_token(const Digit& d) {
    if (d.is_zero()) return "0";
    std::string out = std::to_string(d.axis());
    out += sign_char(d.sign());
    if (d.is_blank()) out += 'o';
    return out;
}

namespace detail {

class Parser {
public:
    Parser(std::string_view text, Dimension dim) : text_(text), dim_(dim) {}

    QuString run() {
        parse_string(/*inside_group=*/false);
        if (pos_ != text_.size()) fail("unexpected ')'");
        return QuString(dim_, std::move(digits_), origin_);
    }

private:
    // Expanded repetitions are bounded so a hostile text cannot exhaust
    // memory before the caller sees any output.
    static constexpr std::size_t kMaxExpandedDigits = 1u << 22;

    void parse_string(bool inside_group) {
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] != ')') {
            parse_item(inside_group);
            skip_ws();
        }
    }

    void parse_item(bool inside_group) {
        if (text_[pos_] == '.') {
            if (inside_group) fail("origin marker not allowed inside a group");
            if (origin_) fail("more than one origin marker");
            origin_ = digits_.size();
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '{')
                fail("the origin marker cannot be repeated");
            return;
        }
        const std::vector<Digit> unit = parse_unit();
        std::size_t count = 1;
        if (pos_ < text_.size() && text_[pos_] == '{') count = parse_rep();
        if (unit.size() * count + digits_.size() > kMaxExpandedDigits)
            fail("expanded string too large");
        for (std::size_t k = 0; k < count; ++k)
            digits_.insert(digits_.end(), unit.begin(), unit.end());
    }

    std::vector<Digit> parse_unit() {
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            const std::size_t mark = digits_.size();
            parse_string(/*inside_group=*/true);
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail("unbalanced group");
            ++pos_;
            std::vector<Digit> group(digits_.begin() + static_cast<std::ptrdiff_t>(mark),
                                     digits_.end());
            digits_.erase(digits_.begin() + static_cast<std::ptrdiff_t>(mark), digits_.end());
            return group;
        }
        if (c == '0') {
            ++pos_;
            return {Digit::zero()};
        }
        if (c >= '1' && c <= '9') return {parse_signed_digit()};
        fail(std::string("unexpected character '") + c + "'");
    }

    Digit parse_signed_digit() {
        const std::size_t start = pos_;
        long long axis = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            axis = std::min<long long>(axis * 10 + (text_[pos_] - '0'), 1'000'000'000);
            ++pos_;
        }
        if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-'))
            fail("expected '+' or '-' after axis numeral");
        const Sign sign = text_[pos_] == '+' ? Sign::plus : Sign::minus;
        ++pos_;
        bool blank = false;
        if (pos_ < text_.size() && text_[pos_] == 'o') {
            blank = true;
            ++pos_;
        }
        if (axis > dim_.n())
            fail_at(start, "axis " + std::to_string(axis) + " out of range for dimension " +
                               std::to_string(dim_.n()));
        const int ax = static_cast<int>(axis);
        return blank ? Digit::blank(ax, sign) : Digit::atom(ax, sign);
    }

    std::size_t parse_rep() {
        const std::size_t start = pos_;
        ++pos_;  // '{'
        std::size_t count = 0;
        bool any = false;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            count = std::min<std::size_t>(count * 10 + static_cast<std::size_t>(text_[pos_] - '0'),
                                          kMaxExpandedDigits);
            any = true;
            ++pos_;
        }
        if (!any) fail("expected repetition count");
        if (pos_ >= text_.size() || text_[pos_] != '}') fail("unbalanced repetition brace");
        ++pos_;
        if (count == 0) fail_at(start, "repetition count must be positive");
        return count;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    [[noreturn]] void fail(std::string message) const { fail_at(pos_, std::move(message)); }

    [[noreturn]] void fail_at(std::size_t position, std::string message) const {
        // End-of-input faults point at the last character.
        if (!text_.empty() && position >= text_.size()) position = text_.size() - 1;
        throw ParseError({position, std::move(message)});
    }

    std::string_view text_;
    Dimension dim_;
    std::size_t pos_ = 0;
    std::vector<Digit> digits_;
    std::optional<std::size_t> origin_;
};

}  // namespace detail

inline QuString parse(std::string_view text, Dimension dim = Dimension()) {
    return detail::Parser(text, dim).run();
}

inline std::string print(const QuString& s) {
    std::string out;
    const std::vector<Digit>& digits = s.digits();
    std::size_t i = 0;
    while (true) {
        if (s.has_origin() && *s.origin() == i) out += '.';
        if (i == digits.size()) break;
        // A run never crosses the origin marker.
        std::size_t j = i + 1;
        while (j < digits.size() && digits[j] == digits[i] &&
               !(s.has_origin() && *s.origin() == j))
            ++j;
        out += digit_token(digits[i]);
        if (j - i >= 2) {
            out += '{';
            out += std::to_string(j - i);
            out += '}';
        }
        i = j;
    }
    return out;
}

}  // namespace qu
