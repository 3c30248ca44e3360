// graph.hpp - encoding integer-sampled function graphs on the 1-2 plane
//
// x runs along axis 1, f(x) along axis 2. Between consecutive samples the
// walk advances x first, then adjusts y.
#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "qu/core.hpp"
#include "qu/error.hpp"

namespace qu {

struct LatticeSample {
    struct Point {
        long long x = 0;
        long long y = 0;

        friend bool operator==(const Point&, const Point&) = default;
    };

    std::vector<Point> points;

    friend bool operator==(const LatticeSample&, const LatticeSample&) = default;
};

// The line y = (m/n) x as (1+^n 2+^m) repeated `periods` times, with the
// origin marker at the front.
inline QuString encode_linear(long long m, long long n, long long periods) {
    if (m < 1 || n < 1 || periods < 1)
        throw DomainError("slope numerator, denominator and period count must be positive");
    std::vector<Digit> digits;
    digits.reserve(static_cast<std::size_t>(periods * (m + n)));
    for (long long k = 0; k < periods; ++k) {
        for (long long i = 0; i < n; ++i) digits.push_back(Digit::atom(1, Sign::plus));
        for (long long i = 0; i < m; ++i) digits.push_back(Digit::atom(2, Sign::plus));
    }
    return QuString(Dimension(2), std::move(digits), 0);
}

// Delta walk through the samples: per consecutive pair, dx copies of 1+
// then |dy| copies of 2+ or 2-. The first point is the reference; the
// origin marker appears only when it is (0,0).
inline QuString encode_samples(const LatticeSample& samples) {
    if (samples.points.empty()) throw InvalidSample("sample set must contain at least one point");
    std::vector<Digit> digits;
    for (std::size_t i = 1; i < samples.points.size(); ++i) {
        const LatticeSample::Point& prev = samples.points[i - 1];
        const LatticeSample::Point& cur = samples.points[i];
        const long long dx = cur.x - prev.x;
        if (dx < 1) throw InvalidSample("sample x coordinates must be strictly increasing");
        const long long dy = cur.y - prev.y;
        for (long long k = 0; k < dx; ++k) digits.push_back(Digit::atom(1, Sign::plus));
        for (long long k = 0; k < std::llabs(dy); ++k)
            digits.push_back(Digit::atom(2, dy > 0 ? Sign::plus : Sign::minus));
    }
    std::optional<std::size_t> origin;
    if (samples.points.front() == LatticeSample::Point{0, 0}) origin = 0;
    return QuString(Dimension(2), std::move(digits), origin);
}

// Inverse of encode_samples, anchored at (0,0): emits the point reached
// at the end of each maximal block of axis-2 digits and after trailing
// axis-1 digits. Zero digits are skipped; blanks, axes beyond 2 and
// backward x moves refuse.
inline LatticeSample decode_to_points(const QuString& a) {
    LatticeSample out;
    out.points.push_back({0, 0});
    long long x = 0;
    long long y = 0;
    bool in_y_block = false;
    bool moved = false;
    auto emit = [&] {
        if (out.points.back().x == x)
            throw MalformedGraphString("graph string repeats an x coordinate");
        out.points.push_back({x, y});
    };
    for (const Digit& d : a.digits()) {
        if (d.is_zero()) continue;
        if (d.is_blank()) throw MalformedGraphString("graph strings are pen-down only");
        if (d.axis() > 2) throw MalformedGraphString("graph strings use axes 1 and 2 only");
        if (d.axis() == 1) {
            if (d.sign() == Sign::minus)
                throw MalformedGraphString("graph string moves backward in x");
            if (in_y_block) {
                emit();
                in_y_block = false;
            }
            ++x;
        } else {
            y += d.sign() == Sign::plus ? 1 : -1;
            in_y_block = true;
        }
        moved = true;
    }
    if (moved) emit();
    return out;
}

}  // namespace qu
