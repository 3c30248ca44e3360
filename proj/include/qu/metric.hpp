// metric.hpp - displacement counts, taxicab length and the inner product
//
// All quantities are exact rationals: per-axis step counts times the
// configured step lengths. No floating point.
#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "qu/core.hpp"
#include "qu/error.hpp"
#include "qu/rational.hpp"

namespace qu {

// Step lengths. A single unit applies to every axis unless per_axis
// overrides it.
struct MetricConfig {
    Rational unit = 1;
    std::optional<std::vector<Rational>> per_axis;

    Rational weight(int axis) const {
        if (per_axis) return (*per_axis)[static_cast<std::size_t>(axis - 1)];
        return unit;
    }

    void validate(Dimension dim) const {
        if (unit <= 0) throw DomainError("step length must be positive");
        if (per_axis) {
            if (per_axis->size() != static_cast<std::size_t>(dim.n()))
                throw DimensionMismatch("per-axis weight count does not match dimension");
            for (const Rational& w : *per_axis)
                if (w <= 0) throw DomainError("step length must be positive");
        }
    }
};

// Per-axis signed net counts.
struct DisplacementVector {
    std::vector<long long> net;

    friend bool operator==(const DisplacementVector&, const DisplacementVector&) = default;
};

// Net pen-down counts per axis: (#i+) - (#i-) over atoms. Blanks and
// zeros do not count.
inline DisplacementVector ink_displacement(const QuString& a) {
    DisplacementVector out{std::vector<long long>(static_cast<std::size_t>(a.dimension().n()), 0)};
    for (const Digit& d : a.digits()) {
        if (!d.is_atom()) continue;
        out.net[static_cast<std::size_t>(d.axis() - 1)] += d.sign() == Sign::plus ? 1 : -1;
    }
    return out;
}

// Net pen position change per axis: atoms and blanks alike move the pen.
inline DisplacementVector position_displacement(const QuString& a) {
    DisplacementVector out{std::vector<long long>(static_cast<std::size_t>(a.dimension().n()), 0)};
    for (const Digit& d : a.digits()) {
        if (d.is_zero()) continue;
        out.net[static_cast<std::size_t>(d.axis() - 1)] += d.sign() == Sign::plus ? 1 : -1;
    }
    return out;
}

// Taxicab length: sum over axes of |net ink count| times the axis weight.
inline Rational taxicab_length(const QuString& a, const MetricConfig& cfg = {}) {
    cfg.validate(a.dimension());
    const DisplacementVector d = ink_displacement(a);
    Rational total = 0;
    for (int axis = 1; axis <= a.dimension().n(); ++axis)
        total += Rational(std::llabs(d.net[static_cast<std::size_t>(axis - 1)])) * cfg.weight(axis);
    return total;
}

// Total ink laid down: every atom contributes its axis weight, so a
// retraced path still has positive arc length.
inline Rational arc_length(const QuString& a, const MetricConfig& cfg = {}) {
    cfg.validate(a.dimension());
    Rational total = 0;
    for (const Digit& d : a.digits())
        if (d.is_atom()) total += cfg.weight(d.axis());
    return total;
}

// Total gap covered by blank digits.
inline Rational gap_length(const QuString& a, const MetricConfig& cfg = {}) {
    cfg.validate(a.dimension());
    Rational total = 0;
    for (const Digit& d : a.digits())
        if (d.is_blank()) total += cfg.weight(d.axis());
    return total;
}

// Bilinear extension of the atomic table <i^s, j^t> = (+-) w_i^2 delta_ij:
// sum over axes of net_i(a) * net_i(b) * w_i^2.
inline Rational inner_product(const QuString& a, const QuString& b,
                              const MetricConfig& cfg = {}) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("inner product operands live in different dimensions");
    cfg.validate(a.dimension());
    const DisplacementVector da = ink_displacement(a);
    const DisplacementVector db = ink_displacement(b);
    Rational total = 0;
    for (int axis = 1; axis <= a.dimension().n(); ++axis) {
        const Rational w = cfg.weight(axis);
        total += Rational(da.net[static_cast<std::size_t>(axis - 1)]) *
                 Rational(db.net[static_cast<std::size_t>(axis - 1)]) * w * w;
    }
    return total;
}

}  // namespace qu
