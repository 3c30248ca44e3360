// render.hpp - from strings back to geometry
//
// trace() walks a string over the integer lattice: digits before the
// origin marker start to its left, so the position right after that
// prefix is always the all-zeros point. to_shape() keeps the pen-down
// unit edges (undirected, with multiplicity, so retracing is visible).
// render_ascii()/render_svg() draw 2D shapes deterministically.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qu/core.hpp"
#include "qu/error.hpp"

namespace qu {

using LatticePoint = std::vector<long long>;  // one signed coordinate per axis

enum class Pen { down, up, none };

inline Pen pen_of(const Digit& d) {
    switch (d.kind()) {
        case DigitKind::atom: return Pen::down;
        case DigitKind::blank: return Pen::up;
        default: return Pen::none;
    }
}

struct TraceEvent {
    LatticePoint before;
    Digit digit;
    LatticePoint after;
    Pen pen;
};

struct Trace {
    Dimension dim;
    LatticePoint start;
    std::vector<TraceEvent> events;

    const LatticePoint& end() const { return events.empty() ? start : events.back().after; }
};

inline Trace trace(const QuString& a) {
    const std::size_t n = static_cast<std::size_t>(a.dimension().n());
    LatticePoint pos(n, 0);
    // Start so that the walk passes through the origin at the marker.
    for (std::size_t i = 0; i < a.effective_origin(); ++i) {
        const Digit& d = a.digits()[i];
        if (d.is_zero()) continue;
        pos[static_cast<std::size_t>(d.axis() - 1)] -= d.sign() == Sign::plus ? 1 : -1;
    }
    Trace out{a.dimension(), pos, {}};
    out.events.reserve(a.size());
    for (const Digit& d : a.digits()) {
        LatticePoint next = pos;
        if (!d.is_zero())
            next[static_cast<std::size_t>(d.axis() - 1)] += d.sign() == Sign::plus ? 1 : -1;
        out.events.push_back({pos, d, next, pen_of(d)});
        pos = std::move(next);
    }
    return out;
}

// An undirected unit edge; endpoints kept in lexicographic order.
using LatticeEdge = std::pair<LatticePoint, LatticePoint>;

struct DrawnShape {
    Dimension dim;
    std::map<LatticeEdge, long long> edges;  // edge -> multiplicity
    LatticePoint origin;                     // the all-zeros point
    LatticePoint lower, upper;               // bounds over edge endpoints and origin
};

inline DrawnShape to_shape(const Trace& t) {
    const std::size_t n = static_cast<std::size_t>(t.dim.n());
    DrawnShape shape{t.dim, {}, LatticePoint(n, 0), LatticePoint(n, 0), LatticePoint(n, 0)};
    auto grow = [&](const LatticePoint& p) {
        for (std::size_t i = 0; i < n; ++i) {
            shape.lower[i] = std::min(shape.lower[i], p[i]);
            shape.upper[i] = std::max(shape.upper[i], p[i]);
        }
    };
    for (const TraceEvent& ev : t.events) {
        if (ev.pen != Pen::down) continue;
        LatticeEdge edge = ev.before <= ev.after ? LatticeEdge{ev.before, ev.after}
                                                 : LatticeEdge{ev.after, ev.before};
        ++shape.edges[std::move(edge)];
        grow(ev.before);
        grow(ev.after);
    }
    return shape;
}

inline DrawnShape to_shape(const QuString& a) { return to_shape(trace(a)); }

namespace detail {

inline void require_2d(const DrawnShape& shape) {
    if (shape.dim.n() != 2)
        throw DimensionUnsupported("rendering supports dimension 2 only");
}

}  // namespace detail

// Fixed glyph grid, top row = max axis 2. Corners touched by an edge show
// '+', the origin always shows 'o'. Horizontal edges are '--' (or '==' when
// retraced), vertical edges '|' (or the doubled bar when retraced).
inline std::string render_ascii(const DrawnShape& shape) {
    detail::require_2d(shape);
    const long long xmin = shape.lower[0], xmax = shape.upper[0];
    const long long ymin = shape.lower[1], ymax = shape.upper[1];
    const std::size_t cols = static_cast<std::size_t>(xmax - xmin) * 3 + 1;
    const std::size_t rows = static_cast<std::size_t>(ymax - ymin) * 2 + 1;
    // One logical glyph per cell; the doubled vertical bar is multi-byte.
    std::vector<std::vector<std::string>> grid(rows, std::vector<std::string>(cols, " "));

    auto col_of = [&](long long x) { return static_cast<std::size_t>(x - xmin) * 3; };
    auto row_of = [&](long long y) { return static_cast<std::size_t>(ymax - y) * 2; };

    for (const auto& [edge, multiplicity] : shape.edges) {
        const LatticePoint& a = edge.first;
        const LatticePoint& b = edge.second;
        grid[row_of(a[1])][col_of(a[0])] = "+";
        grid[row_of(b[1])][col_of(b[0])] = "+";
        if (a[1] == b[1]) {  // horizontal: b is one step right of a
            const char* dash = multiplicity >= 2 ? "=" : "-";
            grid[row_of(a[1])][col_of(a[0]) + 1] = dash;
            grid[row_of(a[1])][col_of(a[0]) + 2] = dash;
        } else {  // vertical: b is one step above a
            grid[row_of(b[1]) + 1][col_of(a[0])] = multiplicity >= 2 ? "‖" : "|";
        }
    }
    if (0 >= xmin && 0 <= xmax && 0 >= ymin && 0 <= ymax) grid[row_of(0)][col_of(0)] = "o";

    std::string out;
    for (const std::vector<std::string>& row : grid) {
        std::string line;
        for (const std::string& cell : row) line += cell;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

struct RenderConfig {
    long long cell = 20;   // pixels per lattice unit
    bool show_grid = true;
    bool show_origin = true;
    long long margin = 10;
};

// Standalone SVG document, axis 2 pointing up. One line element per drawn
// edge (heavier stroke when retraced), optional lattice grid, origin dot.
inline std::string render_svg(const DrawnShape& shape, const RenderConfig& cfg = {}) {
    detail::require_2d(shape);
    if (cfg.cell < 1) throw DomainError("cell size must be at least 1");
    if (cfg.margin < 0) throw DomainError("margin must be nonnegative");
    const long long xmin = shape.lower[0], xmax = shape.upper[0];
    const long long ymin = shape.lower[1], ymax = shape.upper[1];
    const long long width = (xmax - xmin) * cfg.cell + 2 * cfg.margin;
    const long long height = (ymax - ymin) * cfg.cell + 2 * cfg.margin;
    auto px = [&](long long x) { return (x - xmin) * cfg.cell + cfg.margin; };
    auto py = [&](long long y) { return (ymax - y) * cfg.cell + cfg.margin; };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    auto line = [&](long long x1, long long y1, long long x2, long long y2,
                    const std::string& stroke, long long stroke_width) {
        out += "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
               "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
               "\" stroke=\"" + stroke + "\" stroke-width=\"" + std::to_string(stroke_width) +
               "\"/>\n";
    };
    if (cfg.show_grid) {
        for (long long x = xmin; x <= xmax; ++x)
            line(px(x), py(ymax), px(x), py(ymin), "#cccccc", 1);
        for (long long y = ymin; y <= ymax; ++y)
            line(px(xmin), py(y), px(xmax), py(y), "#cccccc", 1);
    }
    for (const auto& [edge, multiplicity] : shape.edges)
        line(px(edge.first[0]), py(edge.first[1]), px(edge.second[0]), py(edge.second[1]),
             "#000000", multiplicity >= 2 ? 4 : 2);
    if (cfg.show_origin && 0 >= xmin && 0 <= xmax && 0 >= ymin && 0 <= ymax) {
        out += "  <circle cx=\"" + std::to_string(px(0)) + "\" cy=\"" + std::to_string(py(0)) +
               "\" r=\"" + std::to_string(std::max<long long>(2, cfg.cell / 5)) +
               "\" fill=\"#cc0000\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace qu
