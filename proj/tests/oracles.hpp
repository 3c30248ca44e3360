// oracles.hpp - independent reference computations and generators for the
// test suites. Nothing here reuses the library's normalize/length/inner
// product code paths; results are derived from first principles so they
// can arbitrate.
#pragma once

#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "qu/qu.hpp"

namespace oracle {

using Word = std::vector<qu::Digit>;

// Every word reachable by exactly one reduction step: removal of one zero
// digit, or removal of one adjacent inverse pair.
inline std::vector<Word> reduction_steps(const Word& w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i].is_zero()) continue;
        Word v = w;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(v));
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (!qu::cancels(w[i], w[i + 1])) continue;
        Word v = w;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
                v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        out.push_back(std::move(v));
    }
    return out;
}

namespace detail {
inline void collect_terminals(const Word& w, std::set<Word>& seen, std::set<Word>& terminals) {
    if (!seen.insert(w).second) return;
    const std::vector<Word> next = reduction_steps(w);
    if (next.empty()) {
        terminals.insert(w);
        return;
    }
    for (const Word& v : next) collect_terminals(v, seen, terminals);
}
}  // namespace detail

// The set of irreducible words reachable by applying single reductions in
// every possible order. Confluence holds iff this is a singleton.
inline std::set<Word> terminal_forms(const Word& w) {
    std::set<Word> seen;
    std::set<Word> terminals;
    detail::collect_terminals(w, seen, terminals);
    return terminals;
}

// Minkowski distance with k = 1 between two lattice points, computed from
// the coordinates alone.
inline long long minkowski_k1(const qu::LatticePoint& a, const qu::LatticePoint& b) {
    long long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::llabs(b[i] - a[i]);
    return d;
}

// The four-case atomic inner-product table, zero off-axis and for
// non-atoms; the string inner product as the plain double sum of the
// table over all digit pairs.
inline qu::Rational atomic_table(const qu::Digit& x, const qu::Digit& y, const qu::Rational& s) {
    if (!x.is_atom() || !y.is_atom() || x.axis() != y.axis()) return 0;
    return x.sign() == y.sign() ? s * s : -(s * s);
}

inline qu::Rational inner_product_by_table(const qu::QuString& a, const qu::QuString& b,
                                           const qu::Rational& s) {
    qu::Rational total = 0;
    for (const qu::Digit& x : a.digits())
        for (const qu::Digit& y : b.digits()) total += atomic_table(x, y, s);
    return total;
}

// --- generators ------------------------------------------------------------

// Visits every digit sequence of length <= max_len over dim's full
// alphabet (zeros, atoms and blanks), shortest first within each branch.
template <typename Visit>
inline void enumerate_words(qu::Dimension dim, std::size_t max_len, Visit&& visit) {
    std::vector<qu::Digit> alphabet{qu::Digit::zero()};
    for (int axis = 1; axis <= dim.n(); ++axis)
        for (qu::Sign sign : {qu::Sign::plus, qu::Sign::minus}) {
            alphabet.push_back(qu::Digit::atom(axis, sign));
            alphabet.push_back(qu::Digit::blank(axis, sign));
        }
    Word word;
    const std::function<void()> rec = [&] {
        visit(static_cast<const Word&>(word));
        if (word.size() == max_len) return;
        for (const qu::Digit& d : alphabet) {
            word.push_back(d);
            rec();
            word.pop_back();
        }
    };
    rec();
}

struct StringOptions {
    std::size_t max_len = 8;
    bool blanks = true;
    bool zeros = true;
    bool origin = true;
};

inline qu::Digit random_digit(std::mt19937& rng, qu::Dimension dim, bool blanks, bool zeros) {
    std::vector<qu::Digit> alphabet;
    if (zeros) alphabet.push_back(qu::Digit::zero());
    for (int axis = 1; axis <= dim.n(); ++axis) {
        for (qu::Sign sign : {qu::Sign::plus, qu::Sign::minus}) {
            alphabet.push_back(qu::Digit::atom(axis, sign));
            if (blanks) alphabet.push_back(qu::Digit::blank(axis, sign));
        }
    }
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    return alphabet[pick(rng)];
}

inline qu::QuString random_string(std::mt19937& rng, qu::Dimension dim,
                                  const StringOptions& opt = {}) {
    std::uniform_int_distribution<std::size_t> len_dist(0, opt.max_len);
    const std::size_t len = len_dist(rng);
    std::vector<qu::Digit> digits;
    digits.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        digits.push_back(random_digit(rng, dim, opt.blanks, opt.zeros));
    std::optional<std::size_t> origin;
    if (opt.origin && rng() % 2 == 0) origin = rng() % (len + 1);
    return qu::QuString(dim, std::move(digits), origin);
}

// Strictly increasing x, anchored at (0,0). Interior steps change y (the
// delta encoding folds flat interior samples into their neighbour, so only
// such sets survive an encode/decode round trip); the final step may be
// flat.
inline qu::LatticeSample random_samples(std::mt19937& rng, std::size_t max_points) {
    std::uniform_int_distribution<std::size_t> count_dist(1, max_points);
    std::uniform_int_distribution<long long> dx_dist(1, 3);
    std::uniform_int_distribution<long long> dy_dist(1, 4);
    qu::LatticeSample out;
    out.points.push_back({0, 0});
    const std::size_t count = count_dist(rng);
    for (std::size_t i = 1; i < count; ++i) {
        const auto& prev = out.points.back();
        const bool last = i + 1 == count;
        const long long dy =
            last && rng() % 4 == 0 ? 0 : (rng() % 2 ? 1 : -1) * dy_dist(rng);
        out.points.push_back({prev.x + dx_dist(rng), prev.y + dy});
    }
    return out;
}

}  // namespace oracle
