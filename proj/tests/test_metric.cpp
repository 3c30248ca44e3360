#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qu/qu.hpp"

using qu::Dimension;
using qu::MetricConfig;
using qu::QuString;
using qu::Rational;

namespace {
QuString qus(std::string_view text, int dim = 2) { return qu::parse(text, Dimension(dim)); }
}  // namespace

TEST_CASE("displacement bookkeeping") {
    SECTION("ink counts atoms only") {
        CHECK(qu::ink_displacement(qus("1+1+1-2+")).net == std::vector<long long>{1, 1});
        CHECK(qu::ink_displacement(qus("1+o1+o")).net == std::vector<long long>{0, 0});
        CHECK(qu::ink_displacement(qus("")).net == std::vector<long long>{0, 0});
    }
    SECTION("position counts atoms and blanks") {
        CHECK(qu::position_displacement(qus("1+o1+")).net == std::vector<long long>{2, 0});
        CHECK(qu::position_displacement(qus("1+1-o")).net == std::vector<long long>{0, 0});
        CHECK(qu::position_displacement(qus("")).net == std::vector<long long>{0, 0});
    }
}

TEST_CASE("taxicab length") {
    CHECK(qu::taxicab_length(qus("1+{3}2+{4}")) == 7);
    CHECK(qu::taxicab_length(qus("1+1-"), {.unit = Rational(7, 2)}) == 0);
    CHECK(qu::taxicab_length(qus("1+o1+o1+2+")) == 2);

    SECTION("net counts per axis, weighted by the unit") {
        std::mt19937 rng(3);
        for (int i = 0; i < 50; ++i) {
            const long long k = rng() % 6, l = rng() % 6;
            const long long k2 = rng() % 6, l2 = rng() % 6;
            std::vector<qu::Digit> digits;
            auto run = [&](qu::Digit d, long long count) {
                for (long long j = 0; j < count; ++j) digits.push_back(d);
            };
            run(qu::Digit::atom(1, qu::Sign::plus), k);
            run(qu::Digit::atom(1, qu::Sign::minus), l);
            run(qu::Digit::atom(2, qu::Sign::plus), k2);
            run(qu::Digit::atom(2, qu::Sign::minus), l2);
            const QuString s(Dimension(2), digits);
            const Rational unit(3, 2);
            CHECK(qu::taxicab_length(s, {.unit = unit}) ==
                  (Rational(std::abs(k - l)) + Rational(std::abs(k2 - l2))) * unit);
        }
    }
}

TEST_CASE("arc and gap length") {
    CHECK(qu::arc_length(qus("1+1-")) == 2);
    CHECK(qu::arc_length(qus("1+o{5}")) == 0);
    CHECK(qu::arc_length(qus("")) == 0);

    CHECK(qu::gap_length(qus("1+o{3}")) == 3);
    CHECK(qu::gap_length(qus("1+2-")) == 0);
    CHECK(qu::gap_length(qus("")) == 0);
    // gaps add up regardless of direction
    CHECK(qu::gap_length(qus("1+o1-o")) == 2);
}

TEST_CASE("inner product") {
    CHECK(qu::inner_product(qus("1+"), qus("1+")) == 1);
    CHECK(qu::inner_product(qus("1+"), qus("1-")) == -1);
    CHECK(qu::inner_product(qus("1+"), qus("2+")) == 0);

    SECTION("bilinear extension agrees with summing the atomic table") {
        CHECK(qu::inner_product(qus("1+1+"), qus("1+")) == 2);
        CHECK(oracle::inner_product_by_table(qus("1+1+"), qus("1+"), 1) == 2);

        std::mt19937 rng(11);
        for (int i = 0; i < 100; ++i) {
            const QuString a = oracle::random_string(rng, Dimension(3), {.origin = false});
            const QuString b = oracle::random_string(rng, Dimension(3), {.origin = false});
            const Rational s(1 + static_cast<long long>(rng() % 3),
                             1 + static_cast<long long>(rng() % 2));
            CHECK(qu::inner_product(a, b, {.unit = s}) ==
                  oracle::inner_product_by_table(a, b, s));
        }
    }
    SECTION("atomic table across every axis pair") {
        for (const Rational s : {Rational(1), Rational(2)}) {
            const Rational s2 = s * s;
            for (int i = 1; i <= 3; ++i) {
                for (int j = 1; j <= 3; ++j) {
                    const Rational diag = i == j ? s2 : Rational(0);
                    auto atom = [&](int axis, char sign) {
                        return QuString(Dimension(3),
                                        {qu::Digit::atom(axis, sign == '+' ? qu::Sign::plus
                                                                           : qu::Sign::minus)});
                    };
                    const MetricConfig cfg{.unit = s};
                    CHECK(qu::inner_product(atom(i, '+'), atom(j, '+'), cfg) == diag);
                    CHECK(qu::inner_product(atom(i, '+'), atom(j, '-'), cfg) == -diag);
                    CHECK(qu::inner_product(atom(i, '-'), atom(j, '+'), cfg) == -diag);
                    CHECK(qu::inner_product(atom(i, '-'), atom(j, '-'), cfg) == diag);
                }
            }
        }
    }
}

TEST_CASE("per-axis weights") {
    const MetricConfig cfg{.unit = 1, .per_axis = std::vector<Rational>{1, Rational(3, 2)}};
    CHECK(qu::taxicab_length(qus("1+2+"), cfg) == Rational(5, 2));
    CHECK(qu::arc_length(qus("2+2-"), cfg) == 3);
    CHECK(qu::gap_length(qus("2+o"), cfg) == Rational(3, 2));
    CHECK(qu::inner_product(qus("2+"), qus("2+"), cfg) == Rational(9, 4));

    SECTION("validation") {
        CHECK_THROWS_AS(qu::taxicab_length(qus("1+"), {.unit = 0}), qu::DomainError);
        CHECK_THROWS_AS(
            qu::taxicab_length(qus("1+"), {.per_axis = std::vector<Rational>{1, 2, 3}}),
            qu::DimensionMismatch);
        CHECK_THROWS_AS(
            qu::taxicab_length(qus("1+"), {.per_axis = std::vector<Rational>{1, -1}}),
            qu::DomainError);
        CHECK_THROWS_AS(qu::inner_product(qus("1+"), qus("1+", 3)), qu::DimensionMismatch);
    }
}

TEST_CASE("metric laws") {
    std::mt19937 rng(42);
    const MetricConfig cfg{.unit = Rational(3, 2)};
    for (int i = 0; i < 300; ++i) {
        const QuString a = oracle::random_string(rng, Dimension(2), {.origin = false});
        const QuString b = oracle::random_string(rng, Dimension(2), {.origin = false});
        const QuString c = oracle::random_string(rng, Dimension(2), {.origin = false});

        CHECK(qu::taxicab_length(qu::concat(a, b), cfg) ==
              qu::taxicab_length(qu::concat(b, a), cfg));
        CHECK(qu::taxicab_length(a, cfg) == qu::taxicab_length(qu::normalize(a), cfg));
        CHECK(qu::ink_displacement(a) == qu::ink_displacement(qu::normalize(a)));

        CHECK(qu::inner_product(a, b, cfg) == qu::inner_product(b, a, cfg));
        CHECK(qu::inner_product(qu::concat(a, b), c, cfg) ==
              qu::inner_product(a, c, cfg) + qu::inner_product(b, c, cfg));
        CHECK(qu::inner_product(a, a, cfg) >= 0);

        Rational net_sq = 0;
        for (long long n : qu::ink_displacement(a).net) net_sq += Rational(n) * Rational(n);
        CHECK(qu::inner_product(a, a, cfg) == cfg.unit * cfg.unit * net_sq);

        const long long l = 1 + static_cast<long long>(rng() % 4);
        CHECK(qu::taxicab_length(qu::scalar_mul(l, a), cfg) ==
              Rational(l) * qu::taxicab_length(a, cfg));
        CHECK(qu::inner_product(qu::scalar_mul(l, a), b, cfg) ==
              Rational(l) * qu::inner_product(a, b, cfg));

        const QuString ink_only = oracle::random_string(rng, Dimension(2), {.blanks = false});
        CHECK(qu::arc_length(ink_only, cfg) >= qu::taxicab_length(ink_only, cfg));
    }
}

TEST_CASE("rational formatting") {
    CHECK(qu::format_rational(7) == "7");
    CHECK(qu::format_rational(Rational(7, 2)) == "7/2");
    CHECK(qu::format_rational(Rational(-3, 9)) == "-1/3");
    CHECK(qu::format_rational(0) == "0");
}
