#include <set>

#include "doctest.h"
#include "perfdom/patterns.hpp"
#include "perfdom/solver.hpp"
#include "perfdom/verifier.hpp"

using namespace perfdom;

TEST_CASE("8-column 3-row tile matches the recorded block") {
    Placement p = construct_3rows(8);
    const std::set<Square> expected = {{1, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1},
                                       {5, 2}, {5, 3}, {6, 1}, {7, 1}, {7, 3}};
    const auto knights = p.knights();
    CHECK(std::set<Square>(knights.begin(), knights.end()) == expected);
}

TEST_CASE("3-row construction counts follow the bounds") {
    auto bound = [](int n) {
        const int k = n / 8;
        switch (n % 8) {
            case 0: return 10 * k;
            case 4: return 10 * k + 6;
            case 5: return 10 * k + 6;
            case 6: return 10 * k + 7;
            case 7: return 10 * k + 9;
        }
        return -1;
    };
    for (int n = 4; n <= 39; ++n) {
        const int r = n % 8;
        if (r == 1 || r == 2 || r == 3) continue;
        Placement p = construct_3rows(n);
        CAPTURE(n);
        CHECK(p.size() == bound(n));
        CHECK(is_perfect_dominating(p));
    }
}

TEST_CASE("3-row open residues are rejected") {
    for (int n : {9, 10, 11, 17, 2, 3}) {
        CHECK_THROWS_AS(construct_3rows(n), InputError);
    }
}

TEST_CASE("3-row constructions stay above the exact optimum") {
    for (int n = 4; n <= 32; ++n) {
        const int r = n % 8;
        if (r == 1 || r == 2 || r == 3) continue;
        CHECK(solve_gamma_p(BoardDims(n, 3)).gamma_p <= construct_3rows(n).size());
    }
}

TEST_CASE("4-row pattern matches the recorded 14-column figure") {
    Placement p = construct_4rows(14);
    CHECK(p.size() == 28);
    CHECK(is_perfect_dominating(p));
    for (int c = 1; c <= 14; ++c) {
        const bool outer = (c % 4 == 0 || c % 4 == 1);
        CHECK(p.has({c, 1}) == outer);
        CHECK(p.has({c, 3}) == outer);
        CHECK(p.has({c, 2}) == !outer);
        CHECK(p.has({c, 4}) == !outer);
    }
    CHECK(solve_gamma_p(BoardDims(14, 4)).gamma_p == 28);
}

TEST_CASE("4-row pattern rejects odd widths") {
    CHECK_THROWS_AS(construct_4rows(13), InputError);
    CHECK_THROWS_AS(construct_4rows(3), InputError);
    for (int n : {4, 6, 8, 16, 20}) {
        CHECK(is_perfect_dominating(construct_4rows(n)));
        CHECK(construct_4rows(n).size() == 2 * n);
    }
}

TEST_CASE("2-row construction achieves the optimum") {
    CHECK(construct_2rows(7).size() == 6);
    CHECK(construct_2rows(2).size() == 4);
    CHECK(construct_2rows(12).size() == 8);
    for (int n = 1; n <= 25; ++n) {
        Placement p = construct_2rows(n);
        CAPTURE(n);
        CHECK(is_perfect_dominating(p));
        CHECK(p.size() == solve_gamma_p(BoardDims(n, 2)).gamma_p);
    }
}

TEST_CASE("knight counts match the closed-form families for small k") {
    for (int k = 0; k <= 4; ++k) {
        CHECK(construct_2rows(6 * k + 1).size() == 4 * k + 2);
        if (k >= 1) CHECK(construct_2rows(6 * k).size() == 4 * k);
        if (k >= 1) CHECK(construct_3rows(8 * k).size() == 10 * k);
        CHECK(construct_3rows(8 * k + 4).size() == 10 * k + 6);
        CHECK(construct_3rows(8 * k + 5).size() == 10 * k + 6);
        CHECK(construct_3rows(8 * k + 6).size() == 10 * k + 7);
        CHECK(construct_3rows(8 * k + 7).size() == 10 * k + 9);
        if (k >= 2) CHECK(construct_4rows(2 * k).size() == 4 * k);
    }
}

TEST_CASE("plane pattern: density, verification, pairing") {
    PeriodicPattern zz = construct_zz_pattern();
    CHECK(zz.density() == Rational(1, 8));
    CHECK(verify_periodic(zz));
    for (Square off : zz.offsets) {
        int knight_neighbors = 0;
        for (Square mv : kKnightMoves) {
            if (periodic_is_knight(zz, {off.col + mv.col, off.row + mv.row})) ++knight_neighbors;
        }
        CHECK(knight_neighbors == 1);
    }
    // A paired knight uniquely covers 8 squares (itself, its partner and six
    // empty squares), which is what density 1/8 expresses.
    CHECK(Rational(2, 16) == Rational(1, 8));
}

TEST_CASE("degenerate periodic patterns are rejected") {
    PeriodicPattern bad;
    bad.periods = {{2, 2}, {1, 1}};
    bad.offsets = {{0, 0}};
    CHECK_THROWS_AS(verify_periodic(bad), InputError);

    PeriodicPattern dup;
    dup.periods = {{2, 0}, {0, 2}};
    dup.offsets = {{0, 0}, {2, 0}};  // same residue class twice
    CHECK_THROWS_AS(verify_periodic(dup), InputError);
}

TEST_CASE("all-knights pattern is vacuously perfect") {
    PeriodicPattern all;
    all.periods = {{1, 0}, {0, 1}};
    all.offsets = {{0, 0}};
    CHECK(verify_periodic(all));
    CHECK(all.density() == Rational(1));
}

TEST_CASE("lone knight on a 4x4 domain fails verification") {
    PeriodicPattern lone;
    lone.periods = {{4, 0}, {0, 4}};
    lone.offsets = {{0, 0}};
    CHECK(!verify_periodic(lone));
}

TEST_CASE("band patterns built from cycles") {
    // Period-4 pattern as a 4-row band cycle: two outer-row columns then two
    // inner-row columns.
    PeriodicPattern four = band_pattern_from_cycle({0b0101, 0b0101, 0b1010, 0b1010}, 4);
    CHECK(verify_periodic(four));
    CHECK(four.density() == Rational(1, 2));

    PeriodicPattern two = band_pattern_from_cycle({0b11, 0b11, 0, 0, 0, 0}, 2);
    CHECK(verify_periodic(two));
    CHECK(two.density() == Rational(1, 3));

    PeriodicPattern broken = band_pattern_from_cycle({0b11, 0, 0, 0, 0, 0}, 2);
    CHECK(!verify_periodic(broken));
}
