#include <random>
#include <set>

#include "doctest.h"
#include "perfdom/patterns.hpp"
#include "perfdom/reproduce.hpp"
#include "perfdom/window.hpp"

using namespace perfdom;

namespace {

Window isolated_setup(int radius) {
    Window w(radius);
    w.set({0, 0}, CellState::kKnight);
    for (Square mv : kKnightMoves) w.set(mv, CellState::kEmpty);
    return w;
}

std::set<std::pair<int, int>> empty_cells(const Window& w) {
    std::set<std::pair<int, int>> out;
    for (int c = -w.radius; c <= w.radius; ++c) {
        for (int r = -w.radius; r <= w.radius; ++r) {
            if (w.at({c, r}) == CellState::kEmpty) out.insert({c, r});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("propagation reproduces the forbidden-square set") {
    // Full fixture at radius 4.
    std::optional<Window> prop = propagate(isolated_setup(4));
    REQUIRE(prop.has_value());
    std::set<std::pair<int, int>> expected;
    for (Square sq : isolated_knight_forbidden_squares()) expected.insert({sq.col, sq.row});
    CHECK(empty_cells(*prop) == expected);

    // Radius-2 window sees exactly the in-range slice.
    std::optional<Window> small = propagate(isolated_setup(2));
    REQUIRE(small.has_value());
    std::set<std::pair<int, int>> clipped;
    for (auto [c, r] : expected) {
        if (std::abs(c) <= 2 && std::abs(r) <= 2) clipped.insert({c, r});
    }
    CHECK(empty_cells(*small) == clipped);
}

TEST_CASE("propagation leaves an all-unknown window unchanged") {
    Window w(3);
    std::optional<Window> prop = propagate(w);
    REQUIRE(prop.has_value());
    CHECK(prop->cells == w.cells);
}

TEST_CASE("propagate is a fixpoint" * doctest::timeout(120)) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> radius_dist(2, 5);
    int checked = 0;
    for (int iter = 0; iter < 1500; ++iter) {
        const int radius = radius_dist(rng);
        Window w(radius);
        std::uniform_int_distribution<int> coord(-radius, radius);
        std::uniform_int_distribution<int> kind(0, 5);
        const int pins = std::uniform_int_distribution<int>(0, 10)(rng);
        for (int p = 0; p < pins; ++p) {
            const int k = kind(rng);
            w.set({coord(rng), coord(rng)},
                  k == 0 ? CellState::kKnight : (k <= 3 ? CellState::kEmpty : CellState::kUnknown));
        }
        std::optional<Window> once = propagate(w);
        if (!once) continue;  // contradiction is a normal outcome
        ++checked;
        std::optional<Window> twice = propagate(*once);
        REQUIRE(twice.has_value());
        CHECK(twice->cells == once->cells);
    }
    CHECK(checked >= 1000);
}

TEST_CASE("isolated-knight search verdicts by radius") {
    CHECK(isolated_knight_search(2).verdict == Verdict::kSat);
    CHECK(isolated_knight_search(3).verdict == Verdict::kSat);
    CHECK(isolated_knight_search(4).verdict == Verdict::kSat);
    CHECK(isolated_knight_search(5).verdict == Verdict::kUnsat);
    CHECK(isolated_knight_search(6).verdict == Verdict::kUnsat);
}

TEST_CASE("unsat is monotone in the radius") {
    // Once unsat at radius 5, every larger window stays unsat.
    for (int radius : {5, 6, 7}) {
        CHECK(isolated_knight_search(radius).verdict == Verdict::kUnsat);
    }
    for (const CaseReplay& replay : isolated_knight_case_replays()) {
        for (int radius : {6, 7}) {
            CHECK(assumption_search(replay.pins, radius).verdict == Verdict::kUnsat);
        }
    }
}

TEST_CASE("case replays are contradictory") {
    for (const CaseReplay& replay : isolated_knight_case_replays()) {
        CAPTURE(replay.name);
        CHECK(assumption_search(replay.pins, 6).verdict == Verdict::kUnsat);
    }
}

TEST_CASE("forced knights around the first corner case pin down (2,0)") {
    // With the isolated center plus knights at (2,2), (1,0) and (3,0), the
    // square (2,0) cannot be dominated.
    std::vector<std::pair<Square, CellState>> pins;
    pins.emplace_back(Square{0, 0}, CellState::kKnight);
    for (Square mv : kKnightMoves) pins.emplace_back(mv, CellState::kEmpty);
    for (Square sq : {Square{2, 2}, Square{1, 0}, Square{3, 0}}) {
        pins.emplace_back(sq, CellState::kKnight);
    }
    CHECK(assumption_search(pins, 6).verdict == Verdict::kUnsat);
}

TEST_CASE("unpinned windows are satisfiable") {
    SearchOutcome out = assumption_search({}, 3);
    REQUIRE(out.verdict == Verdict::kSat);
    REQUIRE(out.witness.has_value());
    CHECK(window_satisfies(*out.witness));
}

TEST_CASE("sat witnesses satisfy the window constraints") {
    for (int radius : {2, 3, 4}) {
        SearchOutcome out = isolated_knight_search(radius);
        REQUIRE(out.verdict == Verdict::kSat);
        REQUIRE(out.witness.has_value());
        CHECK(window_satisfies(*out.witness));
        CHECK(out.witness->at({0, 0}) == CellState::kKnight);
    }
}

TEST_CASE("restrictions of the plane pattern satisfy every window" * doctest::timeout(60)) {
    PeriodicPattern zz = construct_zz_pattern();
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> radius_dist(2, 6);
    std::uniform_int_distribution<int> offset(-40, 40);
    for (int iter = 0; iter < 1000; ++iter) {
        const int radius = radius_dist(rng);
        const int ox = offset(rng), oy = offset(rng);
        Window w(radius);
        for (int c = -radius; c <= radius; ++c) {
            for (int r = -radius; r <= radius; ++r) {
                w.set({c, r}, periodic_is_knight(zz, {c + ox, r + oy}) ? CellState::kKnight
                                                                       : CellState::kEmpty);
            }
        }
        CHECK(window_satisfies(w));
        // Propagation must accept genuine restrictions too.
        CHECK(propagate(w).has_value());
    }
}

TEST_CASE("search bookkeeping") {
    SearchOutcome throttled = isolated_knight_search(6, 0);
    CHECK(throttled.verdict == Verdict::kInconclusive);

    CHECK_THROWS_AS(assumption_search({{Square{0, 0}, CellState::kKnight},
                                       {Square{0, 0}, CellState::kEmpty}},
                                      4),
                    InputError);
    CHECK_THROWS_AS(assumption_search({{Square{9, 9}, CellState::kKnight}}, 4), InputError);
    CHECK_THROWS_AS(isolated_knight_search(1), InputError);
}

TEST_CASE("dfs agrees with exhaustive enumeration on tiny windows" * doctest::timeout(120)) {
    // Radius-2 window with a fixed pin set: enumerate all assignments of the
    // remaining cells by brute force and compare satisfiability.
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int iter = 0; iter < 40; ++iter) {
        Window base(2);
        const int pins = std::uniform_int_distribution<int>(14, 20)(rng);
        for (int p = 0; p < pins; ++p) {
            base.set({coord(rng), coord(rng)},
                     std::bernoulli_distribution(0.25)(rng) ? CellState::kKnight
                                                            : CellState::kEmpty);
        }
        std::vector<std::size_t> unknowns;
        for (std::size_t i = 0; i < base.cells.size(); ++i) {
            if (base.cells[i] == CellState::kUnknown) unknowns.push_back(i);
        }
        if (unknowns.size() > 12) continue;

        bool brute_sat = false;
        for (std::uint32_t mask = 0; mask < (1u << unknowns.size()) && !brute_sat; ++mask) {
            Window full = base;
            for (std::size_t b = 0; b < unknowns.size(); ++b) {
                full.cells[unknowns[b]] =
                    ((mask >> b) & 1u) ? CellState::kKnight : CellState::kEmpty;
            }
            brute_sat = window_satisfies(full);
        }

        std::vector<std::pair<Square, CellState>> pins_list;
        for (int c = -2; c <= 2; ++c) {
            for (int r = -2; r <= 2; ++r) {
                if (base.at({c, r}) != CellState::kUnknown) {
                    pins_list.emplace_back(Square{c, r}, base.at({c, r}));
                }
            }
        }
        SearchOutcome out = assumption_search(pins_list, 2);
        CAPTURE(iter);
        CHECK((out.verdict == Verdict::kSat) == brute_sat);
    }
}
