#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "perfdom/board.hpp"
#include "perfdom/patterns.hpp"

using namespace perfdom;

namespace {

std::set<Square> as_set(const std::vector<Square>& v) { return {v.begin(), v.end()}; }

Placement random_placement(std::mt19937& rng, int max_side = 7) {
    std::uniform_int_distribution<int> side(1, max_side);
    const BoardDims dims(side(rng), side(rng));
    Placement p(dims);
    std::bernoulli_distribution knight(0.3);
    for (int c = 1; c <= dims.cols; ++c) {
        for (int r = 1; r <= dims.rows; ++r) {
            if (knight(rng)) p.add({c, r});
        }
    }
    return p;
}

}  // namespace

TEST_CASE("open neighborhood of (3,4) on 8x8") {
    const std::set<Square> expected = {{1, 3}, {1, 5}, {2, 2}, {2, 6},
                                       {4, 2}, {4, 6}, {5, 3}, {5, 5}};
    CHECK(as_set(knight_neighbors(BoardDims(8, 8), {3, 4})) == expected);

    std::set<Square> closed = expected;
    closed.insert({3, 4});
    CHECK(as_set(closed_neighbors(BoardDims(8, 8), {3, 4})) == closed);
}

TEST_CASE("corner and degenerate neighborhoods") {
    CHECK(as_set(knight_neighbors(BoardDims(4, 4), {1, 1})) == std::set<Square>{{2, 3}, {3, 2}});
    CHECK(knight_neighbors(BoardDims(2, 2), {1, 1}).empty());
    CHECK(as_set(closed_neighbors(BoardDims(1, 1), {1, 1})) == std::set<Square>{{1, 1}});
    CHECK(as_set(closed_neighbors(BoardDims(4, 4), {1, 1})) ==
          std::set<Square>{{1, 1}, {2, 3}, {3, 2}});
    CHECK_THROWS_AS(knight_neighbors(BoardDims(4, 4), {0, 1}), InputError);
    CHECK_THROWS_AS(knight_neighbors(BoardDims(4, 4), {5, 2}), InputError);
}

TEST_CASE("symmetry group sizes") {
    CHECK(symmetry_group(BoardDims(5, 4)).size() == 4);
    CHECK(symmetry_group(BoardDims(4, 4)).size() == 8);
    for (Symmetry g : symmetry_group(BoardDims(1, 1))) {
        CHECK(apply_symmetry(g, BoardDims(1, 1), {1, 1}) == Square{1, 1});
    }
}

TEST_CASE("symmetry group closed under composition") {
    const BoardDims dims(5, 5);
    const auto group = symmetry_group(dims);
    // Compose as square-to-square maps and look the result up in the group.
    auto tableau = [&](auto&& map) {
        std::vector<Square> t;
        for (int c = 1; c <= dims.cols; ++c)
            for (int r = 1; r <= dims.rows; ++r) t.push_back(map(Square{c, r}));
        return t;
    };
    std::vector<std::vector<Square>> members;
    for (Symmetry g : group) {
        members.push_back(tableau([&](Square sq) { return apply_symmetry(g, dims, sq); }));
    }
    for (Symmetry g : group) {
        for (Symmetry h : group) {
            auto composed = tableau(
                [&](Square sq) { return apply_symmetry(g, dims, apply_symmetry(h, dims, sq)); });
            CHECK(std::find(members.begin(), members.end(), composed) != members.end());
        }
    }
}

TEST_CASE("canonicalize fixes extreme placements") {
    Placement empty(BoardDims(6, 4));
    CHECK(canonicalize(empty) == empty);
    Placement full(BoardDims(6, 4));
    for (int c = 1; c <= 6; ++c)
        for (int r = 1; r <= 4; ++r) full.add({c, r});
    CHECK(canonicalize(full) == full);
}

TEST_CASE("mirror-image 3-row tilings share a canonical form") {
    Placement tiling = construct_3rows(8);
    Placement mirrored = apply_symmetry(Symmetry::kHorizontalFlip, tiling);
    CHECK(!(tiling == mirrored));
    CHECK(canonicalize(tiling) == canonicalize(mirrored));
}

TEST_CASE("adjacency symmetry and degree bound" * doctest::timeout(60)) {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> side(1, 9);
    for (int iter = 0; iter < 1000; ++iter) {
        const BoardDims dims(side(rng), side(rng));
        std::uniform_int_distribution<int> col(1, dims.cols), row(1, dims.rows);
        const Square a{col(rng), row(rng)};
        const auto na = knight_neighbors(dims, a);
        CHECK(na.size() <= 8);
        const bool central = a.col >= 3 && a.col <= dims.cols - 2 && a.row >= 3 &&
                             a.row <= dims.rows - 2;
        CHECK((na.size() == 8) == central);
        for (Square b : na) {
            const auto nb = knight_neighbors(dims, b);
            CHECK(std::find(nb.begin(), nb.end(), a) != nb.end());
            CHECK(!(b == a));
        }
    }
}

TEST_CASE("symmetries preserve adjacency" * doctest::timeout(60)) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> side(2, 8);
    for (int iter = 0; iter < 300; ++iter) {
        const BoardDims dims(side(rng), side(rng));
        std::uniform_int_distribution<int> col(1, dims.cols), row(1, dims.rows);
        const Square a{col(rng), row(rng)};
        for (Symmetry g : symmetry_group(dims)) {
            const Square ga = apply_symmetry(g, dims, a);
            std::set<Square> mapped;
            for (Square b : knight_neighbors(dims, a)) mapped.insert(apply_symmetry(g, dims, b));
            CHECK(as_set(knight_neighbors(dims, ga)) == mapped);
        }
    }
}

TEST_CASE("canonicalize is idempotent and constant on orbits" * doctest::timeout(120)) {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 1000; ++iter) {
        const Placement p = random_placement(rng);
        const Placement canon = canonicalize(p);
        CHECK(canonicalize(canon) == canon);
        for (Symmetry g : symmetry_group(p.dims())) {
            CHECK(canonicalize(apply_symmetry(g, p)) == canon);
        }
        // The canonical form is the least element of the orbit.
        CHECK(!Placement::lex_less(canon, canon));
        CHECK((canon == p || Placement::lex_less(canon, p)));
    }
}

TEST_CASE("placement order is by lowest differing square") {
    const BoardDims dims(3, 2);
    Placement a(dims, {{1, 1}, {3, 1}});  // bits 0, 4
    Placement b(dims, {{1, 2}, {2, 1}});  // bits 1, 2
    CHECK(Placement::lex_less(a, b));
    CHECK(!Placement::lex_less(b, a));
    CHECK(!Placement::lex_less(a, a));
}
