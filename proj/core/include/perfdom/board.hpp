#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "perfdom/common.hpp"

namespace perfdom {

// Board coordinates are 1-based and column-first: (i,j) is column i, row j,
// with (1,1) the bottom-left square. Squares with coordinates outside a board
// appear only in infinite-board contexts (window search, periodic patterns).
struct Square {
    int col = 0;
    int row = 0;

    friend auto operator<=>(const Square&, const Square&) = default;
};

struct BoardDims {
    int cols = 0;  // n
    int rows = 0;  // m

    BoardDims() = default;
    BoardDims(int n, int m);

    int area() const { return cols * rows; }
    bool contains(Square sq) const {
        return sq.col >= 1 && sq.col <= cols && sq.row >= 1 && sq.row <= rows;
    }
    friend bool operator==(const BoardDims&, const BoardDims&) = default;
};

// The eight knight displacements.
inline constexpr std::array<Square, 8> kKnightMoves = {{
    {1, 2}, {1, -2}, {-1, 2}, {-1, -2}, {2, 1}, {2, -1}, {-2, 1}, {-2, -1},
}};

// Knight-move targets of sq that stay on the board, i.e. the open
// neighborhood N(sq). Throws InputError if sq itself is off the board.
std::vector<Square> knight_neighbors(BoardDims dims, Square sq);

// N[sq] = N(sq) plus sq itself.
std::vector<Square> closed_neighbors(BoardDims dims, Square sq);

// A set of knights on a finite board. Stored as a dense bitset in
// column-major order so each column is a contiguous bit range.
class Placement {
public:
    Placement() = default;
    explicit Placement(BoardDims dims);
    Placement(BoardDims dims, const std::vector<Square>& knights);

    BoardDims dims() const { return dims_; }

    int bit_index(Square sq) const { return (sq.col - 1) * dims_.rows + (sq.row - 1); }
    Square square_at(int bit) const {
        return Square{bit / dims_.rows + 1, bit % dims_.rows + 1};
    }

    bool has(Square sq) const;
    void add(Square sq);
    void remove(Square sq);
    int size() const;
    bool empty() const { return size() == 0; }

    // Knights in increasing bit-index (column-major) order.
    std::vector<Square> knights() const;

    // Raw words, lowest bit = (1,1).
    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.dims_ == b.dims_ && a.words_ == b.words_;
    }

    // Orders same-shape placements by their sorted square-index sequences:
    // at the lowest bit where the two sets differ, the one containing that
    // bit is smaller. This is the tie-break order used everywhere a single
    // witness must be picked.
    static bool lex_less(const Placement& a, const Placement& b);

private:
    BoardDims dims_{1, 1};
    std::vector<std::uint64_t> words_;
};

enum class Symmetry {
    kIdentity,
    kHorizontalFlip,  // (i,j) -> (n+1-i, j)
    kVerticalFlip,    // (i,j) -> (i, m+1-j)
    kRotate180,
    kRotate90,        // square boards only
    kRotate270,
    kDiagonalFlip,      // (i,j) -> (j,i)
    kAntiDiagonalFlip,  // (i,j) -> (n+1-j, n+1-i)
};

// 4 symmetries for rectangles, the full dihedral 8 for squares.
std::vector<Symmetry> symmetry_group(BoardDims dims);

Square apply_symmetry(Symmetry sym, BoardDims dims, Square sq);
Placement apply_symmetry(Symmetry sym, const Placement& p);

// Lexicographically least image of p under its board's symmetry group.
// Idempotent and constant on orbits.
Placement canonicalize(const Placement& p);

// --- Serialization -------------------------------------------------------
//
// Text grid: first line "n m", then m lines of n characters, top row first,
// 'N' = knight, '.' = empty.
// JSON: {"cols":n,"rows":m,"knights":[[i,j],...]}.

std::string to_text(const Placement& p);
Placement placement_from_text(const std::string& text);

std::string to_json(const Placement& p);
Placement placement_from_json(const std::string& json_text);

// Board-art rendering without the header line (used by the CLI).
std::string to_grid_art(const Placement& p);

}  // namespace perfdom
