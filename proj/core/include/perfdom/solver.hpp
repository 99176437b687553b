#pragma once

#include <optional>
#include <vector>

#include "perfdom/board.hpp"

namespace perfdom {

struct SolveResult {
    BoardDims dims;
    int gamma_p = 0;
    Placement witness;
    // True iff the whole board is the only perfect dominating set,
    // i.e. gamma_p == cols * rows.
    bool only_trivial = false;
};

// Reference oracle: scans subsets in increasing cardinality, within each
// cardinality in lexicographic order of the sorted square-index tuples, and
// returns the first perfect dominating set found. Guarded to cols*rows <= 24.
SolveResult brute_force_gamma_p(BoardDims dims);

// Column-sweep profile DP. Boards are transposed first when rows > cols;
// after that rows must be <= 8 (state width guard), columns are unbounded.
// The returned witness is the minimum placement that is least in the
// placement order among all minimum ones (it is its own canonical form).
SolveResult solve_gamma_p(BoardDims dims);

// All perfect dominating sets of cardinality <= max_size, in placement
// order. With up_to_symmetry, orbit representatives (canonical forms) only.
// result_cap guards against enormous outputs.
std::vector<Placement> enumerate_pds(BoardDims dims, int max_size, bool up_to_symmetry,
                                     std::size_t result_cap = std::size_t{1} << 20);

enum class CellConstraint : unsigned char {
    kFree,         // '.'
    kMustBeKnight, // 'N'
    kMustBeEmpty,  // 'x'
};

// One constraint per square, column-major like Placement bits.
struct ConstraintGrid {
    BoardDims dims{1, 1};
    std::vector<CellConstraint> cells;  // dims.area() entries

    explicit ConstraintGrid(BoardDims d)
        : dims(d), cells(static_cast<std::size_t>(d.area()), CellConstraint::kFree) {}

    CellConstraint& at(Square sq) {
        return cells[static_cast<std::size_t>((sq.col - 1) * dims.rows + (sq.row - 1))];
    }
    CellConstraint at(Square sq) const {
        return cells[static_cast<std::size_t>((sq.col - 1) * dims.rows + (sq.row - 1))];
    }
};

// Overlays pins onto a grid. A pin that contradicts an existing non-free
// constraint (knight vs empty) raises InputError.
void apply_pins(ConstraintGrid& grid,
                const std::vector<std::pair<Square, CellConstraint>>& pins);

// Constraint grid text format: same shape as the placement grid, with
// 'N' = must-be-knight, 'x' = must-be-empty, '.' = free.
ConstraintGrid constraints_from_text(const std::string& text);
std::string to_text(const ConstraintGrid& grid);

// Searches for a nontrivial (S != V) perfect dominating set consistent with
// the constraints. Returns the minimum such set, or nullopt when every
// consistent perfect dominating set is the full board (or none exists).
// The search is exhaustive: nullopt is a proof of nonexistence.
std::optional<Placement> complete_partial(const ConstraintGrid& grid);

// Closed rectangle of board squares, 1-based inclusive bounds.
struct SubboardRect {
    int col_lo = 1, row_lo = 1, col_hi = 1, row_hi = 1;

    bool contains(Square sq) const {
        return sq.col >= col_lo && sq.col <= col_hi && sq.row >= row_lo && sq.row <= row_hi;
    }
};

// Enumerates the ways to perfectly dominate just the subboard with only
// necessary knights: sets S drawn from the subboard and its attackers such
// that every empty subboard square has exactly one dominator, no empty
// square of the whole board has two, S is inclusion-minimal, and every
// knight traces back to the construction process (it dominates an empty
// subboard square, holds an isolated subboard square, or is forced because
// its square would otherwise be doubly dominated by already-justified
// knights). Results are deduplicated up to the board symmetries that fix
// the subboard and returned as canonical representatives in placement
// order. Guarded to cols*rows <= 25.
std::vector<Placement> enumerate_minimal_subboard_dominators(BoardDims dims, SubboardRect sub);

}  // namespace perfdom
