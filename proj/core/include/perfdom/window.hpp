#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfdom/board.hpp"

namespace perfdom {

enum class CellState : unsigned char { kUnknown, kKnight, kEmpty };

// A finite square window on the unbounded board, spanning columns and rows
// -radius..radius. Squares whose whole knight neighborhood lies inside the
// window are interior: their empty cells must end up dominated exactly once.
// Every other empty cell is only held to at-most-once, which is sound for
// restrictions of true perfect dominating sets, so Unsat verdicts are
// theorems about the unbounded board.
struct Window {
    int radius = 0;
    std::vector<CellState> cells;  // (2r+1)^2, column-major from (-r,-r)

    explicit Window(int r);

    int side() const { return 2 * radius + 1; }
    bool contains(Square sq) const {
        return sq.col >= -radius && sq.col <= radius && sq.row >= -radius && sq.row <= radius;
    }
    bool interior(Square sq) const {
        return sq.col >= -(radius - 2) && sq.col <= radius - 2 && sq.row >= -(radius - 2) &&
               sq.row <= radius - 2;
    }
    std::size_t index(Square sq) const {
        return static_cast<std::size_t>((sq.col + radius) * side() + (sq.row + radius));
    }
    CellState at(Square sq) const { return cells[index(sq)]; }
    void set(Square sq, CellState v) { cells[index(sq)] = v; }

    // Rows top to bottom: 'N' knight, '.' empty, '?' unknown.
    std::string to_art() const;
};

// Fixpoint of unit propagation:
//   (a) an empty cell with one dominator forbids knights on its unknown
//       neighbors,
//   (b) an empty interior cell with no dominator and a single unknown
//       neighbor forces that neighbor to a knight (and contradicts when no
//       unknown neighbor remains),
//   (c) any empty cell reaching two dominators contradicts.
// Returns the propagated window, or nullopt on contradiction.
std::optional<Window> propagate(const Window& w);

enum class Verdict { kUnsat, kSat, kInconclusive };

struct SearchOutcome {
    Verdict verdict = Verdict::kInconclusive;
    std::uint64_t nodes = 0;
    std::optional<Window> witness;  // set for Sat
};

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

// Depth-first search with propagation over the window's unknown cells,
// branching empty-before-knight on the cell touching the most pending
// exactly-once constraints. Sat returns a full assignment; Unsat means no
// assignment satisfies the (relaxed) window constraints.
SearchOutcome assumption_search(const std::vector<std::pair<Square, CellState>>& pins, int radius,
                                std::uint64_t node_limit = kDefaultNodeLimit);

// assumption_search specialized to the isolated-knight configuration: the
// center pinned to a knight and its whole open neighborhood pinned empty.
// Unsat proves that no perfect dominating set of the unbounded board
// contains an isolated knight; Sat at small radii carries no meaning.
SearchOutcome isolated_knight_search(int radius, std::uint64_t node_limit = kDefaultNodeLimit);

// Checks a fully assigned window against the relaxed constraints; used to
// validate Sat witnesses and pattern restrictions.
bool window_satisfies(const Window& w);

}  // namespace perfdom
