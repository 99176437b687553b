#pragma once

#include <vector>

#include "perfdom/board.hpp"

namespace perfdom {

// Per-square evidence of why a placement fails (or passes) perfect
// domination. Knight squares never appear in either list: the perfect
// condition only constrains squares outside the set.
struct DominationDiagnostic {
    std::vector<Square> undominated;                 // empty squares with 0 knight neighbors
    std::vector<std::pair<Square, int>> overdominated;  // empty squares with >= 2, with count

    bool perfect() const { return undominated.empty() && overdominated.empty(); }
};

// True iff every square not occupied by a knight has exactly one knight in
// its open neighborhood. Knight squares are unconstrained.
bool is_perfect_dominating(const Placement& p);

// True iff every square (knights included) has exactly one knight in its
// closed neighborhood. Strictly stronger than perfect domination.
bool is_efficient_dominating(const Placement& p);

// Exhaustive diagnostic, both lists sorted in column-major square order.
DominationDiagnostic diagnose(const Placement& p);

}  // namespace perfdom
