#include "perfdom/verifier.hpp"

namespace perfdom {

namespace {

int knight_neighbor_count(const Placement& p, Square sq) {
    int count = 0;
    for (Square d : kKnightMoves) {
        Square t{sq.col + d.col, sq.row + d.row};
        if (p.dims().contains(t) && p.has(t)) ++count;
    }
    return count;
}

}  // namespace

bool is_perfect_dominating(const Placement& p) {
    const BoardDims dims = p.dims();
    for (int c = 1; c <= dims.cols; ++c) {
        for (int r = 1; r <= dims.rows; ++r) {
            Square sq{c, r};
            if (p.has(sq)) continue;
            if (knight_neighbor_count(p, sq) != 1) return false;
        }
    }
    return true;
}

bool is_efficient_dominating(const Placement& p) {
    const BoardDims dims = p.dims();
    for (int c = 1; c <= dims.cols; ++c) {
        for (int r = 1; r <= dims.rows; ++r) {
            Square sq{c, r};
            int closed = knight_neighbor_count(p, sq) + (p.has(sq) ? 1 : 0);
            if (closed != 1) return false;
        }
    }
    return true;
}

DominationDiagnostic diagnose(const Placement& p) {
    DominationDiagnostic diag;
    const BoardDims dims = p.dims();
    for (int c = 1; c <= dims.cols; ++c) {
        for (int r = 1; r <= dims.rows; ++r) {
            Square sq{c, r};
            if (p.has(sq)) continue;
            int count = knight_neighbor_count(p, sq);
            if (count == 0) diag.undominated.push_back(sq);
            if (count >= 2) diag.overdominated.emplace_back(sq, count);
        }
    }
    return diag;
}

}  // namespace perfdom
