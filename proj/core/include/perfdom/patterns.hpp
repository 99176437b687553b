#pragma once

#include <vector>

#include "perfdom/board.hpp"
#include "perfdom/rational.hpp"

namespace perfdom {

// A lattice-periodic knight placement: two independent period vectors on the
// unbounded plane, or a single horizontal period on a band of `rows` rows
// (rows == 0 means the full plane). Offsets are knight squares of one
// fundamental domain; any square congruent to an offset modulo the lattice
// is a knight.
struct PeriodicPattern {
    std::vector<Square> periods;
    std::vector<Square> offsets;
    int rows = 0;

    Rational density() const;
};

// True iff the given square is a knight in the extended pattern.
bool periodic_is_knight(const PeriodicPattern& p, Square sq);

// Exact check of the perfect domination condition over every residue class
// of the fundamental domain (and every band row): each non-knight class must
// see exactly one knight among its eight neighbors. Degenerate lattices
// raise InputError.
bool verify_periodic(const PeriodicPattern& p);

// Minimum 2-row perfect dominating set: the knights graph on two rows splits
// into four paths, each solved by the spacing pattern pinned here.
Placement construct_2rows(int n);

// 3-row constructions for n mod 8 in {0,4,5,6,7}: a residue-specific prefix
// block followed by copies of the shared 8-column, 10-knight tile. The open
// residues 1,2,3 (mod 8) are rejected.
Placement construct_3rows(int n);

// 4-row period-4 pattern (even n only): columns 1,0 (mod 4) hold knights in
// rows {1,3}, columns 2,3 (mod 4) in rows {2,4}; 2n knights total.
Placement construct_4rows(int n);

// The density-1/8 plane pattern: horizontally adjacent knight pairs on the
// lattice spanned by (2,-2) and (3,5), two knights per 16-square domain.
PeriodicPattern construct_zz_pattern();

// Wraps one period of column bit-vectors (bit r-1 = row r) into a band
// pattern of the given height.
PeriodicPattern band_pattern_from_cycle(const std::vector<std::uint32_t>& columns, int rows);

}  // namespace perfdom
