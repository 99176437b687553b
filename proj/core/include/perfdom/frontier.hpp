#pragma once

#include <cstdint>

namespace perfdom {

// State of the column sweep after placing some column t: knight bits of
// columns t-1 ('a') and t ('b'), plus a dominated-once bit for every empty
// square of those two columns. Any square that would pick up a second
// dominator kills the state immediately, so one bit per square suffices.
//
// Packed layout (m = row count, m <= 8):
//   bits [0,m)    ka   knights of column t-1
//   bits [m,2m)   kb   knights of column t
//   bits [2m,3m)  da   dominated bits of column t-1 (subset of ~ka)
//   bits [3m,4m)  db   dominated bits of column t   (subset of ~kb)
struct FrontierState {
    std::uint32_t packed = 0;

    static FrontierState pack(std::uint32_t ka, std::uint32_t kb, std::uint32_t da,
                              std::uint32_t db, int m) {
        return FrontierState{ka | (kb << m) | (da << (2 * m)) | (db << (3 * m))};
    }
    std::uint32_t ka(int m) const { return packed & ((1u << m) - 1); }
    std::uint32_t kb(int m) const { return (packed >> m) & ((1u << m) - 1); }
    std::uint32_t da(int m) const { return (packed >> (2 * m)) & ((1u << m) - 1); }
    std::uint32_t db(int m) const { return (packed >> (3 * m)) & ((1u << m) - 1); }

    friend bool operator==(FrontierState, FrontierState) = default;
};

inline constexpr std::uint32_t kDeadState = 0xffffffffu;

inline constexpr int kMaxFrontierRows = 8;

// Advances the frontier by one column with knight bits kc. Relative to the
// new column at position t+1, column 'a' = t-1 receives its final dominators
// (distance-2 attacks, row offset +-1), column 'b' = t receives distance-1
// attacks (row offset +-2), and the new column picks up its initial counts
// from the two columns already in the state.
//
// a_real / b_real / c_real gate every check on the respective column; a
// virtual (off-board) column has no squares to violate. For a virtual new
// column the caller must pass kc = 0. a_exact holds the rows whose squares
// must finish dominated-exactly-once when column 'a' is finalized; rows
// outside a_exact are only held to at-most-once (the death rule).
//
// Returns the packed successor or kDeadState.
inline std::uint32_t frontier_step(std::uint32_t state, std::uint32_t kc, int m,
                                   bool a_real, std::uint32_t a_exact,
                                   bool b_real, bool c_real) {
    const std::uint32_t M = (1u << m) - 1;
    const std::uint32_t ka = state & M;
    const std::uint32_t kb = (state >> m) & M;
    std::uint32_t da = (state >> (2 * m)) & M;
    std::uint32_t db = (state >> (3 * m)) & M;

    if (a_real) {
        const std::uint32_t h = ((kc << 1) | (kc >> 1)) & M;
        const std::uint32_t hh = (kc << 1) & (kc >> 1) & M;
        const std::uint32_t open_a = ~ka & M;
        if (hh & open_a) return kDeadState;
        if (h & da) return kDeadState;
        da |= h & open_a;
        if (a_exact & open_a & ~da) return kDeadState;
    }
    if (b_real) {
        const std::uint32_t g = ((kc << 2) | (kc >> 2)) & M;
        const std::uint32_t gg = (kc << 2) & (kc >> 2) & M;
        const std::uint32_t open_b = ~kb & M;
        if (gg & open_b) return kDeadState;
        if (g & db) return kDeadState;
        db |= g & open_b;
    }
    std::uint32_t dc = 0;
    if (c_real) {
        std::uint32_t ones = 0, twice = 0;
        const std::uint32_t hits[4] = {(ka << 1) & M, ka >> 1, (kb << 2) & M, kb >> 2};
        for (std::uint32_t h : hits) {
            twice |= ones & h;
            ones |= h;
        }
        const std::uint32_t open_c = ~kc & M;
        if (twice & open_c) return kDeadState;
        dc = ones & open_c;
    }
    return kb | (kc << m) | (db << (2 * m)) | (dc << (3 * m));
}

// Ordering on single-column knight bit patterns induced by the placement
// order: at the lowest row where the two columns differ, the column holding
// a knight there comes first.
inline bool column_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t d = a ^ b;
    if (!d) return false;
    std::uint32_t low = d & (~d + 1);
    return (a & low) != 0;
}

}  // namespace perfdom
