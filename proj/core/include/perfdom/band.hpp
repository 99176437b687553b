#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfdom/board.hpp"
#include "perfdom/rational.hpp"

namespace perfdom {

enum class BandSide { kTwoSided, kOneSided };

// Weighted transition graph of the column sweep over an m-row band, trimmed
// to the states that matter for the side being analyzed: for two-sided
// bands, states lying on bi-infinite walks (every node keeps a predecessor
// and a successor); for one-sided bands, states reachable from the left
// boundary that still admit an infinite future. Edge weights are the
// knights in the placed column.
struct TransitionGraph {
    int rows = 0;
    std::uint32_t exact_rows = 0;  // rows finalized under exactly-once; others at-most-once
    BandSide side = BandSide::kTwoSided;

    std::vector<std::uint32_t> states;        // packed frontier states
    std::vector<std::uint32_t> edge_offsets;  // CSR, size states.size()+1
    std::vector<std::uint32_t> edge_to;
    std::vector<std::uint8_t> edge_kc;

    std::vector<std::uint32_t> start_states;  // node indices (one-sided only)

    // Build statistics.
    std::uint64_t universe_states = 0;  // consistent states before trimming
    std::uint64_t explored_edges = 0;   // surviving transitions before trimming

    std::size_t node_count() const { return states.size(); }
    std::size_t edge_count() const { return edge_to.size(); }
};

// Builds the trimmed graph for an m-row band, 2 <= m <= 7. exact_rows marks
// the rows whose squares must end dominated exactly once when their column
// finalizes (pass all rows for plain band analysis; the boundary strip
// relaxes the upper rows to at-most-once).
TransitionGraph build_transition_graph(int rows, std::uint32_t exact_rows, BandSide side);

struct MeanCycle {
    Rational mean;                    // knights per column around the cycle
    std::vector<std::uint32_t> columns;  // knight bits of the cycle's columns
};

// Exact minimum of (total knights / length) over directed cycles of g whose
// states all satisfy `restrict` (pass nullptr for no restriction), with a
// witness cycle attaining it. Returns nullopt when the restricted graph has
// no cycle.
std::optional<MeanCycle> min_mean_cycle(const TransitionGraph& g,
                                        const std::vector<bool>* restrict_nodes = nullptr);

struct BandClassification {
    int rows = 0;
    BandSide side = BandSide::kTwoSided;
    bool nontrivial = false;

    // Set when nontrivial:
    Rational min_density;                       // knights per square, exact
    std::vector<std::uint32_t> witness_columns; // one period of column bits
    bool transient_only = false;  // nontrivial sets exist but every cycle is all-knights

    std::uint64_t universe_states = 0;
    std::uint64_t live_states = 0;
};

// Existence and minimum density of nontrivial perfect dominating sets on the
// two-sided band of m rows (2 <= m <= 7).
BandClassification classify_two_sided(int rows);

// Same for the band with a left boundary; densities are taken over cycles
// reachable from the boundary start state.
BandClassification classify_one_sided(int rows);

struct StripOutcome {
    bool all_dead = false;
    int k = 0;  // first stage with no nontrivial survivor, or k_max when alive
    std::uint64_t flagged_survivors = 0;  // survivors at k_max when alive
    std::optional<Placement> witness;     // one surviving window, columns left to right
};

// Sweeps the 5-row boundary strip of a board whose rows 1..3 hug the
// boundary: rows 1..3 of columns 1..k are held to exactly-once, everything
// else in the window (two lead-in columns, rows 4..5, the two frontier
// columns) to at-most-once. A state is flagged once any finalized window
// column contains an empty square. Stages run k = 4..k_max; AllDead(k)
// means no flagged state survives stage k, which bounds every perfect
// dominating set of such a board to all-knights on rows 1..5.
StripOutcome boundary_strip_search(int k_max);

struct InfiniteBoardEntry {
    std::string board;       // e.g. "KN(Z,Z)", "KN(Z,4)", "KN(N,N)"
    bool nontrivial = false;
    std::optional<Rational> min_density;  // absent for only-trivial entries
    bool density_is_upper_bound = false;  // density achieved; minimality open
    std::string note;
};

struct InfiniteBoardReport {
    std::vector<InfiniteBoardEntry> entries;
    int strip_all_dead_k = 0;  // first dead stage of the boundary strip
};

// Full classification of the infinite boards: the plane, two- and one-sided
// bands for 2 <= m <= 7, the quadrant and the half plane (the latter two via
// the boundary strip argument plus upward forcing).
InfiniteBoardReport classify_infinite_boards();

}  // namespace perfdom
