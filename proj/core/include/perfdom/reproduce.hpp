#pragma once

#include <string>
#include <vector>

#include "perfdom/board.hpp"
#include "perfdom/window.hpp"

namespace perfdom {

enum class EntryStatus { kMatch, kWithinBound, kNewResult, kMismatch, kInconclusive };

const char* to_string(EntryStatus status);

struct ReproduceEntry {
    std::string id;
    std::string statement;  // the claim being recomputed
    std::string computed;
    std::string expected;   // empty for new results
    EntryStatus status = EntryStatus::kInconclusive;
};

struct ReproduceReport {
    std::string scope;
    std::vector<ReproduceEntry> entries;

    bool any_mismatch() const;
    std::string to_markdown() const;
    std::string to_json() const;
};

// Recomputes the published values for the requested scope:
//   all | 2rows | 3rows | 4rows | thm5x5 | bands | zz | open-3rows
// Independent sections may run in parallel (PERFDOM_THREADS caps the worker
// count); entry order in the report is fixed regardless.
ReproduceReport run_reproduce(const std::string& scope);

// The thirteen ways to dominate the lower-left 3x3 subboard of a 5x5 corner
// with only necessary knights, up to the diagonal flip.
const std::vector<std::vector<Square>>& corner_construction_cases();

// Squares that can never hold a knight once the center knight is isolated
// (the propagation fixture for the window search).
const std::vector<Square>& isolated_knight_forbidden_squares();

// Pin sets replaying the named contradiction cases of the isolated-knight
// argument; each must come back Unsat.
struct CaseReplay {
    std::string name;
    std::vector<std::pair<Square, CellState>> pins;
};
const std::vector<CaseReplay>& isolated_knight_case_replays();

}  // namespace perfdom
