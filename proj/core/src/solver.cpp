#include "perfdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "perfdom/frontier.hpp"

namespace perfdom {

namespace {

constexpr std::uint32_t kNoParent = 0xffffffffu;

Placement transpose(const Placement& p) {
    Placement out(BoardDims(p.dims().rows, p.dims().cols));
    for (Square sq : p.knights()) out.add({sq.row, sq.col});
    return out;
}

ConstraintGrid transpose(const ConstraintGrid& grid) {
    ConstraintGrid out(BoardDims(grid.dims.rows, grid.dims.cols));
    for (int c = 1; c <= grid.dims.cols; ++c)
        for (int r = 1; r <= grid.dims.rows; ++r)
            out.at({r, c}) = grid.at({c, r});
    return out;
}

// Per-square knight attack masks over the column-major bit indexing, for
// boards small enough to fit one machine word.
std::vector<std::uint32_t> attack_masks(BoardDims dims) {
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(dims.area()), 0);
    Placement indexer(dims);
    for (int c = 1; c <= dims.cols; ++c) {
        for (int r = 1; r <= dims.rows; ++r) {
            Square sq{c, r};
            std::uint32_t m = 0;
            for (Square nb : knight_neighbors(dims, sq)) {
                m |= std::uint32_t{1} << indexer.bit_index(nb);
            }
            masks[static_cast<std::size_t>(indexer.bit_index(sq))] = m;
        }
    }
    return masks;
}

bool perfect_on_mask(std::uint32_t set, int nm, const std::vector<std::uint32_t>& nbr) {
    for (int v = 0; v < nm; ++v) {
        if ((set >> v) & 1u) continue;
        if (std::popcount(nbr[static_cast<std::size_t>(v)] & set) != 1) return false;
    }
    return true;
}

Placement placement_from_mask(BoardDims dims, std::uint32_t mask) {
    Placement p(dims);
    for (int v = 0; v < dims.area(); ++v) {
        if ((mask >> v) & 1u) p.add(p.square_at(v));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Profile DP over columns. Layers are kept for witness reconstruction; each
// entry remembers the best (count, prefix) path into its state, where
// prefixes are ordered through dense per-layer ranks so comparisons stay O(1).

struct DpEntry {
    std::uint32_t state;
    std::uint32_t parent;       // index into the previous layer
    std::uint32_t count;        // knights placed so far
    std::uint32_t parent_rank;  // rank of the parent's prefix
    std::uint32_t rank;         // rank of this entry's prefix, set after the layer closes
    std::uint8_t kc;            // column bits placed by the step into this entry
};

struct DpRun {
    std::vector<std::vector<DpEntry>> layers;  // layers[0] = virtual start
    int n = 0;
    int m = 0;
};

struct ColumnChoices {
    std::uint32_t forced = 0;
    std::uint32_t blocked = 0;
};

ColumnChoices column_choices(const ConstraintGrid* grid, int col, int m) {
    ColumnChoices ch;
    if (!grid) return ch;
    for (int r = 1; r <= m; ++r) {
        switch (grid->at({col, r})) {
            case CellConstraint::kMustBeKnight: ch.forced |= 1u << (r - 1); break;
            case CellConstraint::kMustBeEmpty:  ch.blocked |= 1u << (r - 1); break;
            case CellConstraint::kFree: break;
        }
    }
    return ch;
}

// Runs the sweep over columns 1..n plus two closing virtual columns. The
// final layer's entries are exactly the accepting states.
DpRun run_min_dp(BoardDims dims, const ConstraintGrid* constraints) {
    const int n = dims.cols;
    const int m = dims.rows;
    const std::uint32_t M = (1u << m) - 1;

    DpRun run;
    run.n = n;
    run.m = m;
    run.layers.resize(static_cast<std::size_t>(n) + 3);
    run.layers[0].push_back(DpEntry{0, kNoParent, 0, 0, 0, 0});

    std::unordered_map<std::uint32_t, std::uint32_t> index;
    std::vector<std::uint32_t> order;

    for (int pos = 1; pos <= n + 2; ++pos) {
        const bool a_real = pos >= 3;
        const bool b_real = pos >= 2 && pos - 1 <= n;
        const bool c_real = pos <= n;
        const std::vector<DpEntry>& prev = run.layers[static_cast<std::size_t>(pos) - 1];
        std::vector<DpEntry>& cur = run.layers[static_cast<std::size_t>(pos)];
        index.clear();

        ColumnChoices ch = c_real ? column_choices(constraints, pos, m) : ColumnChoices{};
        const std::uint32_t free_mask = c_real ? (M & ~ch.forced & ~ch.blocked) : 0;

        for (std::uint32_t pi = 0; pi < prev.size(); ++pi) {
            const DpEntry& pe = prev[pi];
            std::uint32_t sub = 0;
            while (true) {
                const std::uint32_t kc = c_real ? (ch.forced | sub) : 0;
                std::uint32_t ns = frontier_step(pe.state, kc, m, a_real, a_real ? M : 0,
                                                 b_real, c_real);
                if (ns != kDeadState) {
                    const std::uint32_t cnt =
                        pe.count + static_cast<std::uint32_t>(std::popcount(kc));
                    auto it = index.find(ns);
                    if (it == index.end()) {
                        index.emplace(ns, static_cast<std::uint32_t>(cur.size()));
                        cur.push_back(DpEntry{ns, pi, cnt, pe.rank, 0,
                                              static_cast<std::uint8_t>(kc)});
                    } else {
                        DpEntry& e = cur[it->second];
                        const bool better =
                            cnt < e.count ||
                            (cnt == e.count &&
                             (pe.rank < e.parent_rank ||
                              (pe.rank == e.parent_rank && column_less(kc, e.kc))));
                        if (better) {
                            e.parent = pi;
                            e.count = cnt;
                            e.parent_rank = pe.rank;
                            e.kc = static_cast<std::uint8_t>(kc);
                        }
                    }
                }
                if (!c_real || sub == free_mask) break;
                sub = (sub - free_mask) & free_mask;
            }
        }

        // Dense prefix ranks: prefix(e) = prefix(parent) ++ kc, so ordering by
        // (parent_rank, kc) orders the prefixes themselves.
        order.resize(cur.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&cur](std::uint32_t x, std::uint32_t y) {
            const DpEntry& a = cur[x];
            const DpEntry& b = cur[y];
            if (a.parent_rank != b.parent_rank) return a.parent_rank < b.parent_rank;
            return column_less(a.kc, b.kc);
        });
        for (std::uint32_t i = 0; i < order.size(); ++i) cur[order[i]].rank = i;
    }
    return run;
}

Placement reconstruct(const DpRun& run, BoardDims dims, std::size_t final_index) {
    Placement p(dims);
    std::size_t layer = run.layers.size() - 1;
    std::uint32_t idx = static_cast<std::uint32_t>(final_index);
    while (layer > 0) {
        const DpEntry& e = run.layers[layer][idx];
        const int col = static_cast<int>(layer);
        if (col <= run.n) {
            for (int r = 1; r <= run.m; ++r) {
                if ((e.kc >> (r - 1)) & 1u) p.add({col, r});
            }
        }
        idx = e.parent;
        --layer;
    }
    return p;
}

// Finds the accepting entry minimizing (count, prefix order).
std::optional<std::size_t> best_accepting(const DpRun& run) {
    const std::vector<DpEntry>& last = run.layers.back();
    if (last.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t i = 1; i < last.size(); ++i) {
        if (last[i].count < last[best].count ||
            (last[i].count == last[best].count && last[i].rank < last[best].rank)) {
            best = i;
        }
    }
    return best;
}

BoardDims oriented(BoardDims dims, bool& transposed) {
    transposed = dims.rows > dims.cols;
    BoardDims d = transposed ? BoardDims(dims.rows, dims.cols) : dims;
    if (d.rows > kMaxFrontierRows) {
        throw ResourceError("profile DP supports at most " +
                            std::to_string(kMaxFrontierRows) +
                            " rows after transposing; got " + std::to_string(dims.cols) + "x" +
                            std::to_string(dims.rows));
    }
    return d;
}

}  // namespace

SolveResult brute_force_gamma_p(BoardDims dims) {
    if (dims.area() > 24) {
        throw ResourceError("brute force oracle is limited to boards of at most 24 squares");
    }
    const int nm = dims.area();
    const std::vector<std::uint32_t> nbr = attack_masks(dims);

    for (int k = 0; k <= nm; ++k) {
        std::vector<int> comb(static_cast<std::size_t>(k));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::uint32_t mask = 0;
            for (int v : comb) mask |= std::uint32_t{1} << v;
            if (perfect_on_mask(mask, nm, nbr)) {
                SolveResult res;
                res.dims = dims;
                res.gamma_p = k;
                res.witness = placement_from_mask(dims, mask);
                res.only_trivial = (k == nm);
                return res;
            }
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == nm - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    // Unreachable: the full board is always perfect dominating.
    throw std::logic_error("no perfect dominating set found");
}

SolveResult solve_gamma_p(BoardDims dims) {
    bool transposed = false;
    const BoardDims d = oriented(dims, transposed);

    DpRun run = run_min_dp(d, nullptr);
    std::optional<std::size_t> best = best_accepting(run);
    // The full board is always accepted, so the final layer cannot be empty.
    SolveResult res;
    res.dims = dims;
    res.gamma_p = static_cast<int>(run.layers.back()[*best].count);
    Placement w = reconstruct(run, d, *best);
    // The sweep already yields the least minimum witness in its own
    // orientation; canonicalizing keeps the reported witness orientation-
    // independent when the board was transposed.
    res.witness = canonicalize(transposed ? transpose(w) : w);
    res.only_trivial = (res.gamma_p == dims.area());
    return res;
}

std::vector<Placement> enumerate_pds(BoardDims dims, int max_size, bool up_to_symmetry,
                                     std::size_t result_cap) {
    if (max_size < 0) throw InputError("max_size must be nonnegative");
    bool transposed = false;
    const BoardDims d = oriented(dims, transposed);
    const int n = d.cols;
    const int m = d.rows;
    const std::uint32_t M = (1u << m) - 1;

    struct Node {
        std::uint32_t state;
        std::uint32_t min_count;
        std::vector<std::pair<std::uint32_t, std::uint8_t>> in_edges;  // (parent, kc)
    };
    std::vector<std::vector<Node>> layers(static_cast<std::size_t>(n) + 3);
    layers[0].push_back(Node{0, 0, {}});

    std::unordered_map<std::uint32_t, std::uint32_t> index;
    for (int pos = 1; pos <= n + 2; ++pos) {
        const bool a_real = pos >= 3;
        const bool b_real = pos >= 2 && pos - 1 <= n;
        const bool c_real = pos <= n;
        const auto& prev = layers[static_cast<std::size_t>(pos) - 1];
        auto& cur = layers[static_cast<std::size_t>(pos)];
        index.clear();

        for (std::uint32_t pi = 0; pi < prev.size(); ++pi) {
            const std::uint32_t kc_limit = c_real ? M : 0;
            for (std::uint32_t kc = 0;; ++kc) {
                std::uint32_t ns = frontier_step(prev[pi].state, kc, m, a_real,
                                                 a_real ? M : 0, b_real, c_real);
                if (ns != kDeadState) {
                    const std::uint32_t cnt =
                        prev[pi].min_count + static_cast<std::uint32_t>(std::popcount(kc));
                    if (cnt <= static_cast<std::uint32_t>(max_size)) {
                        auto it = index.find(ns);
                        if (it == index.end()) {
                            index.emplace(ns, static_cast<std::uint32_t>(cur.size()));
                            cur.push_back(Node{ns, cnt, {}});
                            it = index.find(ns);
                        }
                        Node& node = cur[it->second];
                        node.min_count = std::min(node.min_count, cnt);
                        node.in_edges.emplace_back(pi, static_cast<std::uint8_t>(kc));
                    }
                }
                if (kc == kc_limit) break;
            }
        }
    }

    // Walk every accepted path within budget, rebuilding column sequences.
    std::vector<Placement> results;
    std::vector<std::uint8_t> cols(static_cast<std::size_t>(n) + 3, 0);

    struct Frame {
        std::size_t layer;
        std::uint32_t node;
        std::uint32_t suffix;
        std::size_t edge = 0;
    };
    const std::size_t last = layers.size() - 1;
    for (std::uint32_t ai = 0; ai < layers[last].size(); ++ai) {
        std::vector<Frame> stack;
        stack.push_back(Frame{last, ai, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.layer == 0) {
                Placement p(d);
                for (int c = 1; c <= n; ++c) {
                    for (int r = 1; r <= m; ++r) {
                        if ((cols[static_cast<std::size_t>(c)] >> (r - 1)) & 1u) p.add({c, r});
                    }
                }
                if (results.size() >= result_cap) {
                    throw ResourceError("enumeration exceeded the result cap");
                }
                results.push_back(transposed ? transpose(p) : p);
                stack.pop_back();
                continue;
            }
            const Node& node = layers[f.layer][f.node];
            if (f.edge >= node.in_edges.size()) {
                stack.pop_back();
                continue;
            }
            auto [parent, kc] = node.in_edges[f.edge++];
            const std::uint32_t add = static_cast<std::uint32_t>(std::popcount(kc));
            const std::uint32_t need = f.suffix + add;
            if (layers[f.layer - 1][parent].min_count + need >
                static_cast<std::uint32_t>(max_size)) {
                continue;
            }
            cols[f.layer] = kc;
            stack.push_back(Frame{f.layer - 1, parent, need});
        }
    }

    if (up_to_symmetry) {
        for (Placement& p : results) p = canonicalize(p);
    }
    std::sort(results.begin(), results.end(),
              [](const Placement& a, const Placement& b) { return Placement::lex_less(a, b); });
    results.erase(std::unique(results.begin(), results.end()), results.end());
    return results;
}

void apply_pins(ConstraintGrid& grid,
                const std::vector<std::pair<Square, CellConstraint>>& pins) {
    for (const auto& [sq, value] : pins) {
        if (!grid.dims.contains(sq)) {
            throw InputError("pin (" + std::to_string(sq.col) + "," + std::to_string(sq.row) +
                             ") is outside the board");
        }
        CellConstraint& cell = grid.at(sq);
        if (cell != CellConstraint::kFree && value != CellConstraint::kFree && cell != value) {
            throw InputError("contradictory constraints at (" + std::to_string(sq.col) + "," +
                             std::to_string(sq.row) + "): must-be-knight and must-be-empty");
        }
        if (value != CellConstraint::kFree) cell = value;
    }
}

std::optional<Placement> complete_partial(const ConstraintGrid& grid) {
    if (grid.cells.size() != static_cast<std::size_t>(grid.dims.area())) {
        throw InputError("constraint grid does not match its dimensions");
    }
    bool transposed = grid.dims.rows > grid.dims.cols;
    ConstraintGrid g = transposed ? transpose(grid) : grid;
    bool dummy = false;
    const BoardDims d = oriented(g.dims, dummy);

    DpRun run = run_min_dp(d, &g);
    std::optional<std::size_t> best = best_accepting(run);
    if (!best) return std::nullopt;
    const int gamma = static_cast<int>(run.layers.back()[*best].count);
    if (gamma == d.area()) return std::nullopt;  // only the full board completes
    Placement w = reconstruct(run, d, *best);
    return transposed ? transpose(w) : w;
}

std::vector<Placement> enumerate_minimal_subboard_dominators(BoardDims dims, SubboardRect sub) {
    if (sub.col_lo < 1 || sub.row_lo < 1 || sub.col_hi > dims.cols || sub.row_hi > dims.rows ||
        sub.col_lo > sub.col_hi || sub.row_lo > sub.row_hi) {
        throw InputError("subboard rectangle is not within the board");
    }
    if (dims.area() > 25) {
        throw ResourceError("subboard dominator enumeration is limited to 25 squares");
    }
    const int nm = dims.area();
    const std::vector<std::uint32_t> nbr = attack_masks(dims);
    Placement indexer(dims);

    std::uint32_t sub_mask = 0;
    for (int c = sub.col_lo; c <= sub.col_hi; ++c)
        for (int r = sub.row_lo; r <= sub.row_hi; ++r)
            sub_mask |= std::uint32_t{1} << indexer.bit_index({c, r});

    // Only squares that can affect the subboard's domination may hold a
    // knight: subboard squares (a knight there excuses itself) and squares
    // attacking the subboard.
    std::uint32_t allow = sub_mask;
    for (int v = 0; v < nm; ++v) {
        if (nbr[static_cast<std::size_t>(v)] & sub_mask) allow |= std::uint32_t{1} << v;
    }

    auto valid = [&](std::uint32_t set) {
        for (int v = 0; v < nm; ++v) {
            if ((set >> v) & 1u) continue;
            const int cnt = std::popcount(nbr[static_cast<std::size_t>(v)] & set);
            if (cnt >= 2) return false;
            if (((sub_mask >> v) & 1u) && cnt != 1) return false;
        }
        return true;
    };

    // A set only counts if every knight is there out of necessity, the way
    // the forced-completion case analysis builds them: start from knights
    // that dominate some empty subboard square (isolated subboard squares
    // must hold their own knight), then close under forcing — a square whose
    // emptiness would already pick up two dominators from justified knights
    // has to be a knight itself. Mutually self-excusing clusters that no
    // such construction reaches are rejected.
    auto justified = [&](std::uint32_t set) {
        std::uint32_t j = 0;
        for (int v = 0; v < nm; ++v) {
            if (!((set >> v) & 1u)) continue;
            const std::uint32_t bit = std::uint32_t{1} << v;
            if ((nbr[static_cast<std::size_t>(v)] & sub_mask & ~set) != 0) {
                j |= bit;  // dominates an empty subboard square
            } else if ((sub_mask & bit) && nbr[static_cast<std::size_t>(v)] == 0) {
                j |= bit;  // isolated subboard square
            }
        }
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v = 0; v < nm; ++v) {
                const std::uint32_t bit = std::uint32_t{1} << v;
                if (!(set & bit) || (j & bit)) continue;
                if (std::popcount(nbr[static_cast<std::size_t>(v)] & j) >= 2) {
                    j |= bit;
                    grew = true;
                }
            }
        }
        return j == set;
    };

    std::vector<std::uint32_t> minimal;
    std::uint32_t s = 0;
    while (true) {
        if (valid(s)) {
            bool is_minimal = true;
            std::uint32_t knights = s;
            while (knights) {
                const std::uint32_t low = knights & (~knights + 1);
                if (valid(s & ~low)) {
                    is_minimal = false;
                    break;
                }
                knights &= knights - 1;
            }
            if (is_minimal && justified(s)) minimal.push_back(s);
        }
        if (s == allow) break;
        s = (s - allow) & allow;
    }

    // Deduplicate under the board symmetries that map the subboard to itself.
    std::vector<Symmetry> fixers;
    for (Symmetry g : symmetry_group(dims)) {
        Square lo = apply_symmetry(g, dims, {sub.col_lo, sub.row_lo});
        Square hi = apply_symmetry(g, dims, {sub.col_hi, sub.row_hi});
        SubboardRect img{std::min(lo.col, hi.col), std::min(lo.row, hi.row),
                         std::max(lo.col, hi.col), std::max(lo.row, hi.row)};
        if (img.col_lo == sub.col_lo && img.row_lo == sub.row_lo &&
            img.col_hi == sub.col_hi && img.row_hi == sub.row_hi) {
            fixers.push_back(g);
        }
    }

    std::vector<Placement> reps;
    for (std::uint32_t mask : minimal) {
        Placement p = placement_from_mask(dims, mask);
        Placement best = p;
        for (Symmetry g : fixers) {
            Placement img = apply_symmetry(g, p);
            if (Placement::lex_less(img, best)) best = img;
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end(),
              [](const Placement& a, const Placement& b) { return Placement::lex_less(a, b); });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

}  // namespace perfdom
