#include "perfdom/window.hpp"

#include <algorithm>

#include "perfdom/common.hpp"

namespace perfdom {

Window::Window(int r) : radius(r) {
    if (r < 1 || r > 24) throw InputError("window radius must be in 1..24");
    cells.assign(static_cast<std::size_t>(side()) * side(), CellState::kUnknown);
}

std::string Window::to_art() const {
    std::string out;
    for (int row = radius; row >= -radius; --row) {
        for (int col = -radius; col <= radius; ++col) {
            switch (at({col, row})) {
                case CellState::kKnight:  out += 'N'; break;
                case CellState::kEmpty:   out += '.'; break;
                case CellState::kUnknown: out += '?'; break;
            }
        }
        out += '\n';
    }
    return out;
}

namespace {

// Search engine with an undo trail. Dominator counts saturate at 2; unknown
// neighbor counts drive both the forcing rule and the branch heuristic.
class Engine {
public:
    explicit Engine(const Window& w) : win_(w) {
        const int n = win_.side();
        dom_.assign(static_cast<std::size_t>(n) * n, 0);
        unknown_nbrs_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int c = -win_.radius; c <= win_.radius; ++c) {
            for (int r = -win_.radius; r <= win_.radius; ++r) {
                Square sq{c, r};
                int dom = 0, unk = 0;
                for (Square mv : kKnightMoves) {
                    Square nb{c + mv.col, r + mv.row};
                    if (!win_.contains(nb)) continue;
                    if (win_.at(nb) == CellState::kKnight) ++dom;
                    if (win_.at(nb) == CellState::kUnknown) ++unk;
                }
                dom_[win_.index(sq)] = static_cast<std::uint8_t>(std::min(dom, 2));
                unknown_nbrs_[win_.index(sq)] = static_cast<std::uint8_t>(unk);
            }
        }
    }

    // Runs propagation from the current state; false on contradiction.
    bool propagate_all() {
        pending_.clear();
        for (int c = -win_.radius; c <= win_.radius; ++c) {
            for (int r = -win_.radius; r <= win_.radius; ++r) {
                pending_.push_back({c, r});
            }
        }
        return drain();
    }

    bool assign(Square sq, CellState v) {
        pending_.clear();  // drop queue remnants of a failed sibling branch
        if (!apply(sq, v)) return false;
        return drain();
    }

    std::size_t trail_mark() const { return trail_.size(); }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            Square sq = trail_.back();
            trail_.pop_back();
            const CellState v = win_.at(sq);
            win_.set(sq, CellState::kUnknown);
            for (Square mv : kKnightMoves) {
                Square nb{sq.col + mv.col, sq.row + mv.row};
                if (!win_.contains(nb)) continue;
                ++unknown_nbrs_[win_.index(nb)];
                if (v == CellState::kKnight && dom_[win_.index(nb)] > 0) {
                    // Saturation loses information above 2, so recount.
                    dom_[win_.index(nb)] = recount_dom(nb);
                }
            }
        }
    }

    const Window& window() const { return win_; }

    // Branch cell: the unknown neighboring the most undominated interior
    // empties; ties to the lowest cell index.
    std::optional<Square> pick_branch() const {
        int best_score = -1;
        std::optional<Square> best;
        for (int c = -win_.radius; c <= win_.radius; ++c) {
            for (int r = -win_.radius; r <= win_.radius; ++r) {
                Square sq{c, r};
                if (win_.at(sq) != CellState::kUnknown) continue;
                int score = 0;
                for (Square mv : kKnightMoves) {
                    Square nb{c + mv.col, r + mv.row};
                    if (!win_.contains(nb)) continue;
                    if (win_.at(nb) == CellState::kEmpty && win_.interior(nb) &&
                        dom_[win_.index(nb)] == 0) {
                        ++score;
                    }
                }
                if (score > best_score) {
                    best_score = score;
                    best = sq;
                }
            }
        }
        return best;
    }

private:
    std::uint8_t recount_dom(Square sq) const {
        int dom = 0;
        for (Square mv : kKnightMoves) {
            Square nb{sq.col + mv.col, sq.row + mv.row};
            if (win_.contains(nb) && win_.at(nb) == CellState::kKnight) ++dom;
        }
        return static_cast<std::uint8_t>(std::min(dom, 2));
    }

    bool apply(Square sq, CellState v) {
        const std::size_t idx = win_.index(sq);
        if (win_.cells[idx] == v) return true;
        if (win_.cells[idx] != CellState::kUnknown) return false;  // conflicting force
        win_.cells[idx] = v;
        trail_.push_back(sq);
        for (Square mv : kKnightMoves) {
            Square nb{sq.col + mv.col, sq.row + mv.row};
            if (!win_.contains(nb)) continue;
            const std::size_t nbi = win_.index(nb);
            --unknown_nbrs_[nbi];
            if (v == CellState::kKnight && dom_[nbi] < 2) ++dom_[nbi];
            pending_.push_back(nb);
        }
        pending_.push_back(sq);
        return true;
    }

    // Applies rules (a), (b), (c) until the queue empties.
    bool drain() {
        while (!pending_.empty()) {
            Square sq = pending_.back();
            pending_.pop_back();
            const std::size_t idx = win_.index(sq);
            if (win_.cells[idx] != CellState::kEmpty) continue;
            const int dom = dom_[idx];
            if (dom >= 2) return false;  // (c)
            if (dom == 1 && unknown_nbrs_[idx] > 0) {
                // (a): the single dominator is final; no neighbor may be a knight.
                for (Square mv : kKnightMoves) {
                    Square nb{sq.col + mv.col, sq.row + mv.row};
                    if (!win_.contains(nb)) continue;
                    if (win_.at(nb) == CellState::kUnknown) {
                        if (!apply(nb, CellState::kEmpty)) return false;
                    }
                }
            }
            if (dom == 0 && win_.interior(sq)) {
                if (unknown_nbrs_[idx] == 0) return false;  // (b) contradiction
                if (unknown_nbrs_[idx] == 1) {
                    // (b): the last unknown neighbor must dominate.
                    for (Square mv : kKnightMoves) {
                        Square nb{sq.col + mv.col, sq.row + mv.row};
                        if (!win_.contains(nb)) continue;
                        if (win_.at(nb) == CellState::kUnknown) {
                            if (!apply(nb, CellState::kKnight)) return false;
                            break;
                        }
                    }
                }
            }
        }
        return true;
    }

    Window win_;
    std::vector<std::uint8_t> dom_;
    std::vector<std::uint8_t> unknown_nbrs_;
    std::vector<Square> pending_;
    std::vector<Square> trail_;
};

struct SearchDriver {
    Engine engine;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    SearchDriver(const Window& w, std::uint64_t limit) : engine(w), node_limit(limit) {}

    // True when a satisfying completion exists below the current state.
    bool dfs() {
        std::optional<Square> branch = engine.pick_branch();
        if (!branch) return true;  // fully assigned and propagation-consistent
        for (CellState v : {CellState::kEmpty, CellState::kKnight}) {
            if (nodes >= node_limit) {
                out_of_budget = true;
                return false;
            }
            ++nodes;
            const std::size_t mark = engine.trail_mark();
            if (engine.assign(*branch, v)) {
                if (dfs()) return true;
                if (out_of_budget) return false;
            }
            engine.rollback(mark);
        }
        return false;
    }
};

Window pinned_window(const std::vector<std::pair<Square, CellState>>& pins, int radius) {
    Window w(radius);
    for (const auto& [sq, v] : pins) {
        if (!w.contains(sq)) {
            throw InputError("pin (" + std::to_string(sq.col) + "," + std::to_string(sq.row) +
                             ") is outside the radius-" + std::to_string(radius) + " window");
        }
        if (w.at(sq) != CellState::kUnknown && w.at(sq) != v) {
            throw InputError("conflicting pins at (" + std::to_string(sq.col) + "," +
                             std::to_string(sq.row) + ")");
        }
        w.set(sq, v);
    }
    return w;
}

}  // namespace

std::optional<Window> propagate(const Window& w) {
    Engine engine(w);
    if (!engine.propagate_all()) return std::nullopt;
    return engine.window();
}

SearchOutcome assumption_search(const std::vector<std::pair<Square, CellState>>& pins, int radius,
                                std::uint64_t node_limit) {
    Window w = pinned_window(pins, radius);

    SearchOutcome out;
    SearchDriver driver(w, node_limit);
    if (!driver.engine.propagate_all()) {
        out.verdict = Verdict::kUnsat;
        out.nodes = 0;
        return out;
    }
    const bool sat = driver.dfs();
    out.nodes = driver.nodes;
    if (driver.out_of_budget) {
        out.verdict = Verdict::kInconclusive;
    } else if (sat) {
        out.verdict = Verdict::kSat;
        out.witness = driver.engine.window();
    } else {
        out.verdict = Verdict::kUnsat;
    }
    return out;
}

SearchOutcome isolated_knight_search(int radius, std::uint64_t node_limit) {
    if (radius < 2) throw InputError("isolated-knight search needs radius >= 2");
    std::vector<std::pair<Square, CellState>> pins;
    pins.emplace_back(Square{0, 0}, CellState::kKnight);
    for (Square mv : kKnightMoves) pins.emplace_back(mv, CellState::kEmpty);
    return assumption_search(pins, radius, node_limit);
}

bool window_satisfies(const Window& w) {
    for (int c = -w.radius; c <= w.radius; ++c) {
        for (int r = -w.radius; r <= w.radius; ++r) {
            Square sq{c, r};
            if (w.at(sq) != CellState::kEmpty) continue;
            int dom = 0;
            for (Square mv : kKnightMoves) {
                Square nb{c + mv.col, r + mv.row};
                if (w.contains(nb) && w.at(nb) == CellState::kKnight) ++dom;
            }
            if (dom >= 2) return false;
            if (w.interior(sq) && dom != 1) return false;
        }
    }
    return true;
}

}  // namespace perfdom
