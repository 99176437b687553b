#include "perfdom/patterns.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>

#include "perfdom/common.hpp"

namespace perfdom {

namespace {

std::int64_t lattice_det(const PeriodicPattern& p) {
    const Square u = p.periods[0];
    const Square v = p.periods[1];
    return static_cast<std::int64_t>(u.col) * v.row - static_cast<std::int64_t>(u.row) * v.col;
}

// Residue key modulo the plane lattice: adj(M) * x mod |det|, where M has the
// period vectors as columns. Distinct keys <=> distinct residue classes.
struct PlaneLattice {
    std::int64_t a11, a12, a21, a22;  // adjugate rows
    std::int64_t d;                   // |det|

    explicit PlaneLattice(const PeriodicPattern& p) {
        const Square u = p.periods[0];
        const Square v = p.periods[1];
        const std::int64_t det = lattice_det(p);
        if (det == 0) throw InputError("period vectors are linearly dependent");
        a11 = v.row;
        a12 = -v.col;
        a21 = -u.row;
        a22 = u.col;
        d = det < 0 ? -det : det;
        if (det < 0) {
            a11 = -a11; a12 = -a12; a21 = -a21; a22 = -a22;
        }
    }

    std::pair<std::int64_t, std::int64_t> key(Square sq) const {
        auto mod = [this](std::int64_t x) { return ((x % d) + d) % d; };
        return {mod(a11 * sq.col + a12 * sq.row), mod(a21 * sq.col + a22 * sq.row)};
    }
};

int band_period(const PeriodicPattern& p) {
    if (p.periods.size() != 1) throw InputError("band pattern needs exactly one period vector");
    const Square u = p.periods[0];
    if (u.row != 0 || u.col == 0) {
        throw InputError("band period must be horizontal and nonzero");
    }
    return std::abs(u.col);
}

bool verify_periodic_plane(const PeriodicPattern& p) {
    PlaneLattice lat(p);
    if (lat.d > 4096) throw ResourceError("fundamental domain too large to verify");

    std::set<std::pair<std::int64_t, std::int64_t>> knight_keys;
    for (Square off : p.offsets) {
        if (!knight_keys.insert(lat.key(off)).second) {
            throw InputError("two offsets fall in the same residue class");
        }
    }

    auto is_knight = [&](Square sq) { return knight_keys.count(lat.key(sq)) > 0; };

    // One representative per residue class.
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (int x = 0; x < lat.d && static_cast<std::int64_t>(seen.size()) < lat.d; ++x) {
        for (int y = 0; y < lat.d && static_cast<std::int64_t>(seen.size()) < lat.d; ++y) {
            Square rep{x, y};
            if (!seen.insert(lat.key(rep)).second) continue;
            if (is_knight(rep)) continue;
            int count = 0;
            for (Square mv : kKnightMoves) {
                if (is_knight({rep.col + mv.col, rep.row + mv.row})) ++count;
            }
            if (count != 1) return false;
        }
    }
    return true;
}

bool verify_periodic_band(const PeriodicPattern& p) {
    const int period = band_period(p);
    const int m = p.rows;
    if (m < 1) throw InputError("band pattern needs a positive row count");

    std::set<std::pair<int, int>> knights;
    for (Square off : p.offsets) {
        if (off.row < 1 || off.row > m) throw InputError("band offset row out of range");
        knights.insert({((off.col % period) + period) % period, off.row});
    }
    auto is_knight = [&](Square sq) {
        if (sq.row < 1 || sq.row > m) return false;
        return knights.count({((sq.col % period) + period) % period, sq.row}) > 0;
    };

    for (int c = 0; c < period; ++c) {
        for (int r = 1; r <= m; ++r) {
            if (is_knight({c, r})) continue;
            int count = 0;
            for (Square mv : kKnightMoves) {
                if (is_knight({c + mv.col, r + mv.row})) ++count;
            }
            if (count != 1) return false;
        }
    }
    return true;
}

}  // namespace

Rational PeriodicPattern::density() const {
    if (periods.size() == 2) {
        const std::int64_t det = static_cast<std::int64_t>(periods[0].col) * periods[1].row -
                                 static_cast<std::int64_t>(periods[0].row) * periods[1].col;
        if (det == 0) throw InputError("period vectors are linearly dependent");
        return Rational(static_cast<std::int64_t>(offsets.size()), det < 0 ? -det : det);
    }
    const int period = band_period(*this);
    if (rows < 1) throw InputError("band pattern needs a positive row count");
    return Rational(static_cast<std::int64_t>(offsets.size()),
                    static_cast<std::int64_t>(period) * rows);
}

bool periodic_is_knight(const PeriodicPattern& p, Square sq) {
    if (p.periods.size() == 2) {
        PlaneLattice lat(p);
        auto k = lat.key(sq);
        for (Square off : p.offsets) {
            if (lat.key(off) == k) return true;
        }
        return false;
    }
    const int period = band_period(p);
    if (sq.row < 1 || sq.row > p.rows) return false;
    const int c = ((sq.col % period) + period) % period;
    for (Square off : p.offsets) {
        if (((off.col % period) + period) % period == c && off.row == sq.row) return true;
    }
    return false;
}

bool verify_periodic(const PeriodicPattern& p) {
    if (p.periods.size() == 2) return verify_periodic_plane(p);
    if (p.periods.size() == 1) return verify_periodic_band(p);
    throw InputError("pattern needs one (band) or two (plane) period vectors");
}

Placement construct_2rows(int n) {
    if (n < 1) throw InputError("n must be positive");
    Placement p(BoardDims(n, 2));

    // The 2-row knights graph splits into four paths, one per (column parity,
    // starting row). Path position i sits in column start + 2(i-1), rows
    // alternating. Knights go at positions 2, 5, ..., 3t-1 plus a remainder
    // fix-up: position 3t for length 3t+1 (position 1 when the path is a
    // single vertex), position 3t+2 for length 3t+2.
    for (int start = 1; start <= 2 && start <= n; ++start) {
        const int length = (n - start) / 2 + 1;
        const int t = length / 3;
        const int rem = length % 3;
        std::vector<int> picks;
        for (int j = 0; j < t; ++j) picks.push_back(3 * j + 2);
        if (rem == 1) picks.push_back(t == 0 ? 1 : 3 * t);
        if (rem == 2) picks.push_back(3 * t + 2);
        for (int first_row = 1; first_row <= 2; ++first_row) {
            for (int i : picks) {
                const int col = start + 2 * (i - 1);
                const int row = (i % 2 == 1) ? first_row : 3 - first_row;
                p.add({col, row});
            }
        }
    }
    return p;
}

Placement construct_3rows(int n) {
    static const std::vector<Square> kTile = {
        {1, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {5, 2}, {5, 3}, {6, 1}, {7, 1}, {7, 3}};
    static const std::map<int, std::vector<Square>> kPrefix = {
        {0, {}},
        {4, {{1, 3}, {2, 2}, {2, 3}, {3, 1}, {4, 1}, {4, 3}}},
        {5, {{1, 3}, {2, 2}, {2, 3}, {3, 1}, {4, 1}, {4, 3}}},
        {6, {{1, 1}, {2, 3}, {3, 2}, {3, 3}, {4, 1}, {5, 1}, {5, 3}}},
        {7, {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {4, 2}, {4, 3}, {5, 1}, {6, 1}, {6, 3}}},
    };
    // Tiles sit one column past the prefix for the 4-column prefix, flush for
    // the others; either way the repeating block starts at prefix_shift.
    static const std::map<int, int> kTileShift = {{0, 0}, {4, 5}, {5, 5}, {6, 6}, {7, 7}};

    if (n < 4) throw InputError("3-row constructions need n >= 4");
    const int r = n % 8;
    if (r == 1 || r == 2 || r == 3) {
        throw InputError("no 3-row construction is known for n = " + std::to_string(n) +
                         " (columns congruent to 1, 2 or 3 mod 8 are open)");
    }
    const int k = (n - r) / 8;

    Placement p(BoardDims(n, 3));
    for (Square sq : kPrefix.at(r)) p.add(sq);
    const int shift = kTileShift.at(r);
    for (int b = 0; b < k; ++b) {
        for (Square sq : kTile) p.add({sq.col + shift + 8 * b, sq.row});
    }
    return p;
}

Placement construct_4rows(int n) {
    if (n < 4) throw InputError("4-row pattern needs n >= 4");
    if (n % 2 != 0) {
        throw InputError("the 4-row period-4 pattern only perfectly dominates even n");
    }
    Placement p(BoardDims(n, 4));
    for (int c = 1; c <= n; ++c) {
        const int phase = c % 4;
        if (phase == 0 || phase == 1) {
            p.add({c, 1});
            p.add({c, 3});
        } else {
            p.add({c, 2});
            p.add({c, 4});
        }
    }
    return p;
}

PeriodicPattern construct_zz_pattern() {
    PeriodicPattern p;
    p.periods = {{2, -2}, {3, 5}};
    p.offsets = {{0, 0}, {1, 0}};
    p.rows = 0;
    return p;
}

PeriodicPattern band_pattern_from_cycle(const std::vector<std::uint32_t>& columns, int rows) {
    if (columns.empty()) throw InputError("cycle must have at least one column");
    PeriodicPattern p;
    p.rows = rows;
    p.periods = {{static_cast<int>(columns.size()), 0}};
    for (int c = 0; c < static_cast<int>(columns.size()); ++c) {
        for (int r = 1; r <= rows; ++r) {
            if ((columns[static_cast<std::size_t>(c)] >> (r - 1)) & 1u) p.offsets.push_back({c, r});
        }
    }
    return p;
}

}  // namespace perfdom
