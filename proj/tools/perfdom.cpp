// perfdom - exact perfect domination on knights graphs: finite solver,
// enumerator, verifier, infinite-board classifier and reproduction harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "perfdom/band.hpp"
#include "perfdom/common.hpp"
#include "perfdom/patterns.hpp"
#include "perfdom/reproduce.hpp"
#include "perfdom/solver.hpp"
#include "perfdom/verifier.hpp"
#include "perfdom/window.hpp"

namespace {

using nlohmann::json;
using namespace perfdom;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Placement parse_placement(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') continue;
        if (ch == '{') return placement_from_json(text);
        break;
    }
    return placement_from_text(text);
}

json placement_json(const Placement& p) {
    json j;
    j["cols"] = p.dims().cols;
    j["rows"] = p.dims().rows;
    json knights = json::array();
    for (Square sq : p.knights()) knights.push_back({sq.col, sq.row});
    j["knights"] = std::move(knights);
    return j;
}

json columns_json(const std::vector<std::uint32_t>& columns, int rows) {
    json out = json::array();
    for (std::uint32_t bits : columns) {
        json col = json::array();
        for (int r = 1; r <= rows; ++r) {
            if ((bits >> (r - 1)) & 1u) col.push_back(r);
        }
        out.push_back(std::move(col));
    }
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kUnsat: return "unsat";
        case Verdict::kSat: return "sat";
        case Verdict::kInconclusive: return "inconclusive";
    }
    return "?";
}

int cmd_solve(int n, int m, bool use_json, bool brute) {
    SolveResult r = brute ? brute_force_gamma_p(BoardDims(n, m)) : solve_gamma_p(BoardDims(n, m));
    if (use_json) {
        json j;
        j["format_version"] = 1;
        j["cols"] = n;
        j["rows"] = m;
        j["gamma_p"] = r.gamma_p;
        j["only_trivial"] = r.only_trivial;
        j["witness"] = placement_json(r.witness);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "gamma_p(KN(" << n << "," << m << ")) = " << r.gamma_p
                  << (r.only_trivial ? "  (only the trivial all-knights set)" : "") << "\n"
                  << to_grid_art(r.witness);
    }
    return 0;
}

int cmd_verify(const std::string& file, bool use_json) {
    Placement p = parse_placement(read_input(file));
    DominationDiagnostic diag = diagnose(p);
    const bool perfect = is_perfect_dominating(p);
    const bool efficient = is_efficient_dominating(p);
    if (use_json) {
        json j;
        j["format_version"] = 1;
        j["perfect"] = perfect;
        j["efficient"] = efficient;
        json und = json::array();
        for (Square sq : diag.undominated) und.push_back({sq.col, sq.row});
        json over = json::array();
        for (auto& [sq, count] : diag.overdominated) over.push_back({sq.col, sq.row, count});
        j["undominated"] = std::move(und);
        j["overdominated"] = std::move(over);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "perfect: " << (perfect ? "true" : "false") << "\n"
                  << "efficient: " << (efficient ? "true" : "false") << "\n";
        if (!diag.undominated.empty()) {
            std::cout << "undominated:";
            for (Square sq : diag.undominated) {
                std::cout << " (" << sq.col << "," << sq.row << ")";
            }
            std::cout << "\n";
        }
        if (!diag.overdominated.empty()) {
            std::cout << "overdominated:";
            for (auto& [sq, count] : diag.overdominated) {
                std::cout << " (" << sq.col << "," << sq.row << ")x" << count;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_enumerate(int n, int m, int max_size, bool canonical, bool use_json) {
    std::vector<Placement> all = enumerate_pds(BoardDims(n, m), max_size, canonical);
    if (use_json) {
        json j;
        j["format_version"] = 1;
        j["count"] = all.size();
        json list = json::array();
        for (const Placement& p : all) list.push_back(placement_json(p));
        j["placements"] = std::move(list);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << all.size() << " placement(s)\n";
        for (const Placement& p : all) std::cout << "\n" << to_grid_art(p);
    }
    return 0;
}

int cmd_complete(const std::string& file, bool use_json) {
    ConstraintGrid grid = constraints_from_text(read_input(file));
    std::optional<Placement> witness = complete_partial(grid);
    if (use_json) {
        json j;
        j["format_version"] = 1;
        j["result"] = witness ? "witness" : "no_nontrivial";
        if (witness) j["witness"] = placement_json(*witness);
        std::cout << j.dump() << "\n";
    } else if (witness) {
        std::cout << "nontrivial completion with " << witness->size() << " knights\n"
                  << to_grid_art(*witness);
    } else {
        std::cout << "no nontrivial completion exists\n";
    }
    return 0;
}

json band_json(const BandClassification& c) {
    json j;
    j["format_version"] = 1;
    j["rows"] = c.rows;
    j["side"] = c.side == BandSide::kTwoSided ? "z" : "n";
    j["nontrivial"] = c.nontrivial;
    if (c.nontrivial) {
        j["min_density"] = c.min_density.str();
        j["min_density_num"] = c.min_density.num;
        j["min_density_den"] = c.min_density.den;
        j["transient_only"] = c.transient_only;
        j["witness_columns"] = columns_json(c.witness_columns, c.rows);
    }
    j["live_states"] = c.live_states;
    j["universe_states"] = c.universe_states;
    return j;
}

int cmd_band(int rows, const std::string& side, bool strip, int kmax, bool classify_all,
             bool use_json) {
    if (classify_all) {
        InfiniteBoardReport report = classify_infinite_boards();
        if (use_json) {
            json j;
            j["format_version"] = 1;
            json list = json::array();
            for (const InfiniteBoardEntry& e : report.entries) {
                json je;
                je["board"] = e.board;
                je["nontrivial"] = e.nontrivial;
                if (e.min_density) je["min_density"] = e.min_density->str();
                je["note"] = e.note;
                list.push_back(std::move(je));
            }
            j["entries"] = std::move(list);
            j["strip_all_dead_k"] = report.strip_all_dead_k;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "| board | nontrivial | min density | note |\n|---|---|---|---|\n";
            for (const InfiniteBoardEntry& e : report.entries) {
                std::cout << "| " << e.board << " | " << (e.nontrivial ? "yes" : "no") << " | "
                          << (e.min_density ? e.min_density->str() : "-") << " | " << e.note
                          << " |\n";
            }
        }
        return 0;
    }
    if (strip) {
        StripOutcome out = boundary_strip_search(kmax);
        if (use_json) {
            json j;
            j["format_version"] = 1;
            j["all_dead"] = out.all_dead;
            j["k"] = out.k;
            if (!out.all_dead) {
                j["flagged_survivors"] = out.flagged_survivors;
                if (out.witness) j["witness"] = placement_json(*out.witness);
            }
            std::cout << j.dump() << "\n";
        } else if (out.all_dead) {
            std::cout << "all nontrivial strip constructions dead at k = " << out.k << "\n";
        } else {
            std::cout << out.flagged_survivors << " nontrivial construction(s) alive at k = "
                      << out.k << "\n";
        }
        return 0;
    }
    BandClassification c = side == "n" ? classify_one_sided(rows) : classify_two_sided(rows);
    if (use_json) {
        std::cout << band_json(c).dump() << "\n";
    } else {
        std::cout << (c.side == BandSide::kTwoSided ? "KN(Z," : "KN(N,") << rows << "): ";
        if (c.nontrivial) {
            std::cout << "nontrivial, minimum density " << c.min_density.str()
                      << (c.transient_only ? " (transient only)" : "") << "\n";
            std::cout << "witness cycle columns (rows holding knights):";
            for (std::uint32_t bits : c.witness_columns) {
                std::cout << " {";
                bool first = true;
                for (int r = 1; r <= rows; ++r) {
                    if ((bits >> (r - 1)) & 1u) {
                        std::cout << (first ? "" : ",") << r;
                        first = false;
                    }
                }
                std::cout << "}";
            }
            std::cout << "\n";
        } else {
            std::cout << "only the trivial all-knights set\n";
        }
    }
    return 0;
}

int cmd_pattern(const std::string& family, int n, bool use_json) {
    if (family == "zz") {
        PeriodicPattern p = construct_zz_pattern();
        if (use_json) {
            json j;
            j["format_version"] = 1;
            json periods = json::array();
            for (Square u : p.periods) periods.push_back({u.col, u.row});
            json offsets = json::array();
            for (Square o : p.offsets) offsets.push_back({o.col, o.row});
            j["periods"] = std::move(periods);
            j["offsets"] = std::move(offsets);
            j["density"] = p.density().str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "plane pattern, density " << p.density().str() << "\nperiods:";
            for (Square u : p.periods) std::cout << " (" << u.col << "," << u.row << ")";
            std::cout << "\noffsets:";
            for (Square o : p.offsets) std::cout << " (" << o.col << "," << o.row << ")";
            std::cout << "\nverifies: " << (verify_periodic(p) ? "true" : "false") << "\n";
        }
        return 0;
    }
    if (n <= 0) throw InputError("--n is required for finite pattern families");
    Placement p(BoardDims(1, 1));
    if (family == "2rows") {
        p = construct_2rows(n);
    } else if (family == "3rows") {
        p = construct_3rows(n);
    } else if (family == "4rows") {
        p = construct_4rows(n);
    } else {
        throw InputError("unknown family '" + family + "' (want 2rows|3rows|4rows|zz)");
    }
    if (use_json) {
        std::cout << placement_json(p).dump() << "\n";
    } else {
        std::cout << to_text(p);
    }
    return 0;
}

std::vector<std::pair<Square, CellState>> parse_pins(const std::string& text) {
    std::vector<std::pair<Square, CellState>> pins;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        int i = 0, j = 0;
        std::string kind;
        if (!(ls >> i)) continue;  // blank line
        if (!(ls >> j >> kind) || (kind != "N" && kind != "x")) {
            throw InputError("pins line " + std::to_string(lineno) +
                             ": expected \"i j N\" or \"i j x\"");
        }
        pins.emplace_back(Square{i, j},
                          kind == "N" ? CellState::kKnight : CellState::kEmpty);
    }
    return pins;
}

int cmd_window(int radius, const std::string& pins_file, std::uint64_t limit, bool isolated,
               bool use_json) {
    SearchOutcome out;
    if (isolated) {
        out = isolated_knight_search(radius, limit);
    } else {
        std::vector<std::pair<Square, CellState>> pins;
        if (!pins_file.empty()) pins = parse_pins(read_input(pins_file));
        out = assumption_search(pins, radius, limit);
    }
    if (use_json) {
        json j;
        j["format_version"] = 1;
        j["verdict"] = verdict_name(out.verdict);
        j["nodes"] = out.nodes;
        if (out.witness) j["window"] = out.witness->to_art();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "verdict: " << verdict_name(out.verdict) << " (" << out.nodes
                  << " nodes)\n";
        if (out.witness) std::cout << out.witness->to_art();
    }
    return 0;
}

int cmd_reproduce(const std::string& scope, bool use_json, const std::string& out_file) {
    ReproduceReport report = run_reproduce(scope);
    const std::string rendered = use_json ? report.to_json() : report.to_markdown();
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw InputError("cannot write '" + out_file + "'");
        out << rendered;
    } else {
        std::cout << rendered;
        if (use_json) std::cout << "\n";
    }
    return report.any_mismatch() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact perfect domination on knights graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json trail any subcommand
    bool use_json = false;
    app.add_flag("--json", use_json, "machine-readable JSON output");

    auto* solve = app.add_subcommand("solve", "compute gamma_p of a finite board");
    int n = 0, m = 0;
    bool brute = false;
    solve->add_option("n", n, "columns")->required();
    solve->add_option("m", m, "rows")->required();
    solve->add_flag("--brute-force", brute, "use the subset-scan oracle (<= 24 squares)");

    auto* verify = app.add_subcommand("verify", "check a placement file");
    std::string verify_file = "-";
    verify->add_option("file", verify_file, "placement file (text or JSON, '-' for stdin)");

    auto* enumerate = app.add_subcommand("enumerate", "list perfect dominating sets");
    int en = 0, em = 0, max_size = 0;
    bool canonical = false;
    enumerate->add_option("n", en, "columns")->required();
    enumerate->add_option("m", em, "rows")->required();
    enumerate->add_option("--max-size", max_size, "largest set size to keep")->required();
    enumerate->add_flag("--canonical", canonical, "deduplicate up to board symmetry");

    auto* complete = app.add_subcommand("complete", "search for a nontrivial completion");
    std::string constraints_file;
    complete->add_option("--constraints", constraints_file, "grid of N/x/. cells")->required();

    auto* band = app.add_subcommand("band", "classify infinite bands");
    int rows = 0, kmax = 12;
    std::string side = "z";
    bool strip = false, classify_all = false;
    band->add_option("--rows", rows, "band height (2..7)");
    band->add_option("--side", side, "z = two-sided, n = one-sided")
        ->check(CLI::IsMember({"z", "n"}));
    band->add_flag("--strip", strip, "run the 3-row boundary strip search");
    band->add_option("--kmax", kmax, "strip search depth (default 12)");
    band->add_flag("--classify-all", classify_all, "full infinite-board report");

    auto* pattern = app.add_subcommand("pattern", "emit a published pattern");
    std::string family;
    int pn = 0;
    pattern->add_option("--family", family, "2rows|3rows|4rows|zz")->required();
    pattern->add_option("--n", pn, "columns (finite families)");

    auto* window = app.add_subcommand("window", "plane window constraint search");
    int radius = 6;
    std::string pins_file;
    std::uint64_t limit = kDefaultNodeLimit;
    bool isolated = false;
    window->add_option("--radius", radius, "window radius")->required();
    auto* pins_opt =
        window->add_option("--pins", pins_file, "pin file: lines \"i j N\" or \"i j x\"");
    window->add_option("--limit", limit, "node budget");
    window->add_flag("--isolated", isolated, "pin an isolated center knight")
        ->excludes(pins_opt);

    auto* reproduce = app.add_subcommand("reproduce", "recompute the published results");
    std::string scope = "all";
    std::string out_file;
    reproduce->add_option("--scope", scope, "all|2rows|3rows|4rows|thm5x5|bands|zz|open-3rows");
    reproduce->add_option("--out", out_file, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(n, m, use_json, brute);
        if (verify->parsed()) return cmd_verify(verify_file, use_json);
        if (enumerate->parsed()) return cmd_enumerate(en, em, max_size, canonical, use_json);
        if (complete->parsed()) return cmd_complete(constraints_file, use_json);
        if (band->parsed()) {
            if (!strip && !classify_all && rows == 0) {
                throw InputError("band needs --rows, --strip or --classify-all");
            }
            return cmd_band(rows, side, strip, kmax, classify_all, use_json);
        }
        if (pattern->parsed()) return cmd_pattern(family, pn, use_json);
        if (window->parsed()) return cmd_window(radius, pins_file, limit, isolated, use_json);
        if (reproduce->parsed()) return cmd_reproduce(scope, use_json, out_file);
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
