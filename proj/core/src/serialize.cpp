#include <sstream>

#include "json.hpp"
#include "perfdom/board.hpp"
#include "perfdom/solver.hpp"

namespace perfdom {

namespace {

// Shared grid-body reader: m lines of n cells, top row first.
std::vector<std::string> read_grid_lines(std::istringstream& in, BoardDims dims) {
    std::vector<std::string> lines;
    std::string line;
    int lineno = 1;
    while (static_cast<int>(lines.size()) < dims.rows && std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (static_cast<int>(line.size()) != dims.cols) {
            throw InputError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(dims.cols) + " characters, got " +
                             std::to_string(line.size()));
        }
        lines.push_back(line);
    }
    if (static_cast<int>(lines.size()) != dims.rows) {
        throw InputError("grid has " + std::to_string(lines.size()) + " rows, expected " +
                         std::to_string(dims.rows));
    }
    return lines;
}

BoardDims read_header(std::istringstream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InputError("line 1: missing \"n m\" header");
    std::istringstream hdr(line);
    int n = 0, m = 0;
    if (!(hdr >> n >> m)) throw InputError("line 1: expected \"n m\" header");
    if (n < 1 || m < 1) throw InputError("line 1: dimensions must be positive");
    return BoardDims(n, m);
}

}  // namespace

std::string to_grid_art(const Placement& p) {
    std::string out;
    for (int r = p.dims().rows; r >= 1; --r) {
        for (int c = 1; c <= p.dims().cols; ++c) {
            out += p.has({c, r}) ? 'N' : '.';
        }
        out += '\n';
    }
    return out;
}

std::string to_text(const Placement& p) {
    return std::to_string(p.dims().cols) + " " + std::to_string(p.dims().rows) + "\n" +
           to_grid_art(p);
}

Placement placement_from_text(const std::string& text) {
    std::istringstream in(text);
    BoardDims dims = read_header(in);
    std::vector<std::string> lines = read_grid_lines(in, dims);
    Placement p(dims);
    for (int i = 0; i < dims.rows; ++i) {
        const int row = dims.rows - i;  // top row first
        for (int c = 1; c <= dims.cols; ++c) {
            const char ch = lines[static_cast<std::size_t>(i)][static_cast<std::size_t>(c - 1)];
            if (ch == 'N') {
                p.add({c, row});
            } else if (ch != '.') {
                throw InputError(std::string("line ") + std::to_string(i + 2) +
                                 ": unexpected character '" + ch + "' (want 'N' or '.')");
            }
        }
    }
    return p;
}

std::string to_json(const Placement& p) {
    nlohmann::json j;
    j["cols"] = p.dims().cols;
    j["rows"] = p.dims().rows;
    nlohmann::json knights = nlohmann::json::array();
    for (Square sq : p.knights()) knights.push_back({sq.col, sq.row});
    j["knights"] = std::move(knights);
    return j.dump();
}

Placement placement_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("cols") || !j.contains("rows") || !j.contains("knights")) {
        throw InputError("placement JSON needs \"cols\", \"rows\" and \"knights\"");
    }
    BoardDims dims(j["cols"].get<int>(), j["rows"].get<int>());
    Placement p(dims);
    for (const auto& k : j["knights"]) {
        if (!k.is_array() || k.size() != 2) {
            throw InputError("knights entries must be [col,row] pairs");
        }
        p.add({k[0].get<int>(), k[1].get<int>()});
    }
    return p;
}

std::string to_text(const ConstraintGrid& grid) {
    std::string out = std::to_string(grid.dims.cols) + " " + std::to_string(grid.dims.rows) + "\n";
    for (int r = grid.dims.rows; r >= 1; --r) {
        for (int c = 1; c <= grid.dims.cols; ++c) {
            switch (grid.at({c, r})) {
                case CellConstraint::kFree:         out += '.'; break;
                case CellConstraint::kMustBeKnight: out += 'N'; break;
                case CellConstraint::kMustBeEmpty:  out += 'x'; break;
            }
        }
        out += '\n';
    }
    return out;
}

ConstraintGrid constraints_from_text(const std::string& text) {
    std::istringstream in(text);
    BoardDims dims = read_header(in);
    std::vector<std::string> lines = read_grid_lines(in, dims);
    ConstraintGrid grid(dims);
    for (int i = 0; i < dims.rows; ++i) {
        const int row = dims.rows - i;
        for (int c = 1; c <= dims.cols; ++c) {
            const char ch = lines[static_cast<std::size_t>(i)][static_cast<std::size_t>(c - 1)];
            CellConstraint value = CellConstraint::kFree;
            if (ch == 'N') {
                value = CellConstraint::kMustBeKnight;
            } else if (ch == 'x') {
                value = CellConstraint::kMustBeEmpty;
            } else if (ch != '.') {
                throw InputError(std::string("line ") + std::to_string(i + 2) +
                                 ": unexpected character '" + ch + "' (want 'N', 'x' or '.')");
            }
            grid.at({c, row}) = value;
        }
    }
    return grid;
}

}  // namespace perfdom
