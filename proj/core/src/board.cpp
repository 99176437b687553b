#include "perfdom/board.hpp"

#include <algorithm>
#include <bit>

namespace perfdom {

BoardDims::BoardDims(int n, int m) : cols(n), rows(m) {
    if (n < 1 || m < 1) {
        throw InputError("board dimensions must be positive, got " + std::to_string(n) +
                         "x" + std::to_string(m));
    }
}

std::vector<Square> knight_neighbors(BoardDims dims, Square sq) {
    if (!dims.contains(sq)) {
        throw InputError("square (" + std::to_string(sq.col) + "," + std::to_string(sq.row) +
                         ") is outside the " + std::to_string(dims.cols) + "x" +
                         std::to_string(dims.rows) + " board");
    }
    std::vector<Square> out;
    out.reserve(8);
    for (Square d : kKnightMoves) {
        Square t{sq.col + d.col, sq.row + d.row};
        if (dims.contains(t)) out.push_back(t);
    }
    return out;
}

std::vector<Square> closed_neighbors(BoardDims dims, Square sq) {
    std::vector<Square> out = knight_neighbors(dims, sq);
    out.push_back(sq);
    return out;
}

Placement::Placement(BoardDims dims) : dims_(dims) {
    if (dims.cols < 1 || dims.rows < 1) throw InputError("invalid board dimensions");
    words_.assign((static_cast<std::size_t>(dims.area()) + 63) / 64, 0);
}

Placement::Placement(BoardDims dims, const std::vector<Square>& knights) : Placement(dims) {
    for (Square sq : knights) add(sq);
}

bool Placement::has(Square sq) const {
    if (!dims_.contains(sq)) return false;
    int b = bit_index(sq);
    return (words_[b >> 6] >> (b & 63)) & 1u;
}

void Placement::add(Square sq) {
    if (!dims_.contains(sq)) {
        throw InputError("knight (" + std::to_string(sq.col) + "," + std::to_string(sq.row) +
                         ") is outside the board");
    }
    int b = bit_index(sq);
    words_[b >> 6] |= std::uint64_t{1} << (b & 63);
}

void Placement::remove(Square sq) {
    if (!dims_.contains(sq)) return;
    int b = bit_index(sq);
    words_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
}

int Placement::size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::vector<Square> Placement::knights() const {
    std::vector<Square> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(square_at(static_cast<int>(wi * 64) + b));
            w &= w - 1;
        }
    }
    return out;
}

bool Placement::lex_less(const Placement& a, const Placement& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (a.words_[i] & low) != 0;
        }
    }
    return false;
}

std::vector<Symmetry> symmetry_group(BoardDims dims) {
    std::vector<Symmetry> g = {Symmetry::kIdentity, Symmetry::kHorizontalFlip,
                               Symmetry::kVerticalFlip, Symmetry::kRotate180};
    if (dims.cols == dims.rows) {
        g.insert(g.end(), {Symmetry::kRotate90, Symmetry::kRotate270, Symmetry::kDiagonalFlip,
                           Symmetry::kAntiDiagonalFlip});
    }
    return g;
}

Square apply_symmetry(Symmetry sym, BoardDims dims, Square sq) {
    const int n = dims.cols, m = dims.rows;
    switch (sym) {
        case Symmetry::kIdentity:        return sq;
        case Symmetry::kHorizontalFlip:  return {n + 1 - sq.col, sq.row};
        case Symmetry::kVerticalFlip:    return {sq.col, m + 1 - sq.row};
        case Symmetry::kRotate180:       return {n + 1 - sq.col, m + 1 - sq.row};
        case Symmetry::kRotate90:        return {sq.row, n + 1 - sq.col};
        case Symmetry::kRotate270:       return {m + 1 - sq.row, sq.col};
        case Symmetry::kDiagonalFlip:    return {sq.row, sq.col};
        case Symmetry::kAntiDiagonalFlip:return {n + 1 - sq.row, n + 1 - sq.col};
    }
    return sq;
}

Placement apply_symmetry(Symmetry sym, const Placement& p) {
    Placement out(p.dims());
    for (Square sq : p.knights()) out.add(apply_symmetry(sym, p.dims(), sq));
    return out;
}

Placement canonicalize(const Placement& p) {
    Placement best = p;
    for (Symmetry sym : symmetry_group(p.dims())) {
        Placement img = apply_symmetry(sym, p);
        if (Placement::lex_less(img, best)) best = img;
    }
    return best;
}

}  // namespace perfdom
