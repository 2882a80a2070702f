#pragma once

#include "ntlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace ntlab {

/// Line A x + B y = C with integer coprime coefficients, first nonzero of
/// (A, B) positive.
struct BoardLine {
    Int A, B, C;

    static BoardLine from_rationals(const Rat& a, const Rat& b, const Rat& c);
    static BoardLine through(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2);
    bool operator==(const BoardLine& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator<(const BoardLine& o) const;
    std::string str() const;
};

using Cell = std::pair<int, int>;

/// Cells (i, j) of the n x n board whose open interior meets the line.
/// Exact rational predicate; the kernel walks columns, the reference
/// evaluates the corner-sign test on every cell.
std::set<Cell> cells_crossed(const BoardLine& line, int n);
std::set<Cell> cells_crossed_reference(const BoardLine& line, int n);

struct CoverageReport {
    int n = 0;
    std::vector<BoardLine> lines;
    std::set<Cell> covered;
    bool complete = false;
};

CoverageReport verify_cover(const std::vector<BoardLine>& lines, int n);

struct SearchResult {
    std::optional<std::vector<BoardLine>> cover;  // verified exactly when present
    bool proved_impossible = false;               // k * (2n-1) < n^2
    uint64_t candidates_tried = 0;
    int restarts_used = 0;
};

/// Greedy max-new-cells search over lines anchored at rational boundary
/// points (denominator <= anchor_den), with seeded randomized restarts.
SearchResult search_cover(int n, int k, uint64_t seed, int restarts = 50,
                          int candidates_per_step = 4000, int anchor_den = 12,
                          bool parallel = true);

}  // namespace ntlab
