#include "ntlab/boardlines.hpp"

#include <omp.h>

#include <algorithm>
#include <random>

namespace ntlab {

BoardLine BoardLine::from_rationals(const Rat& a, const Rat& b, const Rat& c) {
    if (a == 0 && b == 0) throw std::invalid_argument("BoardLine: A = B = 0");
    Int l = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
    Int A = a.get_num() * (l / a.get_den());
    Int B = b.get_num() * (l / b.get_den());
    Int C = c.get_num() * (l / c.get_den());
    Int g = gcd(gcd(A, B), C);
    if (g != 0) { A /= g; B /= g; C /= g; }
    int lead = sgn(A) != 0 ? sgn(A) : sgn(B);
    if (lead < 0) { A = -A; B = -B; C = -C; }
    return BoardLine{A, B, C};
}

BoardLine BoardLine::through(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
    // (y2-y1) x - (x2-x1) y = (y2-y1) x1 - (x2-x1) y1
    Rat a = y2 - y1, b = x1 - x2;
    if (a == 0 && b == 0) throw std::invalid_argument("BoardLine::through: equal points");
    return from_rationals(a, b, a * x1 + b * y1);
}

bool BoardLine::operator<(const BoardLine& o) const {
    if (A != o.A) return A < o.A;
    if (B != o.B) return B < o.B;
    return C < o.C;
}

std::string BoardLine::str() const {
    return A.get_str() + " " + B.get_str() + " " + C.get_str();
}

std::set<Cell> cells_crossed_reference(const BoardLine& line, int n) {
    std::set<Cell> out;
    auto g = [&](long x, long y) { return line.A * x + line.B * y - line.C; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool neg = false, pos = false;
            for (int dx = 0; dx <= 1; ++dx)
                for (int dy = 0; dy <= 1; ++dy) {
                    int s = sgn(g(i + dx, j + dy));
                    neg = neg || s < 0;
                    pos = pos || s > 0;
                }
            if (neg && pos) out.insert({i, j});
        }
    return out;
}

std::set<Cell> cells_crossed(const BoardLine& line, int n) {
    std::set<Cell> out;
    if (line.B == 0) {
        // vertical x = C/A: crosses column i iff i < C/A < i+1
        Rat x(line.C, line.A);
        x.canonicalize();
        for (int i = 0; i < n; ++i)
            if (Rat(i) < x && x < Rat(i + 1))
                for (int j = 0; j < n; ++j) out.insert({i, j});
        return out;
    }
    // y(x) = (C - A x)/B over each column
    for (int i = 0; i < n; ++i) {
        Rat y1 = Rat(line.C - line.A * i, line.B);
        Rat y2 = Rat(line.C - line.A * (i + 1), line.B);
        y1.canonicalize();
        y2.canonicalize();
        if (y2 < y1) std::swap(y1, y2);
        // open y-range of the open segment is (y1, y2), degenerate {y1} for
        // horizontal lines; cell row j qualifies iff it meets (j, j+1)
        for (int j = 0; j < n; ++j) {
            bool hit;
            if (y1 == y2) {
                hit = Rat(j) < y1 && y1 < Rat(j + 1);
            } else {
                hit = y1 < Rat(j + 1) && Rat(j) < y2;
            }
            if (hit) out.insert({i, j});
        }
    }
    return out;
}

CoverageReport verify_cover(const std::vector<BoardLine>& lines, int n) {
    CoverageReport rep;
    rep.n = n;
    rep.lines = lines;
    for (const auto& l : lines) {
        auto cells = cells_crossed(l, n);
        rep.covered.insert(cells.begin(), cells.end());
    }
    rep.complete = static_cast<int>(rep.covered.size()) == n * n;
    return rep;
}

namespace {

struct AnchorGen {
    std::mt19937_64 rng;
    int n;
    int den;

    explicit AnchorGen(uint64_t seed, int n, int den) : rng(seed), n(n), den(den) {}

    /// Random rational point on the boundary of [0, n]^2.
    std::pair<Rat, Rat> next() {
        std::uniform_int_distribution<int> side_d(0, 3);
        std::uniform_int_distribution<int> den_d(1, den);
        int side = side_d(rng);
        int b = den_d(rng);
        std::uniform_int_distribution<long> num_d(0, static_cast<long>(n) * b);
        Rat t(num_d(rng), b);
        t.canonicalize();
        switch (side) {
            case 0: return {t, Rat(0)};
            case 1: return {t, Rat(n)};
            case 2: return {Rat(0), t};
            default: return {Rat(n), t};
        }
    }
};

}  // namespace

SearchResult search_cover(int n, int k, uint64_t seed, int restarts, int candidates_per_step,
                          int anchor_den, bool parallel) {
    SearchResult res;
    if (k < 1 || static_cast<long>(k) * (2 * n - 1) < static_cast<long>(n) * n) {
        res.proved_impossible = true;
        return res;
    }
    std::vector<Cell> all_cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) all_cells.push_back({i, j});

    volatile bool found_flag = false;
    std::vector<BoardLine> found_cover;
    uint64_t total_tried = 0;
    int restarts_used = 0;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int r = 0; r < restarts; ++r) {
        if (found_flag) continue;
        AnchorGen gen(seed * 0x1000193ULL + r * 0x9E3779B9ULL + 1, n, anchor_den);
        std::set<Cell> remaining(all_cells.begin(), all_cells.end());
        std::vector<BoardLine> chosen;
        uint64_t tried = 0;
        for (int step = 0; step < k && !remaining.empty(); ++step) {
            BoardLine best{0, 1, 0};
            std::size_t best_gain = 0;
            for (int c = 0; c < candidates_per_step; ++c) {
                auto [x1, y1] = gen.next();
                auto [x2, y2] = gen.next();
                if (x1 == x2 && y1 == y2) continue;
                BoardLine cand = BoardLine::through(x1, y1, x2, y2);
                ++tried;
                auto cells = cells_crossed(cand, n);
                std::size_t gain = 0;
                for (const auto& cell : cells) gain += remaining.count(cell);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = cand;
                }
            }
            if (best_gain == 0) break;
            chosen.push_back(best);
            for (const auto& cell : cells_crossed(best, n)) remaining.erase(cell);
        }
#pragma omp critical
        {
            total_tried += tried;
            ++restarts_used;
            if (remaining.empty() && !found_flag) {
                CoverageReport rep = verify_cover(chosen, n);
                if (rep.complete) {
                    found_flag = true;
                    found_cover = chosen;
                }
            }
        }
    }
    res.candidates_tried = total_tried;
    res.restarts_used = restarts_used;
    if (found_flag) res.cover = found_cover;
    return res;
}

}  // namespace ntlab
