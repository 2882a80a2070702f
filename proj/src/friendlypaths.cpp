#include "ntlab/friendlypaths.hpp"

#include <omp.h>

#include <algorithm>
#include <random>
#include <set>

namespace ntlab {

PointSet PointSet::from(std::vector<std::pair<long, long>> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return PointSet{std::move(v)};
}

namespace {

struct Window {
    long xlo, xhi, ylo, yhi;  // expanded bounding box
};

Window window_of(const PointSet& pts) {
    long xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool first = true;
    for (auto& [x, y] : pts.pts) {
        if (first) { xlo = xhi = x; ylo = yhi = y; first = false; }
        xlo = std::min(xlo, x); xhi = std::max(xhi, x);
        ylo = std::min(ylo, y); yhi = std::max(yhi, y);
    }
    return {xlo - 1, xhi + 1, ylo - 1, yhi + 1};
}

PointSet mirror_y(const PointSet& pts) {
    std::vector<std::pair<long, long>> v;
    v.reserve(pts.pts.size());
    for (auto& [x, y] : pts.pts) v.emplace_back(x, -y);
    return PointSet::from(std::move(v));
}

/// Uphill decision over the window by DP on crossing heights; returns a
/// witness path when a balanced split exists.
std::optional<LatticePath> solve_uphill(const PointSet& pts) {
    const Window w = window_of(pts);
    const long C = w.xhi - w.xlo;       // columns with a crossing height v_x, x = xlo..xhi-1
    const long H = w.yhi - w.ylo + 1;   // height values
    const long n = static_cast<long>(pts.size());
    const long balspan = 2 * n + 1;

    // points per column, sorted by y
    std::vector<std::vector<long>> col(C + 1);
    for (auto& [x, y] : pts.pts) col[x - w.xlo].push_back(y);
    for (auto& c : col) std::sort(c.begin(), c.end());

    // reach[x][v][bal]: after choosing crossing height v for column x
    auto idx = [&](long v, long bal) { return (v - w.ylo) * balspan + (bal + n); };
    std::vector<std::vector<int>> parent(C, std::vector<int>(H * balspan, -2));  // -2 unreached

    auto col_delta = [&](long x_index, long enter, long exit) {
        long below = 0, above = 0;
        for (long y : col[x_index]) {
            if (y < enter) ++below;
            else if (y > exit) ++above;
        }
        return below - above;
    };

    // column x = xlo (index 0) holds no points; enter = ylo
    for (long v = w.ylo; v <= w.yhi; ++v) parent[0][idx(v, 0)] = -1;  // -1 = root
    for (long xi = 1; xi < C; ++xi) {
        for (long pv = w.ylo; pv <= w.yhi; ++pv) {
            for (long bal = -n; bal <= n; ++bal) {
                if (parent[xi - 1][idx(pv, bal)] == -2) continue;
                for (long v = pv; v <= w.yhi; ++v) {
                    long d = col_delta(xi, pv, v);
                    long nb = bal + d;
                    if (nb < -n || nb > n) continue;
                    int& slot = parent[xi][idx(v, nb)];
                    if (slot == -2) slot = static_cast<int>(pv - w.ylo);
                }
            }
        }
    }

    // find a balanced terminal state
    long term_v = -1;
    for (long v = w.ylo; v <= w.yhi && term_v < 0; ++v)
        if (parent[C - 1][idx(v, 0)] != -2) term_v = v;
    if (term_v < 0) return std::nullopt;

    // reconstruct crossing heights right to left
    std::vector<long> heights(C);
    long v = term_v, bal = 0;
    for (long xi = C - 1; xi >= 0; --xi) {
        heights[xi] = v;
        int p = parent[xi][idx(v, bal)];
        if (xi == 0) break;
        long pv = w.ylo + p;
        bal -= col_delta(xi, pv, v);
        v = pv;
    }

    LatticePath path;
    path.uphill = true;
    path.x0 = w.xlo;
    path.y0 = w.ylo;
    long cur = w.ylo;
    for (long xi = 0; xi < C; ++xi) {
        path.moves.append(heights[xi] - cur, 'U');
        path.moves.push_back('R');
        cur = heights[xi];
    }
    path.moves.append(w.yhi - cur, 'U');
    return path;
}

LatticePath mirror_path(const LatticePath& p) {
    LatticePath q;
    q.uphill = false;
    q.x0 = p.x0;
    q.y0 = -p.y0;
    for (char m : p.moves) q.moves.push_back(m == 'U' ? 'D' : 'R');
    return q;
}

}  // namespace

SideCounts side_counts(const LatticePath& path, const PointSet& pts) {
    const Window w = window_of(pts);
    // normalize to uphill coordinates
    std::vector<std::pair<long, long>> p = pts.pts;
    long x0 = path.x0, y0 = path.y0;
    std::string moves = path.moves;
    if (!path.uphill) {
        for (auto& [x, y] : p) y = -y;
        y0 = -y0;
        for (char& m : moves) m = (m == 'D') ? 'U' : m;
    }
    long wxlo = w.xlo, wxhi = w.xhi;
    long wylo = path.uphill ? w.ylo : -w.yhi;
    long wyhi = path.uphill ? w.yhi : -w.ylo;

    // walk the moves, recording the vertical extent of every column
    long x = x0, y = y0;
    std::vector<std::pair<long, long>> extent;  // per column starting at x0
    long enter = y;
    for (char m : moves) {
        if (m == 'R') {
            extent.emplace_back(enter, y);
            enter = y;
            ++x;
        } else if (m == 'U') {
            ++y;
        } else {
            throw std::invalid_argument("side_counts: bad move character");
        }
    }
    extent.emplace_back(enter, y);  // final column

    if (x0 > wxlo || x0 + static_cast<long>(extent.size()) - 1 < wxhi || y0 > wylo || y < wyhi)
        throw PathOutsideWindow();

    SideCounts sc;
    for (auto& [px, py] : p) {
        const auto& [lo, hi] = extent[px - x0];
        if (py < lo) ++sc.below;
        else if (py > hi) ++sc.above;
        else ++sc.on_path;
    }
    return sc;
}

FriendlyVerdict exists_friendly(const PointSet& pts) {
    FriendlyVerdict v;
    if (pts.pts.empty()) {
        v.exists = true;
        v.witness = LatticePath{true, 0, 0, "RU"};
        return v;
    }
    if (auto up = solve_uphill(pts)) {
        v.exists = true;
        v.witness = *up;
        v.counts = side_counts(*up, pts);
        return v;
    }
    PointSet m = mirror_y(pts);
    if (auto down = solve_uphill(m)) {
        v.exists = true;
        v.witness = mirror_path(*down);
        v.counts = side_counts(*v.witness, pts);
        return v;
    }
    return v;
}

FriendlyVerdict exists_friendly_bruteforce(const PointSet& pts) {
    FriendlyVerdict v;
    if (pts.pts.empty()) {
        v.exists = true;
        return v;
    }
    const Window w = window_of(pts);
    long R = w.xhi - w.xlo, U = w.yhi - w.ylo;
    for (int orient = 0; orient < 2; ++orient) {
        PointSet work = orient == 0 ? pts : mirror_y(pts);
        std::string moves(R, 'R');
        moves.append(U, 'U');
        std::sort(moves.begin(), moves.end());
        do {
            LatticePath path{true, w.xlo, orient == 0 ? w.ylo : -w.yhi, moves};
            SideCounts sc = side_counts(path, work);
            if (sc.below == sc.above) {
                v.exists = true;
                v.witness = orient == 0 ? path : mirror_path(path);
                v.counts = side_counts(*v.witness, pts);
                return v;
            }
        } while (std::next_permutation(moves.begin(), moves.end()));
    }
    return v;
}

std::vector<PointSet> conjecture_sweep(int n_points, int grid, int trials, uint64_t seed,
                                       bool parallel) {
    std::vector<PointSet> failures;
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + t);
        std::uniform_int_distribution<long> d(0, grid - 1);
        std::set<std::pair<long, long>> s;
        while (static_cast<int>(s.size()) < n_points) s.emplace(d(rng), d(rng));
        PointSet ps = PointSet::from({s.begin(), s.end()});
        if (!exists_friendly(ps).exists) {
#pragma omp critical
            failures.push_back(ps);
        }
    }
    return failures;
}

}  // namespace ntlab
