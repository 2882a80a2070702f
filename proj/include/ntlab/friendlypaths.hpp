#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ntlab {

/// Finite set of distinct lattice points.
struct PointSet {
    std::vector<std::pair<long, long>> pts;

    static PointSet from(std::vector<std::pair<long, long>> v);
    std::size_t size() const { return pts.size(); }
    bool odd() const { return pts.size() % 2 == 1; }
};

/// A monotone staircase across the working window (bounding box of the
/// points expanded by 1), entering at one corner and leaving at the other.
/// Moves: 'R' and 'U' for uphill, 'R' and 'D' for downhill.
struct LatticePath {
    bool uphill = true;
    long x0 = 0, y0 = 0;  // start vertex (window corner)
    std::string moves;
};

/// Exact split of the points by the path. `below` are points the path passes
/// above (the down-right side), `above` the opposite side; points on a path
/// vertex or segment are excluded from both.
struct SideCounts {
    long below = 0;
    long above = 0;
    long on_path = 0;
};

struct FriendlyVerdict {
    bool exists = false;
    std::optional<LatticePath> witness;
    SideCounts counts;
};

struct PathOutsideWindow : std::domain_error {
    PathOutsideWindow() : std::domain_error("path does not span the point window") {}
};

SideCounts side_counts(const LatticePath& path, const PointSet& pts);

/// Decides whether a friendly monotone path exists (both orientations tried)
/// by dynamic programming over column heights; returns a witness when found.
FriendlyVerdict exists_friendly(const PointSet& pts);

/// Brute force over all staircases of the window; for cross-checking the DP.
FriendlyVerdict exists_friendly_bruteforce(const PointSet& pts);

/// Randomized conjecture sweep: samples `trials` point sets of odd size
/// n_points inside [0, grid)^2 and returns any sets without a friendly path.
std::vector<PointSet> conjecture_sweep(int n_points, int grid, int trials, uint64_t seed,
                                       bool parallel = true);

}  // namespace ntlab
