#pragma once

#include "ntlab/padic2.hpp"
#include "ntlab/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ntlab {

/// Table of the binary composition counts theta(n) mod 2^m:
/// theta(0) = 1, theta(n) = sum_{2^k <= n} theta(n - 2^k).
struct ThetaTable {
    unsigned m = 0;
    std::vector<uint64_t> values;  // values[n] = theta(n) mod 2^m

    uint64_t at(std::size_t n) const { return values.at(n); }
    std::size_t size() const { return values.size(); }
};

ThetaTable theta_table(std::size_t n_max, unsigned m);

struct NotStabilized : std::runtime_error {
    explicit NotStabilized(const std::string& w) : std::runtime_error(w) {}
};

struct TwoAdicLimit {
    long a = 0;
    Padic2 digits;          // the stabilized residue of theta(2^k + a) mod 2^m
    int stabilized_from = 0;  // smallest k with all later window residues equal
    int k_lo = 0, k_hi = 0;   // the verified window
};

/// Stabilized 2-adic residue of theta(2^k + a) over the window k in
/// [k_lo, k_hi] (k_lo raised automatically when 2^k + a < 0). Throws
/// NotStabilized when the top-of-window residues still move (m too large for
/// the window).
TwoAdicLimit theta_limit(const ThetaTable& table, long a, unsigned m, int k_lo, int k_hi);

/// Convenience wrapper building a table large enough for the window.
TwoAdicLimit theta_limit(long a, unsigned m, int k_lo = 10, int k_hi = 24);

/// Oracle: number of compositions of n into powers of two, by direct
/// enumeration (exponential; n <= ~25).
Int theta_enumerate(unsigned n);

}  // namespace ntlab
