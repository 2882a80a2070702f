#pragma once

#include "ntlab/series.hpp"

#include <vector>

namespace ntlab {

struct NonUnitConstantTerm : std::domain_error {
    NonUnitConstantTerm() : std::domain_error("power product expansion requires constant term 1") {}
};

/// Partition generating function 1/prod(1-x^k) to the given exclusive order,
/// by Euler's pentagonal-number recurrence (exact).
TruncatedSeries partition_series(std::size_t order);

/// p(n) for a single n.
Int partition_number(unsigned n);

/// The unique integers n_k with prod_{k=1..K} (1 + n_k x^k) = series + O(x^{K+1}).
/// Requires series order > K and constant term 1. Index [k-1] holds n_k.
std::vector<Int> power_product_expansion(const TruncatedSeries& series, std::size_t K);

struct SignEntry {
    std::size_t k = 0;
    Int value;
    int sign = 0;        // -1, 0, +1
    bool in_scope = false;  // even k >= 8 (the k=0 boundary cases are excluded)
    bool ok = false;        // sign matches the mod-8 pattern (zeros reported, never ok)
};

/// Classify even-index signs against the mod-8 pattern: n(8k) > 0 and
/// n(8k+2), n(8k+4), n(8k+6) < 0 for k >= 1.
std::vector<SignEntry> sign_report(const std::vector<Int>& seq);

}  // namespace ntlab
