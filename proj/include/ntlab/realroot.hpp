#pragma once

#include "ntlab/hp.hpp"
#include "ntlab/intpoly.hpp"

#include <stdexcept>
#include <vector>

namespace ntlab {

struct NoDominantRealRoot : std::runtime_error {
    explicit NoDominantRealRoot(const std::string& why)
        : std::runtime_error("no unique dominant real root: " + why) {}
};

/// Isolating intervals (lo, hi] with exact rational endpoints for all real
/// roots of p (degenerate [r, r] for roots hit exactly). Input need not be
/// squarefree; isolation runs on the squarefree part.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p);

/// The unique real root of maximal modulus, refined to `digits` decimal
/// digits and certified by a sign change across an interval of width
/// 10^(-digits) * max(1, |root|). Verifies that no other root (real or
/// complex, the latter via residual-bounded companion eigenvalues) matches
/// the dominant modulus; throws NoDominantRealRoot otherwise.
HPReal dominant_real_root(const IntPoly& p, int digits);

}  // namespace ntlab
