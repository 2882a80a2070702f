#pragma once

#include "ntlab/intpoly.hpp"

#include <vector>

namespace ntlab {

struct Factorization {
    Int content;  // integer content, sign included
    std::vector<std::pair<IntPoly, int>> factors;  // primitive irreducible, multiplicity

    /// content * prod factors^mult.
    IntPoly product() const;
};

/// Factor a nonzero integer polynomial into primitive irreducible factors
/// over Q (squarefree decomposition, then Zassenhaus: factorization modulo a
/// prime, Hensel lifting, subset recombination). The working prime is the
/// smallest p >= 11 dividing neither the leading coefficient nor the
/// discriminant of the squarefree part.
Factorization factor(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

}  // namespace ntlab
