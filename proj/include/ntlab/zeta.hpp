#pragma once

#include "ntlab/hp.hpp"
#include "ntlab/rational.hpp"

#include <stdexcept>

namespace ntlab {

struct PoleAtOne : std::domain_error {
    PoleAtOne() : std::domain_error("zeta pole at s = 1") {}
};

/// Exact Bernoulli number B_n (B_1 = -1/2); cached, thread-safe.
Rat bernoulli(unsigned n);

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s} for real a >= 1, continued to all
/// s != 1 by Euler-Maclaurin with a rigorous remainder bound at the target
/// precision. Throws PoleAtOne when s == 1.
HPComplex hurwitz_zeta(const HPComplex& s, const HPReal& a, int digits);

HPComplex riemann_zeta(const HPComplex& s, int digits);

/// zeta(s) - 1 computed as hurwitz_zeta(s, 2); relatively accurate even for
/// large Re(s) where zeta(s) is close to 1.
HPComplex riemann_zeta_minus_one(const HPComplex& s, int digits);

}  // namespace ntlab
