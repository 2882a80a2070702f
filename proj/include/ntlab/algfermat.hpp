#pragma once

#include "ntlab/intpoly.hpp"
#include "ntlab/series.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ntlab {

struct RamifiedBranch : std::domain_error {
    RamifiedBranch() : std::domain_error("branch is ramified: dQ/dY vanishes at the seed") {}
};
struct SeedNotRoot : std::domain_error {
    SeedNotRoot() : std::domain_error("seed is not a root of Q(Y, 0)") {}
};
struct InsufficientOrder : std::domain_error {
    InsufficientOrder() : std::domain_error("series order does not exceed the prime bound") {}
};

/// A branch of an algebraic function: Q(series(x), x) = 0 to truncation
/// order, expanded from the seed value series(0) by Newton iteration.
/// `defining[i]` is the coefficient of Y^i, a polynomial in x over Z.
struct AlgebraicBranch {
    std::vector<IntPoly> defining;
    Rat seed;
    TruncatedSeries series;
};

/// Substitute a truncated series for Y in Q(Y, x).
TruncatedSeries eval_bivariate(const std::vector<IntPoly>& q, const TruncatedSeries& s);

AlgebraicBranch expand_branch(const std::vector<IntPoly>& defining, const Rat& seed,
                              std::size_t order);

/// The degree-3 function with series 1 + x^2 + O(x^3) cut out by
/// (6x^5-3x^4+2x^3+3x^2-1) Y^3 + (x^5-x^4+x^3+2x^2-1) Y^2 + (x^3-x^2+1) Y + 1.
std::vector<IntPoly> cubic_example_defining();

struct CongruenceReport {
    int power = 1;                                     // 1: s(p) mod p, 2: mod p^2
    uint64_t prime_bound = 0;
    std::vector<std::pair<uint64_t, Int>> exceptions;  // primes with s(p) != 0, and the residue
    std::vector<uint64_t> bad_primes;                  // primes dividing a coefficient denominator
};

/// Closed-form coefficient rule: n, modulus -> s(n) mod modulus.
using CoefficientRule = std::function<Int(uint64_t, const Int&)>;

/// Exact congruence sweep s(p) ?= 0 mod p^power over all primes p <= bound.
/// Branch mode requires the series order to exceed the bound. Primes dividing
/// any coefficient denominator at index <= p are reported as bad_primes and
/// not tested (the congruence is undefined there).
CongruenceReport fermat_test(const AlgebraicBranch& branch, int power, uint64_t prime_bound,
                             bool parallel = true);
CongruenceReport fermat_test(const CoefficientRule& rule, int power, uint64_t prime_bound,
                             bool parallel = true);

Int rule_mersenne(uint64_t n, const Int& modulus);              // 2^(n-1) - 1
Int rule_central_binomial_minus_2(uint64_t n, const Int& m);    // C(2n, n) - 2

}  // namespace ntlab
