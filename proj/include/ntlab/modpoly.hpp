#pragma once

#include "ntlab/intpoly.hpp"
#include "ntlab/rational.hpp"

#include <cstdint>
#include <vector>

namespace ntlab {

/// Dense polynomial over F_p for word-size odd primes. Coefficients low to
/// high, normalized (no trailing zeros).
class ModPoly {
public:
    ModPoly() : p_(2) {}
    explicit ModPoly(uint64_t p) : p_(p) {}
    ModPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) { normalize(); }

    static ModPoly from_int_poly(const IntPoly& f, uint64_t p);
    static ModPoly x(uint64_t p) { return ModPoly(p, {0, 1}); }

    uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t lc() const { return c_.back(); }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly scaled(uint64_t k) const;

    ModPoly monic() const;
    static void divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
    ModPoly rem(const ModPoly& m) const;
    static ModPoly gcd(ModPoly a, ModPoly b);  // monic result

    ModPoly mulmod(const ModPoly& o, const ModPoly& m) const;
    ModPoly powmod(const Int& e, const ModPoly& m) const;

    /// Degrees of the distinct-degree splitting: returns the multiset of
    /// irreducible factor degrees of a squarefree input (with multiplicity
    /// of count, one entry per irreducible factor).
    std::vector<int> factor_degrees() const;

    /// Full factorization of a squarefree monic polynomial into monic
    /// irreducibles (Cantor-Zassenhaus with a deterministic seed).
    std::vector<ModPoly> factor_squarefree() const;

    uint64_t mulm(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    uint64_t subm(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t addm(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p_ ? s - p_ : s; }
    uint64_t invm(uint64_t a) const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    uint64_t p_;
    std::vector<uint64_t> c_;
};

}  // namespace ntlab
