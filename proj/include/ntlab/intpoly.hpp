#pragma once

#include "ntlab/rational.hpp"

#include <string>
#include <vector>

namespace ntlab {

/// Dense univariate polynomial over Z, coefficients low to high, no trailing
/// zero (the zero polynomial has an empty coefficient vector).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly x();
    static IntPoly constant(const Int& c);
    /// Monomials given as (exponent, coefficient) pairs.
    static IntPoly from_terms(const std::vector<std::pair<unsigned, Int>>& terms);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lc() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;
    IntPoly operator-() const;

    IntPoly derivative() const;
    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    /// Content (gcd of coefficients, sign of the leading coefficient).
    Int content() const;
    IntPoly primitive_part() const;

    /// Exact division; throws std::domain_error when the remainder is nonzero.
    IntPoly divide_exact(const IntPoly& d) const;
    /// True (and sets q) iff d divides this exactly over Z.
    bool try_divide(const IntPoly& d, IntPoly& q) const;

    /// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a = q*d + r.
    static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& d);

    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    static Int resultant(const IntPoly& a, const IntPoly& b);
    Int discriminant() const;

    /// Squarefree part p / gcd(p, p').
    IntPoly squarefree_part() const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Int> c_;
};

/// Fraction-free Bareiss determinant; destroys its argument.
Int det_bareiss(std::vector<std::vector<Int>>& m);

}  // namespace ntlab
