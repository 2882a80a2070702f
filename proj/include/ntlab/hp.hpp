#pragma once

#include "ntlab/rational.hpp"

#include <mpfr.h>
#include <string>
#include <utility>

namespace ntlab {

/// Working precision in bits for a decimal-digit request, with guard bits.
inline mpfr_prec_t prec_bits(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 40);
}

/// Arbitrary-precision real with value semantics. The precision travels with
/// the value; binary operations produce results at the larger operand
/// precision, so a computation's precision is fixed by its inputs and never
/// read from global state.
class HPReal {
public:
    HPReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit HPReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    HPReal(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
    HPReal(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }
    HPReal(const Int& x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    HPReal(const Rat& x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    HPReal(const std::string& s, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }

    HPReal(const HPReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    HPReal(HPReal&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    HPReal& operator=(const HPReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    HPReal& operator=(HPReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~HPReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static HPReal pi(mpfr_prec_t bits) { HPReal r(bits); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static HPReal euler(mpfr_prec_t bits) { HPReal r(bits); mpfr_const_euler(r.v_, MPFR_RNDN); return r; }

#define NTLAB_HP_BINOP(op, fn)                                        \
    HPReal operator op(const HPReal& o) const {                      \
        HPReal r(std::max(prec(), o.prec()));                        \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                               \
        return r;                                                    \
    }
    NTLAB_HP_BINOP(+, mpfr_add)
    NTLAB_HP_BINOP(-, mpfr_sub)
    NTLAB_HP_BINOP(*, mpfr_mul)
    NTLAB_HP_BINOP(/, mpfr_div)
#undef NTLAB_HP_BINOP

    HPReal operator-() const { HPReal r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    HPReal operator*(long k) const { HPReal r(prec()); mpfr_mul_si(r.v_, v_, k, MPFR_RNDN); return r; }
    HPReal operator/(long k) const { HPReal r(prec()); mpfr_div_si(r.v_, v_, k, MPFR_RNDN); return r; }
    HPReal operator+(long k) const { HPReal r(prec()); mpfr_add_si(r.v_, v_, k, MPFR_RNDN); return r; }
    HPReal operator-(long k) const { HPReal r(prec()); mpfr_sub_si(r.v_, v_, k, MPFR_RNDN); return r; }

    HPReal& operator+=(const HPReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator-=(const HPReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator*=(const HPReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    HPReal& operator/=(const HPReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

#define NTLAB_HP_FN(name, fn) \
    HPReal name() const { HPReal r(prec()); fn(r.v_, v_, MPFR_RNDN); return r; }
    NTLAB_HP_FN(abs, mpfr_abs)
    NTLAB_HP_FN(sqrt, mpfr_sqrt)
    NTLAB_HP_FN(exp, mpfr_exp)
    NTLAB_HP_FN(log, mpfr_log)
    NTLAB_HP_FN(sin, mpfr_sin)
    NTLAB_HP_FN(cos, mpfr_cos)
    NTLAB_HP_FN(floor, mpfr_rint_floor)
#undef NTLAB_HP_FN

    HPReal pow_si(long e) const { HPReal r(prec()); mpfr_pow_si(r.v_, v_, e, MPFR_RNDN); return r; }
    static HPReal atan2(const HPReal& y, const HPReal& x) {
        HPReal r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    static HPReal hypot(const HPReal& x, const HPReal& y) {
        HPReal r(std::max(y.prec(), x.prec()));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    /// 2^e at this value's precision.
    HPReal ldexp(long e) const { HPReal r(prec()); mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN); return r; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int cmp(const HPReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const HPReal& o) const { return cmp(o) < 0; }
    bool operator>(const HPReal& o) const { return cmp(o) > 0; }
    bool operator<=(const HPReal& o) const { return cmp(o) <= 0; }
    bool operator>=(const HPReal& o) const { return cmp(o) >= 0; }
    bool operator==(const HPReal& o) const { return mpfr_equal_p(v_, o.v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

private:
    mpfr_t v_;
};

inline HPReal operator*(long k, const HPReal& x) { return x * k; }

/// Complex number over HPReal. Precision and rounding follow the real parts.
struct HPComplex {
    HPReal re, im;

    HPComplex() = default;
    explicit HPComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
    HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}
    HPComplex(double r, double i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_real() const { return im.is_zero(); }

    HPComplex operator+(const HPComplex& o) const { return {re + o.re, im + o.im}; }
    HPComplex operator-(const HPComplex& o) const { return {re - o.re, im - o.im}; }
    HPComplex operator-() const { return {-re, -im}; }
    HPComplex operator*(const HPComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    HPComplex operator*(const HPReal& k) const { return {re * k, im * k}; }
    HPComplex operator/(const HPComplex& o) const {
        HPReal d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    HPComplex operator/(long k) const { return {re / k, im / k}; }
    HPComplex& operator+=(const HPComplex& o) { re += o.re; im += o.im; return *this; }
    HPComplex& operator-=(const HPComplex& o) { re -= o.re; im -= o.im; return *this; }

    HPComplex conj() const { return {re, -im}; }
    HPReal abs() const { return HPReal::hypot(re, im); }
    HPReal norm() const { return re * re + im * im; }

    HPComplex exp() const {
        HPReal m = re.exp();
        return {m * im.cos(), m * im.sin()};
    }
    HPComplex log() const { return {abs().log(), HPReal::atan2(im, re)}; }
    HPComplex sqrt() const;
    /// z^w = exp(w log z), principal branch.
    HPComplex pow(const HPComplex& w) const { return (w * log()).exp(); }
    HPComplex pow_si(long e) const;

    bool operator==(const HPComplex& o) const { return re == o.re && im == o.im; }

    std::string str(int digits = 20) const { return re.str(digits) + (im.sign() < 0 ? "" : "+") + im.str(digits) + "i"; }
};

/// (base real > 0)^(-s) = exp(-s ln base); the workhorse of zeta sums.
HPComplex pow_real_neg_exponent(const HPReal& base, const HPComplex& s);

}  // namespace ntlab
