#include "ntlab/hp.hpp"

#include <cstdlib>

namespace ntlab {

std::string HPReal::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::string out = neg ? "-" : "";
    // scientific for extreme exponents, plain decimal otherwise
    if (e < -4 || e > digits + 6) {
        out += d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(e - 1);
    } else if (e <= 0) {
        out += "0." + std::string(-e, '0') + d;
    } else if (static_cast<std::size_t>(e) >= d.size()) {
        out += d + std::string(e - d.size(), '0');
    } else {
        out += d.substr(0, e) + "." + d.substr(e);
    }
    return out;
}

HPComplex HPComplex::sqrt() const {
    mpfr_prec_t p = prec();
    if (im.is_zero()) {
        if (re.sign() >= 0) return {re.sqrt(), HPReal(p)};
        return {HPReal(p), (-re).sqrt()};
    }
    // w = sqrt((|z| + re)/2), result (w, im/(2w)) for re >= 0; mirrored otherwise
    HPReal r = abs();
    HPReal two(2l, p);
    if (re.sign() >= 0) {
        HPReal w = ((r + re) / two).sqrt();
        return {w, im / (w * two)};
    }
    HPReal w = ((r - re) / two).sqrt();
    if (im.sign() >= 0) return {im / (w * two), w};
    return {-(im / (w * two)), -w};
}

HPComplex HPComplex::pow_si(long e) const {
    mpfr_prec_t p = prec();
    HPComplex acc(HPReal(1.0, p), HPReal(p));
    if (e == 0) return acc;
    bool inv = e < 0;
    unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    HPComplex base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    if (inv) return HPComplex(HPReal(1.0, p), HPReal(p)) / acc;
    return acc;
}

HPComplex pow_real_neg_exponent(const HPReal& base, const HPComplex& s) {
    HPReal l = base.log();
    HPComplex w(-(s.re * l), -(s.im * l));
    return w.exp();
}

}  // namespace ntlab
