#include "ntlab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace ntlab {

Rat bernoulli(unsigned n) {
    static std::vector<Rat> cache{Rat(1), Rat(-1, 2)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        unsigned m = cache.size();
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rat acc(0);
        for (unsigned k = 0; k < m; ++k) {
            if (cache[k] == 0) continue;
            acc += Rat(binomial(m + 1, k)) * cache[k];
        }
        Rat b = -acc / Rat(static_cast<long>(m) + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[n];
}

namespace {

bool equals_one(const HPComplex& s) {
    return s.im.is_zero() && mpfr_cmp_ui(s.re.raw(), 1) == 0;
}

}  // namespace

HPComplex hurwitz_zeta(const HPComplex& s, const HPReal& a, int digits) {
    if (equals_one(s)) throw PoleAtOne();
    const mpfr_prec_t wp = prec_bits(digits + 10);
    const double sig = s.re.to_double();
    const double imag = std::abs(s.im.to_double());
    const double ad = a.to_double();

    HPComplex sw(wp);
    mpfr_set(sw.re.raw(), s.re.raw(), MPFR_RNDN);
    mpfr_set(sw.im.raw(), s.im.raw(), MPFR_RNDN);

    HPReal eps_target(wp);
    {
        HPReal ten(10l, wp);
        eps_target = pow_real_neg_exponent(ten, HPComplex(HPReal(double(digits + 3), wp), HPReal(wp))).re;
    }

    long M = static_cast<long>(digits * 0.7 + imag * 0.6 + 8.0 - std::min(0.0, sig));
    if (M < 8) M = 8;

    const HPReal two_pi = HPReal::pi(wp) * 2l;

    for (int attempt = 0; attempt < 12; ++attempt, M *= 2) {
        // direct part
        HPComplex sum(wp);
        for (long n = 0; n < M; ++n) {
            HPReal base = a + n;
            sum += pow_real_neg_exponent(base, sw);
        }
        HPReal na = a + M;  // M + a
        // (M+a)^{1-s} / (s-1)
        HPComplex s_minus_1(sw.re - 1l, sw.im);
        HPComplex t1 = pow_real_neg_exponent(na, s_minus_1) / s_minus_1;
        // (M+a)^{-s} / 2
        HPComplex na_pow = pow_real_neg_exponent(na, sw);
        HPComplex t2 = na_pow / 2l;
        HPComplex total = sum + t1 + t2;

        HPReal scale = total.abs() + HPReal(1.0, wp);
        HPReal eps = eps_target * scale;

        // Euler-Maclaurin correction terms:
        //   B_{2j}/(2j)! * (s)_{2j-1} * (M+a)^{-s-2j+1}
        HPReal na_m2 = (HPReal(1.0, wp) / na) * (HPReal(1.0, wp) / na);
        HPComplex power = na_pow * (na / 1l);  // (M+a)^{-s+1}
        HPComplex poch(HPReal(1.0, wp), HPReal(wp));  // (s)_{2j-1} built incrementally
        HPComplex em(wp);
        HPReal prev_bound(wp);
        bool prev_valid = false;
        bool done = false;

        for (unsigned j = 1; j <= 400; ++j) {
            // poch: multiply (s + 2j - 3)(s + 2j - 2) except j = 1 multiplies s alone
            if (j == 1) {
                poch = sw;
            } else {
                HPComplex f1(sw.re + (2l * j - 3l), sw.im);
                HPComplex f2(sw.re + (2l * j - 2l), sw.im);
                poch = poch * f1 * f2;
            }
            power = power * na_m2;  // now (M+a)^{-s-2j+1}
            Rat bf = bernoulli(2 * j) / Rat(factorial(2 * j));
            HPComplex term = poch * power * HPComplex(HPReal(bf, wp), HPReal(wp));
            em += term;

            // rigorous remainder bound, valid once sig + 2j + 1 > 1:
            //   |R_j| <= 4 |(s)_{2j+2}| / (2pi)^{2j+2} * (M+a)^{-sig-2j-1} / (sig+2j+1)
            double denom_ok = sig + 2.0 * j + 1.0;
            if (denom_ok > 1.0) {
                HPComplex poch_ext = poch *
                    HPComplex(sw.re + (2l * j - 1l), sw.im) *
                    HPComplex(sw.re + (2l * j), sw.im) *
                    HPComplex(sw.re + (2l * j + 1l), sw.im);
                HPReal num = poch_ext.abs() * 4l;
                HPReal den = two_pi.pow_si(2 * j + 2) * HPReal(denom_ok, wp);
                HPReal napow = na.pow_si(static_cast<long>(2 * j + 1));
                // (M+a)^{-sig}: reuse |na_pow| = (M+a)^{-sig}
                HPReal bound = num / den / napow * na_pow.abs();
                if (bound < eps) {
                    done = true;
                    break;
                }
                if (prev_valid && bound > prev_bound) break;  // diverging: raise M
                prev_bound = bound;
                prev_valid = true;
            }
        }
        if (done) {
            HPComplex out(HPReal(prec_bits(digits)), HPReal(prec_bits(digits)));
            HPComplex r = total + em;
            mpfr_set(out.re.raw(), r.re.raw(), MPFR_RNDN);
            mpfr_set(out.im.raw(), r.im.raw(), MPFR_RNDN);
            return out;
        }
    }
    throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin did not reach the target accuracy");
}

HPComplex riemann_zeta(const HPComplex& s, int digits) {
    return hurwitz_zeta(s, HPReal(1.0, prec_bits(digits + 10)), digits);
}

HPComplex riemann_zeta_minus_one(const HPComplex& s, int digits) {
    return hurwitz_zeta(s, HPReal(2.0, prec_bits(digits + 10)), digits);
}

}  // namespace ntlab
