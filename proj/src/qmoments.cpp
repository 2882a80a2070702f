#include "ntlab/qmoments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <mutex>

namespace ntlab {

Rat QRational::eval_derivative_at_minus1(unsigned j) const {
    // d^j/dz^j sum a_e z^e = sum a_e e(e-1)...(e-j+1) z^(e-j), at z = -1
    Rat acc(0);
    for (std::size_t i = 0; i < laurent.size(); ++i) {
        if (laurent[i] == 0) continue;
        long e = lo_exp + static_cast<long>(i);
        Int ff = 1;
        for (unsigned t = 0; t < j; ++t) ff *= Int(e - static_cast<long>(t));
        if (ff == 0) continue;
        // (-1)^(e-j): parity of |e-j|
        bool neg = ((e - static_cast<long>(j)) % 2) != 0;
        Rat term = laurent[i] * Rat(ff);
        acc += neg ? -term : term;
    }
    return acc;
}

std::vector<Rat> QRational::numerator_poly() const {
    // B_n(z) = z^(n+1) Q_n(z): shift exponents by n+1
    std::vector<Rat> out;
    long shift = lo_exp + n + 1;
    if (shift < 0) throw std::logic_error("numerator_poly: unexpected exponent range");
    out.assign(laurent.size() + shift, Rat(0));
    for (std::size_t i = 0; i < laurent.size(); ++i) out[i + shift] = laurent[i];
    return out;
}

std::vector<QRational> q_polys(int N) {
    std::vector<QRational> qs;
    qs.reserve(N + 1);
    {
        QRational q0;
        q0.n = 0;
        q0.lo_exp = -1;
        q0.laurent = {Rat(-1, 2)};
        qs.push_back(std::move(q0));
    }
    // cache of (1/j!) d^j Q_m (-1)
    std::vector<std::vector<Rat>> deriv(N + 1);
    for (int n = 1; n <= N; ++n) {
        QRational q;
        q.n = n;
        q.lo_exp = -n - 1;
        q.laurent.assign(2 * n + 1, Rat(0));  // exponents -n-1 .. n-1
        Rat half(1, 2);
        for (int j = 0; j <= n - 1; ++j) {
            int m = n - j - 1;
            if (deriv[m].size() <= static_cast<std::size_t>(j))
                deriv[m].resize(j + 1, Rat(0));
            Rat& dj = deriv[m][j];
            if (dj == 0) dj = qs[m].eval_derivative_at_minus1(j) / Rat(factorial(j));
            Rat c = half * dj;
            if (c == 0) continue;
            q.laurent[(j) - q.lo_exp] += c;        // z^j
            q.laurent[(-j - 2) - q.lo_exp] -= c;   // -z^(-j-2)
        }
        qs.push_back(std::move(q));
    }
    return qs;
}

std::vector<Rat> lambda_coefficients(int N) {
    auto qs = q_polys(N);
    std::vector<Rat> out;
    out.reserve(N + 1);
    for (auto& q : qs) out.push_back(q.eval_derivative_at_minus1(1));
    return out;
}

LambdaValue lambda_eval(const HPReal& t, int n_terms, int digits) {
    const mpfr_prec_t wp = prec_bits(digits + 15);
    static std::vector<Rat> coeff_cache;
    static std::mutex mu;
    std::vector<Rat> coeffs;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (static_cast<int>(coeff_cache.size()) < n_terms + 1)
            coeff_cache = lambda_coefficients(n_terms);
        coeffs.assign(coeff_cache.begin(), coeff_cache.begin() + n_terms + 1);
    }
    HPReal tw(wp);
    mpfr_set(tw.raw(), t.raw(), MPFR_RNDN);

    HPReal sum(wp), tpow(1.0, wp), running_scale(1.0, wp);
    std::vector<HPReal> tail_mags;
    HPReal last_mag(wp);
    for (int n = 0; n <= n_terms; ++n) {
        Rat c = coeffs[n] / Rat(factorial(n));
        HPReal term = HPReal(c, wp) * tpow;
        sum += term;
        HPReal mag = term.abs();
        if (sum.abs() > running_scale) running_scale = sum.abs();
        if (mag > running_scale) running_scale = mag;
        tail_mags.push_back(mag);
        last_mag = mag;
        tpow *= tw;
    }
    // settling: the last 10 terms must be below 10^(-digits) * scale
    HPReal eps = pow_real_neg_exponent(HPReal(10.0, wp),
                                       HPComplex(HPReal(double(digits), wp), HPReal(wp))).re;
    HPReal thresh = eps * running_scale;
    int from = std::max(0, static_cast<int>(tail_mags.size()) - 10);
    HPReal worst(wp);
    for (std::size_t i = from; i < tail_mags.size(); ++i)
        if (tail_mags[i] > worst) worst = tail_mags[i];
    if (!(worst < thresh) && !tw.is_zero())
        throw SeriesNotSettled("trailing terms at t = " + tw.str(6) + " are " + worst.str(3) +
                               " of scale " + running_scale.str(3) + "; raise n_terms");

    // empirical tail bound: geometric extrapolation of the worst trailing ratio
    HPReal ratio(0.5, wp);
    for (std::size_t i = from; i + 1 < tail_mags.size(); ++i) {
        if (tail_mags[i].is_zero()) continue;
        HPReal r = tail_mags[i + 1] / tail_mags[i];
        if (r > ratio) ratio = r;
    }
    LambdaValue lv{HPReal(wp), HPReal(wp), n_terms};
    lv.value = sum;
    if (ratio < HPReal(0.99, wp))
        lv.tail_bound = last_mag * ratio / (HPReal(1.0, wp) - ratio);
    else
        lv.tail_bound = thresh * 100l;  // ratios not contracting; settled check already passed
    return lv;
}

namespace {

/// Gauss-Legendre nodes/weights on [-1, 1] at working precision (Newton on
/// Legendre polynomials from double seeds).
void gauss_legendre(int n, mpfr_prec_t wp, std::vector<HPReal>& x, std::vector<HPReal>& w) {
    x.assign(n, HPReal(wp));
    w.assign(n, HPReal(wp));
    for (int i = 0; i < n; ++i) {
        double seed = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        HPReal xi(seed, wp);
        for (int it = 0; it < 64; ++it) {
            // evaluate P_n and P_n' by the three-term recurrence
            HPReal p0(1.0, wp), p1 = xi;
            for (int k = 2; k <= n; ++k) {
                HPReal pk = (xi * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
                p0 = p1;
                p1 = pk;
            }
            HPReal dp = (xi * p1 - p0) * n / (xi * xi - HPReal(1.0, wp));
            HPReal step = p1 / dp;
            xi -= step;
            if (step.abs() < HPReal(1.0, wp).ldexp(-(wp - 6))) break;
        }
        HPReal p0(1.0, wp), p1 = xi;
        for (int k = 2; k <= n; ++k) {
            HPReal pk = (xi * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
            p0 = p1;
            p1 = pk;
        }
        HPReal dp = (xi * p1 - p0) * n / (xi * xi - HPReal(1.0, wp));
        x[i] = xi;
        w[i] = HPReal(2.0, wp) / ((HPReal(1.0, wp) - xi * xi) * dp * dp);
    }
}

HPReal integrate_panels(double T, int panels, int n_terms, int digits, HPReal& max_tail) {
    const mpfr_prec_t wp = prec_bits(digits + 15);
    std::vector<HPReal> gx, gw;
    gauss_legendre(24, wp, gx, gw);
    HPReal acc(wp);
    max_tail = HPReal(wp);
    for (int p = 0; p < panels; ++p) {
        HPReal a(T * p / panels, wp), b(T * (p + 1) / panels, wp);
        HPReal mid = (a + b) / 2l, half = (b - a) / 2l;
        for (std::size_t i = 0; i < gx.size(); ++i) {
            HPReal t = mid + half * gx[i];
            LambdaValue lv = lambda_eval(t, n_terms, digits);
            if (lv.tail_bound > max_tail) max_tail = lv.tail_bound;
            acc += gw[i] * half * lv.value * (-t).exp();
        }
    }
    return acc;
}

}  // namespace

LaplaceResult laplace_integral(double t_cutoff, int n_terms, int digits) {
    LaplaceResult res{HPReal(prec_bits(digits + 15)), HPReal(prec_bits(digits + 15)),
                      HPReal(prec_bits(digits + 15)), t_cutoff, n_terms};
    const mpfr_prec_t wp = prec_bits(digits + 15);
    int panels = std::max(4, static_cast<int>(t_cutoff));
    HPReal tail1(wp), tail2(wp);
    HPReal coarse = integrate_panels(t_cutoff, panels, n_terms, digits, tail1);
    HPReal fine = integrate_panels(t_cutoff, 2 * panels, n_terms, digits, tail2);
    res.value = fine;
    res.quadrature_error = (fine - coarse).abs() + (tail1 + tail2) * HPReal(t_cutoff, wp);

    // tail beyond T: |Lambda| is extrapolated from its values at T-1 and T
    LambdaValue lT = lambda_eval(HPReal(t_cutoff, wp), n_terms, digits);
    LambdaValue lT1 = lambda_eval(HPReal(t_cutoff - 1.0, wp), n_terms, digits);
    double mT = std::abs(lT.value.to_double()), mT1 = std::abs(lT1.value.to_double());
    double rho = (mT1 > 0 && mT > 0) ? std::log(mT / mT1) : 0.0;
    rho = std::max(rho, 0.0);
    if (rho >= 0.9)
        throw SeriesNotSettled("Lambda appears to grow like exp(" + std::to_string(rho) +
                               " t) near the cutoff; integral tail not controllable");
    HPReal m(std::max(mT, 1e-300), wp);
    // integral_T^inf M e^(rho (t-T)) e^(-t) dt = M e^(-T) / (1 - rho)
    res.tail_bound = m * (-HPReal(t_cutoff, wp)).exp() / HPReal(1.0 - rho, wp);
    return res;
}

Rat question_mark(const Rat& x) {
    if (x < 0 || x > 1) throw std::domain_error("question_mark: x outside [0, 1]");
    if (x == 0) return Rat(0);
    if (x == 1) return Rat(1);
    // continued fraction digits of x = [0; a1, a2, ...]
    Int p = x.get_num(), q = x.get_den();
    // x in (0,1): first step inverts
    std::vector<Int> digits;
    Int num = q, den = p;  // 1/x
    while (den != 0) {
        Int a = num / den;
        digits.push_back(a);
        Int r = num - a * den;
        num = den;
        den = r;
    }
    Rat acc(0);
    Int expo = 0;
    int sign = 1;
    for (const Int& a : digits) {
        expo += a;
        // term 2^(1 - expo)
        Rat term;
        Int e = expo - 1;
        term = Rat(Int(1), Int(1) << e.get_ui());
        acc += sign > 0 ? term : -term;
        sign = -sign;
    }
    return acc;
}

Rat question_mark_inverse_dyadic(const Int& k, int depth) {
    if (k < 0 || k > (Int(1) << depth)) throw std::domain_error("inverse: k outside range");
    // Stern-Brocot descent: bit b of y chooses the half; mediants refine
    Int pl = 0, ql = 1, pr = 1, qr = 1;
    for (int level = depth - 1; level >= 0; --level) {
        Int pm = pl + pr, qm = ql + qr;
        if (mpz_tstbit(k.get_mpz_t(), level)) {
            pl = pm; ql = qm;
        } else {
            pr = pm; qr = qm;
        }
    }
    return make_rat(pl, ql);
}

QuestionMarkMoment question_mark_moment(int L, int depth, bool parallel) {
    const mpfr_prec_t wp = prec_bits(40);
    QuestionMarkMoment m{L, depth, HPReal(wp), HPReal(wp)};
    if (L == 0) {
        m.lower = HPReal(1.0, wp);
        m.upper = HPReal(1.0, wp);
        return m;
    }
    const int split = std::min(depth, 8);
    const long tasks = 1l << split;

    std::vector<HPReal> lows(tasks, HPReal(wp)), highs(tasks, HPReal(wp));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long task = 0; task < tasks; ++task) {
        // descend to the subtree root for this task
        long pl = 0, ql = 1, pr = 1, qr = 1;
        for (int level = split - 1; level >= 0; --level) {
            long pm = pl + pr, qm = ql + qr;
            if ((task >> level) & 1) { pl = pm; ql = qm; }
            else { pr = pm; qr = qm; }
        }
        HPReal lo_acc(wp), hi_acc(wp);
        // iterative DFS over the remaining depth
        struct Node { long pl, ql, pr, qr; int level; };
        std::vector<Node> stack{{pl, ql, pr, qr, depth - split}};
        while (!stack.empty()) {
            Node nd = stack.back();
            stack.pop_back();
            if (nd.level == 0) {
                // cell [pl/ql, pr/qr], weight 2^-depth folded in at the end
                HPReal xl(wp), xr(wp);
                mpfr_set_si(xl.raw(), nd.pl, MPFR_RNDD);
                mpfr_div_si(xl.raw(), xl.raw(), nd.ql, MPFR_RNDD);
                mpfr_set_si(xr.raw(), nd.pr, MPFR_RNDU);
                mpfr_div_si(xr.raw(), xr.raw(), nd.qr, MPFR_RNDU);
                // x^L with directed rounding
                HPReal tl(1.0, wp), tr(1.0, wp);
                for (int i = 0; i < L; ++i) {
                    mpfr_mul(tl.raw(), tl.raw(), xl.raw(), MPFR_RNDD);
                    mpfr_mul(tr.raw(), tr.raw(), xr.raw(), MPFR_RNDU);
                }
                mpfr_add(lo_acc.raw(), lo_acc.raw(), tl.raw(), MPFR_RNDD);
                mpfr_add(hi_acc.raw(), hi_acc.raw(), tr.raw(), MPFR_RNDU);
                continue;
            }
            long pm = nd.pl + nd.pr, qm = nd.ql + nd.qr;
            stack.push_back({pm, qm, nd.pr, nd.qr, nd.level - 1});
            stack.push_back({nd.pl, nd.ql, pm, qm, nd.level - 1});
        }
        lows[task] = lo_acc;
        highs[task] = hi_acc;
    }
    HPReal lo(wp), hi(wp);
    for (long t = 0; t < tasks; ++t) {
        mpfr_add(lo.raw(), lo.raw(), lows[t].raw(), MPFR_RNDD);
        mpfr_add(hi.raw(), hi.raw(), highs[t].raw(), MPFR_RNDU);
    }
    mpfr_div_2si(lo.raw(), lo.raw(), depth, MPFR_RNDD);
    mpfr_div_2si(hi.raw(), hi.raw(), depth, MPFR_RNDU);
    m.lower = lo;
    m.upper = hi;
    return m;
}

}  // namespace ntlab
