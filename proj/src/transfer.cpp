#include "ntlab/transfer.hpp"
#include "ntlab/zeta.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace ntlab {

namespace {

bool arg_is_one(const HPComplex& s, long c) {
    // 2s + c == 1  <=>  s real and 2*re(s) == 1 - c
    if (!s.im.is_zero()) return false;
    HPReal lhs = s.re * 2l;
    return mpfr_cmp_si(lhs.raw(), 1 - c) == 0;
}

}  // namespace

OperatorTruncation build_truncation(const HPComplex& s, int N, int digits, bool parallel) {
    if (N < 1) throw std::invalid_argument("build_truncation: N >= 1 required");
    const mpfr_prec_t wp = prec_bits(digits + 10);
    HPComplex sw(wp);
    mpfr_set(sw.re.raw(), s.re.raw(), MPFR_RNDN);
    mpfr_set(sw.im.raw(), s.im.raw(), MPFR_RNDN);

    const int cmax = 2 * N - 2;
    std::vector<HPComplex> zm1(cmax + 1, HPComplex(wp));
    std::vector<char> polar(cmax + 1, 0);
    for (int c = 0; c <= cmax; ++c) polar[c] = arg_is_one(sw, c) ? 1 : 0;
    // row 0 uses argument indices c = k - j in [0, N-1]; a polar index there
    // has no compensating binomial zero
    for (int c = 0; c <= std::min(cmax, N - 1); ++c)
        if (polar[c])
            throw ZetaPole("zeta argument 2s + " + std::to_string(c) +
                           " hits the pole at 1 in the constant-term row");

    // zeta(2s + c) - 1 for the non-polar indices, in parallel
    {
        std::vector<int> todo;
        for (int c = 0; c <= cmax; ++c)
            if (!polar[c]) todo.push_back(c);
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::size_t i = 0; i < todo.size(); ++i) {
            try {
                int c = todo[i];
                HPComplex arg(sw.re * 2l + static_cast<long>(c), sw.im * 2l);
                zm1[c] = riemann_zeta_minus_one(arg, digits + 10);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    }

    // generalized binomials binom(2s + c - 1, n) for c in [0, cmax], n in [0, N-1]
    std::vector<std::vector<HPComplex>> bfac(cmax + 1);
    for (int c = 0; c <= cmax; ++c) {
        bfac[c].resize(N, HPComplex(wp));
        bfac[c][0] = HPComplex(HPReal(1.0, wp), HPReal(wp));
        HPComplex w(sw.re * 2l + static_cast<long>(c - 1), sw.im * 2l);
        for (int n = 1; n < N; ++n) {
            HPComplex num(w.re - static_cast<long>(n - 1), w.im);
            bfac[c][n] = bfac[c][n - 1] * num / static_cast<long>(n);
        }
    }

    // Pascal triangle C(k, j) as HPReal
    std::vector<std::vector<HPReal>> pas(N);
    for (int k = 0; k < N; ++k) {
        pas[k].resize(k + 1, HPReal(wp));
        for (int j = 0; j <= k; ++j) pas[k][j] = HPReal(binomial(k, j), wp);
    }

    OperatorTruncation tr;
    tr.s = sw;
    tr.dim = N;
    tr.digits = digits;
    tr.matrix = HPMatrix(N, wp);

#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
    for (int n = 0; n < N; ++n) {
        for (int k = 0; k < N; ++k) {
            HPComplex acc(wp);
            for (int j = 0; j <= k; ++j) {
                int c = n + k - j;
                if (polar[c]) {
                    // limit of binom(2s+c-1, n) * (zeta(2s+c) - 1) as the
                    // argument passes through 1: (-1)^(n-1)/n, n >= 1
                    HPReal lim = pas[k][j] / static_cast<long>(n);
                    if (j % 2 == 0) lim = -lim;  // total sign (-1)^(j+1)
                    acc += HPComplex(lim, HPReal(wp));
                } else {
                    HPComplex term = bfac[c][n] * zm1[c] * pas[k][j];
                    if ((j + n) % 2 != 0) term = -term;
                    acc += term;
                }
            }
            tr.matrix.at(n, k) = acc;
        }
    }
    return tr;
}

SpectrumReport spectrum(const HPComplex& s, int N, int digits) {
    OperatorTruncation tr = build_truncation(s, N, digits);
    SpectrumReport rep;
    rep.s = tr.s;
    rep.digits = digits;
    rep.dim = N;
    rep.eigenvalues = eigenvalues(tr.matrix, digits);
    sort_canonical(rep.eigenvalues);
    return rep;
}

ZeroIndexRecord t_of_rho(const HPComplex& rho, int N, int digits) {
    if (rho.im.sign() <= 0) throw std::invalid_argument("t_of_rho: Im(rho) > 0 required");
    SpectrumReport rep = spectrum(rho / 2l, N, digits);
    const mpfr_prec_t wp = prec_bits(digits + 10);
    HPComplex one(HPReal(1.0, wp), HPReal(wp));
    int best = -1;
    HPReal best_d(wp);
    for (int i = 0; i < rep.dim; ++i) {
        HPReal d = (rep.eigenvalues[i] - one).abs();
        if (best < 0 || d < best_d) {
            best_d = d;
            best = i;
        }
    }
    HPReal second_d(wp);
    bool have_second = false;
    for (int i = 0; i < rep.dim; ++i) {
        if (i == best) continue;
        HPReal d = (rep.eigenvalues[i] - one).abs();
        if (!have_second || d < second_d) {
            second_d = d;
            have_second = true;
        }
    }
    ZeroIndexRecord rec;
    rec.rho = rho;
    rec.index = best + 1;
    rec.residual = best_d;
    rec.runner_up_gap = have_second ? second_d : best_d;
    rec.dim = N;
    rec.digits = digits;
    if (have_second && second_d < best_d * 2l)
        throw AmbiguousIndex("runner-up gap " + second_d.str(6) + " < 2 * residual " +
                             best_d.str(6) + "; raise N");
    return rec;
}

SelbergFactorReport selberg_factors(const HPComplex& s, int N, int digits) {
    SpectrumReport rep = spectrum(s, N, digits);
    const mpfr_prec_t wp = prec_bits(digits + 10);
    SelbergFactorReport out;
    out.s = rep.s;
    out.digits = digits;
    out.dim = N;
    HPComplex one(HPReal(1.0, wp), HPReal(wp));
    HPComplex prod = one;
    for (int i = 0; i < rep.dim; ++i) {
        HPComplex f = one - rep.eigenvalues[i] * rep.eigenvalues[i];
        out.factors.emplace_back(i + 1, f);
        prod = prod * f;
    }
    out.truncated_product = prod;
    return out;
}

int cusp_form_dimension(int weight) {
    if (weight < 12 || weight % 2 != 0) return 0;
    int d = weight / 12;
    if (weight % 12 == 2) d -= 1;
    return std::max(d, 0);
}

SelbergFactorReport trivial_zero_report(int k, int N, int digits, double tol) {
    if (k < 1) throw std::invalid_argument("trivial_zero_report: k >= 1");
    const mpfr_prec_t wp = prec_bits(digits + 10);
    HPComplex s(HPReal(static_cast<long>(1 - k), wp), HPReal(wp));
    SelbergFactorReport rep;
    double delta = 0;
    try {
        rep = selberg_factors(s, N, digits);
    } catch (const ZetaPole&) {
        // the operator family has a pole at s = 1-k; evaluate at a small
        // documented offset instead
        delta = 1e-8;
        HPComplex s_off(s.re + HPReal(delta, wp), HPReal(wp));
        rep = selberg_factors(s_off, N, digits);
    }
    rep.k = k;
    rep.offset_delta = delta;
    rep.cusp_dim = cusp_form_dimension(2 * k);
    rep.near_zero_count = 0;
    HPReal tol_hp(tol, wp);
    for (auto& [n, f] : rep.factors) {
        if (f.abs() < tol_hp) {
            rep.near_zero_count += 1;
            rep.near_zero_indices.push_back(n);
        }
    }
    return rep;
}

}  // namespace ntlab
