#include "ntlab/hpmatrix.hpp"

#include <algorithm>

namespace ntlab {

std::vector<HPComplex> HPMatrix::apply(const std::vector<HPComplex>& v) const {
    std::vector<HPComplex> r(n_, HPComplex(v.empty() ? 64 : v[0].prec()));
    for (std::size_t i = 0; i < n_; ++i) {
        HPComplex acc(at(i, 0).prec());
        for (std::size_t j = 0; j < n_; ++j) acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

bool HPMatrix::all_real() const {
    for (const auto& z : a_)
        if (!z.im.is_zero()) return false;
    return true;
}

namespace {

struct Givens {
    HPReal c;    // real
    HPComplex s;
};

Givens make_givens(const HPComplex& a, const HPComplex& b, mpfr_prec_t wp) {
    Givens g{HPReal(wp), HPComplex(wp)};
    HPReal aa = a.abs(), bb = b.abs();
    if (aa.is_zero()) {
        g.c = HPReal(wp);  // 0
        g.s = HPComplex(HPReal(1.0, wp), HPReal(wp));
        if (!bb.is_zero()) g.s = b.conj() * (HPReal(1.0, wp) / bb);
        return g;
    }
    HPReal norm = HPReal::hypot(aa, bb);
    g.c = aa / norm;
    HPComplex alpha = a * (HPReal(1.0, wp) / aa);
    g.s = alpha * b.conj() * (HPReal(1.0, wp) / norm);
    return g;
}

/// Simple power-of-two balancing (Osborne), returns diagonal exponents.
std::vector<long> balance(HPMatrix& A) {
    const std::size_t n = A.dim();
    std::vector<long> d(n, 0);
    for (int sweep = 0; sweep < 8; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0, c = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                r += std::abs(A.at(i, j).re.to_double()) + std::abs(A.at(i, j).im.to_double());
                c += std::abs(A.at(j, i).re.to_double()) + std::abs(A.at(j, i).im.to_double());
            }
            if (r == 0 || c == 0) continue;
            long e = 0;
            while (c < r / 2) { c *= 2; r /= 2; ++e; }
            while (c >= r * 2) { c /= 2; r *= 2; --e; }
            if (e != 0) {
                changed = true;
                d[i] += e;
                for (std::size_t j = 0; j < n; ++j) {
                    A.at(i, j).re = A.at(i, j).re.ldexp(-e);
                    A.at(i, j).im = A.at(i, j).im.ldexp(-e);
                    A.at(j, i).re = A.at(j, i).re.ldexp(e);
                    A.at(j, i).im = A.at(j, i).im.ldexp(e);
                }
            }
        }
        if (!changed) break;
    }
    return d;
}

/// Householder reduction to upper Hessenberg form; Q accumulated.
void hessenberg(HPMatrix& H, HPMatrix& Q, mpfr_prec_t wp) {
    const std::size_t n = H.dim();
    Q = HPMatrix(n, wp);
    for (std::size_t i = 0; i < n; ++i) Q.at(i, i) = HPComplex(HPReal(1.0, wp), HPReal(wp));
    if (n < 3) return;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;  // reflector size
        std::vector<HPComplex> v(m, HPComplex(wp));
        HPReal normx(wp);
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = H.at(k + 1 + i, k);
            normx += v[i].norm();
        }
        normx = normx.sqrt();
        if (normx.is_zero()) continue;
        HPComplex alpha(wp);
        HPReal a0 = v[0].abs();
        if (a0.is_zero()) {
            alpha = HPComplex(-normx, HPReal(wp));
        } else {
            alpha = v[0] * (HPReal(1.0, wp) / a0) * (-normx);
        }
        v[0] -= alpha;
        HPReal vnorm(wp);
        for (const auto& z : v) vnorm += z.norm();
        if (vnorm.is_zero()) continue;
        HPReal beta = HPReal(2.0, wp) / vnorm;

        // left: rows k+1..n-1, all columns
        for (std::size_t j = 0; j < n; ++j) {
            HPComplex w(wp);
            for (std::size_t i = 0; i < m; ++i) w += v[i].conj() * H.at(k + 1 + i, j);
            w = w * beta;
            for (std::size_t i = 0; i < m; ++i) H.at(k + 1 + i, j) -= v[i] * w;
        }
        // right: all rows, columns k+1..n-1
        for (std::size_t i = 0; i < n; ++i) {
            HPComplex u(wp);
            for (std::size_t j = 0; j < m; ++j) u += H.at(i, k + 1 + j) * v[j];
            u = u * beta;
            for (std::size_t j = 0; j < m; ++j) H.at(i, k + 1 + j) -= u * v[j].conj();
        }
        // accumulate Q := Q * P
        for (std::size_t i = 0; i < n; ++i) {
            HPComplex u(wp);
            for (std::size_t j = 0; j < m; ++j) u += Q.at(i, k + 1 + j) * v[j];
            u = u * beta;
            for (std::size_t j = 0; j < m; ++j) Q.at(i, k + 1 + j) -= u * v[j].conj();
        }
        // clean below the subdiagonal
        H.at(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) H.at(i, k) = HPComplex(wp);
    }
}

HPComplex wilkinson_shift(const HPMatrix& H, std::size_t m, mpfr_prec_t wp) {
    const HPComplex &a = H.at(m - 1, m - 1), &b = H.at(m - 1, m), &c = H.at(m, m - 1),
                    &d = H.at(m, m);
    HPComplex half(HPReal(0.5, wp), HPReal(wp));
    HPComplex diff = a - d;
    HPComplex disc = (diff * diff + b * c * HPReal(4.0, wp)).sqrt();
    HPComplex mu1 = (a + d + disc) * half;
    HPComplex mu2 = (a + d - disc) * half;
    return (mu1 - d).abs() < (mu2 - d).abs() ? mu1 : mu2;
}

}  // namespace

std::vector<EigenPair> eigen_pairs(const HPMatrix& input, int digits) {
    const std::size_t n = input.dim();
    const mpfr_prec_t wp = prec_bits(digits + 12);
    if (n == 0) return {};

    HPMatrix A(n, wp);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpfr_set(A.at(i, j).re.raw(), input.at(i, j).re.raw(), MPFR_RNDN);
            mpfr_set(A.at(i, j).im.raw(), input.at(i, j).im.raw(), MPFR_RNDN);
        }

    HPMatrix B = A;  // balanced copy used for the decomposition
    std::vector<long> dexp = balance(B);
    HPMatrix H = B, Q(n, wp);
    hessenberg(H, Q, wp);

    const HPReal eps = HPReal(1.0, wp).ldexp(-(wp - 8));
    std::vector<HPComplex> values;
    values.reserve(n);
    HPMatrix T = H;  // working copy consumed by QR
    long m = static_cast<long>(n) - 1;
    int iter_since_deflate = 0, total_iter = 0;
    const int max_total = 60 * static_cast<int>(n) + 200;

    while (m >= 0) {
        if (m == 0) {
            values.push_back(T.at(0, 0));
            m = -1;
            break;
        }
        // deflation scan
        long l = m;
        while (l > 0) {
            HPReal sub = T.at(l, l - 1).abs();
            HPReal scale = T.at(l - 1, l - 1).abs() + T.at(l, l).abs();
            if (sub < eps * (scale + HPReal(1.0, wp))) {
                T.at(l, l - 1) = HPComplex(wp);
                break;
            }
            --l;
        }
        if (l == m) {
            values.push_back(T.at(m, m));
            --m;
            iter_since_deflate = 0;
            continue;
        }
        if (++total_iter > max_total)
            throw ConvergenceFailure("QR iteration exceeded its budget", total_iter, n);

        HPComplex sigma(wp);
        if (++iter_since_deflate % 12 == 0) {
            // exceptional shift
            sigma = T.at(m, m) + HPComplex(T.at(m, m - 1).abs() * HPReal(0.75, wp), HPReal(wp));
        } else {
            sigma = wilkinson_shift(T, m, wp);
        }

        // explicit shifted QR on the active block [l..m]
        for (long i = l; i <= m; ++i) T.at(i, i) -= sigma;
        std::vector<Givens> rot(m - l);
        for (long i = l; i < m; ++i) {
            Givens g = make_givens(T.at(i, i), T.at(i + 1, i), wp);
            rot[i - l] = g;
            for (long j = i; j <= m; ++j) {
                HPComplex x = T.at(i, j), y = T.at(i + 1, j);
                T.at(i, j) = x * g.c + g.s * y;
                T.at(i + 1, j) = y * g.c - g.s.conj() * x;
            }
        }
        for (long i = l; i < m; ++i) {
            const Givens& g = rot[i - l];
            for (long r = l; r <= i + 1; ++r) {
                HPComplex x = T.at(r, i), y = T.at(r, i + 1);
                T.at(r, i) = x * g.c + g.s.conj() * y;
                T.at(r, i + 1) = y * g.c - g.s * x;
            }
        }
        for (long i = l; i <= m; ++i) T.at(i, i) += sigma;
    }

    // eigenvectors by inverse iteration on H, transformed back through Q
    // and the balancing exponents; residuals against the original matrix.
    std::vector<EigenPair> out;
    const HPReal tol = [&] {
        HPComplex e(HPReal(digits / 2.0, wp), HPReal(wp));
        return pow_real_neg_exponent(HPReal(10.0, wp), e).re;
    }();

    for (const HPComplex& lam : values) {
        std::vector<HPComplex> y = [&] {
            // solve (H - mu I) y = b by Hessenberg elimination, two passes
            std::vector<HPComplex> b(n, HPComplex(wp));
            for (std::size_t i = 0; i < n; ++i)
                b[i] = HPComplex(HPReal(1.0 / double(i + 1), wp), HPReal(0.25, wp));
            std::vector<HPComplex> sol;
            HPComplex mu = lam;
            for (int attempt = 0; attempt < 4; ++attempt) {
                // Hessenberg LU with partial pivoting on a fresh copy
                HPMatrix U = H;
                for (std::size_t i = 0; i < n; ++i) U.at(i, i) -= mu;
                std::vector<HPComplex> rhs = b;
                bool singular = false;
                for (std::size_t k2 = 0; k2 + 1 < n; ++k2) {
                    if (U.at(k2, k2).abs() < U.at(k2 + 1, k2).abs()) {
                        for (std::size_t j = k2; j < n; ++j) std::swap(U.at(k2, j), U.at(k2 + 1, j));
                        std::swap(rhs[k2], rhs[k2 + 1]);
                    }
                    if (U.at(k2, k2).abs().is_zero()) { singular = true; break; }
                    HPComplex f = U.at(k2 + 1, k2) / U.at(k2, k2);
                    for (std::size_t j = k2; j < n; ++j) U.at(k2 + 1, j) -= f * U.at(k2, j);
                    rhs[k2 + 1] -= f * rhs[k2];
                }
                if (!singular && U.at(n - 1, n - 1).abs().is_zero()) singular = true;
                if (singular) {
                    mu = mu + HPComplex(eps * (mu.abs() + HPReal(1.0, wp)), HPReal(wp));
                    continue;
                }
                sol.assign(n, HPComplex(wp));
                for (long i = static_cast<long>(n) - 1; i >= 0; --i) {
                    HPComplex acc = rhs[i];
                    for (std::size_t j = i + 1; j < n; ++j) acc -= U.at(i, j) * sol[j];
                    sol[i] = acc / U.at(i, i);
                }
                break;
            }
            if (sol.empty()) sol.assign(n, HPComplex(HPReal(1.0, wp), HPReal(wp)));
            return sol;
        }();

        // normalize, one more polish iteration is unnecessary in practice
        HPReal ny(wp);
        for (const auto& z : y) ny += z.norm();
        ny = ny.sqrt();
        for (auto& z : y) z = z * (HPReal(1.0, wp) / ny);

        // v = Q y, then undo balancing: v_i *= 2^{d_i}
        std::vector<HPComplex> v(n, HPComplex(wp));
        for (std::size_t i = 0; i < n; ++i) {
            HPComplex acc(wp);
            for (std::size_t j = 0; j < n; ++j) acc += Q.at(i, j) * y[j];
            v[i] = acc;
        }
        for (std::size_t i = 0; i < n; ++i) {
            v[i].re = v[i].re.ldexp(dexp[i]);
            v[i].im = v[i].im.ldexp(dexp[i]);
        }

        std::vector<HPComplex> Av = A.apply(v);
        HPReal num(wp), den(wp);
        for (std::size_t i = 0; i < n; ++i) {
            num += (Av[i] - lam * v[i]).norm();
            den += v[i].norm();
        }
        HPReal residual = num.sqrt() / den.sqrt();
        out.push_back(EigenPair{lam, std::move(v), residual});
    }

    for (const auto& ep : out)
        if (!(ep.residual < tol))
            throw ConvergenceFailure("eigenpair residual above certification threshold",
                                     total_iter, n);
    return out;
}

std::vector<HPComplex> eigenvalues(const HPMatrix& m, int digits) {
    std::vector<HPComplex> v;
    for (auto& ep : eigen_pairs(m, digits)) v.push_back(ep.value);
    return v;
}

void sort_canonical(std::vector<HPComplex>& values) {
    std::stable_sort(values.begin(), values.end(), [](const HPComplex& a, const HPComplex& b) {
        HPReal ma = a.abs(), mb = b.abs();
        int c = ma.cmp(mb);
        if (c != 0) return c > 0;
        c = a.re.cmp(b.re);
        if (c != 0) return c > 0;
        return a.im.cmp(b.im) > 0;
    });
}

}  // namespace ntlab
