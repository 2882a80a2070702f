#include "ntlab/stern.hpp"
#include "ntlab/factor.hpp"
#include "ntlab/realroot.hpp"

#include <omp.h>

#include <algorithm>

namespace ntlab {

uint64_t stern(uint64_t n) {
    if (n == 0) return 0;
    // walk the pair tree (a(m), a(m+1)) from the root m = 1 along the binary
    // digits of n below the leading bit
    int bits = 63 - __builtin_clzll(n);
    uint64_t a = 1, b = 1;
    for (int i = bits - 1; i >= 0; --i) {
        if ((n >> i) & 1) a = a + b;   // right child (a+b, b)
        else b = a + b;                // left child (a, a+b)
    }
    return a;
}

namespace {

/// DFS accumulation of sum over depth-`level` descendants of pair (a, b) of
/// a^i b^(L-i) for all i, into acc (size L+1).
void accumulate_subtree(uint64_t a, uint64_t b, int level, int L, std::vector<Int>& acc) {
    if (level == 0) {
        // powers a^i * b^(L-i)
        Int bp = 1;
        std::vector<Int> bpow(L + 1);
        for (int i = 0; i <= L; ++i) {
            bpow[i] = bp;
            if (i < L) bp *= static_cast<unsigned long>(b);
        }
        Int ap = 1;
        for (int i = 0; i <= L; ++i) {
            acc[i] += ap * bpow[L - i];
            if (i < L) ap *= static_cast<unsigned long>(a);
        }
        return;
    }
    accumulate_subtree(a, a + b, level - 1, L, acc);
    accumulate_subtree(a + b, b, level - 1, L, acc);
}

std::vector<Int> level_vector_impl(int L, int N, bool parallel) {
    const int split = std::min(N, 10);
    const long tasks = 1l << split;
    std::vector<std::vector<Int>> partial(tasks, std::vector<Int>(L + 1, Int(0)));
#pragma omp parallel for schedule(dynamic) if (parallel && split > 0)
    for (long t = 0; t < tasks; ++t) {
        uint64_t a = 1, b = 1;
        for (int i = split - 1; i >= 0; --i) {
            if ((t >> i) & 1) a = a + b;
            else b = a + b;
        }
        accumulate_subtree(a, b, N - split, L, partial[t]);
    }
    std::vector<Int> acc(L + 1, Int(0));
    for (long t = 0; t < tasks; ++t)
        for (int i = 0; i <= L; ++i) acc[i] += partial[t][i];
    return acc;
}

}  // namespace

std::vector<Int> level_moment_vector(int L, int N, bool parallel) {
    if (L < 0 || N < 0) throw std::invalid_argument("level_moment_vector: L, N >= 0");
    return level_vector_impl(L, N, parallel);
}

Int level_moment_direct(int L, int N, bool parallel) {
    return level_moment_vector(L, N, parallel)[0];
}

IntMatrix moment_matrix(int L) {
    IntMatrix m(L + 1);
    for (int i = 0; i <= L; ++i)
        for (int j = 0; j <= L; ++j) {
            Int v = 0;
            if (j >= i) v += binomial(L - i, j - i);
            if (j <= i) v += binomial(i, j);
            m.at(i, j) = v;
        }
    return m;
}

namespace {

/// The irreducible factor of cp vanishing at r (exact sign-change test on a
/// shrinking dyadic interval around r).
IntPoly factor_at_root(const Factorization& f, const HPReal& r) {
    mpq_class rq;
    mpfr_get_q(rq.get_mpq_t(), r.raw());
    for (int k = 40; k < 4000; k *= 2) {
        Rat w(Int(1), Int(1) << k);
        Rat lo = Rat(rq) - w, hi = Rat(rq) + w;
        const IntPoly* hit = nullptr;
        bool unique = true;
        for (const auto& [fac, mult] : f.factors) {
            int slo = sgn(fac.eval(lo)), shi = sgn(fac.eval(hi));
            if (slo == 0 || shi == 0 || slo != shi) {
                if (hit) unique = false;
                hit = &fac;
            }
        }
        if (hit && unique) return *hit;
    }
    throw std::logic_error("factor_at_root: could not attribute the dominant root");
}

}  // namespace

MomentAsymptotics asymptotics(int L, int digits, bool want_galois) {
    MomentAsymptotics out;
    out.L = L;
    out.matrix = moment_matrix(L);
    out.charpoly = out.matrix.charpoly();
    HPReal two_mu = dominant_real_root(out.charpoly, digits + 5);
    out.mu = two_mu / 2l;

    if (out.charpoly.degree() <= 24) {
        Factorization f = factor(out.charpoly);
        out.minpoly_2mu = factor_at_root(f, two_mu);
        out.minpoly_available = true;
        if (want_galois && out.minpoly_2mu.degree() <= 6)
            out.galois = galois_group_id(out.minpoly_2mu);
    }

    // empirical c: Q(N) / (2^N mu^N) at the largest streamed level
    const int n_est = std::max(8, std::min(16, 26 - L));
    const mpfr_prec_t wp = prec_bits(digits + 10);
    auto c_at = [&](int N) {
        Int q = level_moment_direct(L, N);
        HPReal qq(q, wp);
        HPReal denom = (out.mu * 2l).pow_si(N);  // (2 mu)^N
        return qq / denom;
    };
    HPReal c1 = c_at(n_est - 1), c2 = c_at(n_est);
    out.c_estimate = c2;
    double c2d = c2.to_double();
    out.c_stabilization = c2d == 0 ? 0 : std::abs((c2 - c1).to_double() / c2d);
    return out;
}

std::vector<std::pair<int, HPReal>> growth_check(int L_max, int digits) {
    std::vector<std::pair<int, HPReal>> out;
    for (int L = 1; L <= L_max; ++L) {
        IntMatrix m = moment_matrix(L);
        HPReal two_mu = dominant_real_root(m.charpoly(), digits + 5);
        HPReal mu = two_mu / 2l;
        HPReal root = (mu.log() / static_cast<long>(L)).exp();
        out.emplace_back(L, root);
    }
    return out;
}

std::vector<Int> minimal_recurrence(int L) {
    // Q^(L)(0 .. 2L+2)
    const int top = 2 * L + 2;
    std::vector<Int> q(top + 1);
    for (int n = 0; n <= top; ++n) q[n] = level_moment_direct(L, n);
    for (int d = 1; d <= L + 1; ++d) {
        // solve sum_{i=0}^{d} c_i q[N+i] = 0 for N = 0..top-d
        int rows = top - d + 1, cols = d + 1;
        std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m[r][c] = Rat(q[r + c]);
        // rational elimination to find a kernel vector
        std::vector<int> pivot_col(rows, -1);
        int rank = 0;
        for (int c = 0; c < cols && rank < rows; ++c) {
            int pr = -1;
            for (int r = rank; r < rows; ++r)
                if (m[r][c] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(m[rank], m[pr]);
            Rat inv = m[rank][c];
            for (int cc = 0; cc < cols; ++cc) m[rank][cc] /= inv;
            for (int r = 0; r < rows; ++r) {
                if (r == rank || m[r][c] == 0) continue;
                Rat f = m[r][c];
                for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
            }
            pivot_col[rank] = c;
            ++rank;
        }
        if (rank == cols) continue;  // trivial kernel only
        // free column = first non-pivot; build the kernel vector
        std::vector<bool> is_pivot(cols, false);
        for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
        int free_col = 0;
        while (free_col < cols && is_pivot[free_col]) ++free_col;
        std::vector<Rat> kern(cols, Rat(0));
        kern[free_col] = 1;
        for (int r = 0; r < rank; ++r) kern[pivot_col[r]] = -m[r][free_col];
        // clear denominators, primitive, positive leading coefficient
        Int l = 1;
        for (auto& v : kern) l = lcm(l, v.get_den());
        std::vector<Int> c(cols);
        for (int i = 0; i < cols; ++i) c[i] = kern[i].get_num() * (l / kern[i].get_den());
        Int g = 0;
        for (auto& v : c) g = gcd(g, v);
        if (g != 0)
            for (auto& v : c) v /= g;
        if (c.back() < 0)
            for (auto& v : c) v = -v;
        return c;
    }
    throw std::logic_error("minimal_recurrence: no recurrence found within degree L+1");
}

}  // namespace ntlab
