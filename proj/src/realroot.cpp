#include "ntlab/realroot.hpp"
#include "ntlab/hpmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace ntlab {

namespace {

/// Coefficients of (1+x)^n * g((a + b x)/(1 + x)) for dyadic a < b, cleared
/// of denominators; only sign variations matter.
int descartes_variations(const IntPoly& g, const Rat& a, const Rat& b) {
    const int n = g.degree();
    // work over rationals: sum_i c_i (a + b x)^i (1 + x)^(n-i)
    std::vector<Rat> acc(n + 1, Rat(0));
    // precompute (a+bx)^i incrementally, (1+x)^(n-i) via binomials
    std::vector<std::vector<Rat>> apow(n + 1);
    apow[0] = {Rat(1)};
    for (int i = 1; i <= n; ++i) {
        apow[i].assign(i + 1, Rat(0));
        for (int j = 0; j < i; ++j) {
            apow[i][j] += apow[i - 1][j] * a;
            apow[i][j + 1] += apow[i - 1][j] * b;
        }
    }
    for (int i = 0; i <= n; ++i) {
        if (g.coeff(i) == 0) continue;
        Rat ci(g.coeff(i));
        // (1+x)^(n-i) has binomial coefficients
        for (int j = 0; j <= i; ++j) {
            if (apow[i][j] == 0) continue;
            Rat base = ci * apow[i][j];
            for (int k = 0; k <= n - i; ++k) acc[j + k] += base * Rat(binomial(n - i, k));
        }
    }
    int var = 0, last = 0;
    for (const Rat& c : acc) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

void isolate_in(const IntPoly& g, const Rat& a, const Rat& b,
                std::vector<std::pair<Rat, Rat>>& out, int depth) {
    if (depth > 200) throw std::runtime_error("root isolation: excessive bisection depth");
    int v = descartes_variations(g, a, b);
    if (v == 0) return;
    if (v == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rat mid = (a + b) / 2;
    if (g.eval(mid) == 0) out.emplace_back(mid, mid);
    isolate_in(g, a, mid, out, depth + 1);
    isolate_in(g, mid, b, out, depth + 1);
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() < 1) return out;
    IntPoly g = p.squarefree_part();
    // strip zero roots
    std::size_t shift = 0;
    while (g.coeff(shift) == 0) ++shift;
    if (shift > 0) {
        std::vector<Int> c(g.coeffs().begin() + shift, g.coeffs().end());
        g = IntPoly(std::move(c));
        out.emplace_back(Rat(0), Rat(0));
    }
    if (g.degree() >= 1) {
        // Cauchy bound, rounded to a power of two
        double maxr = 0;
        for (int i = 0; i < g.degree(); ++i) {
            double q = std::abs(Rat(g.coeff(i)).get_d() / Rat(g.lc()).get_d());
            maxr = std::max(maxr, q);
        }
        long e = 1;
        while (std::ldexp(1.0, static_cast<int>(e)) < 1 + maxr) ++e;
        Rat bound = Rat(Int(1) << e);
        // positive roots of g on (0, bound); negative via x -> -x
        isolate_in(g, Rat(0), bound, out, 0);
        std::vector<Int> neg(g.coeffs());
        for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
        IntPoly gn(std::move(neg));
        std::vector<std::pair<Rat, Rat>> negint;
        isolate_in(gn, Rat(0), bound, negint, 0);
        for (auto& [a, b] : negint) out.emplace_back(-b, -a);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

namespace {

struct ModInterval {
    Rat lo, hi;      // root interval, lo <= hi
    Rat mod_lo, mod_hi;
};

void recompute_modulus(ModInterval& iv) {
    Rat alo = abs(iv.lo), ahi = abs(iv.hi);
    if (sgn(iv.lo) >= 0) {
        iv.mod_lo = alo;
        iv.mod_hi = ahi;
    } else if (sgn(iv.hi) <= 0) {
        iv.mod_lo = ahi;
        iv.mod_hi = alo;
    } else {
        iv.mod_lo = 0;
        iv.mod_hi = std::max(alo, ahi);
    }
}

void bisect_once(const IntPoly& g, ModInterval& iv) {
    if (iv.lo == iv.hi) return;
    Rat mid = (iv.lo + iv.hi) / 2;
    Rat v = g.eval(mid);
    if (v == 0) {
        iv.lo = iv.hi = mid;
    } else if (sgn(v) == sgn(g.eval(iv.lo))) {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
    recompute_modulus(iv);
}

}  // namespace

HPReal dominant_real_root(const IntPoly& p, int digits) {
    if (p.degree() < 1) throw NoDominantRealRoot("degree < 1");
    IntPoly g = p.squarefree_part();
    auto raw = isolate_real_roots(g);
    if (raw.empty()) throw NoDominantRealRoot("no real roots");

    std::vector<ModInterval> ivs;
    for (auto& [a, b] : raw) {
        ModInterval iv{a, b, 0, 0};  // isolation guarantees non-root endpoints
        recompute_modulus(iv);
        ivs.push_back(iv);
    }

    // refine until one interval strictly dominates every other in modulus
    std::size_t best = 0;
    for (int round = 0; round < 300; ++round) {
        best = 0;
        for (std::size_t i = 1; i < ivs.size(); ++i)
            if (ivs[i].mod_hi > ivs[best].mod_hi) best = i;
        bool separated = true;
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            if (i == best) continue;
            if (!(ivs[i].mod_hi < ivs[best].mod_lo)) separated = false;
        }
        if (separated) break;
        bool progressed = false;
        for (auto& iv : ivs)
            if (!(iv.lo == iv.hi)) { bisect_once(g, iv); progressed = true; }
        if (!progressed) {
            // all intervals degenerate: exact tie unless unique
            for (std::size_t i = 0; i < ivs.size(); ++i)
                if (i != best && ivs[i].mod_hi == ivs[best].mod_lo)
                    throw NoDominantRealRoot("two real roots share the maximal modulus");
            break;
        }
        if (round == 299) throw NoDominantRealRoot("modulus separation failed");
    }

    // complex dominance: companion-matrix eigenvalues, residual-bounded
    if (g.degree() >= 2) {
        const int check_digits = 20;
        mpfr_prec_t wp = prec_bits(check_digits + 10);
        std::size_t n = g.degree();
        HPMatrix comp(n, wp);
        for (std::size_t i = 0; i + 1 < n; ++i)
            comp.at(i + 1, i) = HPComplex(HPReal(1.0, wp), HPReal(wp));
        for (std::size_t i = 0; i < n; ++i) {
            Rat c = -Rat(g.coeff(i)) / Rat(g.lc());
            comp.at(i, n - 1) = HPComplex(HPReal(c, wp), HPReal(wp));
        }
        double cand_lo = ivs[best].mod_lo.get_d();
        for (auto& lam : eigenvalues(comp, check_digits)) {
            if (std::abs(lam.im.to_double()) < 1e-12) continue;  // real roots already compared
            if (lam.abs().to_double() > cand_lo * (1 - 1e-9) + 1e-15)
                throw NoDominantRealRoot("a complex root matches the maximal modulus");
        }
    }

    // refine the winner: bisection to ~50 bits, then Newton, then certify
    ModInterval iv = ivs[best];
    const mpfr_prec_t wp = prec_bits(digits + 15);
    for (int i = 0; i < 60 && !(iv.lo == iv.hi); ++i) bisect_once(g, iv);
    HPReal x(Rat((iv.lo + iv.hi) / 2), wp);
    auto eval_hp = [&](const HPReal& t, const IntPoly& f) {
        HPReal acc(wp);
        for (int i = f.degree(); i >= 0; --i) acc = acc * t + HPReal(f.coeff(i), wp);
        return acc;
    };
    IntPoly dg = g.derivative();
    for (int it = 0; it < digits; ++it) {
        HPReal fx = eval_hp(x, g), dfx = eval_hp(x, dg);
        if (dfx.is_zero()) break;
        HPReal nx = x - fx / dfx;
        if ((nx - x).abs() < x.abs().ldexp(-(wp - 8)) + HPReal(1.0, wp).ldexp(-(wp - 8))) {
            x = nx;
            break;
        }
        x = nx;
    }

    // certification: exact sign change across [x - w, x + w],
    // w = 10^(-digits) * max(1, |x|) rounded to a power of two
    if (!(iv.lo == iv.hi)) {
        double ax = std::max(1.0, std::abs(x.to_double()));
        long wexp = static_cast<long>(-digits * 3.3219280948873623 + std::log2(ax)) - 1;
        for (int widen = 0; widen < digits * 4; ++widen, ++wexp) {
            Rat w = wexp >= 0 ? Rat(Int(1) << wexp) : Rat(Int(1), Int(1) << (-wexp));
            // dyadic approximation of x
            mpq_class xq;
            mpfr_get_q(xq.get_mpq_t(), x.raw());
            Rat lo = Rat(xq) - w, hi = Rat(xq) + w;
            int slo = sgn(g.eval(lo)), shi = sgn(g.eval(hi));
            if (slo == 0 || shi == 0 || slo != shi) return x;
        }
        throw NoDominantRealRoot("certification interval did not bracket");
    }
    return x;
}

}  // namespace ntlab
