#include "ntlab/factor.hpp"
#include "ntlab/modpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ntlab {

// ---------------------------------------------------------------- ModPoly

ModPoly ModPoly::from_int_poly(const IntPoly& f, uint64_t p) {
    std::vector<uint64_t> c(f.degree() + 1);
    Int pm = static_cast<unsigned long>(p);
    for (int i = 0; i <= f.degree(); ++i)
        c[i] = mod_pos(f.coeff(i), pm).get_ui();
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = addm(coeff(i), o.coeff(i));
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = subm(coeff(i), o.coeff(i));
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p_);
    std::vector<uint64_t> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = addm(c[i + j], mulm(c_[i], o.c_[j]));
    }
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::scaled(uint64_t k) const {
    std::vector<uint64_t> c(c_);
    for (auto& v : c) v = mulm(v, k % p_);
    return ModPoly(p_, std::move(c));
}

uint64_t ModPoly::invm(uint64_t a) const {
    // extended Euclid
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p_), nr = static_cast<int64_t>(a % p_);
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::domain_error("ModPoly::invm: not invertible");
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p_)) : static_cast<uint64_t>(t);
}

ModPoly ModPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    return scaled(invm(lc()));
}

void ModPoly::divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    if (b.is_zero()) throw std::domain_error("ModPoly division by zero");
    uint64_t p = a.p_;
    std::vector<uint64_t> rc(a.c_);
    int db = b.degree();
    std::vector<uint64_t> qc(std::max<int>(a.degree() - db + 1, 0), 0);
    uint64_t binv = a.invm(b.lc());
    for (int i = static_cast<int>(rc.size()) - 1; i >= db; --i) {
        if (rc[i] == 0) continue;
        uint64_t f = a.mulm(rc[i], binv);
        qc[i - db] = f;
        for (int j = 0; j <= db; ++j)
            rc[i - db + j] = a.subm(rc[i - db + j], a.mulm(f, b.c_[j]));
    }
    q = ModPoly(p, std::move(qc));
    r = ModPoly(p, std::move(rc));
}

ModPoly ModPoly::rem(const ModPoly& m) const {
    ModPoly q, r;
    divrem(*this, m, q, r);
    return r;
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

ModPoly ModPoly::mulmod(const ModPoly& o, const ModPoly& m) const {
    return ((*this) * o).rem(m);
}

ModPoly ModPoly::powmod(const Int& e, const ModPoly& m) const {
    ModPoly base = rem(m);
    ModPoly acc(p_, {1});
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (std::size_t i = bits; i-- > 0;) {
        acc = acc.mulmod(acc, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.mulmod(base, m);
    }
    return acc;
}

namespace {

struct SplitRng {  // xorshift64*, deterministic
    uint64_t s;
    explicit SplitRng(uint64_t seed) : s(seed ? seed : 0x9E3779B97F4A7C15ULL) {}
    uint64_t next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545F4914F6CDD1DULL;
    }
};

// Equal-degree splitting of a monic squarefree product of degree-d irreducibles.
void edf(const ModPoly& f, int d, SplitRng& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    uint64_t p = f.modulus();
    Int e = (pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
        std::vector<uint64_t> rc(f.degree());
        for (auto& v : rc) v = rng.next() % p;
        ModPoly a(p, std::move(rc));
        if (a.is_zero()) continue;
        auto split = [&](const ModPoly& g) {
            ModPoly q, r;
            ModPoly::divrem(f, g, q, r);
            edf(g, d, rng, out);
            edf(q.monic(), d, rng, out);
        };
        ModPoly g = ModPoly::gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split(g);
            return;
        }
        ModPoly b = a.powmod(e, f);
        b = b - ModPoly(p, {1});
        g = ModPoly::gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split(g);
            return;
        }
    }
}

}  // namespace

std::vector<int> ModPoly::factor_degrees() const {
    ModPoly f = monic();
    std::vector<int> degs;
    ModPoly h = x(p_);
    Int p_int = static_cast<unsigned long>(p_);
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            degs.push_back(f.degree());
            break;
        }
        h = h.powmod(p_int, f);
        ModPoly g = gcd(h - x(p_), f);
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) degs.push_back(d);
            ModPoly q, r;
            divrem(f, g, q, r);
            f = q.monic();
            h = h.rem(f);
        }
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

std::vector<ModPoly> ModPoly::factor_squarefree() const {
    ModPoly f = monic();
    std::vector<ModPoly> out;
    SplitRng rng(0xC0FFEE123456789ULL ^ (p_ << 16) ^ static_cast<uint64_t>(f.degree()));
    ModPoly h = x(p_);
    Int p_int = static_cast<unsigned long>(p_);
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f);
            break;
        }
        h = h.powmod(p_int, f);
        ModPoly g = gcd(h - x(p_), f);
        if (g.degree() > 0) {
            edf(g, d, rng, out);
            ModPoly q, r;
            divrem(f, g, q, r);
            f = q.monic();
            h = h.rem(f);
        }
    }
    return out;
}

// ------------------------------------------------------------ Zassenhaus

namespace {

/// Centered representative of a mod m in (-m/2, m/2].
Int symmetric_mod(const Int& a, const Int& m) {
    Int r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

/// Coefficients of f reduced into the symmetric range mod m.
IntPoly symmetric_poly(const IntPoly& f, const Int& m) {
    std::vector<Int> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c[i] = symmetric_mod(f.coeff(i), m);
    return IntPoly(std::move(c));
}

IntPoly lift_to_int(const ModPoly& f) {
    std::vector<Int> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c[i] = static_cast<unsigned long>(f.coeff(i));
    return IntPoly(std::move(c));
}

/// 2-norm of the coefficient vector, rounded up.
Int norm2_ceil(const IntPoly& f) {
    Int s = 0;
    for (int i = 0; i <= f.degree(); ++i) s += f.coeff(i) * f.coeff(i);
    Int r = isqrt(s);
    if (r * r < s) r += 1;
    return r;
}

/// Yun squarefree decomposition of a primitive polynomial; returns pairs
/// (squarefree factor, multiplicity).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly df = f.derivative();
    IntPoly u = IntPoly::gcd(f, df);
    if (u.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly v = f.divide_exact(u);
    IntPoly w = df.divide_exact(u);
    int i = 1;
    while (v.degree() > 0) {
        IntPoly z = w - v.derivative();
        IntPoly h = IntPoly::gcd(v, z);
        if (h.degree() > 0) out.emplace_back(h.primitive_part(), i);
        v = v.divide_exact(h);
        w = z.divide_exact(h);
        ++i;
    }
    return out;
}

/// Hensel lifting data: monic factors mod p^k with f ≡ lc(f)·prod g_i.
struct HenselState {
    uint64_t p;
    Int pk;                      // current modulus p^k
    std::vector<IntPoly> fac;    // monic factors lifted mod pk
    std::vector<ModPoly> bezout; // sigma_i with sum sigma_i * prod_{j!=i} g_j = 1 mod p
};

/// Solve sum_i t_i * (prod_{j != i} g_j) = rhs  (mod p), deg t_i < deg g_i.
std::vector<ModPoly> solve_diophantine(const std::vector<ModPoly>& g,
                                       const std::vector<ModPoly>& sigma, const ModPoly& rhs) {
    std::vector<ModPoly> t(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        t[i] = rhs.mulmod(sigma[i], g[i]);
    return t;
}

/// Compute the Bezout cofactors sigma_i mod p via partial fractions:
/// 1 / prod g_j = sum sigma_i / g_i.
std::vector<ModPoly> bezout_basis(const std::vector<ModPoly>& g) {
    const uint64_t p = g[0].modulus();
    const std::size_t r = g.size();
    std::vector<ModPoly> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        ModPoly prod(p, {1});
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) prod = prod.mulmod(g[j], g[i]);
        // sigma_i = prod^{-1} mod g_i via extended Euclid in F_p[x]
        // use powmod-free inversion: gcd(prod, g_i) = 1 with cofactors
        ModPoly a = prod, b = g[i];
        ModPoly s0(p, {1}), s1(p);
        while (!b.is_zero()) {
            ModPoly q, rr;
            ModPoly::divrem(a, b, q, rr);
            ModPoly s2 = s0 - q * s1;
            a = std::move(b);
            b = std::move(rr);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // a = gcd (a nonzero constant); sigma = s0 / a
        if (a.degree() != 0) throw std::logic_error("bezout_basis: factors not coprime");
        sigma[i] = s0.scaled(a.invm(a.lc())).rem(g[i]);
    }
    return sigma;
}

/// One linear Hensel step: lift factors from mod p^k to mod p^{k+1}.
void hensel_step(HenselState& st, const IntPoly& f) {
    const Int p_int = static_cast<unsigned long>(st.p);
    Int next = st.pk * p_int;
    // error e = (f - lc * prod fac) / pk  (exact)
    IntPoly prod = IntPoly::constant(f.lc());
    for (const auto& g : st.fac) prod = prod * g;
    IntPoly err = f - prod;
    std::vector<Int> ec(err.degree() + 1);
    for (int i = 0; i <= err.degree(); ++i) ec[i] = mod_pos(err.coeff(i) / st.pk, p_int);
    std::vector<uint64_t> eu(ec.size());
    for (std::size_t i = 0; i < ec.size(); ++i) eu[i] = ec[i].get_ui();
    ModPoly e_mod(st.p, std::move(eu));
    // lc correction: fold the inverse of lc(f) mod p into the rhs
    uint64_t lcinv = e_mod.invm(mod_pos(f.lc(), p_int).get_ui());
    e_mod = e_mod.scaled(lcinv);

    std::vector<ModPoly> gmod(st.fac.size());
    for (std::size_t i = 0; i < st.fac.size(); ++i) gmod[i] = ModPoly::from_int_poly(st.fac[i], st.p);
    std::vector<ModPoly> t = solve_diophantine(gmod, st.bezout, e_mod);
    for (std::size_t i = 0; i < st.fac.size(); ++i) {
        IntPoly delta = lift_to_int(t[i]) * st.pk;
        st.fac[i] = st.fac[i] + delta;
    }
    st.pk = next;
}

}  // namespace

IntPoly Factorization::product() const {
    IntPoly p = IntPoly::constant(content);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) p = p * f;
    return p;
}

namespace {

/// Factor a primitive squarefree polynomial of degree >= 1.
std::vector<IntPoly> factor_squarefree_z(const IntPoly& f) {
    if (f.degree() == 1) return {f};
    // prime selection: smallest p >= 11 not dividing lc or disc
    Int disc = f.discriminant();
    if (disc == 0) throw std::logic_error("factor_squarefree_z: input not squarefree");
    uint64_t p = 11;
    auto bad = [&](uint64_t q) {
        Int qi = static_cast<unsigned long>(q);
        return f.lc() % qi == 0 || disc % qi == 0;
    };
    while (!is_prime(Int(static_cast<unsigned long>(p))) || bad(p)) ++p;

    ModPoly fp = ModPoly::from_int_poly(f, p).monic();
    std::vector<ModPoly> mod_factors = fp.factor_squarefree();
    if (mod_factors.size() == 1) return {f};

    // Mignotte-style bound: coefficients of any factor (times lc) are below
    // 2^deg * ||f||_2 * |lc|; lift until p^k exceeds twice that.
    Int bound = (Int(1) << f.degree()) * norm2_ceil(f) * abs(f.lc());
    HenselState st;
    st.p = p;
    st.pk = static_cast<unsigned long>(p);
    st.bezout = bezout_basis(mod_factors);
    for (const auto& g : mod_factors) st.fac.push_back(lift_to_int(g));
    while (st.pk <= 2 * bound) hensel_step(st, f);

    // subset recombination
    std::vector<IntPoly> result;
    std::vector<IntPoly> pool = st.fac;
    IntPoly rest = f;
    std::size_t card = 1;
    while (2 * card <= pool.size()) {
        bool found_any = false;
        std::vector<std::size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            IntPoly cand = IntPoly::constant(rest.lc());
            for (std::size_t i : idx) cand = cand * pool[i];
            cand = symmetric_poly(cand, st.pk).primitive_part();
            IntPoly q;
            if (rest.try_divide(cand, q)) {
                result.push_back(cand);
                rest = q;
                std::vector<IntPoly> np;
                for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) { ++k; continue; }
                    np.push_back(pool[i]);
                }
                pool = std::move(np);
                found_any = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(card) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t j = pos + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found_any) ++card;
    }
    if (rest.degree() > 0) result.push_back(rest.primitive_part());
    return result;
}

}  // namespace

Factorization factor(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor: zero polynomial");
    Factorization out;
    out.content = p.content();
    IntPoly f = p.primitive_part();
    if (f.degree() == 0) return out;
    for (auto& [sf, mult] : squarefree_decomposition(f)) {
        for (auto& irr : factor_squarefree_z(sf)) out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.degree() < 1) return false;
    Factorization f = factor(p);
    return f.factors.size() == 1 && f.factors[0].second == 1 &&
           (f.content == 1 || f.content == -1);
}

}  // namespace ntlab
