#include "ntlab/algfermat.hpp"

#include <omp.h>

#include <algorithm>

namespace ntlab {

namespace {

TruncatedSeries to_series(const IntPoly& p, std::size_t order) {
    TruncatedSeries s(order);
    for (int i = 0; i <= p.degree() && i < static_cast<int>(order); ++i)
        s.at(i) = Rat(p.coeff(i));
    return s;
}

}  // namespace

TruncatedSeries eval_bivariate(const std::vector<IntPoly>& q, const TruncatedSeries& s) {
    const std::size_t order = s.order();
    TruncatedSeries acc(order);
    for (auto it = q.rbegin(); it != q.rend(); ++it)
        acc = acc * s + to_series(*it, order);
    return acc;
}

namespace {

std::vector<IntPoly> y_derivative(const std::vector<IntPoly>& q) {
    std::vector<IntPoly> d;
    for (std::size_t i = 1; i < q.size(); ++i) d.push_back(q[i] * Int(static_cast<long>(i)));
    return d;
}

}  // namespace

AlgebraicBranch expand_branch(const std::vector<IntPoly>& defining, const Rat& seed,
                              std::size_t order) {
    if (defining.empty()) throw std::invalid_argument("expand_branch: empty polynomial");
    std::vector<IntPoly> dq = y_derivative(defining);

    // seed checks at x = 0
    Rat q0(0), dq0(0);
    {
        Rat ypow(1);
        for (const auto& c : defining) {
            q0 += Rat(c.coeff(0)) * ypow;
            ypow *= seed;
        }
        ypow = 1;
        for (const auto& c : dq) {
            dq0 += Rat(c.coeff(0)) * ypow;
            ypow *= seed;
        }
    }
    if (q0 != 0) throw SeedNotRoot();
    if (dq0 == 0) throw RamifiedBranch();

    // Newton with doubling truncation order
    TruncatedSeries y = TruncatedSeries::constant(seed, 1);
    std::size_t cur = 1;
    while (cur < order) {
        cur = std::min(order, cur * 2);
        TruncatedSeries yc = y.truncated(std::min(cur, y.order()));
        // re-embed at the new order
        TruncatedSeries yn(cur);
        for (std::size_t i = 0; i < yc.order(); ++i) yn.at(i) = yc.at(i);
        TruncatedSeries num = eval_bivariate(defining, yn);
        TruncatedSeries den = eval_bivariate(dq, yn);
        y = yn - num / den;
    }

    AlgebraicBranch b{defining, seed, y};
    if (!eval_bivariate(defining, b.series).is_zero())
        throw std::logic_error("expand_branch: back-substitution is nonzero");
    return b;
}

std::vector<IntPoly> cubic_example_defining() {
    return {
        IntPoly({1}),                       // 1
        IntPoly({1, 0, -1, 1}),             // x^3 - x^2 + 1
        IntPoly({-1, 0, 2, 1, -1, 1}),      // x^5 - x^4 + x^3 + 2x^2 - 1
        IntPoly({-1, 0, 3, 2, -3, 6}),      // 6x^5 - 3x^4 + 2x^3 + 3x^2 - 1
    };
}

namespace {

CongruenceReport sweep(const std::function<bool(uint64_t, Int&)>& residue_of, int power,
                       uint64_t bound, bool parallel) {
    CongruenceReport rep;
    rep.power = power;
    rep.prime_bound = bound;
    std::vector<uint64_t> primes = primes_upto(bound);
    std::vector<std::pair<uint64_t, Int>> exceptions;
    std::vector<uint64_t> bad;
#pragma omp parallel if (parallel)
    {
        std::vector<std::pair<uint64_t, Int>> local_exc;
        std::vector<uint64_t> local_bad;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::size_t i = 0; i < primes.size(); ++i) {
            Int residue;
            if (!residue_of(primes[i], residue)) {
                local_bad.push_back(primes[i]);
            } else if (residue != 0) {
                local_exc.emplace_back(primes[i], residue);
            }
        }
#pragma omp critical
        {
            exceptions.insert(exceptions.end(), local_exc.begin(), local_exc.end());
            bad.insert(bad.end(), local_bad.begin(), local_bad.end());
        }
    }
    std::sort(exceptions.begin(), exceptions.end());
    std::sort(bad.begin(), bad.end());
    rep.exceptions = std::move(exceptions);
    rep.bad_primes = std::move(bad);
    return rep;
}

}  // namespace

CongruenceReport fermat_test(const AlgebraicBranch& branch, int power, uint64_t prime_bound,
                             bool parallel) {
    if (branch.series.order() <= prime_bound) throw InsufficientOrder();
    const auto& coeffs = branch.series;
    auto residue_of = [&](uint64_t p, Int& out) {
        Int pm = pow_int(Int(static_cast<unsigned long>(p)), power);
        Int pz = static_cast<unsigned long>(p);
        // undefined if p divides a denominator at index <= p
        for (uint64_t i = 0; i <= p; ++i)
            if (mpz_divisible_p(coeffs.at(i).get_den().get_mpz_t(), pz.get_mpz_t()))
                return false;
        const Rat& sp = coeffs.at(p);
        out = mod_pos(sp.get_num() * inv_mod(sp.get_den(), pm), pm);
        return true;
    };
    return sweep(residue_of, power, prime_bound, parallel);
}

CongruenceReport fermat_test(const CoefficientRule& rule, int power, uint64_t prime_bound,
                             bool parallel) {
    auto residue_of = [&](uint64_t p, Int& out) {
        Int pm = pow_int(Int(static_cast<unsigned long>(p)), power);
        out = mod_pos(rule(p, pm), pm);
        return true;
    };
    return sweep(residue_of, power, prime_bound, parallel);
}

Int rule_mersenne(uint64_t n, const Int& modulus) {
    if (n == 0) return mod_pos(Int(0), modulus);  // s(0) = 2^{-1}-1 undefined; treat as 0 index unused
    return mod_pos(pow_mod(2, Int(static_cast<unsigned long>(n - 1)), modulus) - 1, modulus);
}

Int rule_central_binomial_minus_2(uint64_t n, const Int& m) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    return mod_pos(b - 2, m);
}

}  // namespace ntlab
