#include "ntlab/galois.hpp"
#include "ntlab/factor.hpp"
#include "ntlab/modpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

namespace ntlab {

std::string group_name_str(GroupName g) {
    switch (g) {
        case GroupName::Z1: return "Z1";
        case GroupName::Z2: return "Z2";
        case GroupName::Z3: return "Z3";
        case GroupName::S3: return "S3";
        case GroupName::Z4: return "Z4";
        case GroupName::V4: return "V4";
        case GroupName::D4: return "D4";
        case GroupName::A4: return "A4";
        case GroupName::S4: return "S4";
        case GroupName::Z5: return "Z5";
        case GroupName::D5: return "D5";
        case GroupName::F20: return "F20";
        case GroupName::A5: return "A5";
        case GroupName::S5: return "S5";
        case GroupName::Z6: return "Z6";
        case GroupName::D6: return "D6";
        case GroupName::A6: return "A6";
        case GroupName::S6: return "S6";
        case GroupName::Z2wrS3: return "Z2wrS3";
        case GroupName::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::set<Perm> closure(const std::vector<Perm>& gens) {
    std::set<Perm> g;
    std::size_t n = gens[0].size();
    Perm id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    g.insert(id);
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& gen : gens) {
                Perm q = compose(gen, p);
                if (g.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return g;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = static_cast<int>(i);
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

struct Candidate {
    GroupName name;
    std::map<std::vector<int>, double> dist;  // cycle type -> probability
    std::size_t order;
};

Candidate make_candidate(GroupName name, const std::vector<Perm>& gens) {
    Candidate c;
    c.name = name;
    auto g = closure(gens);
    c.order = g.size();
    for (const Perm& p : g) c.dist[cycle_type(p)] += 1.0;
    for (auto& [t, v] : c.dist) v /= static_cast<double>(g.size());
    return c;
}

/// Regular action of a small abstract group given by its element list under
/// composition; used for S3 acting on itself (transitive of degree 6).
Candidate regular_s3() {
    std::vector<Perm> elems;
    Perm base{0, 1, 2};
    Perm p = base;
    std::sort(p.begin(), p.end());
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const Perm& q) {
        return static_cast<int>(std::find(elems.begin(), elems.end(), q) - elems.begin());
    };
    std::vector<Perm> gens;
    for (const Perm& g : {Perm{1, 2, 0}, Perm{1, 0, 2}}) {
        Perm act(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) act[i] = index_of(compose(g, elems[i]));
        gens.push_back(act);
    }
    return make_candidate(GroupName::S3, gens);
}

/// S4 or A4 acting on the six unordered pairs of {0,1,2,3}.
Candidate pairs_action(GroupName name, const std::vector<Perm>& gens4) {
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto pair_index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == std::make_pair(a, b)) return static_cast<int>(i);
        return -1;
    };
    std::vector<Perm> gens;
    for (const Perm& g : gens4) {
        Perm act(6);
        for (std::size_t i = 0; i < 6; ++i) act[i] = pair_index(g[pairs[i].first], g[pairs[i].second]);
        gens.push_back(act);
    }
    return make_candidate(name, gens);
}

/// Moebius maps on P1(F5) = {0,1,2,3,4,inf=5}.
Perm moebius(int a, int b, int c, int d) {  // x -> (ax+b)/(cx+d)
    auto inv5 = [](int x) {
        for (int i = 1; i < 5; ++i)
            if (i * x % 5 == 1) return i;
        return 0;
    };
    Perm p(6);
    for (int x = 0; x < 6; ++x) {
        int num, den;
        if (x == 5) { num = a; den = c; }
        else { num = (a * x + b) % 5; den = (c * x + d) % 5; }
        num = ((num % 5) + 5) % 5;
        den = ((den % 5) + 5) % 5;
        p[x] = den == 0 ? (num == 0 ? -1 : 5) : num * inv5(den) % 5;
    }
    return p;
}

const std::vector<Candidate>& candidates_deg5() {
    static const std::vector<Candidate> c = [] {
        Perm c5{1, 2, 3, 4, 0};
        std::vector<Candidate> v;
        v.push_back(make_candidate(GroupName::Z5, {c5}));
        v.push_back(make_candidate(GroupName::D5, {c5, Perm{0, 4, 3, 2, 1}}));
        v.push_back(make_candidate(GroupName::F20, {c5, Perm{0, 2, 4, 1, 3}}));
        v.push_back(make_candidate(GroupName::A5, {c5, Perm{1, 2, 0, 3, 4}}));
        v.push_back(make_candidate(GroupName::S5, {c5, Perm{1, 0, 2, 3, 4}}));
        return v;
    }();
    return c;
}

const std::vector<Candidate>& candidates_deg6() {
    static const std::vector<Candidate> c = [] {
        std::vector<Candidate> v;
        Perm c6{1, 2, 3, 4, 5, 0};
        v.push_back(make_candidate(GroupName::Z6, {c6}));
        v.push_back(regular_s3());
        v.push_back(make_candidate(GroupName::D6, {c6, Perm{5, 4, 3, 2, 1, 0}}));
        v.push_back(pairs_action(GroupName::A4, {Perm{1, 2, 0, 3}, Perm{1, 0, 3, 2}}));
        v.push_back(pairs_action(GroupName::S4, {Perm{1, 2, 3, 0}, Perm{1, 0, 2, 3}}));
        // hyperoctahedral group: signed permutations of three axes acting on
        // the six points {+-e1, +-e2, +-e3}
        v.push_back(make_candidate(GroupName::Z2wrS3,
                                   {Perm{1, 0, 2, 4, 3, 5},     // swap e1,e2
                                    Perm{1, 2, 0, 4, 5, 3},     // rotate e1->e2->e3
                                    Perm{3, 1, 2, 0, 4, 5}}));  // flip e1
        v.push_back(make_candidate(GroupName::A5, {moebius(1, 1, 0, 1), moebius(0, -1, 1, 0)}));
        v.push_back(make_candidate(GroupName::S5,
                                   {moebius(1, 1, 0, 1), moebius(0, -1, 1, 0), moebius(2, 0, 0, 1)}));
        v.push_back(make_candidate(GroupName::A6,
                                   {Perm{1, 2, 3, 4, 0, 5}, Perm{0, 2, 3, 4, 5, 1}}));
        v.push_back(make_candidate(GroupName::S6, {c6, Perm{1, 0, 2, 3, 4, 5}}));
        return v;
    }();
    return c;
}

GroupLabel match_statistics(const std::map<std::vector<int>, int>& observed, int n_samples,
                            const std::vector<Candidate>& candidates) {
    double best_ll = -1e300, second_ll = -1e300;
    const Candidate* best = nullptr;
    std::vector<double> lls;
    for (const auto& cand : candidates) {
        double ll = 0;
        bool excluded = false;
        for (const auto& [type, count] : observed) {
            auto it = cand.dist.find(type);
            if (it == cand.dist.end()) { excluded = true; break; }
            ll += count * std::log(it->second);
        }
        if (excluded) { lls.push_back(-1e300); continue; }
        lls.push_back(ll);
        if (ll > best_ll) { second_ll = best_ll; best_ll = ll; best = &cand; }
        else if (ll > second_ll) second_ll = ll;
    }
    if (!best) return GroupLabel{GroupName::UNKNOWN, Rat(0)};

    // coverage guard: total-variation distance between the empirical
    // distribution and the winner must be small, else none of the candidate
    // groups explains the data
    double tv = 0;
    for (const auto& [type, p] : best->dist) {
        auto it = observed.find(type);
        double f = it == observed.end() ? 0.0 : double(it->second) / n_samples;
        tv += std::abs(f - p);
    }
    for (const auto& [type, count] : observed)
        if (!best->dist.count(type)) tv += double(count) / n_samples;
    tv /= 2;
    if (tv > 0.25) return GroupLabel{GroupName::UNKNOWN, Rat(0)};

    // posterior under a uniform prior over the surviving candidates
    double denom = 0;
    for (double ll : lls)
        if (ll > -1e299) denom += std::exp(ll - best_ll);
    double post = 1.0 / denom;
    long scaled = std::lround(post * 1000000.0);
    return GroupLabel{best->name, Rat(scaled, 1000000)};
}

GroupLabel sample_frobenius(const IntPoly& p, int want) {
    Int bad = abs(p.lc() * p.discriminant());
    std::map<std::vector<int>, int> observed;
    int got = 0;
    uint64_t prime = 2;
    auto next_prime = [&]() {
        Int q(static_cast<unsigned long>(prime));
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        prime = q.get_ui();
    };
    while (got < want) {
        next_prime();
        Int pr(static_cast<unsigned long>(prime));
        if (bad % pr == 0) continue;
        ModPoly fp = ModPoly::from_int_poly(p, prime);
        observed[fp.factor_degrees()]++;
        ++got;
    }
    const auto& cands = p.degree() == 5 ? candidates_deg5() : candidates_deg6();
    return match_statistics(observed, got, cands);
}

/// Make the polynomial monic without changing its splitting field:
/// y = lc * x turns p into lc^(n-1) p(y / lc).
IntPoly monicize(const IntPoly& p) {
    if (p.is_monic()) return p;
    int n = p.degree();
    std::vector<Int> c(n + 1);
    Int power = 1;  // lc^(n-1-i)
    for (int i = n; i >= 0; --i) {
        c[i] = p.coeff(i) * power;
        if (i > 0) power *= p.lc();
    }
    c[n] = 1;
    return IntPoly(std::move(c));
}

bool is_square_in_quadratic_field(const Int& v, const Int& disc) {
    if (v == 0) return true;
    if (is_perfect_square(v)) return true;
    return is_perfect_square(v * disc);
}

GroupLabel quartic_group(const IntPoly& p0) {
    IntPoly p = monicize(p0);
    const Int a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    IntPoly resolvent({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1});
    Factorization rf = factor(resolvent);
    int linear = 0;
    Int root = 0;
    for (auto& [f, mult] : rf.factors)
        if (f.degree() == 1) {
            linear += mult;
            root = -f.coeff(0) / f.coeff(1);  // rational roots of a monic are integers
        }
    Int disc = p.discriminant();
    if (linear >= 3) return {GroupName::V4, Rat(1)};
    if (linear == 0)
        return {is_perfect_square(disc) ? GroupName::A4 : GroupName::S4, Rat(1)};
    // one rational root: Z4 vs D4 (Kappe-Warren)
    Int d1 = root * root - 4 * d;
    Int d2 = a * a - 4 * (b - root);
    bool z4 = is_square_in_quadratic_field(d1, disc) && is_square_in_quadratic_field(d2, disc);
    return {z4 ? GroupName::Z4 : GroupName::D4, Rat(1)};
}

}  // namespace

GroupLabel galois_group_id(const IntPoly& p, int sample_primes) {
    if (p.degree() > 6) throw DegreeTooLarge(p.degree());
    if (p.degree() < 1 || !is_irreducible(p)) throw NotIrreducible();
    switch (p.degree()) {
        case 1: return {GroupName::Z1, Rat(1)};
        case 2: return {GroupName::Z2, Rat(1)};
        case 3:
            return {is_perfect_square(p.discriminant()) ? GroupName::Z3 : GroupName::S3, Rat(1)};
        case 4: return quartic_group(p);
        default: return sample_frobenius(p, sample_primes);
    }
}

}  // namespace ntlab
