#include "ntlab/compositions.hpp"
#include "ntlab/rational.hpp"

#include <algorithm>

namespace ntlab {

ThetaTable theta_table(std::size_t n_max, unsigned m) {
    if (m > 64) throw std::domain_error("theta_table: m <= 64");
    ThetaTable t;
    t.m = m;
    t.values.assign(n_max + 1, 0);
    const uint64_t mask = m >= 64 ? ~uint64_t(0) : ((uint64_t(1) << m) - 1);
    t.values[0] = 1 & mask;
    for (std::size_t n = 1; n <= n_max; ++n) {
        uint64_t acc = 0;
        for (std::size_t p = 1; p <= n; p <<= 1) acc += t.values[n - p];
        t.values[n] = acc & mask;
    }
    return t;
}

TwoAdicLimit theta_limit(const ThetaTable& table, long a, unsigned m, int k_lo, int k_hi) {
    if (m > table.m) throw std::domain_error("theta_limit: m exceeds the table precision");
    while (k_lo <= k_hi && (1l << k_lo) + a < 0) ++k_lo;
    if (k_lo > k_hi) throw std::invalid_argument("theta_limit: empty window");
    if ((1l << k_hi) + a >= static_cast<long>(table.size()))
        throw std::out_of_range("theta_limit: table too small for the window");

    const uint64_t mask = m >= 64 ? ~uint64_t(0) : ((uint64_t(1) << m) - 1);
    std::vector<uint64_t> res;
    for (int k = k_lo; k <= k_hi; ++k) res.push_back(table.at((1l << k) + a) & mask);

    uint64_t final_res = res.back();
    int from = k_hi;
    for (int k = k_hi; k >= k_lo; --k) {
        if (res[k - k_lo] != final_res) break;
        from = k;
    }
    if (from == k_hi)
        throw NotStabilized("theta(2^k + " + std::to_string(a) + ") mod 2^" + std::to_string(m) +
                            " still moves at the top of the window [" + std::to_string(k_lo) +
                            ", " + std::to_string(k_hi) + "]");
    TwoAdicLimit lim;
    lim.a = a;
    lim.digits = Padic2(final_res, m);
    lim.stabilized_from = from;
    lim.k_lo = k_lo;
    lim.k_hi = k_hi;
    return lim;
}

TwoAdicLimit theta_limit(long a, unsigned m, int k_lo, int k_hi) {
    if (k_hi > 26) throw std::domain_error("theta_limit: window upper end <= 26");
    std::size_t need = (1ul << k_hi) + std::max(a, 0l) + 1;
    ThetaTable t = theta_table(need, m);
    return theta_limit(t, a, m, k_lo, k_hi);
}

Int theta_enumerate(unsigned n) {
    if (n == 0) return 1;
    Int acc = 0;
    for (unsigned p = 1; p <= n; p <<= 1) acc += theta_enumerate(n - p);
    return acc;
}

}  // namespace ntlab
