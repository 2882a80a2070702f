#include "ntlab/ppe.hpp"

namespace ntlab {

TruncatedSeries partition_series(std::size_t order) {
    std::vector<Int> p(order);
    if (order == 0) return TruncatedSeries(0);
    p[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        Int acc = 0;
        // generalized pentagonal numbers j(3j-1)/2 and j(3j+1)/2
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2;
            long g2 = j * (3 * j + 1) / 2;
            if (g1 > static_cast<long>(n)) break;
            Int term = p[n - g1];
            if (g2 <= static_cast<long>(n)) term += p[n - g2];
            if (j % 2 == 1) acc += term;
            else acc -= term;
        }
        p[n] = acc;
    }
    std::vector<Rat> c(order);
    for (std::size_t i = 0; i < order; ++i) c[i] = Rat(p[i]);
    return TruncatedSeries(std::move(c));
}

Int partition_number(unsigned n) {
    return partition_series(n + 1).at(n).get_num();
}

std::vector<Int> power_product_expansion(const TruncatedSeries& series, std::size_t K) {
    if (series.order() <= K) throw std::invalid_argument("power_product_expansion: order <= K");
    if (series.order() == 0 || series.at(0) != 1) throw NonUnitConstantTerm();
    std::vector<Rat> run(series.coeffs());
    std::vector<Int> out;
    out.reserve(K);
    for (std::size_t k = 1; k <= K; ++k) {
        Rat nk = run[k];
        if (!is_integer(nk))
            throw std::logic_error("power product expansion left the integers at index " +
                                   std::to_string(k));
        out.push_back(nk.get_num());
        if (nk != 0) {
            // divide the running series by (1 + nk x^k) in place
            for (std::size_t i = k; i < run.size(); ++i) run[i] -= nk * run[i - k];
        }
    }
    return out;
}

std::vector<SignEntry> sign_report(const std::vector<Int>& seq) {
    std::vector<SignEntry> out;
    for (std::size_t idx = 0; idx < seq.size(); ++idx) {
        std::size_t k = idx + 1;
        if (k % 2 != 0) continue;
        SignEntry e;
        e.k = k;
        e.value = seq[idx];
        e.sign = sgn(seq[idx]);
        e.in_scope = k >= 8;
        bool expect_positive = (k % 8 == 0);
        e.ok = e.in_scope && e.sign != 0 && ((e.sign > 0) == expect_positive);
        out.push_back(e);
    }
    return out;
}

}  // namespace ntlab
