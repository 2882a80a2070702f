#include "ntlab/series.hpp"

#include <algorithm>

namespace ntlab {

TruncatedSeries TruncatedSeries::constant(const Rat& c, std::size_t order) {
    TruncatedSeries s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order > 1) s.coeffs_[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    TruncatedSeries s(std::min(order, coeffs_.size()));
    std::copy_n(coeffs_.begin(), s.order(), s.coeffs_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n && i < order(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n && j < o.order(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    if (n == 0) return TruncatedSeries(0);
    if (o.coeffs_[0] == 0) throw NonUnitDivisor();
    TruncatedSeries q(n);
    // long division: q[i] = (a[i] - sum_{j<i} q[j] b[i-j]) / b[0]
    for (std::size_t i = 0; i < n; ++i) {
        Rat acc = coeffs_[i];
        for (std::size_t j = 0; j < i; ++j) {
            if (q.coeffs_[j] == 0) continue;
            acc -= q.coeffs_[j] * o.coeffs_[i - j];
        }
        q.coeffs_[i] = acc / o.coeffs_[0];
    }
    return q;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& c) const {
    TruncatedSeries r(order());
    for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order());
    for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::x_derivative() const {
    TruncatedSeries r(order());
    for (std::size_t i = 1; i < order(); ++i) r.coeffs_[i] = coeffs_[i] * Rat(static_cast<long>(i));
    return r;
}

TruncatedSeries TruncatedSeries::power_substitute(int m) const {
    if (m < 2) throw BadExponent(m);
    TruncatedSeries r(order());
    for (std::size_t i = 0; i * static_cast<std::size_t>(m) < order(); ++i)
        r.coeffs_[i * m] = coeffs_[i];
    return r;
}

}  // namespace ntlab
