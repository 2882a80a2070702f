#include "ntlab/intmatrix.hpp"

#include <stdexcept>

namespace ntlab {

IntMatrix::IntMatrix(std::size_t n, std::vector<Int> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw std::invalid_argument("IntMatrix: entry count != n*n");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const Int& k) const {
    IntMatrix r(*this);
    for (auto& v : r.a_) v *= k;
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != n_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
    std::vector<Int> r(n_, Int(0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (a_[i * n_ + j] != 0) r[i] += a_[i * n_ + j] * v[j];
    return r;
}

Int IntMatrix::determinant() const {
    std::vector<std::vector<Int>> m(n_, std::vector<Int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m[i][j] = at(i, j);
    return det_bareiss(m);
}

IntPoly IntMatrix::charpoly() const {
    const std::size_t n = n_;
    std::vector<Int> c{Int(1)};  // coefficients, leading first
    for (std::size_t k = 1; k <= n; ++k) {
        // Toeplitz column for the k-th principal submatrix:
        // t[0] = 1, t[1] = -A[k-1][k-1], t[i] = -(R * M^(i-2) * C) with
        // R = A[k-1][0..k-2], C = A[0..k-2][k-1], M the (k-1)-minor.
        std::vector<Int> t(k + 1, Int(0));
        t[0] = 1;
        t[1] = -at(k - 1, k - 1);
        if (k >= 2) {
            std::vector<Int> v(k - 1);
            for (std::size_t i = 0; i < k - 1; ++i) v[i] = at(i, k - 1);
            for (std::size_t p = 2; p <= k; ++p) {
                Int dot = 0;
                for (std::size_t i = 0; i < k - 1; ++i) dot += at(k - 1, i) * v[i];
                t[p] = -dot;
                if (p == k) break;
                std::vector<Int> w(k - 1, Int(0));
                for (std::size_t i = 0; i < k - 1; ++i)
                    for (std::size_t j = 0; j < k - 1; ++j)
                        if (at(i, j) != 0) w[i] += at(i, j) * v[j];
                v = std::move(w);
            }
        }
        std::vector<Int> cn(k + 1, Int(0));
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= std::min(i, k - 1); ++j) cn[i] += t[i - j] * c[j];
        c = std::move(cn);
    }
    std::vector<Int> low_to_high(c.rbegin(), c.rend());
    return IntPoly(std::move(low_to_high));
}

}  // namespace ntlab
