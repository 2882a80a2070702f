#pragma once

#include "ntlab/intpoly.hpp"
#include "ntlab/rational.hpp"

#include <vector>

namespace ntlab {

/// Square matrix of arbitrary-size integers.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, Int(0)) {}
    IntMatrix(std::size_t n, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator*(const Int& k) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;

    Int determinant() const;

    /// Monic characteristic polynomial det(xI - M) by the division-free
    /// Berkowitz algorithm (exact over Z).
    IntPoly charpoly() const;

private:
    std::size_t n_;
    std::vector<Int> a_;
};

}  // namespace ntlab
