#pragma once

#include "ntlab/hp.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ntlab {

struct ConvergenceFailure : std::runtime_error {
    ConvergenceFailure(const std::string& what, int iterations, std::size_t dim)
        : std::runtime_error(what + " (iterations=" + std::to_string(iterations) +
                             ", dim=" + std::to_string(dim) + ")"),
          iterations(iterations), dim(dim) {}
    int iterations;
    std::size_t dim;
};

/// Dense square complex matrix at explicit precision.
class HPMatrix {
public:
    HPMatrix() : n_(0) {}
    HPMatrix(std::size_t n, mpfr_prec_t bits) : n_(n), a_(n * n, HPComplex(bits)) {}

    std::size_t dim() const { return n_; }
    const HPComplex& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    HPComplex& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    std::vector<HPComplex> apply(const std::vector<HPComplex>& v) const;

    bool all_real() const;

private:
    std::size_t n_;
    std::vector<HPComplex> a_;
};

struct EigenPair {
    HPComplex value;
    std::vector<HPComplex> vector;
    HPReal residual;  // ||Av - lambda v|| / ||v||
};

/// All eigenvalues (with certified residuals) of a dense complex matrix:
/// balancing, Householder Hessenberg reduction, shifted QR, inverse
/// iteration for the eigenvectors. Each reported pair satisfies
/// ||Av - lambda v||/||v|| < 10^(-digits/2); otherwise ConvergenceFailure.
/// The order of the returned pairs is deterministic (deflation order).
std::vector<EigenPair> eigen_pairs(const HPMatrix& m, int digits);

std::vector<HPComplex> eigenvalues(const HPMatrix& m, int digits);

/// Canonical spectral order: descending modulus, ties by descending real
/// part, then descending imaginary part.
void sort_canonical(std::vector<HPComplex>& values);

}  // namespace ntlab
