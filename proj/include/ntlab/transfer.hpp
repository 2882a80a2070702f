#pragma once

#include "ntlab/hp.hpp"
#include "ntlab/hpmatrix.hpp"

#include <stdexcept>
#include <vector>

namespace ntlab {

/// An entry of the operator truncation needs zeta at an argument where the
/// pole cannot be compensated (constant-term row); evaluation at that exact
/// s is impossible and callers fall back to an offset policy.
struct ZetaPole : std::runtime_error {
    explicit ZetaPole(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguousIndex : std::runtime_error {
    AmbiguousIndex(const std::string& what) : std::runtime_error(what) {}
};

/// Finite truncation of the continued-fraction transfer operator
/// L_s[f](z) = sum_m (z+m)^(-2s) f(1/(z+m)) on the Taylor basis (z-1)^k,
/// k = 0..N-1, centered at z = 1.
struct OperatorTruncation {
    HPComplex s;
    int dim = 0;
    int digits = 0;
    HPMatrix matrix;
};

/// Entry (n, k) of the truncation:
///   sum_{j=0}^{k} (-1)^(j+n) C(k,j) binom(2s+k-j+n-1, n) (zeta(2s+k-j+n) - 1).
/// When a zeta argument hits the pole at 1 and n >= 1, the product
/// binom * (zeta - 1) has the finite limit (-1)^(j+1) C(k,j)/n, which is used
/// instead of naive substitution; an uncompensated hit in row 0 throws
/// ZetaPole.
OperatorTruncation build_truncation(const HPComplex& s, int N, int digits, bool parallel = true);

struct SpectrumReport {
    HPComplex s;
    int digits = 0;
    int dim = 0;
    std::vector<HPComplex> eigenvalues;  // canonical order: lambda_(i+1) = eigenvalues[i]
};

SpectrumReport spectrum(const HPComplex& s, int N, int digits);

struct ZeroIndexRecord {
    HPComplex rho;
    int index = 0;           // canonical index M with lambda_M(rho/2) closest to 1
    HPReal residual;         // |lambda_M - 1|
    HPReal runner_up_gap;    // |lambda - 1| of the second-closest eigenvalue
    int dim = 0;
    int digits = 0;
};

/// Throws AmbiguousIndex when runner_up_gap < 2 * residual (truncation too
/// small; retry with larger N).
ZeroIndexRecord t_of_rho(const HPComplex& rho, int N, int digits);

struct SelbergFactorReport {
    HPComplex s;
    int digits = 0;
    int dim = 0;
    std::vector<std::pair<int, HPComplex>> factors;  // (n, 1 - lambda_n^2)
    HPComplex truncated_product;
    // trivial-zero mode
    int k = 0;
    int near_zero_count = -1;
    int cusp_dim = -1;
    double offset_delta = 0;  // offset applied when s = 1-k is a pole of L_s
    std::vector<int> near_zero_indices;
};

SelbergFactorReport selberg_factors(const HPComplex& s, int N, int digits);

/// Spectrum at s = 1 - k (the operator family has a pole there, so the
/// evaluation applies a documented offset delta), counting factors with
/// |1 - lambda_n^2| < tol next to the cusp-form dimension dim S_2k.
SelbergFactorReport trivial_zero_report(int k, int N, int digits, double tol = 1e-4);

/// dim S_w for the full modular group, even weight w >= 0.
int cusp_form_dimension(int weight);

}  // namespace ntlab
