#pragma once

#include "ntlab/hp.hpp"
#include "ntlab/rational.hpp"

#include <stdexcept>
#include <vector>

namespace ntlab {

/// The rational function Q_n(z) = B_n(z) z^(-n-1) as a Laurent polynomial:
/// coefficient of z^(lo_exp + i) is laurent[i].
struct QRational {
    int n = 0;
    long lo_exp = 0;
    std::vector<Rat> laurent;

    Rat eval_derivative_at_minus1(unsigned j) const;  // d^j/dz^j at z = -1
    /// Numerator polynomial B_n(z) = z^(n+1) Q_n(z), low-to-high coefficients.
    std::vector<Rat> numerator_poly() const;
};

/// Q_0 = -1/(2z) and the recurrence
///   Q_n(z) = (1/2) sum_{j=0}^{n-1} (1/j!) (d^j Q_{n-j-1}/dz^j)(-1) (z^j - z^{-j-2}),
/// exactly over the rationals, for n = 0..N.
std::vector<QRational> q_polys(int N);

/// Q'_n(-1) for n = 0..N.
std::vector<Rat> lambda_coefficients(int N);

struct SeriesNotSettled : std::runtime_error {
    explicit SeriesNotSettled(const std::string& w) : std::runtime_error(w) {}
};

struct LambdaValue {
    HPReal value;
    HPReal tail_bound;  // empirical, from trailing-term ratios
    int terms_used = 0;
};

/// Lambda(t) = sum Q'_n(-1)/n! t^n. Refuses to answer unless the last 10
/// included terms are below 10^(-digits) of the running magnitude
/// (SeriesNotSettled otherwise -- the entirety of Lambda is conjectural).
LambdaValue lambda_eval(const HPReal& t, int n_terms, int digits);

struct LaplaceResult {
    HPReal value;
    HPReal quadrature_error;  // two-level refinement difference
    HPReal tail_bound;        // bound on the integral beyond T_cutoff
    double t_cutoff = 0;
    int terms = 0;
};

/// integral_0^T Lambda(t) e^(-t) dt by composite Gauss-Legendre plus an
/// empirical tail bound for (T, infinity).
LaplaceResult laplace_integral(double t_cutoff, int n_terms, int digits);

/// Minkowski question mark of a rational in [0, 1]: exact dyadic value via
/// the alternating formula on the continued fraction digits.
Rat question_mark(const Rat& x);

/// Inverse of the question mark at y = k / 2^depth by Stern-Brocot descent.
Rat question_mark_inverse_dyadic(const Int& k, int depth);

struct QuestionMarkMoment {
    int L = 0;
    int depth = 0;
    HPReal lower, upper;  // directed-rounded Stieltjes sums; lower <= m_L <= upper
};

/// Certified bracket of the moment integral x^L d?(x) from the dyadic
/// partition of the value axis at the given depth.
QuestionMarkMoment question_mark_moment(int L, int depth, bool parallel = true);

}  // namespace ntlab
