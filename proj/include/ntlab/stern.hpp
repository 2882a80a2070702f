#pragma once

#include "ntlab/galois.hpp"
#include "ntlab/hp.hpp"
#include "ntlab/intmatrix.hpp"
#include "ntlab/intpoly.hpp"

#include <cstdint>
#include <vector>

namespace ntlab {

/// Stern diatomic value a(n): a(0)=0, a(1)=1, a(2n)=a(n), a(2n+1)=a(n)+a(n+1).
uint64_t stern(uint64_t n);

/// Q^(L)(N) = sum_{n=2^N+1}^{2^(N+1)} a(n)^L, exactly, by streaming the
/// level-N pairs (a(n), a(n+1)) of the diatomic pair tree.
Int level_moment_direct(int L, int N, bool parallel = true);

/// All mixed moments v_i = sum over level-N pairs of a^i b^(L-i), i = 0..L.
/// v_0 is Q^(L)(N).
std::vector<Int> level_moment_vector(int L, int N, bool parallel = true);

/// The (L+1)x(L+1) transfer matrix M with new v = M old v per level:
/// M[i][j] = C(L-i, j-i) + C(i, j).
IntMatrix moment_matrix(int L);

struct MomentAsymptotics {
    int L = 0;
    IntMatrix matrix;
    IntPoly charpoly;
    bool minpoly_available = false;
    IntPoly minpoly_2mu;       // irreducible factor carrying the dominant root
    HPReal mu;                 // dominant eigenvalue / 2
    HPReal c_estimate;         // Q^(L)(N) / (2^N mu^N) at the largest direct N
    double c_stabilization = 0;  // |c(N) - c(N-1)| / |c(N)|
    GroupLabel galois;         // UNKNOWN unless the minimal polynomial has degree <= 6
};

/// Spectral data for Q^(L)(N)/2^N ~ c_L mu_L^N: the minimal polynomial of
/// 2 mu_L (the dominant-root factor of the characteristic polynomial), mu_L,
/// an empirical c_L with a stabilization diagnostic, and the Galois label of
/// the minimal polynomial. Factorization is skipped above degree 24(minpoly
/// unavailable; mu still computed from the characteristic polynomial).
MomentAsymptotics asymptotics(int L, int digits, bool want_galois = true);

/// mu_L^(1/L) for L = 1..L_max (strictly increasing, bounded by the golden
/// ratio).
std::vector<std::pair<int, HPReal>> growth_check(int L_max, int digits);

/// Minimal integer linear recurrence satisfied by Q^(L)(0..2L+2), by exact
/// kernel elimination; returns the monic-normalized coefficient vector
/// c_0..c_d with sum c_i Q(N+i) = 0.
std::vector<Int> minimal_recurrence(int L);

}  // namespace ntlab
