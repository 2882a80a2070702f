#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntlab {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact rational from numerator/denominator, normalized to lowest terms
/// with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// True when n is an exact power of two (n >= 1).
inline bool is_power_of_two(const Int& n) {
    if (n <= 0) return false;
    return mpz_scan1(n.get_mpz_t(), 0) == mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

/// base^e mod m, m > 0.
inline Int pow_mod(const Int& base, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Inverse of a mod m; throws when gcd(a, m) != 1.
inline Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: not invertible");
    return r;
}

/// Nonnegative remainder of a mod m (m > 0).
inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;  // exact below 2^64 in practice
}

/// All primes <= bound, by sieve.
std::vector<uint64_t> primes_upto(uint64_t bound);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace ntlab
