#pragma once

#include "ntlab/intpoly.hpp"
#include "ntlab/rational.hpp"

#include <stdexcept>
#include <string>

namespace ntlab {

struct DegreeTooLarge : std::domain_error {
    explicit DegreeTooLarge(int deg)
        : std::domain_error("Galois identification limited to degree 6, got " + std::to_string(deg)) {}
};

struct NotIrreducible : std::domain_error {
    NotIrreducible() : std::domain_error("Galois identification requires an irreducible polynomial") {}
};

enum class GroupName {
    Z1, Z2, Z3, S3, Z4, V4, D4, A4, S4,
    Z5, D5, F20, A5, S5,
    Z6, D6, A6, S6, Z2wrS3,
    UNKNOWN
};

std::string group_name_str(GroupName g);

/// Galois group label with an honesty marker: exact methods (degree <= 4:
/// discriminant and resolvent tests) carry confidence 1; degree 5-6 labels
/// come from Frobenius cycle-type sampling and carry the statistical
/// posterior; UNKNOWN carries 0.
struct GroupLabel {
    GroupName name = GroupName::UNKNOWN;
    Rat confidence = Rat(0);
};

/// Identify the Galois group of an irreducible polynomial of degree <= 6.
/// Degree <= 2 is immediate; degree 3 uses the discriminant-square test;
/// degree 4 the resolvent cubic (with the rational-root refinement splitting
/// Z4 from D4); degrees 5 and 6 sample Frobenius cycle types over at least
/// `sample_primes` primes of good reduction and match them against the
/// candidate transitive groups' cycle-type statistics.
GroupLabel galois_group_id(const IntPoly& p, int sample_primes = 300);

}  // namespace ntlab
