#pragma once

#include "ntlab/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ntlab {

/// Exact complex number with rational real and imaginary parts.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat integer(const Int& n) { return {Rat(n), Rat(0)}; }
    static GaussRat i_times(long k) { return {Rat(0), Rat(k)}; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator-() const { return {-re, -im}; }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator<(const GaussRat& o) const {  // ordering for map keys
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
    bool is_zero() const { return re == 0 && im == 0; }
    std::string str() const;
};

enum class FormKind { CubicField, SumOfTwoSquares };

/// The two built-in integral norm forms:
///   CubicField (arity 3): N(a + b alpha + c alpha') for alpha a root of
///     X^3 - 3X + 1 and alpha' = alpha^2 - 2:
///     a^3 - b^3 - c^3 - 3ab^2 - 3ac^2 + 3abc + 6b^2c - 3bc^2
///   SumOfTwoSquares (arity 2): a^2 + b^2.
struct NormForm {
    FormKind kind = FormKind::CubicField;
    int arity() const { return kind == FormKind::CubicField ? 3 : 2; }
    int degree() const { return kind == FormKind::CubicField ? 3 : 2; }
    Int eval(const std::vector<Int>& v) const;
    GaussRat eval(const std::vector<GaussRat>& v) const;
};

/// A map from the integer interval [-B, B] into exact complex values, or one
/// of the closed-form maps (total on Z).
struct CandidateMap {
    enum class Kind { Table, Identity, Negate, Constant };
    Kind kind = Kind::Table;
    long bound = 0;                 // domain [-B, B] for tables
    GaussRat constant;
    std::map<Int, GaussRat> table;

    static CandidateMap identity() { return {Kind::Identity}; }
    static CandidateMap negate() { return {Kind::Negate}; }
    static CandidateMap constant_map(GaussRat c) {
        CandidateMap m{Kind::Constant};
        m.constant = std::move(c);
        return m;
    }
    static CandidateMap from_table(std::map<Int, GaussRat> t, long bound);

    bool defined_at(const Int& n) const;
    GaussRat eval(const Int& n) const;
    std::string str() const;
};

struct HUndefinedAt : std::domain_error {
    explicit HUndefinedAt(const Int& t)
        : std::domain_error("h undefined at norm value " + t.get_str()), value(t) {}
    Int value;
};

struct Verdict {
    bool ok = true;
    std::optional<std::vector<Int>> counterexample;  // first failing tuple
};

/// Exhaustive exact check of T(f(a..)) = h(T(a..)) over the box [-B, B]^arity.
Verdict verify_pair(const NormForm& form, const CandidateMap& f, const CandidateMap& h, long B);

/// Exhaustive check that T(f(a..)) depends only on T(a..) over the box.
Verdict verify_dependence(const NormForm& form, const CandidateMap& f, long B);

struct SearchSpaceTooLarge : std::runtime_error {
    SearchSpaceTooLarge() : std::runtime_error("norm-form search space exceeds the node cap") {}
};

enum class SearchMode { Dependence, FEqualsH };

/// All maps [-B, B] -> value_set passing verify_dependence (and, in FEqualsH
/// mode, agreeing with the induced h wherever both are defined), by
/// backtracking with incremental class-consistency pruning.
std::vector<CandidateMap> search_solutions(const NormForm& form,
                                           const std::vector<GaussRat>& value_set, long B,
                                           SearchMode mode, uint64_t node_cap = 50'000'000);

/// Signed scalings {0, +-1, +-i} * {0..B} — the default search value set.
std::vector<GaussRat> signed_scaling_values(long B);

}  // namespace ntlab
