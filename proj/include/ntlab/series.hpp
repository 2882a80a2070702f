#pragma once

#include "ntlab/rational.hpp"

#include <cstddef>
#include <stdexcept>

namespace ntlab {

struct NonUnitDivisor : std::domain_error {
    NonUnitDivisor() : std::domain_error("series division requires a nonzero constant term") {}
};

struct BadExponent : std::domain_error {
    explicit BadExponent(int m)
        : std::domain_error("power substitution requires exponent >= 2, got " + std::to_string(m)) {}
};

/// Finite-order power series with exact rational coefficients. `order` is the
/// exclusive truncation order: coefficients are stored for indices 0..order-1
/// and no operation claims anything at index >= order.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
    TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}

    static TruncatedSeries constant(const Rat& c, std::size_t order);
    static TruncatedSeries identity(std::size_t order);  // the series x

    std::size_t order() const { return coeffs_.size(); }
    const Rat& at(std::size_t i) const { return coeffs_.at(i); }
    Rat& at(std::size_t i) { return coeffs_.at(i); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator/(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rat& c) const;
    TruncatedSeries operator-() const;

    bool is_zero() const;
    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

    /// x * d/dx: coefficient n of the result is n times coefficient n.
    TruncatedSeries x_derivative() const;

    /// Substitute x -> x^m (m >= 2); result keeps this series' order.
    TruncatedSeries power_substitute(int m) const;

private:
    std::vector<Rat> coeffs_;
};

}  // namespace ntlab
