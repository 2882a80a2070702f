#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ntlab {

/// Truncated 2-adic integer: a residue mod 2^m with the precision m carried
/// explicitly. Binary operations take the minimum precision of the operands.
/// m is limited to 64 bits.
class Padic2 {
public:
    Padic2() : m_(0), value_(0) {}
    Padic2(uint64_t value, unsigned m) : m_(check_m(m)), value_(reduce(value, m)) {}

    uint64_t value() const { return value_; }
    unsigned precision() const { return m_; }

    Padic2 operator+(const Padic2& o) const {
        unsigned m = std::min(m_, o.m_);
        return Padic2(value_ + o.value_, m);
    }
    Padic2 operator-(const Padic2& o) const {
        unsigned m = std::min(m_, o.m_);
        return Padic2(value_ - o.value_, m);
    }
    Padic2 operator*(const Padic2& o) const {
        unsigned m = std::min(m_, o.m_);
        return Padic2(value_ * o.value_, m);
    }
    Padic2 operator-() const { return Padic2(~value_ + 1, m_); }

    Padic2 reduced(unsigned m) const { return Padic2(value_, std::min(m, m_)); }

    bool operator==(const Padic2& o) const { return m_ == o.m_ && value_ == o.value_; }

    bool bit(unsigned i) const {
        if (i >= m_) throw std::out_of_range("Padic2 bit beyond precision");
        return (value_ >> i) & 1;
    }

    /// Binary digits, least significant first, m characters of '0'/'1'.
    std::string digits_lsb_first() const {
        std::string s;
        s.reserve(m_);
        for (unsigned i = 0; i < m_; ++i) s.push_back(((value_ >> i) & 1) ? '1' : '0');
        return s;
    }

private:
    static unsigned check_m(unsigned m) {
        if (m > 64) throw std::domain_error("Padic2 precision limited to 64 bits");
        return m;
    }
    static uint64_t reduce(uint64_t v, unsigned m) {
        if (m >= 64) return v;
        return v & ((uint64_t(1) << m) - 1);
    }

    unsigned m_;
    uint64_t value_;
};

}  // namespace ntlab
