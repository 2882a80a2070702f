#include "ntlab/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ntlab {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

IntPoly IntPoly::constant(const Int& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPoly IntPoly::from_terms(const std::vector<std::pair<unsigned, Int>>& terms) {
    IntPoly p;
    for (const auto& [e, c] : terms) {
        if (p.c_.size() <= e) p.c_.resize(e + 1);
        p.c_[e] += c;
    }
    p.normalize();
    return p;
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.normalize();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) - o.coeff(i);
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const Int& k) const {
    if (k == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& c : r.c_) c *= k;
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    IntPoly r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Int(static_cast<long>(i));
    r.normalize();
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) g = ntlab::gcd(g, c);
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    IntPoly r(*this);
    for (auto& c : r.c_) c /= g;
    return r;
}

bool IntPoly::try_divide(const IntPoly& d, IntPoly& q) const {
    if (d.is_zero()) return false;
    IntPoly r(*this);
    std::vector<Int> qc(std::max<int>(degree() - d.degree() + 1, 0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Int qk = r.lc() / d.lc();
        if (qk * d.lc() != r.lc()) return false;
        std::size_t shift = r.degree() - d.degree();
        qc[shift] = qk;
        // r -= qk * x^shift * d
        for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= qk * d.c_[i];
        r.normalize();
    }
    if (!r.is_zero()) return false;
    q = IntPoly(std::move(qc));
    return true;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    IntPoly q;
    if (!try_divide(d, q)) throw std::domain_error("IntPoly::divide_exact: not divisible");
    return q;
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("pseudo_rem by zero");
    IntPoly r(a);
    int e = a.degree() - d.degree() + 1;
    if (e <= 0) return r;
    const Int& dl = d.lc();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = r.degree() - d.degree();
        Int rl = r.lc();
        for (auto& c : r.c_) c *= dl;
        for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= rl * d.c_[i];
        r.normalize();
        --e;
    }
    // match the classical lc(d)^(deg a - deg d + 1) scaling exactly
    while (e-- > 0)
        for (auto& c : r.c_) c *= dl;
    return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Int cont = ntlab::gcd(a.content(), b.content());
    IntPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = pseudo_rem(f, g);
        f = g;
        g = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    if (f.lc() < 0) f = -f;
    return f * cont;
}

/// Fraction-free Bareiss determinant; destroys its argument.
Int det_bareiss(std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Resultant via the Sylvester matrix and fraction-free elimination.
Int IntPoly::resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int m = a.degree(), n = b.degree();
    if (m == 0) return pow_int(a.lc(), n);
    if (n == 0) return pow_int(b.lc(), m);
    const std::size_t size = m + n;
    std::vector<std::vector<Int>> s(size, std::vector<Int>(size, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + (m - i)] = a.coeff(i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + (n - i)] = b.coeff(i);
    return det_bareiss(s);
}

Int IntPoly::discriminant() const {
    if (degree() < 1) return 0;
    Int r = resultant(*this, derivative());
    Int d = r / lc();
    long n = degree();
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

IntPoly IntPoly::squarefree_part() const {
    if (degree() <= 1) return primitive_part();
    IntPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive_part();
    return primitive_part().divide_exact(g.primitive_part()).primitive_part();
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        first = false;
        if (i == 0) { os << a.get_str(); continue; }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::vector<uint64_t> primes_upto(uint64_t bound) {
    std::vector<uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

}  // namespace ntlab
