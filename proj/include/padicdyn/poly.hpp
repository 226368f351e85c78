// Dense univariate polynomials with exact rational coefficients.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "padicdyn/rational.hpp"

namespace padicdyn {

// Coefficients in ascending degree order; the trailing coefficient of a
// nonzero polynomial is nonzero. The zero polynomial has an empty
// coefficient vector and degree() == -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& c0) { c_.push_back(c0); trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rat(1)); }
    // c * z^k
    static Poly monomial(const Rat& c, long k) {
        if (c == 0) return Poly();
        std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
        v.back() = c;
        return Poly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rat& operator[](long i) const {
        static const Rat kZero(0);
        if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    // Multiplicity of the root 0.
    long ord_zero() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<long>(i);
        return -1;  // zero polynomial
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<Rat> v(c_);
        for (auto& x : v) x = -x;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Rat& s, const Poly& a) {
        if (s == 0) return Poly();
        std::vector<Rat> v(a.c_);
        for (auto& x : v) x *= s;
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return Poly(std::move(v));
    }

    Poly pow(long e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Poly r = one();
        Poly b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // P(z + a), by Horner in (z + a).
    Poly shifted(const Rat& a) const {
        if (is_zero()) return Poly();
        Poly acc;
        Poly lin(std::vector<Rat>{a, Rat(1)});
        for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
        return acc;
    }

    // P(Q(z)) for another polynomial Q.
    Poly compose(const Poly& q) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * q + Poly(c_[i]);
        return acc;
    }

    // z^k * P, k >= 0.
    Poly shifted_up(long k) const {
        if (is_zero()) return Poly();
        std::vector<Rat> v(static_cast<size_t>(k), Rat(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        Rat inv = Rat(1) / leading();
        return inv * *this;
    }

    std::string str(const std::string& var = "z") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Quotient and remainder over Q, deg(rem) < deg(b).
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    long db = b.degree();
    long da = a.degree();
    if (da < db) return {Poly(), a};
    std::vector<Rat> quot(static_cast<size_t>(da - db) + 1, Rat(0));
    for (long i = da; i >= db; --i) {
        Rat& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        Rat f = top / b.leading();
        quot[static_cast<size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= f * b[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("internal: inexact polynomial division");
    return q;
}

// Monic gcd over Q (Euclid; operands are monicized each step to keep
// coefficient growth in check at the scales used here).
inline Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    if (x.is_zero()) return y.is_zero() ? Poly() : y.monic();
    if (y.is_zero()) return x.monic();
    x = x.monic();
    y = y.monic();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r.is_zero() ? Poly() : r.monic();
    }
    return x;
}

// Least common integer multiple of the coefficient denominators.
inline Int denominator_lcm(const Poly& p) {
    Int l(1);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rational_to_string(c_[i]);
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace padicdyn
