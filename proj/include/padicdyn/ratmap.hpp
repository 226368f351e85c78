// Normalized rational maps F/G over Q and their exact algebra.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicdyn/poly.hpp"
#include "padicdyn/valuation.hpp"

namespace padicdyn {

// Thrown when an operation's mathematical preconditions are not met (as
// opposed to malformed input).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a configured resource cap would be exceeded.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A point of P^1(Q): a rational number or the point at infinity.
struct ProjPoint {
    bool at_infinity = false;
    Rat value;

    static ProjPoint infinity() { return ProjPoint{true, Rat(0)}; }
    static ProjPoint finite(const Rat& v) { return ProjPoint{false, v}; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (a.at_infinity != b.at_infinity) return false;
        return a.at_infinity || a.value == b.value;
    }
};

// F/G with gcd(F, G) = 1, G monic, and max(deg F, deg G) >= 1. Construction
// normalizes, so evaluation semantics are preserved but representations are
// canonical.
class RatMap {
  public:
    RatMap(const Poly& F, const Poly& G) {
        if (G.is_zero()) throw std::invalid_argument("denominator is the zero polynomial");
        if (F.is_zero()) throw std::invalid_argument("constant map (zero numerator)");
        Poly g = gcd(F, G);
        Poly f = g.is_constant() ? F : div_exact(F, g);
        Poly h = g.is_constant() ? G : div_exact(G, g);
        Rat lc = h.leading();
        num_ = Rat(1) / lc * f;
        den_ = Rat(1) / lc * h;
        if (std::max(num_.degree(), den_.degree()) < 1)
            throw std::invalid_argument("constant map");
    }

    static RatMap polynomial(const Poly& F) { return RatMap(F, Poly::one()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    long degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool fixes_infinity() const { return num_.degree() > den_.degree(); }

    bool is_pole(const Rat& z) const { return den_.eval(z) == 0; }

    ProjPoint eval(const ProjPoint& z) const {
        if (z.at_infinity) {
            if (num_.degree() > den_.degree()) return ProjPoint::infinity();
            if (num_.degree() < den_.degree()) return ProjPoint::finite(Rat(0));
            return ProjPoint::finite(num_.leading() / den_.leading());
        }
        Rat g = den_.eval(z.value);
        if (g == 0) return ProjPoint::infinity();
        return ProjPoint::finite(num_.eval(z.value) / g);
    }
    ProjPoint eval(const Rat& z) const { return eval(ProjPoint::finite(z)); }

    friend bool operator==(const RatMap& a, const RatMap& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    Poly num_, den_;
};

inline RatMap normalize(const Poly& F, const Poly& G) { return RatMap(F, G); }

// W = F'G - FG', the numerator of the derivative. Its roots away from the
// poles are the finite critical points, with multiplicity.
inline Poly wronskian(const RatMap& Q) {
    return Q.num().derivative() * Q.den() - Q.num() * Q.den().derivative();
}

inline RatMap derivative(const RatMap& Q) {
    Poly W = wronskian(Q);
    if (W.is_zero()) throw std::logic_error("internal: zero wronskian");
    if (W.is_constant() && Q.den().is_constant())
        throw precondition_error("derivative of an affine map is constant");
    return RatMap(W, Q.den() * Q.den());
}

// Valuation of Q'(z0) at a non-pole z0 (infinite when z0 is critical).
inline ValQ derivative_valuation_at(const RatMap& Q, const Rat& z0, const PadicContext& ctx) {
    Rat g = Q.den().eval(z0);
    if (g == 0) throw precondition_error("z0 is a pole");
    Rat w = wronskian(Q).eval(z0);
    if (w == 0) return ValQ::infinity();
    return val(ctx, w / (g * g));
}

// Q(z + z0).
inline RatMap shift(const RatMap& Q, const Rat& z0) {
    return RatMap(Q.num().shifted(z0), Q.den().shifted(z0));
}

// A(z) = Q(z + z0) - Q(z0); A(0) = 0 and A'(0) = Q'(z0).
inline RatMap anchor(const RatMap& Q, const Rat& z0) {
    Rat g = Q.den().eval(z0);
    if (g == 0) throw precondition_error("cannot anchor at a pole");
    Rat q0 = Q.num().eval(z0) / g;
    Poly ns = Q.num().shifted(z0);
    Poly ds = Q.den().shifted(z0);
    return RatMap(ns - q0 * ds, ds);
}

// Conjugation through the inversions z -> eta/z on the source and
// z -> eta2/z on the target: returns the map eta2 / Q(eta / z) as an exact
// coefficient transform.
inline RatMap mobius_inversion_conjugate(const RatMap& Q, const Rat& eta, const Rat& eta2) {
    if (eta == 0 || eta2 == 0) throw std::invalid_argument("inversion parameter must be nonzero");
    long n = Q.degree();
    // F(eta/z) * z^n and G(eta/z) * z^n
    Poly fr, gr;
    {
        std::vector<Rat> f(static_cast<size_t>(n) + 1, Rat(0));
        std::vector<Rat> g(static_cast<size_t>(n) + 1, Rat(0));
        Rat pw(1);
        for (long i = 0; i <= n; ++i) {
            f[static_cast<size_t>(n - i)] = Q.num()[i] * pw;
            g[static_cast<size_t>(n - i)] = Q.den()[i] * pw;
            pw *= eta;
        }
        fr = Poly(std::move(f));
        gr = Poly(std::move(g));
    }
    return RatMap(eta2 * gr, fr);
}

inline RatMap compose(const RatMap& Q1, const RatMap& Q2) {
    long n = Q1.degree();
    // Q1(F2/G2) with the common G2^n cleared.
    Poly num, den;
    for (long i = 0; i <= n; ++i) {
        Poly t = Q2.num().pow(i) * Q2.den().pow(n - i);
        if (Q1.num()[i] != 0) num = num + Q1.num()[i] * t;
        if (Q1.den()[i] != 0) den = den + Q1.den()[i] * t;
    }
    RatMap out(num, den);
    // composition degree is multiplicative; anything else is a cancellation bug
    if (out.degree() != Q1.degree() * Q2.degree())
        throw std::logic_error("internal: composition degree collapsed");
    return out;
}

inline RatMap iterate(const RatMap& R, long n, long degree_cap = 256) {
    if (n < 1) throw std::invalid_argument("iterate count must be >= 1");
    double total = 1;
    for (long i = 0; i < n; ++i) {
        total *= static_cast<double>(R.degree());
        if (total > static_cast<double>(degree_cap))
            throw cap_exceeded("iterate degree " + std::to_string(R.degree()) + "^" +
                               std::to_string(n) + " exceeds cap " + std::to_string(degree_cap));
    }
    RatMap acc = R;
    for (long i = 1; i < n; ++i) acc = compose(R, acc);
    return acc;
}

// Coefficientwise reduction mod p after joint scaling by a power of p that
// makes the minimal coefficient valuation zero.
struct Reduction {
    bool defined = false;          // reduced denominator (and numerator) nonzero
    bool degree_preserved = false; // reduced map has the same degree
    bool coprime_reduction = false;// reduced num/den share no root over F_p
    bool good_reduction = false;   // both of the above
    bool nontrivial = false;       // reduced map is nonconstant
    std::vector<long> num, den;    // reduced coefficients in [0, p)
};

namespace detail {

inline long mod_inverse(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return t < 0 ? t + p : t;
}

// Residue of a rational with nonnegative valuation.
inline long residue(const Rat& x, const PadicContext& ctx) {
    const long p = ctx.p();
    Int n = x.get_num() % p;
    Int d = x.get_den() % p;
    long ni = static_cast<long>(n.get_si());
    long di = static_cast<long>(d.get_si());
    if (ni < 0) ni += p;
    if (di < 0) di += p;
    if (di == 0) throw std::domain_error("negative valuation in residue");
    return (ni * mod_inverse(di, p)) % p;
}

inline std::vector<long> poly_mod_trim(std::vector<long> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

inline std::vector<long> poly_mod_rem(std::vector<long> a, const std::vector<long>& b, long p) {
    long db = static_cast<long>(b.size()) - 1;
    long inv = mod_inverse(b.back(), p);
    while (static_cast<long>(a.size()) - 1 >= db) {
        long da = static_cast<long>(a.size()) - 1;
        long f = (a.back() * inv) % p;
        for (long j = 0; j <= db; ++j) {
            long& t = a[static_cast<size_t>(da - db + j)];
            t = ((t - f * b[static_cast<size_t>(j)]) % p + p) % p;
        }
        a = poly_mod_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

inline std::vector<long> poly_mod_gcd(std::vector<long> a, std::vector<long> b, long p) {
    a = poly_mod_trim(std::move(a));
    b = poly_mod_trim(std::move(b));
    while (!b.empty()) {
        auto r = poly_mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

inline Reduction reduce_mod_p(const RatMap& Q, const PadicContext& ctx) {
    Reduction out;
    // joint scaling: subtract the minimal valuation over all coefficients
    bool have = false;
    Rat minv(0);
    auto scan = [&](const Poly& P) {
        for (long i = 0; i <= P.degree(); ++i) {
            if (P[i] == 0) continue;
            Rat v = val(ctx, P[i]).value();
            if (!have || v < minv) {
                minv = v;
                have = true;
            }
        }
    };
    scan(Q.num());
    scan(Q.den());
    if (minv.get_den() != 1) throw std::logic_error("internal: fractional coefficient valuation");
    Rat scale = pow_rat(ctx.p(), -static_cast<long>(minv.get_num().get_si()));

    auto reduce_poly = [&](const Poly& P) {
        std::vector<long> v(static_cast<size_t>(P.degree()) + 1, 0);
        for (long i = 0; i <= P.degree(); ++i)
            if (P[i] != 0) v[static_cast<size_t>(i)] = detail::residue(scale * P[i], ctx);
        return detail::poly_mod_trim(std::move(v));
    };
    out.num = reduce_poly(Q.num());
    out.den = reduce_poly(Q.den());
    out.defined = !out.num.empty() && !out.den.empty();
    if (!out.defined) return out;

    long red_deg = std::max(static_cast<long>(out.num.size()), static_cast<long>(out.den.size())) - 1;
    out.degree_preserved = red_deg == Q.degree();
    auto g = detail::poly_mod_gcd(out.num, out.den, ctx.p());
    out.coprime_reduction = static_cast<long>(g.size()) <= 1;
    out.good_reduction = out.degree_preserved && out.coprime_reduction;
    out.nontrivial = red_deg >= 1;  // constant reductions are trivial for dynamics
    return out;
}

}  // namespace padicdyn
