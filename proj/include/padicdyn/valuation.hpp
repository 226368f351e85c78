// p-adic valuations over Q, extended with +infinity, and the scalar
// thresholds that classify attracting cycles by multiplier size.
#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>

#include "padicdyn/rational.hpp"

namespace padicdyn {

// The prime fixing the valuation. Norms are p^(-v); nothing here is floating
// point, so the exponent v is the only representation used anywhere.
class PadicContext {
  public:
    explicit PadicContext(long p) : p_(p) {
        if (p < 2 || p > 1000000) throw std::invalid_argument("p out of supported range [2, 10^6]");
        for (long f = 2; f * f <= p; ++f)
            if (p % f == 0) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    }

    long p() const { return p_; }
    Rat p_rat() const { return Rat(p_); }

  private:
    long p_;
};

// Extended rational valuation: a rational number or +infinity. Infinity is
// the valuation of 0 and compares above every rational, so the norm
// comparison |x| <= |y| is exactly val(x) >= val(y).
class ValQ {
  public:
    ValQ() : finite_(true), v_(0) {}
    ValQ(const Rat& v) : finite_(true), v_(v) {}
    ValQ(long v) : finite_(true), v_(v) {}
    static ValQ infinity() {
        ValQ r;
        r.finite_ = false;
        return r;
    }

    bool is_finite() const { return finite_; }
    const Rat& value() const {
        if (!finite_) throw std::domain_error("valuation is infinite");
        return v_;
    }

    friend bool operator==(const ValQ& a, const ValQ& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator<(const ValQ& a, const ValQ& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(const ValQ& a, const ValQ& b) { return b < a; }
    friend bool operator<=(const ValQ& a, const ValQ& b) { return !(b < a); }
    friend bool operator>=(const ValQ& a, const ValQ& b) { return !(a < b); }
    friend bool operator!=(const ValQ& a, const ValQ& b) { return !(a == b); }

    // Valuation of a product.
    friend ValQ operator+(const ValQ& a, const ValQ& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ValQ(a.v_ + b.v_);
    }

    friend std::ostream& operator<<(std::ostream& os, const ValQ& v) {
        if (!v.finite_) return os << "inf";
        return os << rational_to_string(v.v_);
    }

    std::string str() const { return finite_ ? rational_to_string(v_) : "inf"; }

  private:
    bool finite_;
    Rat v_;
};

inline long val_int(const PadicContext& ctx, const Int& n) {
    if (n == 0) throw std::domain_error("val_int(0)");
    Int rest;
    Int p(ctx.p());
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

inline ValQ val(const PadicContext& ctx, const Rat& x) {
    if (x == 0) return ValQ::infinity();
    long v = val_int(ctx, x.get_num());
    if (x.get_den() != 1) v -= val_int(ctx, x.get_den());
    return ValQ(Rat(v));
}

// Largest valuation among 1..d, i.e. the exponent of the largest power of p
// that is <= d.
inline long lambda_exponent(const PadicContext& ctx, long d) {
    if (d < 2) throw std::invalid_argument("degree must be >= 2");
    long v = 0;
    for (Int q = ctx.p(); q <= d; q *= ctx.p()) ++v;
    return v;
}

// Largest m * v_p(m) among 1..d.
inline long hat_lambda_exponent(const PadicContext& ctx, long d) {
    if (d < 2) throw std::invalid_argument("degree must be >= 2");
    long best = 0;
    for (long m = ctx.p(); m <= d; m += ctx.p()) {
        long v = val_int(ctx, Int(m));
        best = std::max(best, m * v);
    }
    return best;
}

// 0 when every m <= d is a unit, else -1/(p-1).
inline Rat gamma_valuation(const PadicContext& ctx, long d) {
    if (lambda_exponent(ctx, d) == 0) return Rat(0);
    return make_rat(-1, ctx.p() - 1);
}

struct Thresholds {
    long V;        // lambda(d) = p^(-V)
    long Vhat;     // hat-lambda(d) = p^(-Vhat)
    Rat gammaVal;  // gamma(d) = p^(-gammaVal), gammaVal <= 0
};

inline Thresholds thresholds(const PadicContext& ctx, long d) {
    return Thresholds{lambda_exponent(ctx, d), hat_lambda_exponent(ctx, d), gamma_valuation(ctx, d)};
}

// Verdicts for the multiplier-size hypotheses that force an attracting cycle
// of period n to attract a critical point. All comparisons are exact
// valuation comparisons; vLambda = val(multiplier), infinite when the cycle
// is superattracting.
struct HypothesisFlags {
    bool thmA;            // val(lambda) > n * V
    bool thmB;            // finite chi, branching on n <= 2d-2
    bool corF_poly;       // polynomial refinement, branching on n <= d-1
    bool cor43;           // non-Cantor refinement, branching on n <= 2d-2
    Rat eq156Threshold;   // iterate-based threshold (d^n / n) * V(d^n), for comparison
};

inline HypothesisFlags hypothesis_thresholds(const PadicContext& ctx, long d, long n,
                                             const ValQ& vLambda) {
    if (d < 2) throw std::invalid_argument("degree must be >= 2");
    if (n < 1) throw std::invalid_argument("period must be >= 1");
    const long V = lambda_exponent(ctx, d);
    const long Vhat = hat_lambda_exponent(ctx, d);

    HypothesisFlags out;
    out.thmA = vLambda > ValQ(Rat(static_cast<long>(n) * V));

    if (!vLambda.is_finite()) {
        // A multiplier of valuation +infinity means chi = -infinity, which the
        // strict lower bounds of the refined criteria exclude.
        out.thmB = out.corF_poly = out.cor43 = false;
    } else {
        const Rat chiVal = vLambda.value() / n;  // val(lambda)/n; chi = -chiVal * log p
        Rat rhsB = (n <= 2 * d - 2) ? Rat(Rat(d) * V)
                                    : Rat((Rat(1) + Rat(2 * (d - 1) * (d - 1)) / n) * V);
        Rat rhsF = (n <= d - 1) ? Rat(Vhat) : Rat(Rat(V) + Rat(d - 1) * (Vhat - V) / n);
        Rat rhs43 = (n <= 2 * d - 2) ? Rat(Vhat) : Rat(Rat(V) + Rat(2 * d - 2) * (Vhat - V) / n);
        out.thmB = chiVal > rhsB;
        out.corF_poly = chiVal > rhsF;
        out.cor43 = chiVal > rhs43;
    }

    // Threshold obtained by applying the fixed-point criterion to the n-th
    // iterate: (d^n / n) * V(d^n).
    Int dn = pow_int(Int(d), static_cast<unsigned long>(n));
    long Vdn = 0;
    for (Int q = ctx.p(); q <= dn; q *= ctx.p()) ++Vdn;
    out.eq156Threshold = make_rat(dn * Vdn, Int(n));
    return out;
}

}  // namespace padicdyn
