// Critical-value distance spectra and certified verification of the
// critical-value location bounds, plus escape certificates for polynomial
// critical orbits.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "padicdyn/disk_analysis.hpp"
#include "padicdyn/newton_polygon.hpp"
#include "padicdyn/ratmap.hpp"
#include "padicdyn/resultant.hpp"

namespace padicdyn {

// Multiset of valuations of Q(c) - Q(z0) over the finite critical points c
// of Q that are not poles. Entries at +infinity are critical values equal to
// Q(z0). Critical points at poles and at infinity carry no finite distance
// and are reported by count only.
struct DistanceSpectrum {
    ValSpectrum spectrum;
    long at_poles = 0;
    long at_infinity = 0;
};

namespace detail {

// Remove from W every root it shares with D (entirely, with multiplicity).
inline Poly strip_common_roots(Poly W, const Poly& D) {
    for (;;) {
        Poly g = gcd(W, D);
        if (g.is_constant()) return W;
        W = div_exact(W, g);
    }
}

}  // namespace detail

inline DistanceSpectrum critical_distance_spectrum(const RatMap& Q, const Rat& z0,
                                                   const PadicContext& ctx) {
    if (Q.degree() < 2) throw precondition_error("map must have degree >= 2");
    if (Q.is_pole(z0)) throw precondition_error("z0 is a pole");
    Poly W = wronskian(Q);
    Poly Wstar = detail::strip_common_roots(W, Q.den());

    DistanceSpectrum out;
    out.at_poles = W.degree() - Wstar.degree();
    out.at_infinity = 2 * Q.degree() - 2 - W.degree();

    Rat c = Q.num().eval(z0) / Q.den().eval(z0);
    if (Wstar.degree() >= 1) {
        Poly S = resultant_in_y(Wstar, c, Q.num(), Q.den());
        if (S.is_zero()) throw std::logic_error("internal: vanishing distance resultant");
        out.spectrum = root_valuations(S, ctx);
        if (out.spectrum.total() != Wstar.degree())
            throw std::logic_error("internal: distance spectrum multiplicity mismatch");
    }
    return out;
}

enum class Theorem { C, D, E, F };

inline const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::C: return "C";
        case Theorem::D: return "D";
        case Theorem::E: return "E";
        default: return "F";
    }
}

// Verdict record for one bound: holds iff some admissible spectrum entry has
// valuation >= rhs, lhs being the best (largest) admissible valuation.
// Equality is exact rational equality of lhs and rhs.
struct BoundCertificate {
    Theorem theorem;
    ValQ lhsVal;
    ValQ rhsVal;
    bool holds = false;
    bool equality = false;
    ValSpectrum witnessSpectrum;
    long excluded_at_poles = 0;
    long excluded_at_infinity = 0;
};

namespace detail {

inline BoundCertificate make_certificate(Theorem t, const DistanceSpectrum& ds, const ValQ& rhs,
                                         bool finite_only) {
    BoundCertificate cert;
    cert.theorem = t;
    cert.rhsVal = rhs;
    cert.witnessSpectrum = ds.spectrum;
    cert.excluded_at_poles = ds.at_poles;
    cert.excluded_at_infinity = ds.at_infinity;
    if (ds.spectrum.empty()) return cert;
    if (finite_only && !ds.spectrum.has_finite()) {
        // every distance is zero: the strict bound fails outright
        cert.lhsVal = ds.spectrum.max_entry();
        return cert;
    }
    cert.lhsVal = finite_only ? ds.spectrum.max_finite() : ds.spectrum.max_entry();
    cert.holds = cert.lhsVal >= rhs;
    cert.equality = cert.lhsVal == rhs;
    return cert;
}

}  // namespace detail

// Some critical value lies within lambda(d)^{-1} |Q'(z0)| r of Q(z0), where
// r is the pole distance. Requires a non-polynomial map fixing infinity.
inline BoundCertificate verify_theorem_C(const RatMap& Q, const Rat& z0, const PadicContext& ctx) {
    if (!Q.fixes_infinity()) throw precondition_error("map must fix infinity");
    if (Q.is_polynomial()) throw precondition_error("map must not be a polynomial");
    if (Q.degree() < 2) throw precondition_error("map must have degree >= 2");
    if (Q.is_pole(z0)) throw precondition_error("z0 is a pole");

    Rat sr = pole_distance(Q, z0, ctx);
    long V = lambda_exponent(ctx, Q.degree());
    ValQ dv = derivative_valuation_at(Q, z0, ctx);
    ValQ rhs = dv.is_finite() ? ValQ(dv.value() - V - sr) : ValQ::infinity();
    return detail::make_certificate(Theorem::C, critical_distance_spectrum(Q, z0, ctx), rhs,
                                    false);
}

// Strict variant: a critical value at positive distance within
// lambda(d)^{-(d-1)} |Q'(z0)| r. Needs Q'(z0) != 0 in addition.
inline BoundCertificate verify_theorem_D(const RatMap& Q, const Rat& z0, const PadicContext& ctx) {
    if (!Q.fixes_infinity()) throw precondition_error("map must fix infinity");
    if (Q.is_polynomial()) throw precondition_error("map must not be a polynomial");
    if (Q.degree() < 2) throw precondition_error("map must have degree >= 2");
    if (Q.is_pole(z0)) throw precondition_error("z0 is a pole");
    ValQ dv = derivative_valuation_at(Q, z0, ctx);
    if (!dv.is_finite()) throw precondition_error("z0 is a critical point");

    Rat sr = pole_distance(Q, z0, ctx);
    long V = lambda_exponent(ctx, Q.degree());
    ValQ rhs(dv.value() - Rat(Q.degree() - 1) * V - sr);
    return detail::make_certificate(Theorem::D, critical_distance_spectrum(Q, z0, ctx), rhs, true);
}

// Some critical value within gamma(d) lambda(d)^{-1} |Q'(z0)| r_bullet of
// Q(z0); polynomials are allowed.
inline BoundCertificate verify_corollary_E(const RatMap& Q, const Rat& z0,
                                           const PadicContext& ctx) {
    if (!Q.fixes_infinity()) throw precondition_error("map must fix infinity");
    if (Q.degree() < 2) throw precondition_error("map must have degree >= 2");
    if (Q.is_pole(z0)) throw precondition_error("z0 is a pole");

    Rat sb = r_bullet_distance(Q, z0, ctx);
    long V = lambda_exponent(ctx, Q.degree());
    Rat gammaVal = gamma_valuation(ctx, Q.degree());
    ValQ dv = derivative_valuation_at(Q, z0, ctx);
    ValQ rhs = dv.is_finite() ? ValQ(dv.value() - V + gammaVal - sb) : ValQ::infinity();
    return detail::make_certificate(Theorem::E, critical_distance_spectrum(Q, z0, ctx), rhs,
                                    false);
}

// Strict variant with r_bullet: a critical value at positive distance within
// lambda(d)^{-d} |Q'(z0)| r_bullet. z0 must not be critical.
inline BoundCertificate verify_corollary_F(const RatMap& Q, const Rat& z0,
                                           const PadicContext& ctx) {
    if (!Q.fixes_infinity()) throw precondition_error("map must fix infinity");
    if (Q.degree() < 2) throw precondition_error("map must have degree >= 2");
    if (Q.is_pole(z0)) throw precondition_error("z0 is a pole");
    ValQ dv = derivative_valuation_at(Q, z0, ctx);
    if (!dv.is_finite()) throw precondition_error("z0 is a critical point");

    Rat sb = r_bullet_distance(Q, z0, ctx);
    long V = lambda_exponent(ctx, Q.degree());
    ValQ rhs(dv.value() - Rat(Q.degree()) * V - sb);
    return detail::make_certificate(Theorem::F, critical_distance_spectrum(Q, z0, ctx), rhs, true);
}

// Number of critical points of Q in the disk of log-radius s around z0,
// with multiplicity; optionally excluding critical points at which the
// anchored map vanishes (i.e. critical preimages of Q(z0)).
inline long critical_points_in_disk(const RatMap& Q, const Rat& z0, const PadicContext& ctx,
                                    const Rat& s, bool closed, bool exclude_zeros = false) {
    RatMap sh = shift(Q, z0);
    Poly W = detail::strip_common_roots(wronskian(sh), sh.den());
    if (exclude_zeros) {
        Rat q0 = sh.num().eval(Rat(0)) / sh.den().eval(Rat(0));
        Poly anchored_num = sh.num() - q0 * sh.den();
        W = detail::strip_common_roots(W, anchored_num);
    }
    if (W.is_constant()) return 0;
    return count_zeros_in_disk(W, ctx, s, closed);
}

// Escape analysis for a polynomial: beyond the escape log-radius the leading
// term dominates and |P(z)| > |z|, so any orbit entering that region
// diverges. Critical points are classified through the valuations of their
// P-values.
struct EscapeReport {
    Rat escape_log_radius;
    long zero_critical_multiplicity = 0;  // multiplicity of 0 as critical point
    bool zero_is_fixed = false;           // P(0) = 0
    bool zero_escapes = false;
    struct Entry {
        ValQ value_valuation;  // valuation of P(c) on this class
        long multiplicity;
        bool escapes;  // val(P(c)) < -escape_log_radius
    };
    std::vector<Entry> nonzero_classes;
    bool all_nonzero_escape() const {
        for (const auto& e : nonzero_classes)
            if (!e.escapes) return false;
        return true;
    }
};

inline EscapeReport escape_certificate(const Poly& P, const PadicContext& ctx) {
    if (P.degree() < 2) throw std::invalid_argument("polynomial of degree >= 2 required");
    EscapeReport out;

    // smallest s with: |a_d| p^{ds} strictly dominating every lower term and
    // exceeding p^s itself
    const long d = P.degree();
    Rat vd = val(ctx, P[d]).value();
    Rat s_esc = vd / (d - 1);
    for (long i = 0; i < d; ++i) {
        if (P[i] == 0) continue;
        Rat cand = (vd - val(ctx, P[i]).value()) / (d - i);
        if (cand > s_esc) s_esc = cand;
    }
    out.escape_log_radius = s_esc;

    Poly W = P.derivative();
    long ord = W.ord_zero();
    out.zero_critical_multiplicity = ord > 0 ? ord : 0;
    if (out.zero_critical_multiplicity > 0) {
        Rat p0 = P.eval(Rat(0));
        out.zero_is_fixed = p0 == 0;
        if (!out.zero_is_fixed) out.zero_escapes = val(ctx, p0) < ValQ(-s_esc);
    }

    if (ord != W.degree()) {  // W has nonzero roots
        Poly Wnz = ord > 0 ? div_exact(W, Poly::monomial(Rat(1), ord)) : W;
        Poly S = resultant_in_y(Wnz, Rat(0), P, Poly::one());
        ValSpectrum values = root_valuations(S, ctx);
        for (const auto& e : values.entries())
            out.nonzero_classes.push_back(
                {e.first, e.second, e.first < ValQ(-s_esc)});
    }
    return out;
}

}  // namespace padicdyn
