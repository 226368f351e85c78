// Disk-level analysis around a rational center: pole distances, certified
// power-series expansion, Weierstrass disk degrees, univalence certificates.
// Radii are p^s with s rational ("log-radius"); a point of valuation v sits
// at log-distance -v from the center.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "padicdyn/newton_polygon.hpp"
#include "padicdyn/ratmap.hpp"

namespace padicdyn {

namespace detail {

// Largest valuation among the roots of P, ignoring the root 0 when
// ignore_zero_root is set; nullopt when there is no such root.
inline std::optional<Rat> max_root_valuation(const Poly& P, const PadicContext& ctx,
                                             bool ignore_zero_root) {
    if (P.is_constant()) return std::nullopt;
    NewtonPolygon np = build_newton_polygon(P, ctx);
    auto segs = np.segments();
    if (segs.empty()) {
        // P = c * z^k: only the root 0
        return std::nullopt;
    }
    if (!ignore_zero_root && np.ord_zero > 0)
        throw std::logic_error("internal: root at the center");
    return -segs.front().slope;  // slopes increase, first segment has the largest root valuation
}

}  // namespace detail

// Log-distance from z0 to the nearest pole: s_r with r = p^{s_r}.
inline Rat pole_distance(const RatMap& Q, const Rat& z0, const PadicContext& ctx) {
    if (Q.is_polynomial()) throw precondition_error("polynomial map has no poles");
    if (Q.is_pole(z0)) throw precondition_error("z0 is a pole");
    Poly ds = Q.den().shifted(z0);
    auto v = detail::max_root_valuation(ds, ctx, false);
    if (!v) throw std::logic_error("internal: nonconstant denominator without roots");
    return -*v;
}

// Log-distance from z0 to the nearest pole or preimage of Q(z0) other than
// z0 itself.
inline Rat r_bullet_distance(const RatMap& Q, const Rat& z0, const PadicContext& ctx) {
    RatMap A = anchor(Q, z0);
    std::optional<Rat> best;  // maximal valuation among candidates
    if (!A.den().is_constant()) {
        auto v = detail::max_root_valuation(A.den(), ctx, false);
        if (v && (!best || *v > *best)) best = v;
    }
    auto vn = detail::max_root_valuation(A.num(), ctx, true);
    if (vn && (!best || *vn > *best)) best = vn;
    if (!best)
        throw precondition_error(
            "no pole and no preimage of Q(z0) distinct from z0: distance undefined");
    return -*best;
}

// Exact initial coefficients of Q(z + z0) together with a certificate
// bounding the tail: val(a_n) >= tail_mv + n * tail_radius for all n beyond
// the computed range. For polynomials the expansion is finite and exact.
struct SeriesExpansion {
    std::vector<Rat> coeffs;  // a_0 .. a_N
    bool exact = false;       // finite expansion, no tail
    Rat tail_radius;          // s*, strictly below the pole distance
    Rat tail_mv;              // valuation of the sup-seminorm at log-radius s*
};

namespace detail {

// a_0..a_N of the power series of Ns/Ds around 0 (Ds(0) != 0).
inline std::vector<Rat> series_divide(const Poly& Ns, const Poly& Ds, long N) {
    Rat d0 = Ds[0];
    if (d0 == 0) throw std::logic_error("internal: series division at a pole");
    std::vector<Rat> a(static_cast<size_t>(N) + 1, Rat(0));
    for (long n = 0; n <= N; ++n) {
        Rat acc = Ns[n];
        for (long k = 0; k < n; ++k) {
            if (a[static_cast<size_t>(k)] == 0) continue;
            acc -= a[static_cast<size_t>(k)] * Ds[n - k];
        }
        a[static_cast<size_t>(n)] = acc / d0;
    }
    return a;
}

inline Rat sup_norm_valuation_poly(const Poly& P, const PadicContext& ctx, const Rat& s) {
    if (P.is_zero()) throw std::invalid_argument("sup norm of zero polynomial");
    std::optional<Rat> best;
    for (long i = 0; i <= P.degree(); ++i) {
        if (P[i] == 0) continue;
        Rat v = val(ctx, P[i]).value() - Rat(i) * s;
        if (!best || v < *best) best = v;
    }
    return *best;
}

}  // namespace detail

inline SeriesExpansion series_expand(const RatMap& Q, const Rat& z0, const PadicContext& ctx,
                                     long N) {
    if (N < 1) throw std::invalid_argument("series length must be >= 1");
    if (Q.is_pole(z0)) throw precondition_error("z0 is a pole");
    Poly ns = Q.num().shifted(z0);
    Poly ds = Q.den().shifted(z0);

    SeriesExpansion out;
    if (Q.is_polynomial()) {
        Poly p = Rat(1) / ds[0] * ns;
        out.exact = true;
        out.tail_radius = Rat(0);
        out.tail_mv = Rat(0);
        for (long n = 0; n <= N; ++n) out.coeffs.push_back(p[n]);
        return out;
    }
    Rat sr = pole_distance(Q, z0, ctx);
    out.tail_radius = sr - make_rat(1, 2);
    out.tail_mv = detail::sup_norm_valuation_poly(ns, ctx, out.tail_radius) -
                  detail::sup_norm_valuation_poly(ds, ctx, out.tail_radius);
    out.coeffs = detail::series_divide(ns, ds, N);
    return out;
}

// Weierstrass degree of the disk of log-radius s around z0: the number of
// preimages, with multiplicity, of each point of the image disk. Read off
// the anchored series as the largest (closed) or smallest (open, i.e.
// left-limit) index attaining min_n val(a_n) - n*s, with the tail excluded
// by the series certificate.
inline long disk_degree(const RatMap& Q, const Rat& z0, const PadicContext& ctx, const Rat& s,
                        bool closed) {
    if (Q.is_pole(z0)) throw precondition_error("z0 is a pole");
    RatMap A = anchor(Q, z0);
    Poly ns = A.num();
    Poly ds = A.den();

    std::optional<Rat> sr;
    if (!Q.is_polynomial()) {
        sr = pole_distance(Q, z0, ctx);
        if (closed ? *sr <= s : *sr < s) throw precondition_error("pole inside the disk");
    }

    if (Q.is_polynomial()) {
        // finite expansion: scan the shifted polynomial directly
        Poly p = Rat(1) / ds[0] * ns;
        std::optional<Rat> best;
        long arg = 0;
        for (long n = 1; n <= p.degree(); ++n) {
            if (p[n] == 0) continue;
            Rat v = val(ctx, p[n]).value() - Rat(n) * s;
            bool better = !best || v < *best || (v == *best && closed);
            if (better) {
                best = v;
                arg = n;
            }
        }
        if (!best) throw std::logic_error("internal: anchored polynomial is constant");
        return arg;
    }

    // tail radius strictly between s and the pole distance; for an open disk
    // with the pole right on the boundary the sup at the boundary point
    // itself bounds the tail (continuity of the sup-norm profile)
    Rat star = (s < *sr - make_rat(1, 2)) ? Rat(*sr - make_rat(1, 2)) : Rat((s + *sr) / 2);
    Rat mv = detail::sup_norm_valuation_poly(ns, ctx, star) -
             detail::sup_norm_valuation_poly(ds, ctx, star);

    long N = std::max<long>(8, Q.degree() * 2);
    for (;;) {
        std::vector<Rat> a = detail::series_divide(ns, ds, N);
        std::optional<Rat> best;
        long arg = 0;
        for (long n = 1; n <= N; ++n) {
            if (a[static_cast<size_t>(n)] == 0) continue;
            Rat v = val(ctx, a[static_cast<size_t>(n)]).value() - Rat(n) * s;
            bool better = !best || v < *best || (v == *best && closed);
            if (better) {
                best = v;
                arg = n;
            }
        }
        if (best) {
            Rat gap = star - s;
            if (gap == 0) {
                // boundary-pole open disk: tail values are >= mv, and the
                // minimum mv is attained at the finite Weierstrass index
                if (*best == mv) return arg;
                N *= 2;
                if (N > 100000)
                    throw std::logic_error("internal: sup-norm minimum not attained");
                continue;
            }
            // every n > (best - mv)/(star - s) has val(a_n) - n*s >= mv + n*(star - s) > best
            Rat bound = (*best - mv) / gap;
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
            long n_req = static_cast<long>(fl.get_si()) + 1;
            if (N >= n_req) return arg;
            N = std::max(N + 8, n_req);
        } else {
            N *= 2;
            if (N > 100000) throw std::logic_error("internal: no nonzero series coefficient found");
        }
    }
}

enum class Univalence { certified_univalent, certified_not, unknown };

// Three-valued univalence verdict for the closed disk of log-radius s
// around z0 (injectivity over the algebraic closure). Certificates only:
// two preimages of Q(z0) or a critical point / multiple pole inside give
// certified_not; a pole- and critical-point-free open disk whose degree is
// a unit (or, after shrinking by p^{-1/(p-1)}, a non-unit) gives
// certified_univalent.
inline Univalence univalence_certificate(const RatMap& Q, const Rat& z0, const PadicContext& ctx,
                                         const Rat& s) {
    if (Q.degree() == 1) return Univalence::certified_univalent;
    // At a pole of Q, work with the reciprocal map: post-composing with an
    // inversion does not change injectivity, and z0 is not a zero of Q.
    RatMap A = Q.is_pole(z0) ? anchor(RatMap(Q.den(), Q.num()), z0) : anchor(Q, z0);
    const Poly& N = A.num();
    const Poly& D = A.den();
    Poly W = wronskian(A);
    // strip critical points sitting at poles; multiple poles are caught by
    // the pole count below
    Poly Wstar = W;
    for (;;) {
        Poly g = gcd(Wstar, D);
        if (g.is_constant()) break;
        Wstar = div_exact(Wstar, g);
    }

    long preimages = count_zeros_in_disk(N, ctx, s, true);
    long poles = D.is_constant() ? 0 : count_zeros_in_disk(D, ctx, s, true);
    long crits = Wstar.is_constant() ? 0 : count_zeros_in_disk(Wstar, ctx, s, true);
    if (preimages >= 2 || poles >= 2 || crits >= 1) return Univalence::certified_not;
    if (poles >= 1) return Univalence::unknown;  // a simple pole inside: no certificate either way

    // Largest open disk around z0 free of poles and critical points.
    std::optional<Rat> t;
    auto consider = [&](const Poly& P) {
        if (P.is_constant()) return;
        auto segs = build_newton_polygon(P, ctx).segments();
        if (segs.empty()) return;
        // roots on the first segment have the largest valuation, hence the
        // smallest log-norm (= slope)
        Rat nearest = segs.front().slope;
        if (!t || nearest < *t) t = nearest;
    };
    consider(D);
    consider(Wstar);
    if (!t) return Univalence::unknown;  // no finite pole or critical point at all
    if (*t <= s) return Univalence::unknown;

    long m = count_zeros_in_disk(N, ctx, *t, false);  // open-disk degree at t
    if (m < 1) return Univalence::unknown;
    long vm = val_int(ctx, Int(m));
    if (vm == 0) return Univalence::certified_univalent;
    if (s < *t - make_rat(1, ctx.p() - 1)) return Univalence::certified_univalent;
    return Univalence::unknown;
}

}  // namespace padicdyn
