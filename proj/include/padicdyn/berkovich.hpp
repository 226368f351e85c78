// Exact piecewise-linear profiles along the path of disks centered at 0,
// parametrized by the log-radius s: sup-norm profiles of polynomials, the
// distorted log-size G_d, its right derivative computed two ways, and the
// derivative-distortion profile wf.
#pragma once

#include <stdexcept>

#include "padicdyn/newton_polygon.hpp"
#include "padicdyn/pl_function.hpp"
#include "padicdyn/ratmap.hpp"

namespace padicdyn {

// A point of the segment from 0 to infinity in the Berkovich line: the
// disk {|z| <= p^s}, carried by its log-radius coordinate s. Points of the
// disk of valuation v sit at log-distance -v from the center.
struct PathPoint {
    Rat s;
    explicit PathPoint(const Rat& log_radius) : s(log_radius) {}
    friend bool operator==(const PathPoint& a, const PathPoint& b) { return a.s == b.s; }
};

// Valuation of the sup-seminorm of P on the closed disk of log-radius s:
// min_i (val(a_i) - i*s).
inline Rat sup_norm_valuation(const Poly& P, const PadicContext& ctx, const Rat& s) {
    if (P.is_zero()) throw std::invalid_argument("sup norm of zero polynomial");
    bool have = false;
    Rat best(0);
    for (long i = 0; i <= P.degree(); ++i) {
        if (P[i] == 0) continue;
        Rat v = val(ctx, P[i]).value() - Rat(i) * s;
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    return best;
}

// s -> log_p |P| at the disk point of log-radius s, as an exact PL function
// on [sLo, sHi]. Convex; its right slope at s is the closed-disk zero count.
inline PLFunction log_norm_profile(const Poly& P, const PadicContext& ctx, const Rat& sLo,
                                   const Rat& sHi) {
    if (P.is_zero()) throw std::invalid_argument("profile of zero polynomial");
    if (!(sLo < sHi)) throw std::invalid_argument("empty profile domain");
    NewtonPolygon np = build_newton_polygon(P, ctx);
    std::vector<Rat> bps;
    std::vector<Rat> slopes;
    // below the first hull slope the first vertex index attains the maximum
    slopes.push_back(Rat(np.vertices.front().first));
    auto segs = np.segments();
    for (size_t k = 0; k < segs.size(); ++k) {
        const Rat& breakpoint = segs[k].slope;
        Rat next_index(np.vertices[k + 1].first);
        if (breakpoint <= sLo) {
            slopes.back() = next_index;
        } else if (breakpoint < sHi) {
            bps.push_back(breakpoint);
            slopes.push_back(next_index);
        }
    }
    return PLFunction(sLo, sHi, -sup_norm_valuation(P, ctx, sLo), std::move(bps),
                      std::move(slopes));
}

inline Rat sup_norm_valuation(const Poly& P, const PadicContext& ctx, const PathPoint& x) {
    return sup_norm_valuation(P, ctx, x.s);
}

// Valuation of the sup-seminorm of a rational map at a path point.
inline Rat map_norm_valuation(const RatMap& Q, const PadicContext& ctx, const PathPoint& x) {
    return sup_norm_valuation(Q.num(), ctx, x.s) - sup_norm_valuation(Q.den(), ctx, x.s);
}

// Sufficient condition for every disk point of the segment to map onto a
// disk centered at 0: the numerator vanishes at 0 and the denominator has no
// root in the largest disk of the segment.
inline bool hypothesis_check(const RatMap& Q, const PadicContext& ctx, const Rat& sLo,
                             const Rat& sHi) {
    (void)sLo;
    if (Q.num()[0] != 0) return false;
    if (Q.den().is_constant()) return true;
    return count_zeros_in_disk(Q.den(), ctx, sHi, true) == 0;
}

// G_d along the segment: (d+1) log|Q| - d log|Q'| - d*s, assembled from the
// sup-norm profiles of numerator, denominator and wronskian. Requires the
// certified hypothesis above.
inline PLFunction G_profile(const RatMap& Q, const PadicContext& ctx, const Rat& d,
                            const Rat& sLo, const Rat& sHi) {
    if (!hypothesis_check(Q, ctx, sLo, sHi))
        throw precondition_error("segment not certified: image may leave the ray of disks");
    Poly W = wronskian(Q);
    PLFunction lf = log_norm_profile(Q.num(), ctx, sLo, sHi);
    PLFunction lg = log_norm_profile(Q.den(), ctx, sLo, sHi);
    PLFunction lw = log_norm_profile(W, ctx, sLo, sHi);
    // (d+1)(lf - lg) - d(lw - 2 lg) - d*s
    PLFunction g = (d + 1) * lf + (d + 1) * (Rat(-1) * lg) + (-d) * lw + (2 * d) * lg;
    return g.plus_linear(Rat(0), -d);
}

struct PartialG {
    Rat by_slope;     // right derivative of the assembled profile
    Rat by_counting;  // disk-count formula
    bool consistent() const { return by_slope == by_counting; }
};

// The right derivative of G_d at log-radius s, computed both as the profile
// slope and by counting zeros and poles of Q and Q' in the closed disk.
inline PartialG partial_G(const RatMap& Q, const PadicContext& ctx, const Rat& d, const Rat& s,
                          const Rat& sLo, const Rat& sHi) {
    PLFunction g = G_profile(Q, ctx, d, sLo, sHi);
    PartialG out{g.right_slope(s), Rat(0)};

    Poly W = wronskian(Q);
    long zF = count_zeros_in_disk(Q.num(), ctx, s, true);
    long zG = Q.den().is_constant() ? 0 : count_zeros_in_disk(Q.den(), ctx, s, true);
    long zW = W.is_constant() ? 0 : count_zeros_in_disk(W, ctx, s, true);
    // Z - P for Q' is zW - 2 zG regardless of common factors
    out.by_counting = (d + 1) * Rat(zF - zG) - d * Rat(zW - 2 * zG + 1);
    if (!out.consistent())
        throw std::logic_error("internal: slope and counting derivatives disagree");
    return out;
}

// Convenience overload: derives a certified segment around s (bounded on the
// right by the nearest pole of Q, which must lie strictly outside the closed
// disk at s).
inline PartialG partial_G(const RatMap& Q, const PadicContext& ctx, const Rat& d, const Rat& s) {
    Rat sHi = s + 1;
    if (!Q.den().is_constant()) {
        auto segs = build_newton_polygon(Q.den(), ctx).segments();
        if (!segs.empty()) {
            Rat pole_log = segs.front().slope;
            if (pole_log <= s) throw precondition_error("pole inside the closed disk at s");
            sHi = (s + pole_log) / 2;
        }
    }
    return partial_G(Q, ctx, d, s, s - 1, sHi);
}

// wf along the segment: log|Q| - log|Q'| - s. Valid as the derivative
// distortion only on the unit-disk chart, so the segment must satisfy
// sHi <= 0 and |Q| <= 1 throughout; both are certified exactly.
inline PLFunction wf_profile(const RatMap& Q, const PadicContext& ctx, const Rat& sLo,
                             const Rat& sHi) {
    if (!hypothesis_check(Q, ctx, sLo, sHi))
        throw precondition_error("segment not certified: image may leave the ray of disks");
    if (sHi > 0) throw precondition_error("segment leaves the closed unit disk chart");
    Poly W = wronskian(Q);
    PLFunction lf = log_norm_profile(Q.num(), ctx, sLo, sHi);
    PLFunction lg = log_norm_profile(Q.den(), ctx, sLo, sHi);
    PLFunction lq = lf + Rat(-1) * lg;
    if (lq.max_value() > 0)
        throw precondition_error("image norms exceed 1: spherical derivative chart not certified");
    PLFunction lw = log_norm_profile(W, ctx, sLo, sHi);
    PLFunction w = lq + Rat(-1) * lw + Rat(2) * lg;
    return w.plus_linear(Rat(0), Rat(-1));
}

}  // namespace padicdyn
