// Seeded instance generators shared by the fuzz command and the property
// suites: random maps filtered to the preconditions of each bound, and
// certified segment instances for the derivative-counting identity.
#pragma once

#include <optional>
#include <vector>

#include "padicdyn/berkovich.hpp"
#include "padicdyn/critical.hpp"
#include "padicdyn/ratmap.hpp"
#include "padicdyn/rng.hpp"

namespace padicdyn {

inline Poly random_poly(Lcg64& rng, long deg, long bound, bool monic_leading = false) {
    std::vector<Rat> c(static_cast<size_t>(deg) + 1);
    for (long i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = rng.next_rational(bound);
    c[static_cast<size_t>(deg)] = monic_leading ? Rat(1) : rng.next_nonzero_rational(bound);
    return Poly(std::move(c));
}

struct TheoremInstance {
    RatMap map;
    Rat z0;
};

// Draws until the map and base point satisfy the preconditions of the given
// bound. Coefficient numerators and denominators stay within the bound.
inline TheoremInstance random_theorem_instance(Lcg64& rng, const PadicContext& ctx, Theorem t,
                                               long max_deg, long bound = 20) {
    for (;;) {
        long dF = rng.next_int(2, max_deg);
        long dG;
        if (t == Theorem::E || t == Theorem::F) {
            dG = rng.next_int(0, dF - 1);
        } else {
            dG = rng.next_int(1, dF - 1);
        }
        Poly F = random_poly(rng, dF, bound);
        Poly G = dG == 0 ? Poly::one() : random_poly(rng, dG, bound);
        RatMap Q(F, G);
        if (Q.degree() < 2 || !Q.fixes_infinity()) continue;
        if ((t == Theorem::C || t == Theorem::D) && Q.is_polynomial()) continue;

        Rat z0 = rng.next_rational(bound);
        if (Q.is_pole(z0)) continue;
        if (t == Theorem::D || t == Theorem::F) {
            if (!derivative_valuation_at(Q, z0, ctx).is_finite()) continue;
        }
        if (t == Theorem::E || t == Theorem::F) {
            // r_bullet must be defined
            RatMap A = anchor(Q, z0);
            bool has_candidate = !A.den().is_constant();
            if (!has_candidate) {
                auto np = build_newton_polygon(A.num(), ctx);
                has_candidate = !np.segments().empty();
            }
            if (!has_candidate) continue;
        }
        return TheoremInstance{Q, z0};
    }
}

inline BoundCertificate run_theorem(const TheoremInstance& inst, const PadicContext& ctx,
                                    Theorem t) {
    switch (t) {
        case Theorem::C: return verify_theorem_C(inst.map, inst.z0, ctx);
        case Theorem::D: return verify_theorem_D(inst.map, inst.z0, ctx);
        case Theorem::E: return verify_corollary_E(inst.map, inst.z0, ctx);
        default: return verify_corollary_F(inst.map, inst.z0, ctx);
    }
}

struct SegmentInstance {
    RatMap map;
    Rat sLo;
    Rat sHi;
};

// Maps with a zero at the origin and (for the rational ones) all poles
// outside the segment's largest disk, so the derivative-counting identity
// applies on the whole segment.
inline SegmentInstance random_segment_instance(Lcg64& rng, const PadicContext& ctx, long max_deg,
                                               long bound = 12) {
    const Rat sLo(-3);
    const Rat sHi(0);
    for (;;) {
        long dF = rng.next_int(2, max_deg);
        std::vector<Rat> c(static_cast<size_t>(dF) + 1, Rat(0));
        for (long i = 1; i < dF; ++i) c[static_cast<size_t>(i)] = rng.next_rational(bound);
        c[static_cast<size_t>(dF)] = rng.next_nonzero_rational(bound);
        Poly F(std::move(c));

        Poly G = Poly::one();
        if (rng.next_below(2) == 0 && dF >= 2) {
            // denominator with all roots strictly outside the unit disk
            long dG = rng.next_int(1, dF - 1);
            std::vector<Rat> g(static_cast<size_t>(dG) + 1, Rat(0));
            g[0] = Rat(1);
            for (long i = 1; i <= dG; ++i)
                g[static_cast<size_t>(i)] = Rat(ctx.p()) * rng.next_rational(bound);
            Poly cand(std::move(g));
            if (cand.degree() < 1) continue;
            G = cand;
        }
        RatMap Q(F, G);
        if (Q.num()[0] != 0 || Q.num().degree() < 1) continue;
        if (!hypothesis_check(Q, ctx, sLo, sHi)) continue;
        return SegmentInstance{Q, sLo, sHi};
    }
}

}  // namespace padicdyn
