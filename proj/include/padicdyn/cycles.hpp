// Periodic-point polynomials, exact-period factors, multiplier valuation
// spectra and hypothesis classification of cycles.
#pragma once

#include <stdexcept>
#include <vector>

#include "padicdyn/newton_polygon.hpp"
#include "padicdyn/ratmap.hpp"
#include "padicdyn/resultant.hpp"
#include "padicdyn/valuation.hpp"

namespace padicdyn {

// Numerator of R^n(z) - z, normalized. Degenerate iterates (R^n = id) are
// rejected.
inline Poly periodic_polynomial(const RatMap& R, long n, long degree_cap = 256) {
    RatMap Rn = iterate(R, n, degree_cap);
    Poly phi = Rn.num() - Poly(std::vector<Rat>{Rat(0), Rat(1)}) * Rn.den();
    if (phi.is_zero()) throw precondition_error("degenerate iterate: R^n is the identity");
    return phi;
}

// Periodic polynomial with every factor shared with a proper-divisor period
// removed (repeatedly, with multiplicity), isolating minimal-period-n
// points.
inline Poly exact_period_factor(const RatMap& R, long n, long degree_cap = 256) {
    Poly phi = periodic_polynomial(R, n, degree_cap);
    for (long m = 1; m < n; ++m) {
        if (n % m != 0) continue;
        Poly lower = periodic_polynomial(R, m, degree_cap);
        for (;;) {
            Poly g = gcd(phi, lower);
            if (g.is_constant()) break;
            phi = div_exact(phi, g);
        }
    }
    return phi;
}

// Valuations of (R^n)'(z) over the exact-period-n points, grouped per cycle:
// the points of one cycle share one multiplier, so each valuation class has
// multiplicity divisible by n.
struct MultiplierSpectrum {
    ValSpectrum per_point;
    ValSpectrum per_cycle;
    bool grouping_ok = true;  // false when a class multiplicity is not divisible by n
    long point_count = 0;
};

inline MultiplierSpectrum multiplier_spectrum(const RatMap& R, long n, const PadicContext& ctx,
                                              long degree_cap = 256) {
    Poly phi = exact_period_factor(R, n, degree_cap);
    if (phi.is_constant())
        throw precondition_error("no exact-period-" + std::to_string(n) + " points");
    RatMap Rn = iterate(R, n, degree_cap);
    Poly A = wronskian(Rn);
    Poly B = Rn.den() * Rn.den();

    MultiplierSpectrum out;
    out.point_count = phi.degree();
    Poly S = resultant_in_y(phi, Rat(0), A, B, phi.degree());
    if (S.is_zero()) throw std::logic_error("internal: vanishing multiplier resultant");
    out.per_point = root_valuations(S, ctx);
    if (out.per_point.total() != phi.degree())
        throw std::logic_error("internal: multiplier spectrum multiplicity mismatch");
    for (const auto& e : out.per_point.entries()) {
        if (e.second % n != 0) {
            out.grouping_ok = false;
            continue;
        }
        out.per_cycle.add(e.first, e.second / n);
    }
    return out;
}

// Per-cycle classification of the exact-period-n cycles.
struct CycleReport {
    long period = 0;
    Poly exact_period_factor;
    long point_count = 0;
    bool grouping_ok = true;
    struct Entry {
        ValQ multiplier_valuation;  // infinite for superattracting cycles
        long cycles;                // number of cycles in this valuation class
        bool attracting;            // valuation > 0
        ValQ chi_valuation;         // val(multiplier)/n
        HypothesisFlags flags;
    };
    std::vector<Entry> entries;
};

inline CycleReport attracting_report(const RatMap& R, long n, const PadicContext& ctx,
                                     long degree_cap = 256) {
    MultiplierSpectrum ms = multiplier_spectrum(R, n, ctx, degree_cap);
    CycleReport out;
    out.period = n;
    out.exact_period_factor = exact_period_factor(R, n, degree_cap);
    out.point_count = ms.point_count;
    out.grouping_ok = ms.grouping_ok;
    for (const auto& e : (ms.grouping_ok ? ms.per_cycle : ms.per_point).entries()) {
        CycleReport::Entry entry;
        entry.multiplier_valuation = e.first;
        entry.cycles = e.second;
        entry.attracting = e.first > ValQ(Rat(0));
        entry.chi_valuation =
            e.first.is_finite() ? ValQ(e.first.value() / n) : ValQ::infinity();
        entry.flags = hypothesis_thresholds(ctx, R.degree(), n, e.first);
        out.entries.push_back(entry);
    }
    return out;
}

// Closed-form counts for the power map z^d: exact-period-n points away from
// 0 and infinity via Moebius inversion over the divisors of n, every such
// cycle carrying multiplier valuation n * v_p(d).
struct PowerMapCycles {
    Int point_count;
    Int cycle_count;
    long multiplier_valuation;
};

inline PowerMapCycles power_map_cycles(const PadicContext& ctx, long d, long n) {
    if (d < 2) throw std::invalid_argument("degree must be >= 2");
    if (n < 1) throw std::invalid_argument("period must be >= 1");
    auto moebius = [](long m) {
        long out = 1;
        for (long f = 2; f * f <= m; ++f) {
            if (m % f) continue;
            m /= f;
            if (m % f == 0) return 0L;
            out = -out;
        }
        if (m > 1) out = -out;
        return out;
    };
    Int count(0);
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        long mu = moebius(n / m);
        if (mu == 0) continue;
        count += Int(mu) * (pow_int(Int(d), static_cast<unsigned long>(m)) - 1);
    }
    PowerMapCycles out;
    out.point_count = count;
    if (count % n != 0) throw std::logic_error("internal: power map point count not divisible");
    out.cycle_count = count / n;
    out.multiplier_valuation = n * val_int(ctx, Int(d));
    return out;
}

}  // namespace padicdyn
