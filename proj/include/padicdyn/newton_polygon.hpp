// Lower convex hulls of coefficient valuations and the root-valuation
// multisets they encode.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "padicdyn/poly.hpp"
#include "padicdyn/valuation.hpp"

namespace padicdyn {

// Multiset of valuations with multiplicities. Entries are kept sorted with
// finite valuations ascending and an optional infinite entry last, so equal
// spectra compare equal componentwise.
class ValSpectrum {
  public:
    void add(const ValQ& v, long mult) {
        if (mult <= 0) return;
        for (auto& e : entries_) {
            if (e.first == v) {
                e.second += mult;
                return;
            }
        }
        entries_.emplace_back(v, mult);
        sort();
    }

    const std::vector<std::pair<ValQ, long>>& entries() const { return entries_; }

    long total() const {
        long t = 0;
        for (const auto& e : entries_) t += e.second;
        return t;
    }

    bool empty() const { return entries_.empty(); }

    // Largest valuation present (smallest norm), infinity included.
    ValQ max_entry() const {
        if (entries_.empty()) throw std::domain_error("empty spectrum");
        return entries_.back().first;
    }

    // Largest finite valuation, or nullopt-style signal via has_finite().
    bool has_finite() const {
        return !entries_.empty() && entries_.front().first.is_finite();
    }
    ValQ max_finite() const {
        for (size_t i = entries_.size(); i-- > 0;)
            if (entries_[i].first.is_finite()) return entries_[i].first;
        throw std::domain_error("spectrum has no finite entry");
    }

    long multiplicity_of(const ValQ& v) const {
        for (const auto& e : entries_)
            if (e.first == v) return e.second;
        return 0;
    }

    friend bool operator==(const ValSpectrum& a, const ValSpectrum& b) {
        return a.entries_ == b.entries_;
    }

  private:
    void sort() {
        std::sort(entries_.begin(), entries_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    std::vector<std::pair<ValQ, long>> entries_;
};

// Lower convex hull of {(i, val(a_i)) : a_i != 0}. Slopes between
// consecutive vertices are strictly increasing; the first index is the
// multiplicity of the root 0, the last is the degree.
struct NewtonPolygon {
    long ord_zero = 0;
    std::vector<std::pair<long, Rat>> vertices;  // (index, valuation)

    struct Segment {
        Rat slope;
        long length;  // horizontal length = number of roots of valuation -slope
    };

    std::vector<Segment> segments() const {
        std::vector<Segment> out;
        for (size_t i = 1; i < vertices.size(); ++i) {
            Rat dy = vertices[i].second - vertices[i - 1].second;
            long dx = vertices[i].first - vertices[i - 1].first;
            out.push_back({dy / dx, dx});
        }
        return out;
    }
};

inline NewtonPolygon build_newton_polygon(const Poly& P, const PadicContext& ctx) {
    if (P.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
    std::vector<std::pair<long, Rat>> pts;
    for (long i = 0; i <= P.degree(); ++i) {
        if (P[i] == 0) continue;
        pts.emplace_back(i, val(ctx, P[i]).value());
    }
    // Monotone-chain lower hull; collinear interior points are dropped so the
    // slopes come out strictly increasing.
    std::vector<std::pair<long, Rat>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b iff slope(a,b) < slope(b,pt)
            Rat lhs = (b.second - a.second) * (pt.first - b.first);
            Rat rhs = (pt.second - b.second) * (b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    np.ord_zero = pts.front().first;
    np.vertices = std::move(hull);
    return np;
}

// Root valuations read off the hull: a segment of slope s and horizontal
// length l contributes l roots of valuation -s; the root 0 contributes
// ord_zero entries at +infinity.
inline ValSpectrum root_valuations(const Poly& P, const PadicContext& ctx) {
    NewtonPolygon np = build_newton_polygon(P, ctx);
    ValSpectrum sp;
    if (np.ord_zero > 0) sp.add(ValQ::infinity(), np.ord_zero);
    for (const auto& seg : np.segments()) sp.add(ValQ(-seg.slope), seg.length);
    return sp;
}

// Number of roots z with |z| <= p^s (closed) or |z| < p^s (open), counted
// with multiplicity and including the root 0.
inline long count_zeros_in_disk(const Poly& P, const PadicContext& ctx, const Rat& s,
                                bool closed) {
    NewtonPolygon np = build_newton_polygon(P, ctx);
    long count = np.ord_zero;
    for (const auto& seg : np.segments()) {
        // roots of valuation -slope; in the disk iff -slope >= -s (closed)
        if (closed ? seg.slope <= s : seg.slope < s) count += seg.length;
    }
    return count;
}

}  // namespace padicdyn
