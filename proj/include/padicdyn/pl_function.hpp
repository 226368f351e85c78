// Continuous piecewise-linear functions of the log-radius variable, with
// exact rational breakpoints and slopes.
#pragma once

#include <stdexcept>
#include <vector>

#include "padicdyn/rational.hpp"

namespace padicdyn {

// Defined on [lo, hi]; slopes has one more entry than breakpoints, and
// breakpoints are strictly increasing interior points.
class PLFunction {
  public:
    PLFunction(const Rat& lo, const Rat& hi, const Rat& value_at_lo, std::vector<Rat> breakpoints,
               std::vector<Rat> slopes)
        : lo_(lo), hi_(hi), v0_(value_at_lo), bp_(std::move(breakpoints)), sl_(std::move(slopes)) {
        if (lo_ >= hi_) throw std::invalid_argument("empty PL domain");
        if (sl_.size() != bp_.size() + 1) throw std::invalid_argument("PL slope/breakpoint mismatch");
        for (size_t i = 0; i < bp_.size(); ++i) {
            if (bp_[i] <= lo_ || bp_[i] >= hi_ || (i > 0 && bp_[i] <= bp_[i - 1]))
                throw std::invalid_argument("PL breakpoints must increase strictly inside the domain");
        }
        merge_equal_slopes();
    }

    static PLFunction constant(const Rat& lo, const Rat& hi, const Rat& v) {
        return PLFunction(lo, hi, v, {}, {Rat(0)});
    }
    static PLFunction linear(const Rat& lo, const Rat& hi, const Rat& value_at_lo, const Rat& slope) {
        return PLFunction(lo, hi, value_at_lo, {}, {slope});
    }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    const Rat& value_at_lo() const { return v0_; }
    const std::vector<Rat>& breakpoints() const { return bp_; }
    const std::vector<Rat>& slopes() const { return sl_; }

    Rat eval(const Rat& s) const {
        if (s < lo_ || s > hi_) throw std::domain_error("PL evaluation outside domain");
        Rat v = v0_;
        Rat prev = lo_;
        for (size_t i = 0; i < bp_.size(); ++i) {
            if (s <= bp_[i]) return v + sl_[i] * (s - prev);
            v += sl_[i] * (bp_[i] - prev);
            prev = bp_[i];
        }
        return v + sl_.back() * (s - prev);
    }

    // Slope of the piece to the right of s (at hi, the last piece's slope).
    Rat right_slope(const Rat& s) const {
        if (s < lo_ || s > hi_) throw std::domain_error("PL slope outside domain");
        for (size_t i = 0; i < bp_.size(); ++i)
            if (s < bp_[i]) return sl_[i];
        return sl_.back();
    }

    Rat left_slope(const Rat& s) const {
        if (s < lo_ || s > hi_) throw std::domain_error("PL slope outside domain");
        for (size_t i = bp_.size(); i-- > 0;)
            if (s > bp_[i]) return sl_[i + 1];
        return sl_.front();
    }

    Rat min_value() const {
        Rat best = v0_;
        Rat v = v0_;
        Rat prev = lo_;
        for (size_t i = 0; i < bp_.size(); ++i) {
            v += sl_[i] * (bp_[i] - prev);
            prev = bp_[i];
            if (v < best) best = v;
        }
        v += sl_.back() * (hi_ - prev);
        if (v < best) best = v;
        return best;
    }

    Rat max_value() const {
        Rat best = v0_;
        Rat v = v0_;
        Rat prev = lo_;
        for (size_t i = 0; i < bp_.size(); ++i) {
            v += sl_[i] * (bp_[i] - prev);
            prev = bp_[i];
            if (v > best) best = v;
        }
        v += sl_.back() * (hi_ - prev);
        if (v > best) best = v;
        return best;
    }

    friend PLFunction operator+(const PLFunction& a, const PLFunction& b) {
        if (a.lo_ != b.lo_ || a.hi_ != b.hi_)
            throw std::invalid_argument("PL addition over mismatched domains");
        std::vector<Rat> bps;
        std::vector<Rat> slopes;
        size_t i = 0, j = 0;
        slopes.push_back(a.sl_[0] + b.sl_[0]);
        while (i < a.bp_.size() || j < b.bp_.size()) {
            Rat next;
            if (j >= b.bp_.size() || (i < a.bp_.size() && a.bp_[i] <= b.bp_[j])) {
                next = a.bp_[i];
                if (j < b.bp_.size() && b.bp_[j] == next) ++j;
                ++i;
            } else {
                next = b.bp_[j];
                ++j;
            }
            bps.push_back(next);
            slopes.push_back(a.sl_[i] + b.sl_[j]);
        }
        return PLFunction(a.lo_, a.hi_, a.v0_ + b.v0_, std::move(bps), std::move(slopes));
    }

    friend PLFunction operator*(const Rat& c, const PLFunction& f) {
        std::vector<Rat> slopes(f.sl_);
        for (auto& s : slopes) s *= c;
        return PLFunction(f.lo_, f.hi_, c * f.v0_, f.bp_, std::move(slopes));
    }

    // f + (a + b*s)
    PLFunction plus_linear(const Rat& a, const Rat& b) const {
        std::vector<Rat> slopes(sl_);
        for (auto& s : slopes) s += b;
        return PLFunction(lo_, hi_, v0_ + a + b * lo_, bp_, std::move(slopes));
    }

  private:
    void merge_equal_slopes() {
        std::vector<Rat> bps;
        std::vector<Rat> slopes{sl_[0]};
        for (size_t i = 0; i < bp_.size(); ++i) {
            if (sl_[i + 1] == slopes.back()) continue;
            bps.push_back(bp_[i]);
            slopes.push_back(sl_[i + 1]);
        }
        bp_ = std::move(bps);
        sl_ = std::move(slopes);
    }

    Rat lo_, hi_, v0_;
    std::vector<Rat> bp_;
    std::vector<Rat> sl_;
};

}  // namespace padicdyn
