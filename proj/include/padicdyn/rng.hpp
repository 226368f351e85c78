// Deterministic 64-bit linear congruential generator (Knuth's MMIX
// multiplier). Fixed here so seeded runs reproduce bit-for-bit across
// platforms; only the top bits are used for range reduction.
#pragma once

#include <cstdint>

#include "padicdyn/rational.hpp"

namespace padicdyn {

class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform-ish value in [0, n); n must be positive and small relative to 2^48.
    std::uint64_t next_below(std::uint64_t n) { return (next() >> 16) % n; }

    long next_int(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Rational with numerator in [-bound, bound] and denominator in [1, bound].
    Rat next_rational(long bound) {
        long num = next_int(-bound, bound);
        long den = next_int(1, bound);
        return make_rat(num, den);
    }

    Rat next_nonzero_rational(long bound) {
        for (;;) {
            Rat r = next_rational(bound);
            if (r != 0) return r;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace padicdyn
