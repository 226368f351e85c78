// Exact rational scalars and parsing/printing helpers.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace padicdyn {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// p^e for a (possibly negative) integer exponent.
inline Rat pow_rat(long base, long e) {
    Int b(base);
    if (e >= 0) return Rat(pow_int(b, static_cast<unsigned long>(e)));
    return make_rat(Int(1), pow_int(b, static_cast<unsigned long>(-e)));
}

// Accepts "a" or "a/b" with integer a, b and b != 0; result is canonical.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return make_rat(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

// Canonical form, denominator positive and omitted when 1.
inline std::string rational_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace padicdyn
