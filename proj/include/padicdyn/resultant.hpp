// Exact resultants over Q: a primitive pseudo-remainder sequence with full
// cofactor bookkeeping as the workhorse, a Sylvester/Bareiss determinant as
// an independent slow route, and the evaluation/interpolation resultant in a
// parameter Y.
#pragma once

#include <stdexcept>
#include <vector>

#include "padicdyn/poly.hpp"

namespace padicdyn {

namespace detail {

// Fraction-free determinant (Bareiss). Destroys its argument.
inline Int bareiss_det(std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// Clear denominators: integer coefficients of l*P with l the denominator lcm.
inline std::vector<Int> integerize(const Poly& p, Int& l) {
    l = denominator_lcm(p);
    std::vector<Int> out(static_cast<size_t>(p.degree()) + 1);
    for (long i = 0; i <= p.degree(); ++i) {
        Rat c = Rat(l) * p[i];
        out[static_cast<size_t>(i)] = c.get_num();  // denominator is 1
    }
    return out;
}

inline Int int_content(const std::vector<Int>& v) {
    Int g(0);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g == 0 ? Int(1) : g;
}

inline long int_deg(const std::vector<Int>& v) {
    for (size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return static_cast<long>(i);
    return -1;
}

// Pseudo-remainder: lc(B)^(degA - degB + 1) * A mod B, over Z.
inline std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
    long da = int_deg(a), db = int_deg(b);
    const Int& lcb = b[static_cast<size_t>(db)];
    for (long k = da; k >= db; --k) {
        Int top = a[static_cast<size_t>(k)];
        for (long i = 0; i <= da; ++i)
            if (i != k) a[static_cast<size_t>(i)] *= lcb;
        a[static_cast<size_t>(k)] = 0;
        // after scaling by lcb, subtract top * z^(k-db) * B
        for (long j = 0; j < db; ++j)
            a[static_cast<size_t>(k - db + j)] -= top * b[static_cast<size_t>(j)];
    }
    a.resize(static_cast<size_t>(db));
    return a;
}

inline Rat rat_pow(const Rat& base, long e) {
    Rat r(1);
    Rat b = base;
    bool invert = e < 0;
    unsigned long ee = static_cast<unsigned long>(invert ? -e : e);
    while (ee) {
        if (ee & 1) r *= b;
        b *= b;
        ee >>= 1;
    }
    return invert ? Rat(1) / r : r;
}

// Res(A, B) for integer polynomials via the primitive PRS: each step uses
//   Res(A, B) = (-1)^(degA degB) lc(B)^(degA - degR - (delta+1) degB) Res(B, R)
// with R the pseudo-remainder and delta = degA - degB, then strips the
// integer content c of R through Res(B, cR') = c^degB Res(B, R').
inline Rat int_resultant_prs(std::vector<Int> a, std::vector<Int> b) {
    Rat acc(1);
    long da = int_deg(a), db = int_deg(b);
    if (da < 0 || db < 0) throw std::invalid_argument("resultant of zero polynomial");
    if (da < db) {
        if ((da * db) % 2 != 0) acc = -acc;
        std::swap(a, b);
        std::swap(da, db);
    }
    for (;;) {
        if (db == 0) return acc * rat_pow(Rat(b[0]), da);
        std::vector<Int> r = prem(a, b);
        long dr = int_deg(r);
        if (dr < 0) return Rat(0);
        long delta = da - db;
        Rat lcb(b[static_cast<size_t>(db)]);
        acc *= rat_pow(lcb, da - dr - (delta + 1) * db);
        if ((da * db) % 2 != 0) acc = -acc;
        Int c = int_content(r);
        if (c != 1) {
            for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            acc *= rat_pow(Rat(c), db);
        }
        r.resize(static_cast<size_t>(dr) + 1);
        a = std::move(b);
        b = std::move(r);
        da = db;
        db = dr;
    }
}

// Slow independent route: Sylvester determinant by Bareiss elimination.
inline Rat resultant_sylvester(const Poly& A, const Poly& B) {
    if (A.is_zero() || B.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    Int la, lb;
    auto ia = integerize(A, la);
    auto ib = integerize(B, lb);
    const long da = A.degree(), db = B.degree();
    Int r;
    if (da == 0) {
        r = pow_int(ia[0], static_cast<unsigned long>(db));
    } else if (db == 0) {
        r = pow_int(ib[0], static_cast<unsigned long>(da));
    } else {
        const size_t n = static_cast<size_t>(da + db);
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
        for (long row = 0; row < db; ++row)
            for (long j = 0; j <= da; ++j)
                m[static_cast<size_t>(row)][static_cast<size_t>(row + j)] =
                    ia[static_cast<size_t>(da - j)];
        for (long row = 0; row < da; ++row)
            for (long j = 0; j <= db; ++j)
                m[static_cast<size_t>(db + row)][static_cast<size_t>(row + j)] =
                    ib[static_cast<size_t>(db - j)];
        r = bareiss_det(m);
    }
    Int denom = pow_int(la, static_cast<unsigned long>(db)) *
                pow_int(lb, static_cast<unsigned long>(da));
    return make_rat(r, denom);
}

}  // namespace detail

// Res(A, B) = lc(A)^deg(B) * prod B(alpha_i) over the roots of A.
inline Rat resultant(const Poly& A, const Poly& B) {
    if (A.is_zero() || B.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    Int la, lb;
    auto ia = detail::integerize(A, la);
    auto ib = detail::integerize(B, lb);
    Rat r = detail::int_resultant_prs(std::move(ia), std::move(ib));
    // Res(la*A, lb*B) = la^degB * lb^degA * Res(A, B)
    Int denom = pow_int(la, static_cast<unsigned long>(B.degree())) *
                pow_int(lb, static_cast<unsigned long>(A.degree()));
    return r / Rat(denom);
}

// Exact interpolation through (x_i, y_i) with distinct x_i, via Newton's
// divided differences.
inline Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const size_t n = xs.size();
    if (n == 0 || ys.size() != n) throw std::invalid_argument("bad interpolation data");
    std::vector<Rat> dd(ys);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    Poly acc;
    for (size_t i = n; i-- > 0;) {
        Poly lin(std::vector<Rat>{-xs[i], Rat(1)});
        acc = acc * lin + Poly(dd[i]);
    }
    return acc;
}

// S(Y) = Res_z(W(z), (Y + c) G(z) - F(z)). Its roots are the values
// F(w)/G(w) - c over the roots w of W. Computed by sampling Y at
// 0, 1, ..., D and interpolating; D defaults to deg(W) * max(deg F, deg G)
// and may be overridden by a tighter bound (the true Y-degree is <= deg W).
// Sample resultants are padded to the generic z-degree so the specialization
// stays consistent when the z-leading coefficient vanishes at a sample.
inline Poly resultant_in_y(const Poly& W, const Rat& c, const Poly& F, const Poly& G,
                           long degree_bound = -1) {
    if (W.is_zero()) throw std::invalid_argument("resultant_in_y: zero first argument");
    long generic_deg = std::max(F.degree(), G.degree());
    if (generic_deg < 0) throw std::invalid_argument("resultant_in_y: zero map");
    if (W.is_constant()) {
        // empty product: the nonzero constant lc(W)^deg
        Rat v(1);
        for (long t = 0; t < generic_deg; ++t) v *= W[0];
        return Poly(v);
    }
    long D = degree_bound >= 0 ? degree_bound : W.degree() * std::max<long>(generic_deg, 1);
    D = std::max<long>(D, W.degree());

    std::vector<Rat> xs, ys;
    xs.reserve(static_cast<size_t>(D) + 1);
    ys.reserve(static_cast<size_t>(D) + 1);
    for (long k = 0; k <= D; ++k) {
        Rat y0(k);
        Poly B = (y0 + c) * G - F;
        if (B.is_zero()) throw std::logic_error("internal: constant map in resultant_in_y");
        Rat value = resultant(W, B);
        // pad to the generic degree: Res drops lc(W)^(generic - actual)
        long drop = generic_deg - B.degree();
        if (drop > 0) {
            Rat lcw = W.leading();
            for (long t = 0; t < drop; ++t) value *= lcw;
        }
        xs.push_back(y0);
        ys.push_back(value);
    }
    return interpolate(xs, ys);
}

}  // namespace padicdyn
