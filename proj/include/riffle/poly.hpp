#pragma once

// Dense univariate polynomials with exact rational coefficients,
// lowest degree first. Used for characteristic polynomials, symbolic
// measures p(x)/x^n and the Poincare-series bookkeeping.

#include "riffle/rational.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace riffle {

using Poly = std::vector<Rational>;  // coefficient of x^i at index i

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_const(const Rational& c) {
    Poly p;
    if (c != 0) p.push_back(c);
    return p;
}

// x^k with coefficient c
inline Poly poly_monomial(const Rational& c, int k) {
    Poly p(k + 1, Rational(0));
    p[k] = c;
    poly_trim(p);
    return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

inline Poly poly_scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline bool poly_eq(const Poly& a, const Poly& b) {
    Poly d = poly_sub(a, b);
    return d.empty();
}

// Exact division; throws if the remainder is nonzero.
inline Poly poly_divexact(const Poly& a, const Poly& b) {
    assert(!b.empty());
    Poly rem = a, q;
    poly_trim(rem);
    if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, Rational(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        size_t k = rem.size() - b.size();
        Rational c = rem.back() / b.back();
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
        poly_trim(rem);
    }
    if (!rem.empty()) throw std::logic_error("poly_divexact: nonzero remainder");
    poly_trim(q);
    return q;
}

// Remainder of a/b (used by Sturm chains).
inline Poly poly_rem(Poly rem, const Poly& b) {
    assert(!b.empty());
    poly_trim(rem);
    while (rem.size() >= b.size() && !rem.empty()) {
        size_t k = rem.size() - b.size();
        Rational c = rem.back() / b.back();
        for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
        poly_trim(rem);
    }
    return rem;
}

inline Poly poly_derivative(const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
    poly_trim(r);
    return r;
}

inline std::string poly_to_string(const Poly& p, const std::string& var = "x") {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        Rational c = p[i];
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace riffle
