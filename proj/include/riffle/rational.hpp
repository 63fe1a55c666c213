#pragma once

// Exact rational scalars and small helpers shared across the library.
// All stored quantities are GMP rationals; nothing in the library rounds.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace riffle {

using Rational = mpq_class;
using Integer  = mpz_class;

// Thrown on bad user input (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a paper identity that must hold fails (CLI exit code 3).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an enumeration exceeds its configured cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Parses "p", "-p/q" or decimal-free fraction strings into an exact rational.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw ValidationError("bad rational literal '" + s + "' (use p or p/q)");
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    Rational p = base;
    while (n) {
        if (n & 1) acc *= p;
        p *= p;
        n >>= 1;
    }
    return acc;
}

// Binomial coefficient C(q, n) for a rational (or symbolic-valued) top argument.
inline Rational binomial(const Rational& q, int n) {
    if (n < 0) return Rational(0);
    Rational acc(1);
    for (int j = 0; j < n; ++j) acc *= (q - j);
    for (int j = 2; j <= n; ++j) acc /= j;
    return acc;
}

inline Integer factorial(int n) {
    Integer f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace riffle
