#pragma once

// Exact real algebraic scalars: elements of Q[t]/(f) for a monic
// irreducible f with a designated real root, held in an isolating
// interval with rational endpoints. Sign queries refine the interval,
// so every comparison is exact. Degree 1 collapses to plain rationals;
// rational constants carry no field pointer and embed into any field.

#include "riffle/poly.hpp"

#include <memory>
#include <utility>

namespace riffle {

class NumberField {
public:
    // minpoly must be monic and squarefree with a real root in (lo, hi),
    // and exactly one root there.
    NumberField(Poly minpoly, Rational lo, Rational hi, std::string name)
        : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)), name_(std::move(name)) {
        assert(!minpoly_.empty() && minpoly_.back() == 1);
        build_sturm();
        assert(count_roots(lo_, hi_) == 1);
    }

    int degree() const { return poly_deg(minpoly_); }
    const Poly& minimal_polynomial() const { return minpoly_; }
    const std::string& name() const { return name_; }

    // Rationals presented as a degree-1 "field" for uniform handling.
    static std::shared_ptr<const NumberField> rationals() {
        static auto f = std::make_shared<const NumberField>(Poly{Rational(0), Rational(1)}, Rational(-1),
                                                            Rational(1), "Q");
        return f;
    }

    static std::shared_ptr<const NumberField> sqrt5() {
        static auto f = std::make_shared<const NumberField>(Poly{Rational(-5), Rational(0), Rational(1)},
                                                            Rational(2), Rational(3), "Q(sqrt5)");
        return f;
    }

    // Q(2cos(pi/m)): the real subfield of the 2m-th cyclotomic field.
    static std::shared_ptr<const NumberField> two_cos_pi_over(int m);

    // Exact sign of p(theta) for a nonzero reduced p of degree < deg(f).
    int sign_at_root(const Poly& p) const {
        poly_check(p);
        if (p.empty()) return 0;
        if (p.size() == 1) return sgn(p[0]);
        Rational lo = lo_, hi = hi_;
        for (;;) {
            auto [a, b] = interval_eval(p, lo, hi);
            if (a > 0) return 1;
            if (b < 0) return -1;
            Rational mid = (lo + hi) / 2;
            // f has no rational roots for degree >= 2, so f(mid) != 0.
            if (sgn_minpoly(mid) == sgn_minpoly(lo)) lo = mid;
            else hi = mid;
        }
    }

    double approx_root() const {
        return (lo_.get_d() + hi_.get_d()) / 2;
    }

private:
    Poly minpoly_;
    Rational lo_, hi_;
    std::string name_;
    std::vector<Poly> sturm_;

    void poly_check(const Poly& p) const { assert(poly_deg(p) < degree() || p.empty()); }

    int sgn_minpoly(const Rational& x) const { return sgn(poly_eval(minpoly_, x)); }

    void build_sturm() {
        sturm_.clear();
        sturm_.push_back(minpoly_);
        Poly d = poly_derivative(minpoly_);
        if (!d.empty()) sturm_.push_back(d);
        while (sturm_.size() >= 2) {
            Poly r = poly_rem(sturm_[sturm_.size() - 2], sturm_.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            sturm_.push_back(std::move(r));
        }
    }

    int sign_variations(const Rational& x) const {
        int vars = 0, prev = 0;
        for (const auto& p : sturm_) {
            int s = sgn(poly_eval(p, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++vars;
            prev = s;
        }
        return vars;
    }

public:
    // Number of distinct real roots of the minimal polynomial in (a, b].
    int count_roots(const Rational& a, const Rational& b) const {
        return sign_variations(a) - sign_variations(b);
    }

    // Interval evaluation of p over [lo, hi] by monomials (theta powers
    // bounded through repeated interval multiplication).
    static std::pair<Rational, Rational> interval_eval(const Poly& p, const Rational& lo, const Rational& hi) {
        Rational alo(0), ahi(0);
        Rational plo(1), phi(1);  // bounds for theta^i
        for (size_t i = 0; i < p.size(); ++i) {
            if (i > 0) {
                Rational c1 = plo * lo, c2 = plo * hi, c3 = phi * lo, c4 = phi * hi;
                plo = std::min(std::min(c1, c2), std::min(c3, c4));
                phi = std::max(std::max(c1, c2), std::max(c3, c4));
            }
            if (p[i] > 0) { alo += p[i] * plo; ahi += p[i] * phi; }
            else if (p[i] < 0) { alo += p[i] * phi; ahi += p[i] * plo; }
        }
        return {alo, ahi};
    }
};

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain;
    chain.push_back(f);
    Poly d = poly_derivative(f);
    if (!d.empty()) chain.push_back(d);
    while (chain.size() >= 2) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_variations(const std::vector<Poly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(poly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Number of distinct real roots of f in (a, b].
inline int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Cyclotomic polynomial over the integers (as rational Poly), by division.
inline Poly cyclotomic(int n) {
    static std::vector<Poly> cache{{}, {Rational(-1), Rational(1)}};  // Phi_1 = x-1
    if (n < static_cast<int>(cache.size()) && !cache[n].empty()) return cache[n];
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_divexact(num, cyclotomic(d));
    if (n >= static_cast<int>(cache.size())) cache.resize(n + 1);
    cache[n] = num;
    return num;
}

}  // namespace detail

// Minimal polynomial of theta = 2cos(pi/m) extracted from Phi_{2m}:
// Phi_{2m}(y) = y^d psi(y + 1/y) with d = phi(2m)/2; theta is the
// largest real root of psi.
inline std::shared_ptr<const NumberField> NumberField::two_cos_pi_over(int m) {
    assert(m >= 3);
    Poly phi = detail::cyclotomic(2 * m);
    int d = poly_deg(phi) / 2;
    Poly psi(d + 1, Rational(0));
    Poly rem = phi;  // coefficients of y^0 .. y^{2d}
    for (int k = d; k >= 0; --k) {
        Rational c = (static_cast<int>(rem.size()) > d + k) ? rem[d + k] : Rational(0);
        psi[k] = c;
        if (c != 0) {
            // subtract c * y^d * (y + 1/y)^k
            for (int j = 0; j <= k; ++j) {
                Rational term = c * binomial(Rational(k), j);
                rem[d + k - 2 * j] -= term;
            }
        }
    }
    poly_trim(rem);
    assert(rem.empty());
    poly_trim(psi);
    // Isolate the largest real root; all roots lie in (-2, 2).
    auto chain = detail::sturm_chain(psi);
    Rational lo(-3), hi(3);
    while (detail::sturm_count(chain, lo, hi) != 1) {
        Rational mid = (lo + hi) / 2;
        if (detail::sturm_count(chain, mid, hi) >= 1) lo = mid;
        else hi = mid;
    }
    return std::make_shared<const NumberField>(psi, lo, hi,
                                               "Q(2cos(pi/" + std::to_string(m) + "))");
}

// An element of a number field. A null field pointer marks a rational
// constant, which embeds into any field on contact.
class FieldElement {
public:
    FieldElement() : field_(nullptr) {}
    FieldElement(int v) : field_(nullptr) { if (v != 0) c_.push_back(Rational(v)); }  // NOLINT(google-explicit-constructor)
    FieldElement(const Rational& v) : field_(nullptr) { if (v != 0) c_.push_back(v); }  // NOLINT
    FieldElement(const NumberField* f, Poly coeffs) : field_(f), c_(std::move(coeffs)) {
        poly_trim(c_);
        normalize();
    }

    static FieldElement generator(const NumberField* f) {
        FieldElement e(f, Poly{Rational(0), Rational(1)});
        return e;
    }

    const NumberField* field() const { return field_; }
    const Poly& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const {
        assert(is_rational());
        return c_.empty() ? Rational(0) : c_[0];
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return FieldElement(merge_field(a, b), poly_add(a.c_, b.c_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return FieldElement(merge_field(a, b), poly_sub(a.c_, b.c_));
    }
    friend FieldElement operator-(const FieldElement& a) {
        return FieldElement(a.field_, poly_scale(a.c_, Rational(-1)));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        const NumberField* f = merge_field(a, b);
        Poly p = poly_mul(a.c_, b.c_);
        if (f) p = poly_rem(std::move(p), f->minimal_polynomial());
        return FieldElement(f, std::move(p));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inverse();
    }
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
    FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("FieldElement: division by zero");
        if (is_rational()) return FieldElement(Rational(1) / c_[0]);
        // Extended Euclid in Q[t] against the minimal polynomial.
        Poly r0 = field_->minimal_polynomial(), r1 = c_;
        Poly s0 = {}, s1 = poly_const(Rational(1));
        while (!r1.empty()) {
            // quotient of r0 by r1
            Poly q;
            Poly rem = r0;
            if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rational(0));
            while (rem.size() >= r1.size() && !rem.empty()) {
                size_t k = rem.size() - r1.size();
                Rational c = rem.back() / r1.back();
                q[k] = c;
                for (size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
                poly_trim(rem);
            }
            poly_trim(q);
            Poly s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd (a nonzero constant, since minpoly is irreducible)
        assert(r0.size() == 1);
        Poly inv = poly_scale(s0, Rational(1) / r0[0]);
        inv = poly_rem(std::move(inv), field_->minimal_polynomial());
        return FieldElement(field_, std::move(inv));
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return (a - b).is_zero(); }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    int sign() const {
        if (c_.empty()) return 0;
        if (c_.size() == 1) return sgn(c_[0]);
        return field_->sign_at_root(c_);
    }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }

    double approx() const {
        if (c_.empty()) return 0.0;
        if (c_.size() == 1) return c_[0].get_d();
        double t = field_->approx_root(), acc = 0.0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i].get_d();
        return acc;
    }

    // Canonical key for hashing/dedup: degree-tagged coefficient dump.
    std::string key() const {
        std::string s;
        for (const auto& q : c_) {
            s += q.get_str();
            s += ';';
        }
        return s;
    }

private:
    const NumberField* field_;
    Poly c_;

    void normalize() {
        if (c_.size() <= 1) field_ = nullptr;
    }

    static const NumberField* merge_field(const FieldElement& a, const FieldElement& b) {
        if (a.field_ && b.field_) {
            assert(a.field_ == b.field_);
            return a.field_;
        }
        return a.field_ ? a.field_ : b.field_;
    }
};

inline bool k_is_zero(const Rational& x) { return x == 0; }
inline bool k_is_zero(const FieldElement& x) { return x.is_zero(); }

}  // namespace riffle
