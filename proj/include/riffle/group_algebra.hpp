#pragma once

// Dense group-algebra elements over exact rationals, convolution, and
// signed measures (group-algebra elements whose coefficients sum to 1).

#include "riffle/coxeter.hpp"

namespace riffle {

class GroupAlgebraElement {
public:
    GroupAlgebraElement() : W_(nullptr) {}
    explicit GroupAlgebraElement(const CoxeterGroup& W) : W_(&W), c_(W.order, Rational(0)) {}

    static GroupAlgebraElement point_mass(const CoxeterGroup& W, int w) {
        GroupAlgebraElement e(W);
        e.c_[w] = 1;
        return e;
    }
    static GroupAlgebraElement identity(const CoxeterGroup& W) { return point_mass(W, 0); }

    const CoxeterGroup& group() const { return *W_; }
    Rational& operator[](int w) { return c_[w]; }
    const Rational& operator[](int w) const { return c_[w]; }
    int size() const { return static_cast<int>(c_.size()); }

    Rational coefficient_sum() const {
        Rational s(0);
        for (const auto& q : c_) s += q;
        return s;
    }

    bool is_measure() const { return coefficient_sum() == 1; }

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        GroupAlgebraElement r = a;
        for (int i = 0; i < r.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        GroupAlgebraElement r = a;
        for (int i = 0; i < r.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) {
        GroupAlgebraElement r = a;
        for (auto& q : r.c_) q *= s;
        return r;
    }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.c_ == b.c_;
    }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }

    // Group-algebra product: coefficient of u in a*b is
    // sum over v*w = u of a(v) b(w).
    friend GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        const CoxeterGroup& W = a.group();
        GroupAlgebraElement r(W);
        for (int v = 0; v < W.order; ++v) {
            if (a.c_[v] == 0) continue;
            for (int w = 0; w < W.order; ++w) {
                if (b.c_[w] == 0) continue;
                r.c_[W.mult(v, w)] += a.c_[v] * b.c_[w];
            }
        }
        return r;
    }

    // Pushforward along inversion: result(w) = this(w^{-1}).
    GroupAlgebraElement inverse_pushforward() const {
        GroupAlgebraElement r(*W_);
        for (int w = 0; w < W_->order; ++w) r.c_[w] = c_[W_->inv[w]];
        return r;
    }

    // value at each element as a function of the descent set, when the
    // element lies in the descent algebra (checked).
    std::vector<Rational> by_descent_class() const {
        std::vector<Rational> v(1u << W_->rank, Rational(0));
        std::vector<bool> seen(1u << W_->rank, false);
        for (int w = 0; w < W_->order; ++w) {
            uint32_t d = W_->desc_mask[w];
            if (!seen[d]) {
                seen[d] = true;
                v[d] = c_[w];
            } else if (v[d] != c_[w]) {
                throw VerificationError("coefficients not constant on descent classes");
            }
        }
        return v;
    }

private:
    const CoxeterGroup* W_;
    std::vector<Rational> c_;
};

using SignedMeasure = GroupAlgebraElement;

inline Rational total_variation(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (&a.group() != &b.group() || a.size() != b.size())
        throw ValidationError("total_variation: distributions over different groups");
    Rational s(0);
    for (int w = 0; w < a.size(); ++w) s += abs(a[w] - b[w]);
    return s / 2;
}

}  // namespace riffle
