#pragma once

// Solomon descent-algebra machinery: the X_J indicator sums, the mu/beta
// matrices, the orthogonal idempotents e_lambda, and the shuffling
// measure M_{W,x} = sum_lambda e_lambda / x^{||lambda||}.
//
// Symbolic measures are held as numerator polynomials over x^n (n = rank):
// every M_{W,x}(w) is p_w(x)/x^n with deg p_w <= n, and p_w depends only
// on Des(w).

#include "riffle/group_algebra.hpp"

namespace riffle {

// Subsets of the simple roots ordered by (cardinality, numeric value).
inline std::vector<uint32_t> subsets_by_cardinality(int n) {
    std::vector<uint32_t> subs;
    subs.reserve(1u << n);
    for (uint32_t m = 0; m < (1u << n); ++m) subs.push_back(m);
    std::stable_sort(subs.begin(), subs.end(), [](uint32_t a, uint32_t b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
    return subs;
}

struct MuBetaMatrices {
    std::vector<uint32_t> subsets;  // row/column order
    std::vector<int> pos;           // mask -> index in `subsets`
    Matrix<Rational> mu, beta;
};

// x_J = sum over {w : Des(w) cap J = empty} of w.
inline GroupAlgebraElement x_basis(const CoxeterGroup& W, uint32_t J) {
    GroupAlgebraElement e(W);
    for (int w = 0; w < W.order; ++w)
        if ((W.desc_mask[w] & J) == 0) e[w] = 1;
    return e;
}

inline MuBetaMatrices mu_beta(const CoxeterGroup& W) {
    int n = W.rank;
    uint32_t full = W.full_set();
    int S = 1 << n;
    MuBetaMatrices out;
    out.subsets = subsets_by_cardinality(n);
    out.pos.assign(S, -1);
    for (int i = 0; i < S; ++i) out.pos[out.subsets[i]] = i;

    // counts[K][J] = |{w in X_J : w(K) subset of Pi}| for K subset of J
    std::vector<std::vector<long long>> counts(S, std::vector<long long>(S, 0));
    for (int w = 0; w < W.order; ++w) {
        uint32_t codes = full & ~W.desc_mask[w];
        uint32_t valid = 0;
        const int8_t* si = W.simple_img.data() + static_cast<size_t>(w) * n;
        for (int g = 0; g < n; ++g)
            if (si[g] >= 0) valid |= 1u << g;
        uint32_t J = codes;
        for (;;) {  // J runs over subsets of Pi - Des(w)
            uint32_t KJ = J & valid;
            uint32_t K = KJ;
            for (;;) {  // K runs over subsets of J with w(K) simple
                ++counts[K][J];
                if (K == 0) break;
                K = (K - 1) & KJ;
            }
            if (J == 0) break;
            J = (J - 1) & codes;
        }
    }

    out.mu.assign(S, std::vector<Rational>(S, Rational(0)));
    for (int a = 0; a < S; ++a) {
        uint32_t K = out.subsets[a];
        Rational lam(W.class_size(K));
        for (int b = 0; b < S; ++b) {
            uint32_t J = out.subsets[b];
            if ((K & ~J) != 0) continue;  // mu_K^J = 0 unless K subset of J
            out.mu[a][b] = Rational(counts[K][J]) / lam;
        }
    }
    auto inv = mat_inverse(out.mu);
    if (!inv) throw std::logic_error("mu matrix is singular");
    out.beta = std::move(*inv);
    return out;
}

// A measure whose value at w is numer[Des(w)](x) / x^denom_power.
struct SymbolicMeasure {
    const CoxeterGroup* W = nullptr;
    int denom_power = 0;
    std::vector<Poly> numer_by_descent;  // indexed by descent mask

    const Poly& at_descent(uint32_t d) const { return numer_by_descent[d]; }

    SignedMeasure evaluate(const Rational& x) const {
        if (x == 0) throw ValidationError("measure parameter x must be nonzero");
        SignedMeasure m(*W);
        Rational scale = rational_pow(x, -denom_power);
        std::vector<Rational> cache(numer_by_descent.size());
        std::vector<bool> has(numer_by_descent.size(), false);
        for (int w = 0; w < W->order; ++w) {
            uint32_t d = W->desc_mask[w];
            if (!has[d]) {
                cache[d] = poly_eval(numer_by_descent[d], x) * scale;
                has[d] = true;
            }
            m[w] = cache[d];
        }
        return m;
    }

    friend bool operator==(const SymbolicMeasure& a, const SymbolicMeasure& b) {
        if (a.denom_power != b.denom_power) return false;
        uint32_t full = a.W->full_set();
        for (uint32_t d = 0; d <= full; ++d)
            if (!poly_eq(a.numer_by_descent[d], b.numer_by_descent[d])) return false;
        return true;
    }
};

// Everything the descent-algebra side needs, computed once per group.
class DescentAlgebra {
public:
    explicit DescentAlgebra(const CoxeterGroup& W) : W_(&W), mb_(mu_beta(W)) {
        build_gamma();
    }

    const CoxeterGroup& group() const { return *W_; }
    const MuBetaMatrices& matrices() const { return mb_; }

    // e_lambda for each class, as dense group-algebra elements.
    std::vector<GroupAlgebraElement> idempotents() const {
        const auto& classes = W_->subset_classes();
        std::vector<GroupAlgebraElement> out;
        for (const auto& cls : classes) {
            GroupAlgebraElement e(*W_);
            Rational inv_size(1, static_cast<long>(cls.members.size()));
            for (uint32_t J : cls.members) {
                int b = mb_.pos[J];
                uint32_t K = J;
                for (;;) {
                    const Rational& beta = mb_.beta[mb_.pos[K]][b];
                    if (beta != 0) {
                        for (int w = 0; w < W_->order; ++w)
                            if ((W_->desc_mask[w] & K) == 0) e[w] += beta * inv_size;
                    }
                    if (K == 0) break;
                    K = (K - 1) & J;
                }
            }
            out.push_back(std::move(e));
        }
        return out;
    }

    // M_{W,x} as a symbolic measure: numerators of x^n * M over descents.
    const SymbolicMeasure& symbolic_measure() const { return symbolic_; }

    SignedMeasure measure(const Rational& x) const { return symbolic_.evaluate(x); }

    // Prop. 3(2)-(3) closed forms as numerators over x^n.
    Poly endpoint_identity_numer() const {
        Poly p = poly_const(Rational(1, static_cast<long>(W_->order)));
        for (int m : W_->exponents) p = poly_mul(p, Poly{Rational(m), Rational(1)});
        return p;
    }
    Poly endpoint_longest_numer() const {
        Poly p = poly_const(Rational(1, static_cast<long>(W_->order)));
        for (int m : W_->exponents) p = poly_mul(p, Poly{Rational(-m), Rational(1)});
        return p;
    }

    // Eigenvalues of M_{W,x}: 1/x^i with multiplicity #{w : dim fix(w) = n-i},
    // 0 <= i <= n (the i = n eigenvalue covers dimension-0 fixed spaces).
    std::vector<std::pair<Rational, long long>> spectrum(const Rational& x) const {
        if (x == 0) throw ValidationError("measure parameter x must be nonzero");
        auto counts = W_->fixed_dimension_counts();
        std::vector<std::pair<Rational, long long>> spec;
        for (int i = 0; i <= W_->rank; ++i) {
            long long mult = counts[W_->rank - i];
            if (mult) spec.push_back({rational_pow(x, -i), mult});
        }
        return spec;
    }

private:
    const CoxeterGroup* W_;
    MuBetaMatrices mb_;
    SymbolicMeasure symbolic_;

    void build_gamma() {
        // gamma_K(x) = sum over classes lambda of x^{-||l||}/|l| *
        //              sum_{J in lambda, J >= K} beta_K^J ;
        // M(w) = sum over K avoiding Des(w) of gamma_K.
        int n = W_->rank;
        int S = 1 << n;
        const auto& classes = W_->subset_classes();
        std::vector<Poly> gamma_numer(S);  // numerator of x^n * gamma_K
        for (const auto& cls : classes) {
            int deg = n - cls.card;  // x^{n - ||lambda||}
            Rational inv_size(1, static_cast<long>(cls.members.size()));
            for (uint32_t J : cls.members) {
                int b = mb_.pos[J];
                uint32_t K = J;
                for (;;) {
                    const Rational& beta = mb_.beta[mb_.pos[K]][b];
                    if (beta != 0)
                        gamma_numer[K] = poly_add(gamma_numer[K], poly_monomial(beta * inv_size, deg));
                    if (K == 0) break;
                    K = (K - 1) & J;
                }
            }
        }
        // subset-sum: S(mask) = sum_{K subset mask} gamma_K
        std::vector<Poly> acc = gamma_numer;
        for (int g = 0; g < n; ++g)
            for (uint32_t m = 0; m < static_cast<uint32_t>(S); ++m)
                if (m >> g & 1) acc[m] = poly_add(acc[m], acc[m ^ (1u << g)]);
        symbolic_.W = W_;
        symbolic_.denom_power = n;
        symbolic_.numer_by_descent.assign(S, Poly{});
        uint32_t full = W_->full_set();
        for (uint32_t d = 0; d <= full; ++d) symbolic_.numer_by_descent[d] = acc[full & ~d];
    }
};

}  // namespace riffle
