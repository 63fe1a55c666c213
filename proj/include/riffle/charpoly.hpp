#pragma once

// Exact characteristic polynomials of rational matrices.
//
// The matrix is scaled to an integer matrix, its characteristic
// polynomial is computed modulo enough word-sized primes (Hessenberg
// reduction + the standard recurrence), and the integer coefficients are
// recovered by CRT against a Hadamard-style bound. This keeps the cost
// at O(primes * n^3) word operations instead of fraction arithmetic.

#include "riffle/linalg.hpp"

namespace riffle {

namespace modarith {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline uint64_t inv_mod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

// char poly of an n x n matrix mod p, monic, lowest degree first.
inline std::vector<uint64_t> charpoly_mod(std::vector<std::vector<uint64_t>> a, uint64_t p) {
    int n = a.size();
    // Hessenberg reduction by similarity transforms.
    for (int k = 0; k + 2 < n; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (a[i][k] % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != k + 1) {
            std::swap(a[piv], a[k + 1]);
            for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k + 1]);
        }
        uint64_t pinv = inv_mod(a[k + 1][k], p);
        for (int i = k + 2; i < n; ++i) {
            if (a[i][k] == 0) continue;
            uint64_t f = mulmod(a[i][k], pinv, p);
            for (int j = 0; j < n; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[k + 1][j], p)) % p;
            for (int j = 0; j < n; ++j) a[j][k + 1] = (a[j][k + 1] + mulmod(f, a[j][i], p)) % p;
        }
    }
    // p_k(t) = (t - h_kk) p_{k-1} - sum_i h_{k-1-i,k-1} (prod subdiag) p_{k-1-i}
    std::vector<std::vector<uint64_t>> ps;
    ps.push_back({1});
    for (int k = 1; k <= n; ++k) {
        const int d = k;
        std::vector<uint64_t> pk(d + 1, 0);
        uint64_t hkk = a[k - 1][k - 1] % p;
        const auto& prev = ps[k - 1];
        for (size_t i = 0; i < prev.size(); ++i) {
            pk[i + 1] = (pk[i + 1] + prev[i]) % p;
            pk[i] = (pk[i] + p - mulmod(hkk, prev[i], p)) % p;
        }
        uint64_t subprod = 1;
        for (int i = 1; i < k; ++i) {
            subprod = mulmod(subprod, a[k - i][k - i - 1] % p, p);
            if (subprod == 0) break;
            uint64_t h = a[k - 1 - i][k - 1] % p;
            if (h == 0) continue;
            uint64_t c = mulmod(h, subprod, p);
            const auto& pi = ps[k - 1 - i];
            for (size_t j = 0; j < pi.size(); ++j) pk[j] = (pk[j] + p - mulmod(c, pi[j], p)) % p;
        }
        ps.push_back(std::move(pk));
    }
    return ps[n];
}

}  // namespace modarith

// Exact characteristic polynomial det(tI - T) of a rational matrix,
// monic with rational coefficients, lowest degree first.
inline Poly char_poly_exact(const Matrix<Rational>& T) {
    int n = T.size();
    if (n == 0) return {Rational(1)};
    // scale to integers
    Integer den(1);
    for (const auto& row : T)
        for (const auto& q : row) den = lcm(den, q.get_den());
    std::vector<std::vector<Integer>> A(n, std::vector<Integer>(n));
    size_t max_bits = 1;
    for (int i = 0; i < n; ++i) {
        Integer norm2(0);
        for (int j = 0; j < n; ++j) {
            Rational v = T[i][j] * den;
            assert(v.get_den() == 1);
            A[i][j] = v.get_num();
            norm2 += A[i][j] * A[i][j];
        }
        size_t b = mpz_sizeinbase(norm2.get_mpz_t(), 2) / 2 + 1;
        max_bits = std::max(max_bits, b);
    }
    size_t bound_bits = static_cast<size_t>(n) * (max_bits + 2) + n + 64;

    std::vector<uint64_t> primes;
    uint64_t cand = (1ULL << 62) - 57;
    size_t have_bits = 0;
    while (have_bits < bound_bits) {
        while (!modarith::is_prime_u64(cand)) --cand;
        primes.push_back(cand);
        --cand;
        have_bits += 61;
    }

    std::vector<std::vector<uint64_t>> residues;  // per prime
    std::vector<std::vector<uint64_t>> Ap(n, std::vector<uint64_t>(n));
    for (uint64_t p : primes) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Integer m = A[i][j] % Integer(static_cast<unsigned long>(p));
                if (m < 0) m += Integer(static_cast<unsigned long>(p));
                Ap[i][j] = m.get_ui();
            }
        residues.push_back(modarith::charpoly_mod(Ap, p));
    }

    // CRT per coefficient, lifted to the symmetric range.
    Poly out(n + 1, Rational(0));
    Integer modulus(1);
    std::vector<Integer> coeff(n + 1, Integer(0));
    for (size_t pi = 0; pi < primes.size(); ++pi) {
        Integer p(static_cast<unsigned long>(primes[pi]));
        if (pi == 0) {
            for (int k = 0; k <= n; ++k) coeff[k] = Integer(static_cast<unsigned long>(residues[pi][k]));
            modulus = p;
            continue;
        }
        Integer inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
        for (int k = 0; k <= n; ++k) {
            Integer r(static_cast<unsigned long>(residues[pi][k]));
            Integer diff = ((r - coeff[k] % p) % p + p) % p;
            coeff[k] += modulus * ((diff * inv) % p);
        }
        modulus *= p;
    }
    Integer half = modulus / 2;
    // char_T(t) = den^{-n} char_A(den * t): coefficient k divides by den^{n-k}.
    for (int k = 0; k <= n; ++k) {
        Integer c = coeff[k] % modulus;
        if (c > half) c -= modulus;
        Rational q(c);
        Integer dp;
        mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), n - k);
        out[k] = q / Rational(dp);
    }
    assert(out[n] == 1);
    return out;
}

// prod over (eigenvalue, multiplicity) of (t - lambda)^m, as a Poly in t.
inline Poly charpoly_from_spectrum(const std::vector<std::pair<Rational, long long>>& spec) {
    Poly p{Rational(1)};
    for (const auto& [lam, mult] : spec)
        for (long long i = 0; i < mult; ++i) p = poly_mul(p, Poly{-lam, Rational(1)});
    return p;
}

}  // namespace riffle
