#pragma once

// Finite Coxeter groups realized through their root systems.
//
// Roots live in the simple-root coordinate system (the realization is
// essential by construction: ambient dimension == rank), with the
// geometry carried by the Gram matrix of the chosen simple roots.
// Crystallographic types stay over Q; H3/H4 work over Q(sqrt5) and
// I2(m) over Q(2cos(pi/m)). Elements are stored as permutations of the
// root list, so descent/length/coset queries are integer-only after
// construction.
//
// Action convention: w acts on the left on root vectors.

#include "riffle/linalg.hpp"

#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace riffle {

struct GroupSpec {
    char family = 'A';  // A,B,C,D,G,F,H,I
    int rank = 1;
    int i2_m = 0;  // only for family I

    std::string label() const {
        if (family == 'I') return "I2(" + std::to_string(i2_m) + ")";
        return std::string(1, family) + std::to_string(rank);
    }

    // Accepts "A" (+ separate rank), "A3", "G2", "F4", "H3", "I2(7)".
    static GroupSpec parse(const std::string& type, int rank_arg = -1);
};

struct SubsetClass {
    uint32_t representative = 0;           // minimal member mask
    std::vector<uint32_t> members;         // all J with w(J)=rep for some w
    int card = 0;                          // ||lambda||
};

class CoxeterGroup {
public:
    std::string label;
    char family;
    int rank;
    int i2_m = 0;
    std::shared_ptr<const NumberField> field;

    // Root data. Indices [0, npos) are positive (simples first, in
    // generator order); root npos+i is the negative of root i.
    int nroots = 0, npos = 0;
    std::vector<std::vector<FieldElement>> root_coords;
    Matrix<FieldElement> gram;

    // Element data.
    int order = 0;
    std::vector<uint16_t> perms;       // order x nroots
    std::vector<int32_t> right_tab;    // order x rank : index of w*s_i
    std::vector<int32_t> left_tab;     // order x rank : index of s_i*w
    std::vector<int32_t> inv;
    std::vector<int16_t> len;
    std::vector<uint32_t> desc_mask;   // Des(w) over simple-root bits
    std::vector<int8_t> simple_img;    // order x rank : image simple index or -1
    std::vector<uint64_t> inv_bits;    // positive roots sent negative by w
    std::vector<uint64_t> chamber_bits;  // sign vector of chamber w (bit set = '+')
    std::vector<int32_t> word_off;
    std::vector<uint8_t> word_flat;
    std::vector<int32_t> refl_elem;    // element index of s_r per positive root
    std::vector<int> exponents;
    int longest = 0;
    bool crystallographic = false;
    std::vector<int> bad_primes;

    static CoxeterGroup build(const GroupSpec& spec);
    static CoxeterGroup build(const std::string& type, int rank_arg = -1) {
        return build(GroupSpec::parse(type, rank_arg));
    }

    // --- elementary queries ------------------------------------------------

    const uint16_t* perm(int w) const { return perms.data() + static_cast<size_t>(w) * nroots; }

    int neg_root(int r) const { return r < npos ? r + npos : r - npos; }
    int fold_positive(int r) const { return r < npos ? r : r - npos; }
    uint64_t all_pos_mask() const { return npos == 64 ? ~0ULL : ((1ULL << npos) - 1); }
    uint32_t full_set() const { return (1u << rank) - 1; }

    std::vector<int> word(int w) const {
        std::vector<int> out(word_flat.begin() + word_off[w], word_flat.begin() + word_off[w + 1]);
        return out;
    }

    int mult_gen(int w, int g) const { return right_tab[static_cast<size_t>(w) * rank + g]; }
    int gen_mult(int g, int w) const { return left_tab[static_cast<size_t>(w) * rank + g]; }

    int mult(int u, int v) const {
        int w = u;
        for (int32_t i = word_off[v]; i < word_off[v + 1]; ++i) w = mult_gen(w, word_flat[i]);
        return w;
    }

    uint32_t descent_set(int w) const { return desc_mask[w]; }
    int descent_count(int w) const { return __builtin_popcount(desc_mask[w]); }

    // Matrix of w on the simple-root coordinate space (columns are the
    // images of the simple roots).
    Matrix<FieldElement> matrix_of(int w) const {
        Matrix<FieldElement> m(rank, std::vector<FieldElement>(rank, FieldElement(0)));
        const uint16_t* p = perm(w);
        for (int j = 0; j < rank; ++j) {
            const auto& col = root_coords[p[j]];
            for (int i = 0; i < rank; ++i) m[i][j] = col[i];
        }
        return m;
    }

    int fixed_space_dimension(int w) const {
        if (fixdim_.empty()) fixdim_.assign(order, -1);
        if (fixdim_[w] >= 0) return fixdim_[w];
        Matrix<FieldElement> m = matrix_of(w);
        for (int i = 0; i < rank; ++i) m[i][i] -= FieldElement(1);
        int d = rank - mat_rank(std::move(m));
        fixdim_[w] = static_cast<int8_t>(d);
        return d;
    }

    // Counts of elements by fixed-space dimension (index = dimension).
    std::vector<long long> fixed_dimension_counts() const {
        std::vector<long long> c(rank + 1, 0);
        for (int w = 0; w < order; ++w) ++c[fixed_space_dimension(w)];
        return c;
    }

    // --- parabolic subgroups ----------------------------------------------

    struct Parabolic {
        std::vector<int32_t> members;   // sorted element indices
        std::vector<uint8_t> flags;     // dense membership
    };

    const Parabolic& parabolic(uint32_t K) const {
        auto it = parab_.find(K);
        if (it != parab_.end()) return it->second;
        Parabolic p;
        p.flags.assign(order, 0);
        std::vector<int32_t> queue{0};
        p.flags[0] = 1;
        for (size_t q = 0; q < queue.size(); ++q) {
            int u = queue[q];
            for (int g = 0; g < rank; ++g) {
                if (!(K >> g & 1)) continue;
                int v = mult_gen(u, g);
                if (!p.flags[v]) {
                    p.flags[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        p.members = std::move(queue);
        return parab_.emplace(K, std::move(p)).first->second;
    }

    long long parabolic_order(uint32_t K) const { return static_cast<long long>(parabolic(K).members.size()); }

    long long normalizer_order(uint32_t K) const {
        const Parabolic& p = parabolic(K);
        long long count = 0;
        for (int w = 0; w < order; ++w) {
            bool ok = true;
            const uint16_t* pw = perm(w);
            for (int g = 0; g < rank && ok; ++g) {
                if (!(K >> g & 1)) continue;
                int refl = refl_elem[fold_positive(pw[g])];
                ok = p.flags[refl];
            }
            if (ok) ++count;
        }
        return count;
    }

    // True iff w is the unique minimal-length element of the coset w*W_K,
    // decided by brute-force length comparison inside the coset.
    bool min_coset_representative_bruteforce(int w, uint32_t K) const {
        const Parabolic& p = parabolic(K);
        int best = len[w];
        int ties = 0;
        for (int u : p.members) {
            int l = len[mult(w, u)];
            if (l < best) return false;
            if (l == best) ++ties;
        }
        return ties == 1;
    }

    bool min_coset_representative(int w, uint32_t K) const {
        return (K & desc_mask[w]) == 0;
    }

    // --- subset classes under J ~ w(J) -------------------------------------

    const std::vector<SubsetClass>& subset_classes() const {
        if (!classes_.empty() || rank == 0) return classes_;
        int n = rank;
        uint32_t full = full_set();
        std::vector<uint32_t> parent(full + 1);
        std::iota(parent.begin(), parent.end(), 0u);
        std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int w = 0; w < order; ++w) {
            const int8_t* si = simple_img.data() + static_cast<size_t>(w) * n;
            uint32_t valid = 0;
            for (int g = 0; g < n; ++g)
                if (si[g] >= 0) valid |= 1u << g;
            // iterate submasks of valid
            uint32_t J = valid;
            for (;;) {
                uint32_t img = 0;
                for (int g = 0; g < n; ++g)
                    if (J >> g & 1) img |= 1u << si[g];
                uint32_t a = find(J), b = find(img);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
                if (J == 0) break;
                J = (J - 1) & valid;
            }
        }
        std::map<uint32_t, SubsetClass> by_root;
        for (uint32_t J = 0; J <= full; ++J) {
            uint32_t r = find(J);
            auto& cls = by_root[r];
            cls.members.push_back(J);
        }
        for (auto& [r, cls] : by_root) {
            cls.representative = r;
            cls.card = __builtin_popcount(r);
            classes_.push_back(std::move(cls));
        }
        return classes_;
    }

    // Index of the class containing K, in subset_classes() order.
    int class_of(uint32_t K) const {
        const auto& cs = subset_classes();
        for (size_t i = 0; i < cs.size(); ++i)
            for (uint32_t m : cs[i].members)
                if (m == K) return static_cast<int>(i);
        throw std::logic_error("class_of: subset not found");
    }

    long long class_size(uint32_t K) const {
        return static_cast<long long>(subset_classes()[class_of(K)].members.size());
    }

    // --- one-line notation for the classical families ----------------------

    // Entries are signed positions: type A uses width rank+1 (all signs +),
    // B/C/D use width rank. one_line(w)[i] = w(e_{i+1}) as a signed index.
    int one_line_width() const { return family == 'A' ? rank + 1 : rank; }

    std::vector<int> one_line(int w) const {
        ensure_one_lines();
        int width = one_line_width();
        std::vector<int> out(width);
        for (int i = 0; i < width; ++i) out[i] = oneline_[static_cast<size_t>(w) * width + i];
        return out;
    }

    int element_from_one_line(const std::vector<int>& arr) const {
        ensure_one_lines();
        auto it = oneline_index_.find(one_line_key(arr.data(), arr.size()));
        if (it == oneline_index_.end()) throw std::logic_error("element_from_one_line: not found");
        return it->second;
    }

    // --- highest root / Cartan data (crystallographic only) ---------------

    // Coefficients of the highest root over the simple roots.
    std::vector<long long> highest_root_marks() const;

    // Index of the highest root in the root list.
    int highest_root_index() const;

    // Cartan pairing A[i][j] = 2(a_i, a_j)/(a_j, a_j) = <a_i, a_j^vee>.
    Matrix<Rational> cartan_matrix() const {
        Matrix<Rational> A(rank, std::vector<Rational>(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                FieldElement v = FieldElement(2) * gram[i][j] / gram[j][j];
                assert(v.is_rational());
                A[i][j] = v.rational_value();
            }
        return A;
    }

    // Exact inner product of two vectors in simple-root coordinates.
    FieldElement pairing(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) const {
        FieldElement acc(0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) acc += a[i] * gram[i][j] * b[j];
        return acc;
    }

private:
    mutable std::vector<int8_t> fixdim_;
    mutable std::unordered_map<uint32_t, Parabolic> parab_;
    mutable std::vector<SubsetClass> classes_;
    mutable std::vector<int8_t> oneline_;
    mutable std::unordered_map<uint64_t, int> oneline_index_;

    static uint64_t one_line_key(const int* arr, size_t width) {
        uint64_t k = 0;
        for (size_t i = 0; i < width; ++i) {
            int v = arr[i];
            uint64_t byte = (v < 0 ? 0x80u : 0u) | static_cast<uint64_t>(v < 0 ? -v : v);
            k = (k << 8) | byte;
        }
        return k;
    }

    void ensure_one_lines() const {
        if (!oneline_.empty()) return;
        if (family != 'A' && family != 'B' && family != 'C' && family != 'D')
            throw std::logic_error("one_line: only defined for classical families");
        int width = one_line_width();
        oneline_.assign(static_cast<size_t>(order) * width, 0);
        for (int i = 0; i < width; ++i) oneline_[i] = static_cast<int8_t>(i + 1);
        // BFS order guarantees parents appear before children.
        for (int w = 1; w < order; ++w) {
            const int8_t* pa = oneline_.data() + static_cast<size_t>(parent_[w]) * width;
            int8_t* me = oneline_.data() + static_cast<size_t>(w) * width;
            std::memcpy(me, pa, width);
            int g = parent_gen_[w];
            // right multiplication by s_g acts on positions
            if (family == 'A' || g + 1 < rank) {
                std::swap(me[g], me[g + 1]);
            } else if (family == 'B' || family == 'C') {
                me[rank - 1] = -me[rank - 1];
            } else {  // D, last generator: e_{n-1} -> -e_n, e_n -> -e_{n-1}
                int a = me[rank - 2], b = me[rank - 1];
                me[rank - 2] = -b;
                me[rank - 1] = -a;
            }
        }
        oneline_index_.reserve(order * 2);
        std::vector<int> tmp(width);
        for (int w = 0; w < order; ++w) {
            for (int i = 0; i < width; ++i) tmp[i] = oneline_[static_cast<size_t>(w) * width + i];
            oneline_index_.emplace(one_line_key(tmp.data(), width), w);
        }
    }

    std::vector<int32_t> parent_;
    std::vector<int8_t> parent_gen_;

    friend struct CoxeterBuilder;
};

// ---------------------------------------------------------------------------

inline GroupSpec GroupSpec::parse(const std::string& type, int rank_arg) {
    GroupSpec s;
    if (type.empty()) throw ValidationError("empty group type");
    std::string t = type;
    try {
        if (t.rfind("I2(", 0) == 0 && t.back() == ')') {
            s.family = 'I';
            s.rank = 2;
            s.i2_m = std::stoi(t.substr(3, t.size() - 4));
            return s;
        }
        if (t == "I2" || t == "I") {
            s.family = 'I';
            s.rank = 2;
            if (rank_arg <= 0) throw ValidationError("I2 requires m (use I2(m) or --rank m)");
            s.i2_m = rank_arg;
            return s;
        }
        s.family = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
        if (t.size() > 1) s.rank = std::stoi(t.substr(1));
        else if (rank_arg > 0) s.rank = rank_arg;
        else if (s.family == 'G') s.rank = 2;
        else if (s.family == 'F') s.rank = 4;
        else throw ValidationError("type '" + type + "' needs a rank");
    } catch (const std::invalid_argument&) {
        throw ValidationError("cannot parse group type '" + type + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError("cannot parse group type '" + type + "'");
    }
    return s;
}

struct CoxeterBuilder {
    static void check_supported(const GroupSpec& s) {
        auto fail = [&](const std::string& bound) {
            throw ValidationError("unsupported group " + s.label() + " (supported: " + bound + ")");
        };
        switch (s.family) {
            case 'A': if (s.rank < 1 || s.rank > 7) fail("A1..A7"); break;
            case 'B': if (s.rank < 2 || s.rank > 5) fail("B2..B5"); break;
            case 'C': if (s.rank < 2 || s.rank > 5) fail("C2..C5"); break;
            case 'D': if (s.rank < 2 || s.rank > 5) fail("D2..D5"); break;
            case 'G': if (s.rank != 2) fail("G2"); break;
            case 'F': if (s.rank != 4) fail("F4"); break;
            case 'H': if (s.rank < 3 || s.rank > 4) fail("H3..H4"); break;
            case 'I': if (s.i2_m < 3 || s.i2_m > 30) fail("I2(3)..I2(30)"); break;
            default: fail("families A,B,C,D,G2,F4,H3,H4,I2(m)");
        }
    }

    static long long expected_order(const GroupSpec& s) {
        long long f = 1;
        switch (s.family) {
            case 'A': for (int i = 2; i <= s.rank + 1; ++i) f *= i; return f;
            case 'B':
            case 'C': for (int i = 2; i <= s.rank; ++i) f *= i; return f << s.rank;
            case 'D': for (int i = 2; i <= s.rank; ++i) f *= i; return f << (s.rank - 1);
            case 'G': return 12;
            case 'F': return 1152;
            case 'H': return s.rank == 3 ? 120 : 14400;
            case 'I': return 2LL * s.i2_m;
        }
        return 0;
    }

    static int expected_positive_roots(const GroupSpec& s) {
        switch (s.family) {
            case 'A': return s.rank * (s.rank + 1) / 2;
            case 'B':
            case 'C': return s.rank * s.rank;
            case 'D': return s.rank * (s.rank - 1);
            case 'G': return 6;
            case 'F': return 24;
            case 'H': return s.rank == 3 ? 15 : 60;
            case 'I': return s.i2_m;
        }
        return 0;
    }

    static CoxeterGroup run(const GroupSpec& spec) {
        check_supported(spec);
        CoxeterGroup W;
        W.family = spec.family;
        W.rank = spec.rank;
        W.i2_m = spec.i2_m;
        W.label = spec.label();
        setup_field_and_gram(W);
        enumerate_roots(W);
        enumerate_elements(W);
        finalize_tables(W);
        compute_exponents(W);
        return W;
    }

    static void setup_field_and_gram(CoxeterGroup& W) {
        int n = W.rank;
        switch (W.family) {
            case 'A': case 'B': case 'C': case 'D': case 'G': case 'F':
                W.field = NumberField::rationals();
                W.crystallographic = true;
                break;
            case 'H': W.field = NumberField::sqrt5(); break;
            case 'I': W.field = NumberField::two_cos_pi_over(W.i2_m); break;
        }
        if (W.family == 'B' || W.family == 'C' || W.family == 'D') W.bad_primes = {2};
        if (W.family == 'G' || W.family == 'F') W.bad_primes = {2, 3};

        Matrix<FieldElement> g(n, std::vector<FieldElement>(n, FieldElement(0)));
        auto path = [&](const Rational& off) {
            for (int i = 0; i < n; ++i) g[i][i] = FieldElement(2);
            for (int i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = FieldElement(off);
        };
        switch (W.family) {
            case 'A': path(Rational(-1)); break;
            case 'B':
                path(Rational(-1));
                g[n - 1][n - 1] = FieldElement(1);
                break;
            case 'C':
                path(Rational(-1));
                g[n - 1][n - 1] = FieldElement(4);
                g[n - 2][n - 1] = g[n - 1][n - 2] = FieldElement(-2);
                break;
            case 'D':
                path(Rational(-1));
                g[n - 2][n - 1] = g[n - 1][n - 2] = FieldElement(0);
                if (n >= 3) g[n - 3][n - 1] = g[n - 1][n - 3] = FieldElement(-1);
                break;
            case 'G':
                g = {{FieldElement(2), FieldElement(-3)}, {FieldElement(-3), FieldElement(6)}};
                break;
            case 'F':
                path(Rational(-1));
                g[2][2] = g[3][3] = FieldElement(1);
                g[2][3] = g[3][2] = FieldElement(Rational(-1, 2));
                break;
            case 'H': {
                path(Rational(-1));
                // (a1,a2) = -2cos(pi/5) = -(1+sqrt5)/2
                FieldElement th = FieldElement::generator(W.field.get());
                FieldElement phi = (FieldElement(1) + th) / FieldElement(2);
                g[0][1] = g[1][0] = -phi;
                break;
            }
            case 'I': {
                FieldElement th = FieldElement::generator(W.field.get());
                g[0][0] = g[1][1] = FieldElement(2);
                g[0][1] = g[1][0] = -th;
                break;
            }
        }
        W.gram = std::move(g);
    }

    static std::string coords_key(const std::vector<FieldElement>& v) {
        std::string s;
        for (const auto& e : v) {
            s += e.key();
            s += '|';
        }
        return s;
    }

    static void enumerate_roots(CoxeterGroup& W) {
        int n = W.rank;
        std::vector<std::vector<FieldElement>> roots;
        std::unordered_map<std::string, int> index;
        auto add = [&](std::vector<FieldElement> v) -> int {
            std::string k = coords_key(v);
            auto it = index.find(k);
            if (it != index.end()) return it->second;
            roots.push_back(std::move(v));
            index.emplace(std::move(k), static_cast<int>(roots.size()) - 1);
            return static_cast<int>(roots.size()) - 1;
        };
        for (int i = 0; i < n; ++i) {
            std::vector<FieldElement> e(n, FieldElement(0));
            e[i] = FieldElement(1);
            add(std::move(e));
        }
        // s_i(v) = v - (2 (a_i, v) / (a_i, a_i)) a_i ; in coordinates this
        // subtracts a multiple of the i-th basis vector.
        auto reflect = [&](int i, const std::vector<FieldElement>& v) {
            FieldElement ip(0);
            for (int j = 0; j < n; ++j) ip += W.gram[i][j] * v[j];
            FieldElement c = FieldElement(2) * ip / W.gram[i][i];
            std::vector<FieldElement> out = v;
            out[i] -= c;
            return out;
        };
        for (size_t q = 0; q < roots.size(); ++q)
            for (int i = 0; i < n; ++i) add(reflect(i, roots[q]));

        // Split by sign, order positives deterministically (simples first).
        std::vector<int> pos, neg_of;
        std::vector<std::pair<std::pair<double, std::string>, int>> rest;
        for (size_t r = 0; r < roots.size(); ++r) {
            int s = 0;
            bool nonneg = true, nonpos = true;
            for (const auto& c : roots[r]) {
                s = c.sign();
                if (s > 0) nonpos = false;
                if (s < 0) nonneg = false;
            }
            assert(nonneg || nonpos);
            if (!nonneg) continue;
            bool is_simple = false;
            double height = 0;
            for (int i = 0; i < n; ++i) height += roots[r][i].approx();
            if (r < static_cast<size_t>(n)) is_simple = true;
            if (!is_simple) rest.push_back({{height, coords_key(roots[r])}, static_cast<int>(r)});
            else pos.push_back(static_cast<int>(r));
        }
        std::sort(rest.begin(), rest.end());
        for (auto& [k, r] : rest) pos.push_back(r);

        int P = static_cast<int>(pos.size());
        if (P != expected_positive_roots({W.family, W.rank, W.i2_m}))
            throw std::logic_error("root enumeration: unexpected positive root count for " + W.label);
        W.npos = P;
        W.nroots = 2 * P;
        W.root_coords.resize(2 * P);
        for (int i = 0; i < P; ++i) {
            W.root_coords[i] = roots[pos[i]];
            std::vector<FieldElement> negv = roots[pos[i]];
            for (auto& c : negv) c = -c;
            W.root_coords[P + i] = std::move(negv);
        }
    }

    static void enumerate_elements(CoxeterGroup& W) {
        int n = W.rank, R = W.nroots, P = W.npos;
        // index of each root by key for generator permutation construction
        std::unordered_map<std::string, int> ridx;
        for (int r = 0; r < R; ++r) ridx.emplace(coords_key(W.root_coords[r]), r);

        std::vector<std::vector<uint16_t>> gen_perm(n, std::vector<uint16_t>(R));
        for (int i = 0; i < n; ++i) {
            for (int r = 0; r < R; ++r) {
                FieldElement ip(0);
                for (int j = 0; j < n; ++j) ip += W.gram[i][j] * W.root_coords[r][j];
                FieldElement c = FieldElement(2) * ip / W.gram[i][i];
                std::vector<FieldElement> out = W.root_coords[r];
                out[i] -= c;
                auto it = ridx.find(coords_key(out));
                assert(it != ridx.end());
                gen_perm[i][r] = static_cast<uint16_t>(it->second);
            }
        }

        long long expect = expected_order({W.family, W.rank, W.i2_m});
        W.perms.reserve(static_cast<size_t>(expect) * R);
        std::unordered_map<uint64_t, std::vector<int>> table;
        table.reserve(static_cast<size_t>(expect) * 2);

        auto hash_perm = [&](const uint16_t* p) {
            uint64_t h = 0xcbf29ce484222325ULL;
            for (int r = 0; r < P; ++r) h = (h ^ p[r]) * 0x100000001b3ULL;
            return h;
        };
        auto find_or_insert = [&](const uint16_t* p) -> std::pair<int, bool> {
            uint64_t h = hash_perm(p);
            auto& bucket = table[h];
            for (int idx : bucket)
                if (std::memcmp(W.perms.data() + static_cast<size_t>(idx) * R, p, P * sizeof(uint16_t)) == 0)
                    return {idx, false};
            int idx = static_cast<int>(W.perms.size() / R);
            W.perms.insert(W.perms.end(), p, p + R);
            bucket.push_back(idx);
            return {idx, true};
        };

        std::vector<uint16_t> idperm(R);
        for (int r = 0; r < R; ++r) idperm[r] = static_cast<uint16_t>(r);
        find_or_insert(idperm.data());
        W.parent_.push_back(-1);
        W.parent_gen_.push_back(-1);
        W.len.push_back(0);

        std::vector<uint16_t> tmp(R);
        for (int u = 0; u < static_cast<int>(W.perms.size() / R); ++u) {
            for (int g = 0; g < n; ++g) {
                const uint16_t* pu = W.perms.data() + static_cast<size_t>(u) * R;
                // w = u * s_g acts by w(r) = u(s_g(r))
                for (int r = 0; r < R; ++r) tmp[r] = pu[gen_perm[g][r]];
                auto [idx, fresh] = find_or_insert(tmp.data());
                if (fresh) {
                    W.parent_.push_back(u);
                    W.parent_gen_.push_back(static_cast<int8_t>(g));
                    W.len.push_back(static_cast<int16_t>(W.len[u] + 1));
                }
                W.right_tab.push_back(idx);  // filled in u-major, g-minor order
            }
        }
        W.order = static_cast<int>(W.perms.size() / R);
        if (W.order != expect)
            throw std::logic_error("element enumeration: |W| mismatch for " + W.label);

        // left table via lookups
        W.left_tab.assign(static_cast<size_t>(W.order) * n, 0);
        for (int u = 0; u < W.order; ++u) {
            const uint16_t* pu = W.perms.data() + static_cast<size_t>(u) * R;
            for (int g = 0; g < n; ++g) {
                for (int r = 0; r < R; ++r) tmp[r] = gen_perm[g][pu[r]];
                auto [idx, fresh] = find_or_insert(tmp.data());
                assert(!fresh);
                W.left_tab[static_cast<size_t>(u) * n + g] = idx;
            }
        }
    }

    static void finalize_tables(CoxeterGroup& W) {
        int n = W.rank, R = W.nroots, P = W.npos;
        int N = W.order;
        W.inv.assign(N, 0);
        for (int w = 1; w < N; ++w)
            W.inv[w] = W.left_tab[static_cast<size_t>(W.inv[W.parent_[w]]) * n + W.parent_gen_[w]];

        W.desc_mask.assign(N, 0);
        W.simple_img.assign(static_cast<size_t>(N) * n, -1);
        W.inv_bits.assign(N, 0);
        for (int w = 0; w < N; ++w) {
            const uint16_t* p = W.perms.data() + static_cast<size_t>(w) * R;
            for (int g = 0; g < n; ++g) {
                if (p[g] >= P) W.desc_mask[w] |= 1u << g;
                if (p[g] < n) W.simple_img[static_cast<size_t>(w) * n + g] = static_cast<int8_t>(p[g]);
            }
            uint64_t bits = 0;
            for (int r = 0; r < P; ++r)
                if (p[r] >= P) bits |= 1ULL << r;
            W.inv_bits[w] = bits;
            assert(__builtin_popcountll(bits) == W.len[w]);
        }
        W.chamber_bits.assign(N, 0);
        for (int w = 0; w < N; ++w) W.chamber_bits[w] = ~W.inv_bits[W.inv[w]] & W.all_pos_mask();

        W.longest = -1;
        for (int w = 0; w < N; ++w)
            if (W.len[w] == P) {
                assert(W.longest < 0);
                W.longest = w;
            }
        assert(W.longest >= 0);

        // reduced words (BFS tree paths)
        W.word_off.assign(N + 1, 0);
        for (int w = 0; w < N; ++w) W.word_off[w + 1] = W.word_off[w] + W.len[w];
        W.word_flat.assign(W.word_off[N], 0);
        for (int w = 0; w < N; ++w) {
            int pos = W.word_off[w + 1];
            for (int u = w; u != 0; u = W.parent_[u]) W.word_flat[--pos] = static_cast<uint8_t>(W.parent_gen_[u]);
            assert(pos == W.word_off[w]);
        }

        // reflection element per positive root: s_r = w s_g w^{-1} whenever
        // r = +-w(a_g); scan images of simples until all roots are covered.
        W.refl_elem.assign(P, -1);
        int missing = P;
        for (int w = 0; w < N && missing > 0; ++w) {
            const uint16_t* p = W.perms.data() + static_cast<size_t>(w) * R;
            for (int g = 0; g < n; ++g) {
                int r = W.fold_positive(p[g]);
                if (W.refl_elem[r] < 0) {
                    W.refl_elem[r] = W.mult(W.mult_gen(w, g), W.inv[w]);
                    --missing;
                }
            }
        }
        assert(missing == 0);
    }

    static void compute_exponents(CoxeterGroup& W) {
        // Peel the degrees out of the length generating function:
        // (q-1)^n * sum_w q^{l(w)} = prod_i (q^{d_i} - 1), d_i = m_i + 1.
        Poly p(W.npos + 1, Rational(0));
        for (int w = 0; w < W.order; ++w) p[W.len[w]] += 1;
        Poly qm1{Rational(-1), Rational(1)};
        for (int i = 0; i < W.rank; ++i) p = poly_mul(p, qm1);
        std::vector<int> degs;
        for (int i = 0; i < W.rank; ++i) {
            int d = 0;
            for (size_t k = 1; k < p.size(); ++k)
                if (p[k] != 0) { d = static_cast<int>(k); break; }
            assert(d > 0);
            Poly f(d + 1, Rational(0));
            f[0] = -1;
            f[d] = 1;
            p = poly_divexact(p, f);
            degs.push_back(d);
        }
        assert(p.size() == 1 && p[0] == 1);
        std::sort(degs.begin(), degs.end());
        for (int d : degs) W.exponents.push_back(d - 1);
    }
};

inline CoxeterGroup CoxeterGroup::build(const GroupSpec& spec) { return CoxeterBuilder::run(spec); }

inline int CoxeterGroup::highest_root_index() const {
    if (!crystallographic) throw ValidationError("highest root: not applicable for non-crystallographic " + label);
    int best = -1;
    Rational best_h;
    for (int r = 0; r < npos; ++r) {
        Rational h(0);
        for (int i = 0; i < rank; ++i) {
            assert(root_coords[r][i].is_rational());
            h += root_coords[r][i].rational_value();
        }
        if (best < 0 || h > best_h) {
            best = r;
            best_h = h;
        }
    }
    return best;
}

inline std::vector<long long> CoxeterGroup::highest_root_marks() const {
    int best = highest_root_index();
    std::vector<long long> marks(rank);
    for (int i = 0; i < rank; ++i) {
        Rational c = root_coords[best][i].rational_value();
        assert(c.get_den() == 1);
        marks[i] = c.get_num().get_si();
    }
    return marks;
}

}  // namespace riffle
