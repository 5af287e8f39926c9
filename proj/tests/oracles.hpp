// Brute-force reference computations. These work from the order relation
// alone, with subsets as bitmasks, and share no code with the library beyond
// FinitePoset::le.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "semidual/poset.hpp"

namespace oracle {

using Mask = std::uint32_t;
using semidual::FinitePoset;

inline bool has(Mask m, int i) { return (m >> i) & 1u; }

inline Mask to_mask(const semidual::ElementSet& s) { return static_cast<Mask>(s.word(0)); }

inline semidual::ElementSet to_set(Mask m) {
    semidual::ElementSet s;
    for (int i = 0; i < 32; ++i)
        if (has(m, i)) s.insert(i);
    return s;
}

inline int n_of(const FinitePoset& p) { return static_cast<int>(p.size()); }

inline bool is_upset(const FinitePoset& p, Mask s) {
    for (int a = 0; a < n_of(p); ++a)
        for (int b = 0; b < n_of(p); ++b)
            if (has(s, a) && p.le(a, b) && !has(s, b)) return false;
    return true;
}

inline bool is_downset(const FinitePoset& p, Mask s) {
    for (int a = 0; a < n_of(p); ++a)
        for (int b = 0; b < n_of(p); ++b)
            if (has(s, b) && p.le(a, b) && !has(s, a)) return false;
    return true;
}

inline Mask upper_bounds(const FinitePoset& p, Mask s) {
    Mask out = 0;
    for (int x = 0; x < n_of(p); ++x) {
        bool ok = true;
        for (int a = 0; a < n_of(p); ++a)
            if (has(s, a) && !p.le(a, x)) ok = false;
        if (ok) out |= Mask{1} << x;
    }
    return out;
}

inline Mask lower_bounds(const FinitePoset& p, Mask s) {
    Mask out = 0;
    for (int x = 0; x < n_of(p); ++x) {
        bool ok = true;
        for (int a = 0; a < n_of(p); ++a)
            if (has(s, a) && !p.le(x, a)) ok = false;
        if (ok) out |= Mask{1} << x;
    }
    return out;
}

// Greatest lower bound by scanning; -1 if none.
inline int glb(const FinitePoset& p, int a, int b) {
    Mask lb = lower_bounds(p, (Mask{1} << a) | (Mask{1} << b));
    for (int x = 0; x < n_of(p); ++x)
        if (has(lb, x) && (lower_bounds(p, Mask{1} << x) & lb) == lb)
            return x;
    return -1;
}

inline int lub(const FinitePoset& p, int a, int b) {
    Mask ub = upper_bounds(p, (Mask{1} << a) | (Mask{1} << b));
    for (int x = 0; x < n_of(p); ++x)
        if (has(ub, x) && (upper_bounds(p, Mask{1} << x) & ub) == ub) return x;
    return -1;
}

inline Mask full(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool is_filter(const FinitePoset& p, Mask s) {
    if (s == 0 || !is_upset(p, s)) return false;
    for (int a = 0; a < n_of(p); ++a)
        for (int b = 0; b < n_of(p); ++b)
            if (has(s, a) && has(s, b) && !has(s, glb(p, a, b))) return false;
    return true;
}

inline bool is_ideal(const FinitePoset& p, Mask s) {
    if (s == 0 || !is_downset(p, s)) return false;
    for (int a = 0; a < n_of(p); ++a)
        for (int b = 0; b < n_of(p); ++b)
            if (has(s, a) && has(s, b) && (upper_bounds(p, (Mask{1} << a) | (Mask{1} << b)) & s) == 0) return false;
    return true;
}

// Literal definition: contains A^{ul} for every finite A within s.
inline bool is_frink_ideal(const FinitePoset& p, Mask s) {
    if (s == 0) return false;
    for (Mask a = s;; a = (a - 1) & s) {
        if ((lower_bounds(p, upper_bounds(p, a)) & ~s) != 0) return false;
        if (a == 0) break;
    }
    return true;
}

inline std::vector<Mask> all_subsets_where(int n, auto&& pred) {
    std::vector<Mask> out;
    for (Mask m = 0; m <= full(n); ++m) {
        if (pred(m)) out.push_back(m);
        if (m == full(n)) break;
    }
    return out;
}

inline std::vector<Mask> filters(const FinitePoset& p) {
    return all_subsets_where(n_of(p), [&](Mask m) { return is_filter(p, m); });
}

inline std::vector<Mask> ideals(const FinitePoset& p) {
    return all_subsets_where(n_of(p), [&](Mask m) { return is_ideal(p, m); });
}

inline std::vector<Mask> frink_ideals(const FinitePoset& p) {
    return all_subsets_where(n_of(p), [&](Mask m) { return is_frink_ideal(p, m); });
}

inline bool is_prime_filter(const FinitePoset& p, Mask f) {
    if (!is_filter(p, f) || f == full(n_of(p))) return false;
    const auto fs = filters(p);
    for (Mask a : fs)
        for (Mask b : fs)
            if ((a & b & ~f) == 0 && (a & ~f) != 0 && (b & ~f) != 0) return false;
    return true;
}

inline bool is_optimal_filter(const FinitePoset& p, Mask f) {
    return is_filter(p, f) && is_frink_ideal(p, full(n_of(p)) & ~f);
}

inline bool is_prime_ideal(const FinitePoset& p, Mask i) {
    return is_ideal(p, i) && i != full(n_of(p)) && is_filter(p, full(n_of(p)) & ~i);
}

// Every bijection that is an order isomorphism.
inline std::vector<std::vector<int>> isomorphisms(const FinitePoset& p, const FinitePoset& q) {
    std::vector<std::vector<int>> out;
    if (p.size() != q.size()) return out;
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < n_of(p) && ok; ++a)
            for (int b = 0; b < n_of(p) && ok; ++b)
                if (p.le(a, b) != q.le(perm[a], perm[b])) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Count of unlabeled posets on n points: filter all relations, then reduce
// each labeled order to its lexicographically least relabeling.
inline std::size_t count_posets(int n) {
    const int cells = n * n;
    std::set<std::uint64_t> forms;
    std::vector<int> perm(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
        auto le = [&](int a, int b) { return (m >> (a * n + b)) & 1u; };
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = le(a, a);
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (a != b && le(a, b) && le(b, a)) ok = false;
                for (int c = 0; c < n && ok; ++c)
                    if (le(a, b) && le(b, c) && !le(a, c)) ok = false;
            }
        if (!ok) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t code = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (le(a, b)) code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        forms.insert(best);
    }
    return forms.size();
}

// Distributivity of a lattice through the (a^b) v (a^c) = a ^ (b v c) identity.
inline bool lattice_distributive(const FinitePoset& p) {
    const int n = n_of(p);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int bc = lub(p, b, c), ab = glb(p, a, b), ac = glb(p, a, c);
                if (bc < 0 || ab < 0 || ac < 0) return false;
                if (glb(p, a, bc) != lub(p, ab, ac)) return false;
            }
    return true;
}

// Relative pseudocomplement a -> b as the greatest c with a ^ c <= b; -1 if none.
inline int arrow(const FinitePoset& p, int a, int b) {
    Mask cands = 0;
    for (int c = 0; c < n_of(p); ++c) {
        int m = glb(p, a, c);
        if (m >= 0 && p.le(m, b)) cands |= Mask{1} << c;
    }
    for (int c = 0; c < n_of(p); ++c)
        if (has(cands, c) && (lower_bounds(p, Mask{1} << c) & cands) == cands) return c;
    return -1;
}

inline int greatest(const FinitePoset& p) {
    for (int c = 0; c < n_of(p); ++c)
        if (lower_bounds(p, Mask{1} << c) == full(n_of(p))) return c;
    return -1;
}

inline int least(const FinitePoset& p) {
    for (int c = 0; c < n_of(p); ++c)
        if (upper_bounds(p, Mask{1} << c) == full(n_of(p))) return c;
    return -1;
}

// Every total map src -> tgt satisfying pred, in lexicographic table order.
inline std::vector<std::vector<int>> maps_where(int ns, int nt, auto&& pred) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(ns, 0);
    while (true) {
        if (pred(f)) out.push_back(f);
        int i = ns - 1;
        while (i >= 0 && f[i] == nt - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
    return out;
}

inline bool preserves_meets_and_top(const FinitePoset& l, const FinitePoset& k, const std::vector<int>& h) {
    for (int a = 0; a < n_of(l); ++a)
        for (int b = 0; b < n_of(l); ++b)
            if (h[glb(l, a, b)] != glb(k, h[a], h[b])) return false;
    return h[greatest(l)] == greatest(k);
}

// ---- finite spaces ---------------------------------------------------------

// Upsets whose complement has every maximal point inside x0.
inline std::vector<Mask> admissible(const FinitePoset& x, Mask x0) {
    const int n = n_of(x);
    return all_subsets_where(n, [&](Mask u) {
        if (!is_upset(x, u)) return false;
        Mask c = full(n) & ~u;
        for (int a = 0; a < n; ++a) {
            if (!has(c, a)) continue;
            bool maximal = true;
            for (int b = 0; b < n; ++b)
                if (b != a && has(c, b) && x.le(a, b)) maximal = false;
            if (maximal && !has(x0, a)) return false;
        }
        return true;
    });
}

inline Mask box(const std::vector<Mask>& rows, Mask a) {
    Mask out = 0;
    for (std::size_t x = 0; x < rows.size(); ++x)
        if ((rows[x] & ~a) == 0) out |= Mask{1} << x;
    return out;
}

// Literal separation and box-preservation on raw rows.
inline bool gp_relation(const FinitePoset& x, Mask x0, const FinitePoset& y, Mask y0, const std::vector<Mask>& rows) {
    const auto xs = admissible(x, x0), ys = admissible(y, y0);
    for (int a = 0; a < n_of(x); ++a)
        for (int b = 0; b < n_of(y); ++b) {
            if (has(rows[a], b)) continue;
            bool sep = false;
            for (Mask u : ys)
                if ((rows[a] & ~u) == 0 && !has(u, b)) sep = true;
            if (!sep) return false;
        }
    for (Mask u : ys)
        if (std::find(xs.begin(), xs.end(), box(rows, u)) == xs.end()) return false;
    return true;
}

inline std::vector<std::vector<Mask>> gp_relations(const FinitePoset& x, Mask x0, const FinitePoset& y, Mask y0) {
    std::vector<std::vector<Mask>> out;
    const int nx = n_of(x), ny = n_of(y);
    std::vector<Mask> rows(nx, 0);
    while (true) {
        if (gp_relation(x, x0, y, y0, rows)) out.push_back(rows);
        int i = nx - 1;
        while (i >= 0 && rows[i] == full(ny)) rows[i--] = 0;
        if (i < 0) break;
        ++rows[i];
    }
    return out;
}

} // namespace oracle
