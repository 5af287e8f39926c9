#include "semidual/poset.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace semidual {

FinitePoset FinitePoset::from_relation(std::vector<std::string> names, std::vector<ElementSet> up) {
    FinitePoset p;
    const std::size_t n = names.size();
    p.names_ = std::move(names);
    p.up_ = std::move(up);
    p.down_.assign(n, ElementSet{});
    for (std::size_t i = 0; i < n; ++i)
        p.up_[i].for_each([&](int j) { p.down_[j].insert(i); });
    for (std::size_t i = 0; i < n; ++i) p.index_.emplace(p.names_[i], static_cast<int>(i));
    return p;
}

FinitePoset FinitePoset::build(std::vector<std::string> elements, const std::vector<IndexPair>& gen) {
    const std::size_t n = elements.size();
    if (n == 0) fail(ErrorCode::EmptyPoset, "a poset needs at least one element");
    if (n > kMaxElements)
        fail(ErrorCode::TooLarge, std::to_string(n) + " elements exceeds the limit of " +
                                      std::to_string(kMaxElements));
    {
        std::unordered_map<std::string, int> seen;
        for (std::size_t i = 0; i < n; ++i)
            if (!seen.emplace(elements[i], static_cast<int>(i)).second)
                fail(ErrorCode::DuplicateElement, "element '" + elements[i] + "' declared twice");
    }
    std::vector<ElementSet> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
    for (auto [a, b] : gen) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            fail(ErrorCode::UnknownElement, "pair index out of range");
        up[a].insert(b);
    }
    // Warshall on bit rows.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (up[i].contains(k)) up[i] |= up[k];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (up[i].contains(j) && up[j].contains(i))
                fail(ErrorCode::CycleDetected,
                     "'" + elements[i] + "' and '" + elements[j] + "' lie on a cycle");
    return from_relation(std::move(elements), std::move(up));
}

FinitePoset FinitePoset::build(std::vector<std::string> elements, const std::vector<NamePair>& gen) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < elements.size(); ++i) idx.emplace(elements[i], static_cast<int>(i));
    std::vector<IndexPair> g;
    g.reserve(gen.size());
    for (const auto& [a, b] : gen) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) fail(ErrorCode::UnknownElement, "'" + a + "' is not a declared element");
        if (ib == idx.end()) fail(ErrorCode::UnknownElement, "'" + b + "' is not a declared element");
        g.emplace_back(ia->second, ib->second);
    }
    return build(std::move(elements), g);
}

std::optional<int> FinitePoset::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FinitePoset::require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) fail(ErrorCode::UnknownElement, "'" + std::string(name) + "' is not an element");
    return *i;
}

ElementSet FinitePoset::up_closure(const ElementSet& s) const {
    ElementSet r;
    s.for_each([&](int a) { r |= up_[a]; });
    return r;
}

ElementSet FinitePoset::down_closure(const ElementSet& s) const {
    ElementSet r;
    s.for_each([&](int a) { r |= down_[a]; });
    return r;
}

ElementSet FinitePoset::maximal(const ElementSet& s) const {
    ElementSet r;
    s.for_each([&](int a) {
        ElementSet above = up_[a] & s;
        above.erase(a);
        if (above.empty()) r.insert(a);
    });
    return r;
}

ElementSet FinitePoset::minimal(const ElementSet& s) const {
    ElementSet r;
    s.for_each([&](int a) {
        ElementSet below = down_[a] & s;
        below.erase(a);
        if (below.empty()) r.insert(a);
    });
    return r;
}

std::optional<int> FinitePoset::least(const ElementSet& s) const {
    std::optional<int> out;
    s.for_each([&](int a) {
        if (!out && s.subset_of(up_[a])) out = a;
    });
    return out;
}

std::optional<int> FinitePoset::greatest(const ElementSet& s) const {
    std::optional<int> out;
    s.for_each([&](int a) {
        if (!out && s.subset_of(down_[a])) out = a;
    });
    return out;
}

std::vector<IndexPair> FinitePoset::le_pairs() const {
    std::vector<IndexPair> out;
    for (std::size_t i = 0; i < size(); ++i)
        up_[i].for_each([&](int j) { out.emplace_back(static_cast<int>(i), j); });
    return out;
}

std::vector<IndexPair> FinitePoset::covers() const {
    std::vector<IndexPair> out;
    for (std::size_t i = 0; i < size(); ++i) {
        ElementSet above = up_[i];
        above.erase(i);
        above.for_each([&](int j) {
            ElementSet between = above & down_[j];
            between.erase(j);
            if (between.empty()) out.emplace_back(static_cast<int>(i), j);
        });
    }
    return out;
}

std::vector<int> FinitePoset::heights() const {
    const std::size_t n = size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return down_[a].count() < down_[b].count(); });
    std::vector<int> h(n, 0);
    for (int x : order) {
        int best = 0;
        down_[x].for_each([&](int y) {
            if (y != x) best = std::max(best, h[y] + 1);
        });
        h[x] = best;
    }
    return h;
}

bool FinitePoset::is_antichain() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (up_[i].count() != 1) return false;
    return true;
}

std::string FinitePoset::set_name(const ElementSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ',';
        out += names_[i];
        first = false;
    });
    out += '}';
    return out;
}

std::vector<std::string> FinitePoset::member_names(const ElementSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(names_[i]); });
    return out;
}

ElementSet FinitePoset::set_of(const std::vector<std::string>& names) const {
    ElementSet s;
    for (const auto& n : names) s.insert(require(n));
    return s;
}

std::vector<ElementSet> all_upsets(const FinitePoset& p) {
    const std::size_t n = p.size();
    // Decide elements from the top down so each inclusion only needs its
    // strict upper set to be present already.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return p.up(a).count() < p.up(b).count();
    });
    std::vector<ElementSet> out;
    ElementSet cur;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        int x = order[k];
        self(self, k + 1);
        ElementSet strict_up = p.up(x);
        strict_up.erase(x);
        if (strict_up.subset_of(cur)) {
            cur.insert(x);
            self(self, k + 1);
            cur.erase(x);
        }
    };
    rec(rec, 0);
    sort_canonical(out);
    return out;
}

std::vector<ElementSet> all_downsets(const FinitePoset& p) {
    std::vector<ElementSet> out;
    const auto all = p.all();
    for (const auto& u : all_upsets(p)) out.push_back(all - u);
    sort_canonical(out);
    return out;
}

bool is_monotone(const FinitePoset& src, const FinitePoset& tgt, const TotalMap& f) {
    if (f.size() != src.size()) return false;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (f[i] < 0 || static_cast<std::size_t>(f[i]) >= tgt.size()) return false;
        bool ok = true;
        src.up(i).for_each([&](int j) {
            if (!tgt.le(f[i], f[j])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_order_embedding(const FinitePoset& src, const FinitePoset& tgt, const TotalMap& f) {
    if (!is_monotone(src, tgt, f)) return false;
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j)
            if (tgt.le(f[i], f[j]) != src.le(i, j)) return false;
    return true;
}

namespace {

using Signature = std::tuple<int, int, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FinitePoset& p) {
    auto h = p.heights();
    // depth: longest chain above, via heights of the reversed order
    std::vector<int> depth(p.size(), 0);
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.up(a).count() < p.up(b).count(); });
    for (int x : order) {
        int best = 0;
        p.up(x).for_each([&](int y) {
            if (y != x) best = std::max(best, depth[y] + 1);
        });
        depth[x] = best;
    }
    std::vector<Signature> sig(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        sig[i] = {h[i], depth[i], p.up(i).count(), p.down(i).count()};
    return sig;
}

} // namespace

std::optional<TotalMap> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size();
    if (n != q.size()) return std::nullopt;
    auto sp = signatures(p), sq = signatures(q);
    {
        auto a = sp, b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<std::vector<int>> cand(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sp[i] == sq[j]) cand[i].push_back(static_cast<int>(j));

    TotalMap f(n, -1);
    ElementSet used;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (int y : cand[i]) {
            if (used.contains(y)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) {
                if (p.le(k, i) != q.le(f[k], y) || p.le(i, k) != q.le(y, f[k])) ok = false;
            }
            if (!ok) continue;
            f[i] = y;
            used.insert(y);
            if (self(self, i + 1)) return true;
            used.erase(y);
            f[i] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return f;
}

} // namespace semidual
