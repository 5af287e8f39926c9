#include "semidual/catalog.hpp"

#include <algorithm>
#include <map>

namespace semidual {

namespace {

std::vector<std::string> index_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> invariant(const FinitePoset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> v;
    for (std::size_t i = 0; i < p.size(); ++i) v.emplace_back(p.up(i).count(), p.down(i).count());
    std::sort(v.begin(), v.end());
    return v;
}

// Every poset arises from a smaller one by adding a maximal element above
// some downset.
std::vector<FinitePoset> extend_level(const std::vector<FinitePoset>& prev, std::size_t n) {
    std::vector<FinitePoset> out;
    std::map<std::vector<std::pair<std::size_t, std::size_t>>, std::vector<std::size_t>> buckets;
    const int fresh = static_cast<int>(n - 1);
    for (const auto& p : prev) {
        const auto base = p.covers();
        for (const auto& d : all_downsets(p)) {
            auto gen = base;
            p.maximal(d).for_each([&](int m) { gen.emplace_back(m, fresh); });
            auto q = FinitePoset::build(index_names(n), gen);
            auto& bucket = buckets[invariant(q)];
            bool seen = std::any_of(bucket.begin(), bucket.end(),
                                    [&](std::size_t k) { return find_isomorphism(out[k], q).has_value(); });
            if (seen) continue;
            bucket.push_back(out.size());
            out.push_back(std::move(q));
        }
    }
    return out;
}

} // namespace

std::vector<FinitePoset> posets_of_size(std::size_t n) {
    if (n == 0) return {};
    std::vector<FinitePoset> level{FinitePoset::build({"0"}, std::vector<IndexPair>{})};
    for (std::size_t k = 2; k <= n; ++k) level = extend_level(level, k);
    return level;
}

std::vector<FinitePoset> poset_catalog(std::size_t max_size) {
    std::vector<FinitePoset> out;
    if (max_size == 0) return out;
    std::vector<FinitePoset> level{FinitePoset::build({"0"}, std::vector<IndexPair>{})};
    for (std::size_t k = 1;; ++k) {
        out.insert(out.end(), level.begin(), level.end());
        if (k == max_size) break;
        level = extend_level(level, k + 1);
    }
    return out;
}

std::vector<MeetSemilattice> semilattice_catalog(std::size_t max_size) {
    std::vector<MeetSemilattice> out;
    for (const auto& p : poset_catalog(max_size))
        if (auto l = MeetSemilattice::try_from(p)) out.push_back(std::move(*l));
    return out;
}

std::vector<MeetSemilattice> distributive_lattice_catalog(std::size_t max_size, std::size_t min_size) {
    std::vector<MeetSemilattice> out;
    for (auto& l : semilattice_catalog(max_size))
        if (l.size() >= min_size && l.is_lattice() && l.is_distributive()) out.push_back(std::move(l));
    return out;
}

FinitePoset chain_poset(std::size_t n) {
    std::vector<IndexPair> gen;
    for (std::size_t i = 1; i < n; ++i) gen.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
    return FinitePoset::build(index_names(n), gen);
}

FinitePoset antichain_poset(std::size_t n) { return FinitePoset::build(index_names(n), std::vector<IndexPair>{}); }

MeetSemilattice make_chain(std::size_t n) { return MeetSemilattice(chain_poset(n)); }

MeetSemilattice make_diamond() {
    return MeetSemilattice(FinitePoset::build({"0", "a", "b", "1"}, std::vector<NamePair>{
                                                                         {"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
}

MeetSemilattice make_v3() {
    return MeetSemilattice(FinitePoset::build({"0", "a", "b"}, std::vector<NamePair>{{"0", "a"}, {"0", "b"}}));
}

MeetSemilattice make_m3() {
    return MeetSemilattice(FinitePoset::build(
        {"0", "a", "b", "c", "1"},
        std::vector<NamePair>{{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

} // namespace semidual
