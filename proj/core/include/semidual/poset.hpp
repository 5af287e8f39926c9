#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semidual/element_set.hpp"
#include "semidual/error.hpp"

namespace semidual {

using NamePair = std::pair<std::string, std::string>;
using IndexPair = std::pair<int, int>;

// Total map between carriers, stored as an image table indexed by source.
using TotalMap = std::vector<int>;

class FinitePoset {
public:
    // le = reflexive-transitive closure of gen; rejects cycles.
    static FinitePoset build(std::vector<std::string> elements, const std::vector<NamePair>& gen);
    static FinitePoset build(std::vector<std::string> elements, const std::vector<IndexPair>& gen);

    std::size_t size() const { return names_.size(); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(std::string_view name) const;
    int require(std::string_view name) const;

    bool le(int a, int b) const { return up_[a].contains(b); }
    bool lt(int a, int b) const { return a != b && le(a, b); }
    const ElementSet& up(int a) const { return up_[a]; }
    const ElementSet& down(int a) const { return down_[a]; }
    ElementSet all() const { return ElementSet::full(size()); }

    ElementSet up_closure(const ElementSet& s) const;
    ElementSet down_closure(const ElementSet& s) const;
    ElementSet maximal(const ElementSet& s) const;
    ElementSet minimal(const ElementSet& s) const;
    bool is_upset(const ElementSet& s) const { return up_closure(s) == s; }
    bool is_downset(const ElementSet& s) const { return down_closure(s) == s; }

    // Least / greatest member of s, if it has one.
    std::optional<int> least(const ElementSet& s) const;
    std::optional<int> greatest(const ElementSet& s) const;

    std::vector<IndexPair> le_pairs() const;
    std::vector<IndexPair> covers() const;
    // Length of the longest chain ending at each element.
    std::vector<int> heights() const;
    bool is_antichain() const;

    // "{a,b}" in canonical order.
    std::string set_name(const ElementSet& s) const;
    std::vector<std::string> member_names(const ElementSet& s) const;
    ElementSet set_of(const std::vector<std::string>& names) const;

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
        return a.names_ == b.names_ && a.up_ == b.up_;
    }

private:
    FinitePoset() = default;
    static FinitePoset from_relation(std::vector<std::string> names, std::vector<ElementSet> up);

    std::vector<std::string> names_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    std::unordered_map<std::string, int> index_;
};

// Every upset, sorted by cardinality then lexicographic membership.
std::vector<ElementSet> all_upsets(const FinitePoset& p);
std::vector<ElementSet> all_downsets(const FinitePoset& p);

bool is_monotone(const FinitePoset& src, const FinitePoset& tgt, const TotalMap& f);
bool is_order_embedding(const FinitePoset& src, const FinitePoset& tgt, const TotalMap& f);

// Lexicographically first bijective order-embedding, if any.
std::optional<TotalMap> find_isomorphism(const FinitePoset& p, const FinitePoset& q);

} // namespace semidual
