#include "doctest.h"
#include "oracles.hpp"

#include "semidual/catalog.hpp"
#include "semidual/poset.hpp"

using namespace semidual;

namespace {

FinitePoset diamond() {
    return FinitePoset::build({"0", "a", "b", "1"}, std::vector<NamePair>{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalError;
}

} // namespace

TEST_CASE("closure of generators") {
    auto p = FinitePoset::build({"a", "b", "c"}, std::vector<NamePair>{{"a", "b"}, {"b", "c"}});
    CHECK(p.le(0, 2));
    CHECK(p.le(1, 1));
    CHECK_FALSE(p.le(2, 0));
    CHECK(p.lt(0, 1));
    CHECK_FALSE(p.lt(1, 1));
    CHECK(p.up(0) == ElementSet{0, 1, 2});
    CHECK(p.down(2) == ElementSet{0, 1, 2});
    CHECK(p.covers() == std::vector<IndexPair>{{0, 1}, {1, 2}});
    CHECK(p.heights() == std::vector<int>{0, 1, 2});
}

TEST_CASE("construction errors") {
    CHECK(code_of([] { FinitePoset::build({}, std::vector<NamePair>{}); }) == ErrorCode::EmptyPoset);
    CHECK(code_of([] { FinitePoset::build({"a", "a"}, std::vector<NamePair>{}); }) == ErrorCode::DuplicateElement);
    CHECK(code_of([] { FinitePoset::build({"a"}, std::vector<NamePair>{{"a", "z"}}); }) == ErrorCode::UnknownElement);
    CHECK(code_of([] {
              FinitePoset::build({"a", "b", "c"}, std::vector<NamePair>{{"a", "b"}, {"b", "c"}, {"c", "a"}});
          }) == ErrorCode::CycleDetected);
    std::vector<std::string> many;
    for (int i = 0; i < 257; ++i) many.push_back(std::to_string(i));
    CHECK(code_of([&] { FinitePoset::build(many, std::vector<NamePair>{}); }) == ErrorCode::TooLarge);
}

TEST_CASE("extremal elements and names") {
    auto p = diamond();
    CHECK(p.maximal(ElementSet{0, 1, 2}) == ElementSet{1, 2});
    CHECK(p.minimal(ElementSet{1, 2, 3}) == ElementSet{1, 2});
    CHECK(p.least(p.all()) == 0);
    CHECK(p.greatest(p.all()) == 3);
    CHECK_FALSE(p.least(ElementSet{1, 2}).has_value());
    CHECK(p.set_name(ElementSet{1, 3}) == "{a,1}");
    CHECK(p.set_name(ElementSet{}) == "{}");
    CHECK(p.set_of({"b", "0"}) == ElementSet{0, 2});
    CHECK(p.require("b") == 2);
    CHECK(code_of([&] { p.require("q"); }) == ErrorCode::UnknownElement);
}

TEST_CASE("upsets match a subset scan") {
    for (const auto& p : poset_catalog(5)) {
        auto ups = all_upsets(p);
        auto scan = oracle::all_subsets_where(static_cast<int>(p.size()), [&](oracle::Mask m) { return oracle::is_upset(p, m); });
        REQUIRE(ups.size() == scan.size());
        for (std::size_t i = 1; i < ups.size(); ++i) CHECK(canonical_less(ups[i - 1], ups[i]));
        std::set<oracle::Mask> a(scan.begin(), scan.end()), b;
        for (const auto& u : ups) b.insert(oracle::to_mask(u));
        CHECK(a == b);
        auto downs = all_downsets(p);
        CHECK(downs.size() == ups.size());
        for (const auto& d : downs) CHECK(p.is_downset(d));
    }
}

TEST_CASE("isomorphism search agrees with permutations") {
    const auto ps = poset_catalog(4);
    for (const auto& p : ps)
        for (const auto& q : ps) {
            auto iso = find_isomorphism(p, q);
            auto all = oracle::isomorphisms(p, q);
            CHECK(iso.has_value() == !all.empty());
            if (iso) {
                CHECK(is_order_embedding(p, q, *iso));
                CHECK(*iso == all.front());
            }
        }
}

TEST_CASE("monotone and embedding predicates") {
    auto c = chain_poset(3);
    auto a = antichain_poset(2);
    CHECK(is_monotone(c, c, {0, 0, 2}));
    CHECK_FALSE(is_monotone(c, c, {2, 1, 0}));
    CHECK_FALSE(is_order_embedding(c, c, {0, 0, 2}));
    CHECK(is_monotone(a, c, {2, 0}));
    CHECK_FALSE(is_order_embedding(a, c, {2, 0}));
    CHECK_FALSE(is_monotone(c, c, {0, 1}));
}

TEST_CASE("element sets") {
    ElementSet s{3, 70, 200};
    CHECK(s.count() == 3);
    CHECK(s.first() == 3);
    CHECK(s.indices() == std::vector<int>{3, 70, 200});
    CHECK(ElementSet::full(130).count() == 130);
    CHECK((ElementSet::full(5) - ElementSet{1, 2}) == ElementSet{0, 3, 4});
    CHECK(canonical_less(ElementSet{4}, ElementSet{0, 1}));
    CHECK(canonical_less(ElementSet{0, 2}, ElementSet{1, 2}));
    CHECK(ElementSet{}.first() == -1);
}
