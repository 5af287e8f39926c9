#include "doctest.h"
#include "oracles.hpp"

#include "semidual/catalog.hpp"
#include "semidual/semilattice.hpp"

using namespace semidual;
using oracle::Mask;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalError;
}

std::set<Mask> masks(const std::vector<ClassifiedSet>& v) {
    std::set<Mask> out;
    for (const auto& c : v) out.insert(oracle::to_mask(c.members));
    return out;
}

std::set<Mask> masks(const std::vector<Mask>& v) { return {v.begin(), v.end()}; }

MeetSemilattice n5() {
    return MeetSemilattice(FinitePoset::build(
        {"0", "a", "b", "c", "1"}, std::vector<NamePair>{{"0", "a"}, {"a", "c"}, {"0", "b"}, {"c", "1"}, {"b", "1"}}));
}

} // namespace

TEST_CASE("meet and join tables match bound scans") {
    for (const auto& l : semilattice_catalog(6)) {
        const auto& p = l.poset();
        for (int a = 0; a < static_cast<int>(l.size()); ++a)
            for (int b = 0; b < static_cast<int>(l.size()); ++b) {
                CHECK(l.meet(a, b) == oracle::glb(p, a, b));
                int j = oracle::lub(p, a, b);
                CHECK(l.join(a, b) == (j < 0 ? std::nullopt : std::optional<int>(j)));
            }
        CHECK(l.bottom() == oracle::least(p));
        CHECK(l.has_top() == (oracle::greatest(p) >= 0));
    }
}

TEST_CASE("non semi-lattices are rejected") {
    auto p = FinitePoset::build({"a", "b", "1"}, std::vector<NamePair>{{"a", "1"}, {"b", "1"}});
    CHECK(code_of([&] { MeetSemilattice l(p); }) == ErrorCode::NotMeetSemilattice);
    CHECK_FALSE(MeetSemilattice::try_from(p).has_value());
    CHECK_FALSE(classify(p).is_meet_semilattice);
    auto c = chain_poset(2);
    CHECK(code_of([&] { MeetSemilattice l(c, std::string("0")); }) == ErrorCode::ValidationError);
    CHECK(MeetSemilattice(c, std::string("1")).top() == 1);
}

TEST_CASE("classification of the small fixtures") {
    const auto d = classify(make_diamond().poset());
    CHECK(d.is_distributive);
    CHECK(d.is_lattice);
    CHECK(d.is_heyting);
    CHECK(d.arrow.has_value());
    const auto m = classify(make_m3().poset());
    CHECK(m.is_lattice);
    CHECK_FALSE(m.is_distributive);
    CHECK_FALSE(m.is_implicative);
    CHECK_FALSE(classify(n5().poset()).is_distributive);
    const auto v = classify(make_v3().poset());
    CHECK(v.is_meet_semilattice);
    CHECK_FALSE(v.is_lattice);
    CHECK_FALSE(v.is_bounded);
}

TEST_CASE("distributivity: fast test, definition and lattice identity agree") {
    for (const auto& l : semilattice_catalog(7)) {
        CHECK(l.is_distributive() == distributive_by_definition(l));
        if (l.is_lattice() && l.size() <= 6) CHECK(l.is_distributive() == oracle::lattice_distributive(l.poset()));
        // Finite distributive semi-lattices have a top.
        if (l.is_distributive()) CHECK(l.has_top());
    }
}

TEST_CASE("arrow tables match the pseudocomplement scan") {
    for (const auto& l : semilattice_catalog(6)) {
        const auto& p = l.poset();
        bool all = true;
        for (int a = 0; a < static_cast<int>(l.size()); ++a)
            for (int b = 0; b < static_cast<int>(l.size()); ++b) {
                int r = oracle::arrow(p, a, b);
                if (r < 0) all = false;
                else if (l.is_implicative()) CHECK(l.arrow(a, b) == r);
            }
        CHECK(l.is_implicative() == all);
        // Implicative semi-lattices are distributive.
        if (l.is_implicative()) CHECK(l.is_distributive());
    }
}

TEST_CASE("filter and ideal enumerations match predicate scans") {
    for (const auto& l : semilattice_catalog(5)) {
        const auto& p = l.poset();
        CHECK(masks(enumerate_filters(l, FilterKind::All)) == masks(oracle::filters(p)));
        CHECK(masks(enumerate_ideals(l, IdealKind::All)) == masks(oracle::ideals(p)));
        CHECK(masks(enumerate_ideals(l, IdealKind::Frink)) == masks(oracle::frink_ideals(p)));
        std::set<Mask> prime, optimal, prime_ideal;
        for (Mask f : oracle::filters(p)) {
            if (oracle::is_prime_filter(p, f)) prime.insert(f);
            if (oracle::is_optimal_filter(p, f)) optimal.insert(f);
        }
        for (Mask i : oracle::ideals(p))
            if (oracle::is_prime_ideal(p, i)) prime_ideal.insert(i);
        CHECK(masks(enumerate_filters(l, FilterKind::Prime)) == prime);
        CHECK(masks(enumerate_filters(l, FilterKind::Optimal)) == optimal);
        CHECK(masks(enumerate_ideals(l, IdealKind::Prime)) == prime_ideal);
        for (Mask s = 1; s < (Mask{1} << l.size()); ++s) {
            const auto set = oracle::to_set(s);
            CHECK(is_filter(l, set) == oracle::is_filter(p, s));
            CHECK(is_frink_ideal(l, set) == oracle::is_frink_ideal(p, s));
            CHECK(is_ideal(l, set) == oracle::is_ideal(p, s));
        }
        for (const auto& f : enumerate_filters(l, FilterKind::Optimal))
            CHECK(f.definitional_extension == !l.is_distributive());
    }
}

TEST_CASE("V3 ideals and F-ideals") {
    const auto v3 = make_v3();
    CHECK(enumerate_ideals(v3, IdealKind::All).size() == 3);
    CHECK(enumerate_ideals(v3, IdealKind::Frink).size() == 4);
    CHECK(is_frink_ideal(v3, v3.poset().all()));
    CHECK_FALSE(is_ideal(v3, v3.poset().all()));
}

TEST_CASE("generated filters and F-ideals") {
    const auto d = make_diamond();
    CHECK(filter_generated(d, ElementSet{1, 2}) == d.poset().all());
    CHECK(filter_generated(d, ElementSet{1}) == ElementSet{1, 3});
    CHECK(filter_generated(d, ElementSet{}) == ElementSet{3});
    CHECK(code_of([] { filter_generated(make_v3(), ElementSet{}); }) == ErrorCode::EmptyGeneratorsNoTop);
    CHECK(code_of([&] { frink_ideal_generated(d, ElementSet{}); }) == ErrorCode::EmptyGenerators);
    CHECK(frink_ideal_generated(d, ElementSet{1, 2}) == d.poset().all());
    CHECK(frink_ideal_generated(make_v3(), ElementSet{1, 2}) == ElementSet{0, 1, 2});
    CHECK(code_of([] { make_v3().meet_all(ElementSet{}); }) == ErrorCode::InvalidArgument);
    CHECK(d.meet_all(ElementSet{}) == 3);
    CHECK(d.join_all(ElementSet{}) == 0);
    CHECK(filter_generator(d, ElementSet{1, 3}) == 1);
}

TEST_CASE("separation witnesses and errors") {
    const auto d = make_diamond();
    auto p = separate_prime(d, ElementSet{3}, ElementSet{0, 1});
    CHECK(p.members == ElementSet{2, 3});
    CHECK(p.classification == SetClass::PrimeFilter);
    CHECK(code_of([&] { separate_prime(d, ElementSet{1, 3}, ElementSet{0, 1}); }) == ErrorCode::NotDisjoint);
    CHECK(code_of([] { separate_prime(make_m3(), ElementSet{4}, ElementSet{0}); }) == ErrorCode::NotDistributive);
    CHECK(code_of([&] { separate_prime(d, ElementSet{1}, ElementSet{0}); }) == ErrorCode::InvalidArgument);
    auto o = separate_optimal(d, ElementSet{3}, ElementSet{0, 2});
    CHECK(o.members == ElementSet{1, 3});
}

TEST_CASE("homomorphism enumerations match brute force") {
    const auto ls = semilattice_catalog(4);
    for (const auto& l : ls)
        for (const auto& k : ls) {
            if (!l.has_top() || !k.has_top()) {
                CHECK(code_of([&] { enumerate_homs(l, k, HomKind::MeetTop); }) == ErrorCode::KindUnavailable);
                continue;
            }
            const auto& lp = l.poset();
            const auto& kp = k.poset();
            const int nl = static_cast<int>(l.size()), nk = static_cast<int>(k.size());
            auto meet_top = oracle::maps_where(nl, nk, [&](const std::vector<int>& h) {
                return oracle::preserves_meets_and_top(lp, kp, h);
            });
            std::vector<TotalMap> got;
            for (const auto& h : enumerate_homs(l, k, HomKind::MeetTop)) got.push_back(h.table);
            CHECK(got == meet_top);

            std::vector<TotalMap> bounded;
            for (const auto& h : meet_top)
                if (h[l.bottom()] == k.bottom()) bounded.push_back(h);
            got.clear();
            for (const auto& h : enumerate_homs(l, k, HomKind::Bounded)) got.push_back(h.table);
            CHECK(got == bounded);

            // Sup: every existing join of a nonempty family, plus bottom.
            std::vector<TotalMap> sup;
            for (const auto& h : meet_top) {
                bool ok = h[l.bottom()] == k.bottom();
                for (int a = 0; a < nl && ok; ++a)
                    for (int b = 0; b < nl && ok; ++b) {
                        int j = oracle::lub(lp, a, b);
                        if (j >= 0 && h[j] != oracle::lub(kp, h[a], h[b])) ok = false;
                    }
                if (ok) sup.push_back(h);
            }
            got.clear();
            for (const auto& h : enumerate_homs(l, k, HomKind::Sup)) got.push_back(h.table);
            if (l.is_distributive() && k.is_distributive()) CHECK(got == sup);

            if (l.is_implicative() && k.is_implicative()) {
                std::vector<TotalMap> impl, hey;
                for (const auto& h : meet_top) {
                    bool ok = true;
                    for (int a = 0; a < nl && ok; ++a)
                        for (int b = 0; b < nl && ok; ++b)
                            if (h[oracle::arrow(lp, a, b)] != oracle::arrow(kp, h[a], h[b])) ok = false;
                    if (!ok) continue;
                    impl.push_back(h);
                    if (std::find(sup.begin(), sup.end(), h) != sup.end()) hey.push_back(h);
                }
                got.clear();
                for (const auto& h : enumerate_homs(l, k, HomKind::Implicative)) got.push_back(h.table);
                CHECK(got == impl);
                if (l.is_heyting() && k.is_heyting()) {
                    got.clear();
                    for (const auto& h : enumerate_homs(l, k, HomKind::Heyting)) got.push_back(h.table);
                    CHECK(got == hey);
                }
            }
        }
}

TEST_CASE("sup criteria agree on meet-top maps between distributive lattices") {
    const auto ls = distributive_lattice_catalog(5);
    for (const auto& l : ls)
        for (const auto& k : ls)
            oracle::maps_where(static_cast<int>(l.size()), static_cast<int>(k.size()), [&](const std::vector<int>& h) {
                if (!preserves_meets(l, k, h) || h[*l.top()] != *k.top()) return false;
                const bool a = sup_by_inclusion(l, k, h);
                CHECK(a == sup_by_optimal_preimage(l, k, h));
                CHECK(a == preserves_existing_joins(l, k, h));
                return false;
            });
}

TEST_CASE("hom counting anchors") {
    CHECK(enumerate_homs(make_diamond(), make_diamond(), HomKind::MeetTop).size() == 16);
    CHECK(enumerate_homs(make_chain(2), make_chain(2), HomKind::Implicative).size() == 2);
    CHECK(enumerate_homs(make_chain(3), make_chain(2), HomKind::Implicative).size() == 2);
    CHECK(enumerate_homs(make_diamond(), make_diamond(), HomKind::Heyting).size() == 4);
    CHECK(hom_kind_from_string("sup") == HomKind::Sup);
    CHECK_FALSE(hom_kind_from_string("bogus").has_value());
    CHECK(std::string(to_string(HomKind::MeetTop)) == "meet-top");
    CHECK(code_of([] { enumerate_homs(make_m3(), make_m3(), HomKind::Implicative); }) == ErrorCode::KindUnavailable);
}
