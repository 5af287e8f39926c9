#include "doctest.h"
#include "oracles.hpp"

#include "semidual/catalog.hpp"
#include "semidual/morphisms.hpp"

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

std::vector<Mask> rows_of(const Relation& r) {
    std::vector<Mask> out;
    for (const auto& row : r.rows) out.push_back(oracle::to_mask(row));
    return out;
}

Relation from_rows(const std::vector<Mask>& rows) {
    Relation r;
    for (Mask m : rows) r.rows.push_back(oracle::to_set(m));
    return r;
}

// Ordinary relational composition, R then S.
std::vector<Mask> compose_sets(const std::vector<Mask>& r, const std::vector<Mask>& s) {
    std::vector<Mask> out;
    for (Mask row : r) {
        Mask o = 0;
        for (std::size_t y = 0; y < s.size(); ++y)
            if (oracle::has(row, static_cast<int>(y))) o |= s[y];
        out.push_back(o);
    }
    return out;
}

// All relations between the carriers, as raw rows.
template <class F>
void for_each_relation(std::size_t nx, std::size_t ny, F&& f) {
    std::vector<Mask> rows(nx, 0);
    while (true) {
        f(rows);
        std::size_t i = 0;
        while (i < nx && rows[i] == oracle::full(static_cast<int>(ny))) rows[i++] = 0;
        if (i == nx) return;
        ++rows[i];
    }
}

} // namespace

TEST_CASE("gp flag matches the literal conditions on every relation") {
    const auto ps = poset_catalog(3);
    for (const auto& px : ps)
        for (const auto& py : ps)
            for (Mask x0 : {oracle::full(static_cast<int>(px.size())), Mask{1}}) {
                const GPSpace x(px, oracle::to_set(x0));
                const GPSpace y(py);
                for_each_relation(px.size(), py.size(), [&](const std::vector<Mask>& rows) {
                    const Relation r = from_rows(rows);
                    const GPFlags f = check_gp_morphism(x, y, r);
                    CHECK(f.gp == oracle::gp_relation(px, x0, py, oracle::full(static_cast<int>(py.size())), rows));
                    CHECK(f.gp == (f.cond1 && f.cond2));
                    if (x.full_x0()) CHECK(gp_closed_form(x, y, r) == f.gp);
                });
            }
}

TEST_CASE("gp relation enumeration matches brute force") {
    const auto ps = poset_catalog(3);
    for (const auto& px : ps)
        for (const auto& py : ps) {
            const GPSpace x(px), y(py);
            const int nx = static_cast<int>(px.size()), ny = static_cast<int>(py.size());
            std::set<std::vector<Mask>> got;
            for (const auto& r : enumerate_gp_relations(x, y)) got.insert(rows_of(r));
            const auto brute = oracle::gp_relations(px, oracle::full(nx), py, oracle::full(ny));
            CHECK(got == std::set<std::vector<Mask>>(brute.begin(), brute.end()));
            CHECK(got.size() == brute.size());
        }
    CHECK(enumerate_gp_relations(GPSpace(antichain_poset(2)), GPSpace(antichain_poset(2))).size() == 16);
}

TEST_CASE("box, identity and pair lists") {
    const GPSpace c(chain_poset(3));
    const Relation id = identity_relation(c);
    CHECK(id.rows[0] == ElementSet{0, 1, 2});
    CHECK(box(id, ElementSet{1, 2}) == ElementSet{1, 2});
    const Relation r = relation_from_pairs(2, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(relation_pairs(r) == std::vector<IndexPair>{{0, 1}, {1, 0}, {1, 2}});
    CHECK(box(r, ElementSet{1}) == ElementSet{0});
    CHECK(box(r, ElementSet{}) == ElementSet{});
}

TEST_CASE("star composition") {
    const auto ps = poset_catalog(2);
    for (const auto& px : ps)
        for (const auto& py : ps)
            for (const auto& pz : ps) {
                const GPSpace x(px), y(py), z(pz);
                const auto rs = enumerate_gp_relations(x, y);
                const auto ss = enumerate_gp_relations(y, z);
                for (const auto& r : rs)
                    for (const auto& s : ss) {
                        const Relation t = compose_star(x, y, z, r, s);
                        CHECK(check_gp_morphism(x, z, t).gp);
                        const auto hr = hom_from_rel(x, y, r), hs = hom_from_rel(y, z, s), ht = hom_from_rel(x, z, t);
                        for (std::size_t u = 0; u < ht.table.size(); ++u) CHECK(ht.table[u] == hr.table[hs.table[u]]);
                        if (check_gp_morphism(x, y, r).functional && check_gp_morphism(y, z, s).functional)
                            CHECK(rows_of(t) == compose_sets(rows_of(r), rows_of(s)));
                    }
                if (!rs.empty()) {
                    CHECK(compose_star(x, y, y, rs[0], identity_relation(y)) == rs[0]);
                    CHECK(compose_star(x, x, y, identity_relation(x), rs[0]) == rs[0]);
                }
            }
    const GPSpace a(antichain_poset(2)), b(chain_poset(3));
    CHECK(code_of([&] { compose_star(a, a, a, identity_relation(b), identity_relation(a)); }) ==
          ErrorCode::CompositionMismatch);
}

TEST_CASE("relation of the collapse hom") {
    const auto d = make_diamond();
    const auto c2 = make_chain(2);
    const auto hr = rel_from_hom(d, c2, {0, 0, 0, 1});
    CHECK(relation_pairs(hr.rel) == std::vector<IndexPair>{{0, 0}, {0, 1}});
    const GPFlags f = check_gp_morphism(hr.source, hr.target, hr.rel);
    CHECK(f.gp);
    CHECK(f.total);
    CHECK_FALSE(f.functional);
    const auto back = hom_from_rel(hr.source, hr.target, hr.rel);
    CHECK(back.table == TotalMap{0, 0, 0, 1});
    CHECK(code_of([&] { rel_from_hom(d, c2, {0, 0, 0, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("strong maps match monotone maps with the back condition") {
    const auto ps = poset_catalog(3);
    for (const auto& px : ps)
        for (const auto& py : ps) {
            const GPSpace x(px), y(py);
            const int nx = static_cast<int>(px.size()), ny = static_cast<int>(py.size());
            const auto mono = oracle::maps_where(nx, ny, [&](const std::vector<int>& f) { return is_monotone(px, py, f); });
            CHECK(enumerate_strong(x, y, StrongKind::Priestley) == mono);
            std::vector<TotalMap> esakia;
            for (const auto& f : mono) {
                bool ok = true;
                for (int a = 0; a < nx; ++a)
                    for (int t = 0; t < ny; ++t) {
                        if (!py.le(f[a], t)) continue;
                        bool found = false;
                        for (int z = 0; z < nx; ++z) found = found || (px.le(a, z) && f[z] == t);
                        ok = ok && found;
                    }
                if (ok) esakia.push_back(f);
            }
            CHECK(enumerate_strong(x, y, StrongKind::Esakia) == esakia);
            for (const auto& f : mono) {
                const Relation r = rel_from_strong(x, y, f);
                CHECK(check_gp_morphism(x, y, r).functional);
                CHECK(strong_from_functional(x, y, r) == f);
            }
        }
    const GPSpace a(antichain_poset(2));
    CHECK(code_of([&] { strong_from_functional(a, a, relation_from_pairs(2, {{0, 0}, {0, 1}, {1, 1}})); }) ==
          ErrorCode::NotFunctional);
}

TEST_CASE("transfer on the collapse and the identity") {
    const auto d = make_diamond();
    const auto t = transfer_one_one_onto(d, make_chain(2), {0, 0, 0, 1});
    CHECK_FALSE(t.h_injective);
    CHECK(t.h_surjective);
    CHECK_FALSE(t.r_onto);
    CHECK(t.r_one_one);
    const auto id = transfer_one_one_onto(d, d, {0, 1, 2, 3});
    CHECK(id.h_injective);
    CHECK(id.r_onto);
    CHECK(id.r_one_one);
}

TEST_CASE("modal frames on discrete spaces") {
    const auto a = antichain_poset(3);
    const Relation r = relation_from_pairs(3, {{0, 1}, {1, 2}, {2, 2}});
    const auto rep = modal_frame_check(a, r);
    CHECK(rep.ok);
    CHECK(rep.box_table.size() == 8);
    CHECK(rep.box_table[0] == ElementSet{});
    CHECK(rep.box_table[7] == ElementSet{0, 1, 2});
    CHECK(code_of([] { modal_frame_check(chain_poset(2), Relation{{ElementSet{}, ElementSet{}}}); }) ==
          ErrorCode::NotDiscrete);
}

TEST_CASE("category laws on two-point spaces") {
    std::vector<GPSpace> spaces;
    for (const auto& p : poset_catalog(2)) spaces.emplace_back(p);
    const auto rep = check_category_laws(spaces);
    CHECK(rep.ok());
    CHECK(rep.spaces == 3);
    CHECK(rep.failure.empty());
}

TEST_CASE("constructors reject non-gp relations") {
    const GPSpace x(chain_poset(2));
    const GPSpace y(antichain_poset(1));
    const Relation bad = relation_from_pairs(2, {{1, 0}});
    CHECK_FALSE(check_gp_morphism(x, y, bad).cond2);
    CHECK(code_of([&] { hom_from_rel(x, y, bad); }) == ErrorCode::NotGPMorphism);
    CHECK(code_of([&] { compose_star(x, y, y, bad, identity_relation(y)); }) == ErrorCode::NotGPMorphism);
    CHECK(code_of([&] { strong_from_functional(x, y, bad); }) == ErrorCode::NotGPMorphism);
    CHECK(code_of([&] { hom_from_rel(x, y, Relation{{ElementSet{}}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("one-one implies its pointwise form, and they agree on small spaces") {
    const auto ps = poset_catalog(3);
    for (const auto& px : ps)
        for (const auto& py : ps) {
            const GPSpace x(px), y(py);
            const auto xs = oracle::admissible(px, oracle::full(static_cast<int>(px.size())));
            for (const auto& rel : enumerate_gp_relations(x, y)) {
                const auto rows = rows_of(rel);
                bool pointwise = true;
                for (std::size_t a = 0; a < px.size(); ++a)
                    for (std::size_t b = 0; b < px.size(); ++b)
                        if (!px.le(a, b) && (rows[b] & ~rows[a]) == 0) pointwise = false;
                for (Mask u : xs) {
                    Mask ru = 0;
                    for (std::size_t a = 0; a < px.size(); ++a)
                        if (oracle::has(u, static_cast<int>(a))) ru |= rows[a];
                    for (std::size_t a = 0; a < px.size(); ++a)
                        if (!oracle::has(u, static_cast<int>(a)) && (rows[a] & ~ru) == 0) pointwise = false;
                }
                CHECK(one_one_pointwise(x, y, rel) == pointwise);
                if (check_gp_morphism(x, y, rel).one_one) CHECK(pointwise);
                CHECK(check_gp_morphism(x, y, rel).one_one == pointwise);
            }
        }
    const GPSpace a2(antichain_poset(2));
    CHECK_FALSE(one_one_pointwise(a2, a2, Relation{{ElementSet{}, ElementSet{}}}));
    CHECK(one_one_pointwise(a2, a2, identity_relation(a2)));
}
