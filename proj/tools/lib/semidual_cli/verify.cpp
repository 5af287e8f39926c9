#include "semidual_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "semidual/catalog.hpp"
#include "semidual/envelope.hpp"
#include "semidual_cli/commands.hpp"

namespace semidual::cli {

bool SuiteReport::pass() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.pass; });
}

std::size_t SuiteReport::instances() const {
    std::size_t n = 0;
    for (const auto& l : laws) n += l.checked;
    return n;
}

json to_json(const LawResult& r) {
    json j = json::object();
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["checked"] = r.checked;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    return j;
}

json to_json(const SuiteReport& r, bool timing) {
    json j = json::object();
    j["kind"] = "verify-report";
    j["suite"] = r.suite;
    j["max_size"] = r.max_size;
    j["seed"] = r.seed;
    j["pass"] = r.pass();
    j["instances"] = r.instances();
    json laws = json::array();
    for (const auto& l : r.laws) laws.push_back(to_json(l));
    j["laws"] = std::move(laws);
    if (timing) j["wall_ms"] = static_cast<std::int64_t>(r.wall_seconds * 1000);
    return j;
}

namespace {

struct LawFailure {
    std::string msg;
};

void check(bool ok, const std::string& msg) {
    if (!ok) throw LawFailure{msg};
}

template <class F>
LawResult run_law(std::string name, F&& body) {
    LawResult r;
    r.name = std::move(name);
    json current = nullptr;
    try {
        body(r, current);
    } catch (const LawFailure& f) {
        r.pass = false;
        r.detail = f.msg;
        r.counterexample = current;
    } catch (const Error& e) {
        r.pass = false;
        r.detail = std::string(to_string(e.code())) + ": " + e.what();
        r.counterexample = current;
    }
    return r;
}

using Key = std::vector<std::uint64_t>;

Key key(const Relation& r) {
    Key k;
    for (const auto& row : r.rows) k.push_back(row.word(0));
    return k;
}

template <class It, class F>
std::set<Key> keys(It first, It last, F&& to_rel) {
    std::set<Key> out;
    for (; first != last; ++first) out.insert(key(to_rel(*first)));
    return out;
}

std::vector<MeetSemilattice> lattices(std::size_t max) { return distributive_lattice_catalog(max, 2); }

json pair_json(const MeetSemilattice& l, const MeetSemilattice& k) {
    json j = json::object();
    j["source"] = emit(algebra_document(l));
    j["target"] = emit(algebra_document(k));
    return j;
}

json space_pair_json(const GPSpace& x, const GPSpace& y) {
    json j = json::object();
    j["source"] = emit(space_document(x));
    j["target"] = emit(space_document(y));
    return j;
}

// h_R carried back along phi to a map L -> K.
TotalMap pull_back(const PhiIso& pl, const PhiIso& pk, const RelationHom& rh) {
    TotalMap inv(pk.algebra.size(), -1);
    for (std::size_t b = 0; b < pk.table.size(); ++b) inv[pk.table[b]] = static_cast<int>(b);
    TotalMap h(pl.table.size(), -1);
    for (std::size_t a = 0; a < pl.table.size(); ++a) {
        int u = rh.source.poset().require(pl.algebra.name(pl.table[a]));
        int w = pk.algebra.poset().require(rh.target.name(rh.table[u]));
        h[a] = inv[w];
        check(h[a] >= 0, "h_R leaves the image of phi");
    }
    return h;
}

std::vector<PhiIso> phis_of(const std::vector<MeetSemilattice>& ls) {
    std::vector<PhiIso> out;
    for (const auto& l : ls) out.push_back(phi_iso(l));
    return out;
}

std::vector<ElementSet> members(const std::vector<ClassifiedSet>& v) {
    std::vector<ElementSet> out;
    for (const auto& c : v) out.push_back(c.members);
    return out;
}

// Every partial map X -> Y, including non-monotone ones.
template <class F>
void for_each_partial(std::size_t nx, std::size_t ny, F&& f) {
    std::vector<int> v(nx, -1);
    while (true) {
        PartialFn p;
        p.map = v;
        for (std::size_t i = 0; i < nx; ++i)
            if (v[i] >= 0) p.dom.insert(i);
        f(p);
        std::size_t i = 0;
        while (i < nx && v[i] == static_cast<int>(ny) - 1) v[i++] = -1;
        if (i == nx) return;
        ++v[i];
    }
}

} // namespace

LawResult law_round_trips(std::size_t max_lattice) {
    return run_law("representation round trips", [&](LawResult& r, json& cur) {
        for (const auto& l : lattices(max_lattice)) {
            cur = emit(algebra_document(l));
            const PhiIso phi = phi_iso(l);
            const PsiIso psi = psi_iso(phi.space);
            check(find_isomorphism(dual_algebra(dual_space(l)).poset(), l.poset()).has_value(),
                  "dual algebra of the dual space is not isomorphic to L");
            check(psi.algebra.poset() == phi.algebra.poset(), "phi and psi see different dual algebras");
            // psi after phi is the identity up to renaming: x = up(g) lands on the point generated by phi(g).
            const auto& pts = phi.space.poset();
            for (std::size_t x = 0; x < pts.size(); ++x) {
                const std::string& gname = psi.dual.poset().name(psi.table[x]);
                int k = phi.algebra.poset().require(gname);
                auto it = std::find(phi.table.begin(), phi.table.end(), k);
                check(it != phi.table.end(), "psi lands outside the image of phi");
                check(l.name(static_cast<int>(it - phi.table.begin())) == pts.name(x),
                      "psi o phi moves point " + pts.name(x));
            }
            ++r.checked;
        }
        for (const auto& p : poset_catalog(std::min<std::size_t>(max_lattice, 4))) {
            const GPSpace s(p);
            cur = emit(space_document(s));
            psi_iso(s);
            const GPSpace back = dual_space(dual_algebra(s));
            check(find_isomorphism(back.poset(), s.poset()).has_value() && back.full_x0(),
                  "dual space of the dual algebra is not isomorphic to X");
            ++r.checked;
        }
    });
}

LawResult law_hom_relation_bijection(std::size_t max_lattice) {
    return run_law("hom/relation bijection", [&](LawResult& r, json& cur) {
        const auto ls = lattices(max_lattice);
        const auto phis = phis_of(ls);
        std::size_t total = 0;
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = 0; j < ls.size(); ++j) {
                const auto &l = ls[i], &k = ls[j];
                cur = pair_json(l, k);
                const GPSpace &x = phis[j].space, &y = phis[i].space;
                const auto homs = enumerate_homs(l, k, HomKind::MeetTop);
                const auto rels = enumerate_gp_relations(x, y);
                check(homs.size() == rels.size(), "counts differ: " + std::to_string(homs.size()) + " homs, " +
                                                      std::to_string(rels.size()) + " relations");
                const auto rel_keys = keys(rels.begin(), rels.end(), [](const Relation& q) { return q; });
                std::set<Key> images;
                for (const auto& h : homs) {
                    const HomRelation hr = rel_from_hom(l, k, h.table);
                    check(hr.source == x && hr.target == y, "R_h has the wrong endpoints");
                    check(rel_keys.count(key(hr.rel)) == 1, "R_h is not among the gp relations");
                    images.insert(key(hr.rel));
                }
                check(images.size() == homs.size(), "h -> R_h is not injective");
                for (const auto& rel : rels) {
                    const TotalMap h = pull_back(phis[i], phis[j], hom_from_rel(x, y, rel));
                    check(check_hom(l, k, h, HomKind::MeetTop), "h_R is not a meet-top hom");
                    check(rel_from_hom(l, k, h).rel == rel, "R_{h_R} differs from R");
                }
                total += homs.size();
                ++r.checked;
            }
        r.detail = std::to_string(total) + " hom/relation pairs";
    });
}

LawResult law_refinements(std::size_t max_lattice) {
    return run_law("refinement dualities", [&](LawResult& r, json& cur) {
        const auto ls = lattices(max_lattice);
        const auto phis = phis_of(ls);
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = 0; j < ls.size(); ++j) {
                const auto &l = ls[i], &k = ls[j];
                cur = pair_json(l, k);
                const GPSpace &x = phis[j].space, &y = phis[i].space;
                std::set<Key> total, functional;
                for (const auto& rel : enumerate_gp_relations(x, y)) {
                    const GPFlags f = check_gp_morphism(x, y, rel);
                    const TotalMap h = pull_back(phis[i], phis[j], hom_from_rel(x, y, rel));
                    if (f.total) {
                        total.insert(key(rel));
                        check(check_hom(l, k, h, HomKind::Bounded), "total relation gives an unbounded hom");
                    }
                    if (f.functional) {
                        functional.insert(key(rel));
                        check(check_hom(l, k, h, HomKind::Sup), "functional relation gives a non-sup hom");
                        check(rel_from_strong(x, y, strong_from_functional(x, y, rel)) == rel,
                              "functional relation does not survive the strong-map round trip");
                    }
                }
                const auto to_rel = [&](const SemilatticeHom& h) { return rel_from_hom(l, k, h.table).rel; };
                const auto bounded = enumerate_homs(l, k, HomKind::Bounded);
                const auto sup = enumerate_homs(l, k, HomKind::Sup);
                check(keys(bounded.begin(), bounded.end(), to_rel) == total && bounded.size() == total.size(),
                      "bounded homs do not match total relations");
                check(keys(sup.begin(), sup.end(), to_rel) == functional && sup.size() == functional.size(),
                      "sup homs do not match functional relations");
                const auto strong = enumerate_strong(x, y, StrongKind::Priestley);
                const auto strong_rel = [&](const TotalMap& f) { return rel_from_strong(x, y, f); };
                check(strong.size() == functional.size() && keys(strong.begin(), strong.end(), strong_rel) == functional,
                      "strong maps do not match functional relations");
                for (const auto& f : strong)
                    check(strong_from_functional(x, y, rel_from_strong(x, y, f)) == f,
                          "strong map does not survive the relation round trip");
                ++r.checked;
            }
    });
}

LawResult law_transfer(std::size_t max_lattice) {
    return run_law("1-1/onto transfer", [&](LawResult& r, json& cur) {
        const auto ls = lattices(max_lattice);
        for (const auto& l : ls)
            for (const auto& k : ls) {
                cur = pair_json(l, k);
                for (const auto& h : enumerate_homs(l, k, HomKind::MeetTop)) {
                    const TransferReport t = transfer_one_one_onto(l, k, h.table);
                    check(t.h_injective == is_injective(h.table) && t.h_surjective == is_surjective(h.table, k.size()),
                          "transfer report misreads h");
                    check(t.h_injective == t.r_onto, "h injective does not match R_h onto");
                    check(t.h_surjective == t.r_one_one, "h surjective does not match R_h one-one");
                    check(t.hr_injective == t.h_injective && t.hr_surjective == t.h_surjective,
                          "h_R disagrees with h");
                    ++r.checked;
                }
            }
    });
}

LawResult law_esakia_layer(std::size_t max_algebra, std::size_t max_points) {
    return run_law("esakia/kohler layer", [&](LawResult& r, json& cur) {
        const auto ls = lattices(max_algebra);
        const auto phis = phis_of(ls);
        for (const auto& l : ls) check(l.is_heyting(), "catalog lattice is not Heyting");
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = 0; j < ls.size(); ++j) {
                const auto &l = ls[i], &k = ls[j];
                cur = pair_json(l, k);
                const GPSpace &x = phis[j].space, &y = phis[i].space;
                std::set<Key> esakia;
                for (const auto& rel : enumerate_gp_relations(x, y)) {
                    if (!check_gp_morphism(x, y, rel).esakia) continue;
                    esakia.insert(key(rel));
                    const TotalMap h = pull_back(phis[i], phis[j], hom_from_rel(x, y, rel));
                    check(check_hom(l, k, h, HomKind::Implicative), "Esakia relation gives a non-implicative hom");
                    check(rel_from_partial(x, y, partial_from_rel(x, y, rel)) == rel,
                          "R_(f_R) differs from R");
                }
                const auto to_rel = [&](const SemilatticeHom& h) { return rel_from_hom(l, k, h.table).rel; };
                const auto impl = enumerate_homs(l, k, HomKind::Implicative);
                check(impl.size() == esakia.size() && keys(impl.begin(), impl.end(), to_rel) == esakia,
                      "implicative homs do not match Esakia relations");
                const auto pe = enumerate_partial(x, y, PartialKind::Esakia);
                const auto part_rel = [&](const PartialFn& f) { return rel_from_partial(x, y, f); };
                check(pe.size() == esakia.size() && keys(pe.begin(), pe.end(), part_rel) == esakia,
                      "partial Esakia functions do not match Esakia relations");
                for (const auto& f : pe)
                    check(partial_from_rel(x, y, rel_from_partial(x, y, f)) == f, "f_(R_f) differs from f");
                check(enumerate_partial(x, y, PartialKind::Kohler) == pe, "Kohler and Esakia partial maps differ");

                const auto hh = enumerate_homs(l, k, HomKind::Heyting);
                const auto ph = enumerate_partial(x, y, PartialKind::Heyting);
                const auto em = enumerate_strong(x, y, StrongKind::Esakia);
                const auto strong_rel = [&](const TotalMap& g) { return rel_from_strong(x, y, g); };
                const auto hk = keys(hh.begin(), hh.end(), to_rel);
                check(hh.size() == ph.size() && ph.size() == em.size(), "Heyting layer counts differ");
                check(keys(ph.begin(), ph.end(), part_rel) == hk && keys(em.begin(), em.end(), strong_rel) == hk,
                      "Heyting homs, partial Heyting functions and Esakia morphisms disagree");
                for (const auto& g : em) {
                    const PartialFn f = partial_from_esakia_fn(x, y, g);
                    check(std::find(ph.begin(), ph.end(), f) != ph.end(), "f_g is not partial Heyting");
                    check(esakia_fn_from_partial(x, y, f) == g, "g_(f_g) differs from g");
                }
                for (const auto& f : ph) {
                    const TotalMap g = esakia_fn_from_partial(x, y, f);
                    check(std::find(em.begin(), em.end(), g) != em.end(), "g_f is not an Esakia morphism");
                    check(partial_from_esakia_fn(x, y, g) == f, "f_(g_f) differs from f");
                }
                ++r.checked;
            }
        const auto ps = poset_catalog(max_points);
        std::size_t maps = 0;
        for (const auto& px : ps)
            for (const auto& py : ps) {
                const GPSpace x(px), y(py);
                cur = space_pair_json(x, y);
                for_each_partial(x.size(), y.size(), [&](const PartialFn& f) {
                    const PartialFlags fl = check_partial(x, y, f);
                    check(fl.esakia == fl.kohler, "partial Esakia and partial Kohler disagree");
                    ++maps;
                });
                ++r.checked;
            }
        r.detail = std::to_string(maps) + " partial maps compared";
    });
}

LawResult law_category(std::size_t max_points) {
    return run_law("category laws", [&](LawResult& r, json& cur) {
        std::vector<GPSpace> spaces;
        json list = json::array();
        for (const auto& p : poset_catalog(max_points)) {
            spaces.emplace_back(p);
            list.push_back(emit(space_document(spaces.back())));
        }
        cur = std::move(list);
        const CategoryReport rep = check_category_laws(spaces);
        check(rep.identities, "identity law: " + rep.failure);
        check(rep.associative, "associativity: " + rep.failure);
        check(rep.box_law, "box law: " + rep.failure);
        check(rep.functional_law, "functional composition: " + rep.failure);
        r.checked = rep.triples;
        r.detail = std::to_string(rep.spaces) + " spaces, " + std::to_string(rep.relations) + " relations, " +
                   std::to_string(rep.compositions) + " compositions";
    });
}

LawResult law_collapse(std::size_t max_size) {
    return run_law("finite collapse", [&](LawResult& r, json& cur) {
        for (const auto& l : semilattice_catalog(max_size)) {
            if (!l.is_distributive()) continue;
            cur = emit(algebra_document(l));
            check(l.has_top() && l.is_lattice(), "distributive semi-lattice without top");
            check(members(enumerate_filters(l, FilterKind::Optimal)) == members(enumerate_filters(l, FilterKind::Prime)),
                  "an optimal filter is not prime");
            check(members(enumerate_ideals(l, IdealKind::Frink)) == members(enumerate_ideals(l, IdealKind::All)),
                  "an F-ideal is not an ideal");
            check(find_isomorphism(sigma_lattice(l).as_poset(), l.poset()).has_value(),
                  "envelope is not isomorphic to L");
            if (l.size() >= 2) check(dual_space(l).full_x0(), "dual space has X0 != X");
            ++r.checked;
        }
    });
}

LawResult law_frink(std::size_t max_size) {
    return run_law("frink ideals", [&](LawResult& r, json& cur) {
        const MeetSemilattice v3 = make_v3();
        cur = emit(algebra_document(v3));
        const auto ideals = members(enumerate_ideals(v3, IdealKind::All));
        const auto frink = members(enumerate_ideals(v3, IdealKind::Frink));
        check(ideals.size() == 3, "V3 has " + std::to_string(ideals.size()) + " ideals");
        check(frink.size() == 4, "V3 has " + std::to_string(frink.size()) + " F-ideals");
        std::vector<ElementSet> extra;
        for (const auto& f : frink)
            if (std::find(ideals.begin(), ideals.end(), f) == ideals.end()) extra.push_back(f);
        check(extra.size() == 1 && extra[0] == v3.poset().all(), "the extra F-ideal of V3 is not V3");
        ++r.checked;

        for (const auto& l : semilattice_catalog(max_size)) {
            cur = emit(algebra_document(l));
            const std::size_t n = l.size();
            std::vector<ElementSet> scan;
            for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
                ElementSet s;
                for (std::size_t i = 0; i < n; ++i)
                    if (m >> i & 1) s.insert(i);
                if (is_frink_ideal(l, s)) scan.push_back(s);
            }
            for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
                ElementSet s;
                for (std::size_t i = 0; i < n; ++i)
                    if (m >> i & 1) s.insert(i);
                ElementSet oracle = l.poset().all();
                for (const auto& f : scan)
                    if (s.subset_of(f)) oracle &= f;
                check(frink_ideal_generated(l, s) == oracle,
                      "generated F-ideal of " + l.poset().set_name(s) + " differs from the intersection");
                ++r.checked;
            }
        }
    });
}

LawResult law_separation(std::size_t max_size) {
    return run_law("separation lemmas", [&](LawResult& r, json& cur) {
        for (const auto& l : semilattice_catalog(max_size)) {
            if (!l.is_distributive()) continue;
            cur = emit(algebra_document(l));
            const auto filters = members(enumerate_filters(l, FilterKind::All));
            const auto ideals = members(enumerate_ideals(l, IdealKind::All));
            const auto frink = members(enumerate_ideals(l, IdealKind::Frink));
            for (const auto& f : filters) {
                for (const auto& i : ideals) {
                    if (f.intersects(i)) continue;
                    const ElementSet p = separate_prime(l, f, i).members;
                    check(is_prime_filter(l, p) && f.subset_of(p) && !p.intersects(i),
                          "separate_prime witness fails for " + l.poset().set_name(f) + ", " + l.poset().set_name(i));
                    ++r.checked;
                }
                for (const auto& i : frink) {
                    if (f.intersects(i)) continue;
                    const ElementSet p = separate_optimal(l, f, i).members;
                    check(is_optimal_filter(l, p) && f.subset_of(p) && !p.intersects(i),
                          "separate_optimal witness fails for " + l.poset().set_name(f) + ", " +
                              l.poset().set_name(i));
                    ++r.checked;
                }
            }
        }
    });
}

LawResult law_worked_examples() {
    return run_law("worked examples", [&](LawResult& r, json& cur) {
        const MeetSemilattice d4(
            FinitePoset::build({"0", "y", "z", "1"}, std::vector<NamePair>{{"0", "y"}, {"0", "z"}, {"y", "1"}, {"z", "1"}}));
        const MeetSemilattice c2(FinitePoset::build({"0", "x"}, std::vector<NamePair>{{"0", "x"}}));
        const TotalMap collapse{0, 0, 0, 1};
        const Document hom = hom_document(HomKind::MeetTop, d4, c2, collapse);
        cur = emit(hom);
        const json rel = cmd_hom2rel(hom);
        check(rel.at("pairs").dump() == R"([["x","y"],["x","z"]])", "hom2rel gave " + rel.at("pairs").dump());
        const Document rd = parse_json(rel);
        const GPFlags f = check_gp_morphism(as_space(*rd.source), as_space(*rd.target), rd.relation);
        check(f.gp && f.total && !f.functional, "collapse relation flags are wrong");
        const json back = cmd_rel2hom(rd);
        check(back.at("map").dump() == R"({"{}":"{}","{y}":"{}","{z}":"{}","{y,z}":"{x}"})",
              "rel2hom gave " + back.at("map").dump());
        const RelationHom rh = hom_from_rel(as_space(*rd.source), as_space(*rd.target), rd.relation);
        check(pull_back(phi_iso(d4), phi_iso(c2), rh) == collapse, "rel2hom is not the collapse hom");
        ++r.checked;

        const GPSpace x(FinitePoset::build({"x", "b"}, std::vector<NamePair>{{"x", "b"}}));
        const GPSpace y(FinitePoset::build({"y"}, std::vector<NamePair>{}));
        const Relation rf = relation_from_pairs(2, {{0, 0}, {1, 0}});
        const Document rdoc = relation_document(x, y, rf);
        cur = emit(rdoc);
        const json fn = cmd_rel2fn(rdoc);
        check(fn.at("dom").dump() == R"(["b"])" && fn.at("map").dump() == R"({"b":"y"})",
              "rel2fn gave " + fn.dump());
        const json rel2 = cmd_fn2rel(parse_json(fn));
        check(rel2.at("pairs").dump() == R"([["x","y"],["b","y"]])", "fn2rel gave " + rel2.at("pairs").dump());
        const PartialFn f8 = partial_from_rel(x, y, rf);
        const PartialFn id = make_partial(1, {{0, 0}});
        check(compose_partial(x, y, y, f8, id) == f8, "composing with the identity changes f");
        ++r.checked;
    });
}

LawResult law_dual_descriptions(std::size_t max_lattice) {
    return run_law("dual descriptions", [&](LawResult& r, json& cur) {
        for (const auto& l : lattices(max_lattice)) {
            cur = emit(algebra_document(l));
            const GPSpace s = dual_space(l);
            const DualDescriptions d = dual_descriptions(l);
            check(d.filters.size() == enumerate_filters(l, FilterKind::All).size(), "filter table size");
            check(d.frink_ideals.size() == enumerate_ideals(l, IdealKind::Frink).size(), "F-ideal table size");
            check(d.ideals.size() == enumerate_ideals(l, IdealKind::All).size(), "ideal table size");
            check(d.prime_filters.size() == enumerate_filters(l, FilterKind::Prime).size() &&
                      d.prime_filters.size() == s.x0().count(),
                  "prime filter table size");
            check(d.prime_ideals.size() == enumerate_ideals(l, IdealKind::Prime).size() &&
                      d.prime_ideals.size() == s.x0().count(),
                  "prime ideal table size");
            const auto all = s.poset().all();
            for (const auto* table : {&d.filters, &d.frink_ideals, &d.ideals, &d.prime_filters, &d.prime_ideals}) {
                std::set<Key> seen;
                for (const auto& p : *table) seen.insert({p.space_side.word(0), 0});
                check(seen.size() == table->size(), "a correspondence table is not injective");
            }
            ElementSet hit;
            for (const auto& p : d.prime_filters) {
                bool found = false;
                s.x0().for_each([&](int x) {
                    if (p.space_side == s.poset().up(x)) {
                        found = true;
                        hit.insert(x);
                    }
                });
                check(found, "a prime filter does not land on up(x)");
            }
            check(hit == s.x0(), "prime filters miss a point");
            for (const auto& p : d.prime_ideals) {
                bool found = false;
                s.x0().for_each([&](int x) { found = found || p.space_side == all - s.poset().down(x); });
                check(found, "a prime ideal does not land on the complement of down(x)");
            }
            ++r.checked;
        }
    });
}

LawResult law_negative_fixtures() {
    return run_law("negative fixtures", [&](LawResult& r, json& cur) {
        const GPSpace lenient(chain_poset(2), ElementSet{1});
        cur = emit(space_document(lenient));
        const GPSReport rep = check_gps(lenient, SpaceMode::Lenient);
        check(rep.conditions[4] == CondState::Fail && !rep.ok, "lenient chain passes condition (5)");
        check(!check_gps(lenient, SpaceMode::Strict).ok, "lenient chain passes strict checking");
        ++r.checked;

        const GPSpace x(chain_poset(2));
        const GPSpace y(FinitePoset::build({"y"}, std::vector<NamePair>{}));
        const Relation bad = relation_from_pairs(2, {{1, 0}});
        const Document doc = relation_document(x, y, bad);
        cur = emit(doc);
        const GPFlags f = check_gp_morphism(x, y, bad);
        check(f.cond1 && !f.cond2 && !f.gp, "bad relation flags are wrong");
        const auto rejects = [&](const char* what, auto&& call) {
            try {
                call();
            } catch (const Error& e) {
                check(e.code() == ErrorCode::NotGPMorphism,
                      std::string(what) + " threw " + to_string(e.code()));
                ++r.checked;
                return;
            }
            throw LawFailure{std::string(what) + " accepted the relation"};
        };
        rejects("hom_from_rel", [&] { hom_from_rel(x, y, bad); });
        rejects("compose_star (first)", [&] { compose_star(x, y, y, bad, identity_relation(y)); });
        rejects("compose_star (second)", [&] { compose_star(x, x, y, identity_relation(x), bad); });
        rejects("strong_from_functional", [&] { strong_from_functional(x, y, bad); });
        rejects("partial_from_rel", [&] { partial_from_rel(x, y, bad); });
        rejects("rel2hom", [&] { cmd_rel2hom(doc); });
        rejects("rel2fn", [&] { cmd_rel2fn(doc); });
    });
}

LawResult law_envelope(std::size_t max_size) {
    return run_law("distributive envelope", [&](LawResult& r, json& cur) {
        std::size_t non_injective = 0;
        for (const auto& l : semilattice_catalog(max_size)) {
            cur = emit(algebra_document(l));
            const SigmaLattice s = sigma_lattice(l);
            check(s.sigma[l.bottom()].empty(), "sigma(bottom) is not empty");
            if (l.has_top()) check(s.sigma[*l.top()] == ElementSet::full(s.points.size()), "sigma(top) misses a point");
            for (std::size_t a = 0; a < l.size(); ++a)
                for (std::size_t b = 0; b < l.size(); ++b)
                    check(s.sigma[l.meet(a, b)] == (s.sigma[a] & s.sigma[b]), "sigma does not preserve meets");
            if (l.is_distributive()) {
                check(ideal_correspondence(l).size() == enumerate_ideals(l, IdealKind::Frink).size(),
                      "ideal correspondence size");
                check(optimal_prime_correspondence(l).size() == enumerate_filters(l, FilterKind::Optimal).size(),
                      "optimal/prime correspondence size");
                check(s.injective, "sigma is not injective on a distributive input");
            }
            if (!s.injective) ++non_injective;
            ++r.checked;
        }
        const auto small = lattices(std::min<std::size_t>(max_size, 4));
        for (const auto& l : small) {
            cur = emit(algebra_document(l));
            const SigmaLattice s = sigma_lattice(l);
            TotalMap e(l.size());
            for (std::size_t a = 0; a < l.size(); ++a) e[a] = s.index_of(s.sigma[a]);
            const UniversalReport u = check_universal_property(l, s.as_lattice(), e, std::min<std::size_t>(max_size, 5));
            check(u.holds, "universal property fails: " + u.counter_reason);
            ++r.checked;
        }
        for (const auto& a : small)
            for (const auto& b : small)
                for (const auto& c : small) {
                    json j = json::object();
                    j["first"] = emit(algebra_document(a));
                    j["second"] = emit(algebra_document(b));
                    j["third"] = emit(algebra_document(c));
                    cur = std::move(j);
                    const auto hs = enumerate_homs(a, b, HomKind::Sup);
                    const auto gs = enumerate_homs(b, c, HomKind::Sup);
                    for (const auto& h : hs)
                        for (const auto& g : gs) {
                            TotalMap gh(a.size());
                            for (std::size_t i = 0; i < a.size(); ++i) gh[i] = g.table[h.table[i]];
                            const LatticeHom dh = extend_sup_hom(a, b, h.table), dg = extend_sup_hom(b, c, g.table);
                            const LatticeHom dgh = extend_sup_hom(a, c, gh);
                            for (std::size_t i = 0; i < dh.table.size(); ++i)
                                check(dgh.table[i] == dg.table[dh.table[i]], "D(g o h) differs from D(g) o D(h)");
                            ++r.checked;
                        }
                }
        r.detail = std::to_string(non_injective) + " non-injective sigma maps";
    });
}

LawResult law_esakia_spaces(std::size_t max_lattice) {
    return run_law("esakia spaces", [&](LawResult& r, json& cur) {
        for (const auto& l : lattices(max_lattice)) {
            cur = emit(algebra_document(l));
            const PhiIso phi = phi_iso(l);
            const GPSpace& s = phi.space;
            const GESReport g = check_ges(s);
            check(g.valid && g.lemma_ok && g.arrow_closed, "dual space is not a generalized Esakia space");
            check(g.max_violations.empty() && g.converse_counterexamples.empty(), "subset scan found a violation");
            const auto& adm = s.admissible();
            for (std::size_t a = 0; a < l.size(); ++a)
                for (std::size_t b = 0; b < l.size(); ++b) {
                    const ElementSet u = heyting_arrow(s, adm[phi.table[a]], adm[phi.table[b]]);
                    check(u == adm[phi.table[l.arrow(a, b)]], "phi does not carry the arrow");
                }
            ++r.checked;
        }
        // Diagnostic: converse of the max condition on every relaxed space that passes its mode.
        std::size_t examined = 0, counterexamples = 0;
        for (const auto& p : poset_catalog(std::min<std::size_t>(max_lattice, 3)))
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
                ElementSet x0;
                for (std::size_t i = 0; i < p.size(); ++i)
                    if (m >> i & 1) x0.insert(i);
                const GPSpace s(p, x0);
                for (SpaceMode mode : {SpaceMode::Star, SpaceMode::Lenient}) {
                    if (!check_gps(s, mode).ok) continue;
                    ++examined;
                    counterexamples += check_ges(s, mode).converse_counterexamples.size();
                }
            }
        r.detail = std::to_string(examined) + " relaxed spaces scanned, " + std::to_string(counterexamples) +
                   " converse counterexamples";
    });
}

LawResult law_one_one_formulations(std::size_t max_points) {
    return run_law("one-one formulations", [&](LawResult& r, json& cur) {
        std::vector<GPSpace> spaces;
        for (const auto& p : poset_catalog(max_points)) spaces.emplace_back(p);
        std::size_t witnesses = 0;
        for (const auto& x : spaces)
            for (const auto& y : spaces)
                for (const auto& rel : enumerate_gp_relations(x, y)) {
                    const bool one_one = check_gp_morphism(x, y, rel).one_one;
                    const bool pointwise = one_one_pointwise(x, y, rel);
                    if (one_one && !pointwise) {
                        cur = emit(relation_document(x, y, rel));
                        check(false, "a one-one relation fails the pointwise conditions");
                    }
                    if (pointwise && !one_one) ++witnesses;
                    ++r.checked;
                }
        r.detail = std::to_string(spaces.size()) + " spaces, " + std::to_string(witnesses) +
                   " pointwise-but-not-one-one witnesses";
    });
}

LawResult law_document_round_trip(std::size_t max_lattice, std::uint64_t seed) {
    return run_law("document round trips", [&](LawResult& r, json& cur) {
        std::mt19937_64 rng(seed);
        const auto ls = lattices(std::min<std::size_t>(max_lattice, 4));
        const auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
        const auto round_trip = [&](const Document& d) {
            cur = emit(d);
            const std::string text = dump(cur);
            const Document back = parse_text(text);
            check(back == d, "parse o emit changed the document");
            check(dump(emit(back)) == text, "emit is not byte-stable");
            ++r.checked;
        };
        for (int probe = 0; probe < 16; ++probe) {
            const auto& l = ls[pick(ls.size())];
            const auto& k = ls[pick(ls.size())];
            round_trip(algebra_document(l));
            const auto homs = enumerate_homs(l, k, HomKind::MeetTop);
            const auto& h = homs[pick(homs.size())];
            const Document hd = hom_document(HomKind::MeetTop, l, k, h.table);
            round_trip(hd);
            const Document rd = parse_json(cmd_hom2rel(hd));
            round_trip(rd);
            check(rd.relation == rel_from_hom(l, k, h.table).rel, "hom2rel disagrees with rel_from_hom");
            round_trip(parse_json(cmd_rel2hom(rd)));
            const GPSpace x = as_space(*rd.source), y = as_space(*rd.target);
            round_trip(space_document(x));
            const auto pe = enumerate_partial(x, y, PartialKind::Esakia);
            if (!pe.empty()) round_trip(partial_document(x, y, pe[pick(pe.size())]));
        }
    });
}

std::size_t count_meet_top_homs_d4() {
    return enumerate_homs(make_diamond(), make_diamond(), HomKind::MeetTop).size();
}

std::size_t count_gp_relations_a2() {
    const GPSpace a2(antichain_poset(2));
    return enumerate_gp_relations(a2, a2).size();
}

std::size_t count_implicative_homs(std::size_t source_chain, std::size_t target_chain) {
    return enumerate_homs(make_chain(source_chain), make_chain(target_chain), HomKind::Implicative).size();
}

std::size_t count_heyting_endos_d4() {
    return enumerate_homs(make_diamond(), make_diamond(), HomKind::Heyting).size();
}

SuiteReport run_suite(const std::string& suite, std::size_t max_size, std::uint64_t seed) {
    if (max_size > 7) fail(ErrorCode::SizeLimitExceeded, "verify is limited to --max-size 7");
    if (max_size < 1) fail(ErrorCode::InvalidArgument, "--max-size must be at least 1");
    const bool all = suite == "all";
    if (!all && suite != "duality" && suite != "esakia" && suite != "envelope" && suite != "frink" && suite != "category")
        fail(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = suite;
    rep.max_size = max_size;
    rep.seed = seed;
    auto& laws = rep.laws;
    if (all || suite == "duality") {
        laws.push_back(law_round_trips(max_size));
        laws.push_back(law_hom_relation_bijection(max_size));
        laws.push_back(law_refinements(max_size));
        laws.push_back(law_transfer(max_size));
        laws.push_back(law_dual_descriptions(max_size));
        laws.push_back(law_worked_examples());
        laws.push_back(law_document_round_trip(max_size, seed));
    }
    if (all || suite == "esakia") {
        laws.push_back(law_esakia_layer(max_size, std::min<std::size_t>(max_size, 4)));
        laws.push_back(law_esakia_spaces(max_size));
    }
    if (all || suite == "envelope") {
        laws.push_back(law_collapse(max_size));
        laws.push_back(law_envelope(max_size));
    }
    if (all || suite == "frink") {
        laws.push_back(law_frink(max_size));
        laws.push_back(law_separation(max_size));
    }
    if (all || suite == "category") {
        laws.push_back(law_category(std::min<std::size_t>(max_size, 3)));
        laws.push_back(law_one_one_formulations(std::min<std::size_t>(max_size, 4)));
        laws.push_back(law_negative_fixtures());
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace semidual::cli
