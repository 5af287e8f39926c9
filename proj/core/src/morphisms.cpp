#include "semidual/morphisms.hpp"

#include <algorithm>
#include <unordered_map>

namespace semidual {

namespace {

ElementSet image(const Relation& r, const ElementSet& a) {
    ElementSet out;
    a.for_each([&](int x) { out |= r.rows[x]; });
    return out;
}

ElementSet preimage(const TotalMap& f, const ElementSet& u) {
    ElementSet out;
    for (std::size_t x = 0; x < f.size(); ++x)
        if (u.contains(f[x])) out.insert(x);
    return out;
}

bool is_principal_up(const FinitePoset& y, const ElementSet& row, int* least_out = nullptr) {
    auto l = y.least(row);
    if (!l || y.up(*l) != row) return false;
    if (least_out) *least_out = *l;
    return true;
}

void require_fits(const GPSpace& x, const GPSpace& y, const Relation& r) {
    if (r.rows.size() != x.size()) fail(ErrorCode::InvalidArgument, "relation rows do not match the source");
    const ElementSet all = y.poset().all();
    for (const auto& row : r.rows)
        if (!row.subset_of(all)) fail(ErrorCode::InvalidArgument, "relation leaves the target");
}

void require_gp(const GPSpace& x, const GPSpace& y, const Relation& r) {
    require_fits(x, y, r);
    if (!check_gp_morphism(x, y, r).gp) fail(ErrorCode::NotGPMorphism, "relation is not a generalized Priestley morphism");
}

Relation set_composition(const Relation& r, const Relation& s) {
    Relation out;
    for (const auto& row : r.rows) out.rows.push_back(image(s, row));
    return out;
}

} // namespace

ElementSet box(const Relation& r, const ElementSet& a) {
    ElementSet out;
    for (std::size_t x = 0; x < r.rows.size(); ++x)
        if (r.rows[x].subset_of(a)) out.insert(x);
    return out;
}

Relation identity_relation(const GPSpace& x) {
    Relation r;
    for (std::size_t i = 0; i < x.size(); ++i) r.rows.push_back(x.poset().up(i));
    return r;
}

std::vector<IndexPair> relation_pairs(const Relation& r) {
    std::vector<IndexPair> out;
    for (std::size_t x = 0; x < r.rows.size(); ++x)
        r.rows[x].for_each([&](int y) { out.emplace_back(static_cast<int>(x), y); });
    return out;
}

Relation relation_from_pairs(std::size_t source_size, const std::vector<IndexPair>& pairs) {
    Relation r;
    r.rows.resize(source_size);
    for (auto [x, y] : pairs) r.rows.at(x).insert(y);
    return r;
}

GPFlags check_gp_morphism(const GPSpace& x, const GPSpace& y, const Relation& r) {
    require_fits(x, y, r);
    GPFlags f;
    const auto& ya = y.admissible();
    const auto& xa = x.admissible();
    const auto& py = y.poset();
    const auto& px = x.poset();

    f.cond1 = true;
    for (std::size_t i = 0; i < x.size() && f.cond1; ++i) {
        const ElementSet missing = py.all() - r.rows[i];
        missing.for_each([&](int j) {
            bool sep = std::any_of(ya.begin(), ya.end(),
                                   [&](const ElementSet& u) { return !u.contains(j) && r.rows[i].subset_of(u); });
            if (!sep) f.cond1 = false;
        });
    }
    f.cond2 = std::all_of(ya.begin(), ya.end(), [&](const ElementSet& u) { return x.is_admissible(box(r, u)); });
    f.gp = f.cond1 && f.cond2;
    f.total = std::none_of(r.rows.begin(), r.rows.end(), [](const ElementSet& row) { return row.empty(); });
    f.functional = std::all_of(r.rows.begin(), r.rows.end(), [&](const ElementSet& row) { return is_principal_up(py, row); });

    f.esakia = true;
    for (std::size_t i = 0; i < x.size() && f.esakia; ++i)
        (r.rows[i] & y.x0()).for_each([&](int j) {
            bool found = false;
            (px.up(i) & x.x0()).for_each([&](int z) {
                if (r.rows[z] == py.up(j)) found = true;
            });
            if (!found) f.esakia = false;
        });

    f.onto = true;
    for (std::size_t j = 0; j < y.size() && f.onto; ++j)
        f.onto = std::any_of(r.rows.begin(), r.rows.end(), [&](const ElementSet& row) { return row == py.up(j); });

    f.one_one = true;
    for (std::size_t i = 0; i < x.size() && f.one_one; ++i)
        for (const auto& u : xa) {
            if (u.contains(i)) continue;
            const ElementSet ru = image(r, u);
            bool found = std::any_of(ya.begin(), ya.end(),
                                     [&](const ElementSet& v) { return ru.subset_of(v) && !r.rows[i].subset_of(v); });
            if (!found) {
                f.one_one = false;
                break;
            }
        }
    return f;
}

bool gp_closed_form(const GPSpace& x, const GPSpace& y, const Relation& r) {
    require_fits(x, y, r);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!y.poset().is_upset(r.rows[i])) return false;
        bool ok = true;
        x.poset().up(i).for_each([&](int j) {
            if (!r.rows[j].subset_of(r.rows[i])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

HomRelation rel_from_hom(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    require_kind(l, k, HomKind::MeetTop);
    if (!check_hom(l, k, h, HomKind::MeetTop))
        fail(ErrorCode::InvalidArgument, "map is not a meet-top homomorphism");
    HomRelation out{dual_space(k), dual_space(l), {}};
    const auto gx = dual_generators(k, out.source);
    const auto gy = dual_generators(l, out.target);
    out.rel.rows.resize(gx.size());
    for (std::size_t i = 0; i < gx.size(); ++i)
        for (std::size_t j = 0; j < gy.size(); ++j) {
            // h^{-1}(up gx) within up gy
            bool inside = true;
            for (std::size_t a = 0; a < l.size() && inside; ++a)
                if (k.le(gx[i], h[a]) && !l.le(gy[j], a)) inside = false;
            if (inside) out.rel.rows[i].insert(j);
        }
    for (std::size_t a = 0; a < l.size(); ++a) {
        ElementSet phil, phik;
        for (std::size_t j = 0; j < gy.size(); ++j)
            if (l.le(gy[j], a)) phil.insert(j);
        for (std::size_t i = 0; i < gx.size(); ++i)
            if (k.le(gx[i], h[a])) phik.insert(i);
        ensure(phik == box(out.rel, phil), "phi(h(a)) equals the box of phi(a)");
    }
    ensure(check_gp_morphism(out.source, out.target, out.rel).gp, "relation of a homomorphism is gp");
    return out;
}

RelationHom hom_from_rel(const GPSpace& x, const GPSpace& y, const Relation& r) {
    require_gp(x, y, r);
    RelationHom out{dual_algebra(y), dual_algebra(x), {}};
    for (const auto& u : y.admissible()) {
        int idx = x.admissible_index(box(r, u));
        ensure(idx >= 0, "box of an admissible upset is admissible");
        out.table.push_back(idx);
    }
    ensure(check_hom(out.source, out.target, out.table, HomKind::MeetTop), "h_R is a meet-top homomorphism");
    return out;
}

Relation compose_star_unchecked(const GPSpace& x, const GPSpace& z, const Relation& r, const Relation& s) {
    const auto& za = z.admissible();
    std::vector<ElementSet> bs;
    bs.reserve(za.size());
    for (const auto& u : za) bs.push_back(box(s, u));
    Relation out;
    out.rows.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        ElementSet row = z.poset().all();
        for (std::size_t k = 0; k < za.size(); ++k)
            if (r.rows[i].subset_of(bs[k])) row &= za[k];
        out.rows.push_back(row);
    }
    return out;
}

Relation compose_star(const GPSpace& x, const GPSpace& y, const GPSpace& z, const Relation& r, const Relation& s) {
    if (r.rows.size() != x.size() || s.rows.size() != y.size())
        fail(ErrorCode::CompositionMismatch, "relations are not composable");
    for (const auto& row : r.rows)
        if (!row.subset_of(y.poset().all())) fail(ErrorCode::CompositionMismatch, "relations are not composable");
    require_gp(x, y, r);
    require_gp(y, z, s);
    Relation out = compose_star_unchecked(x, z, r, s);
    for (const auto& u : z.admissible())
        ensure(box(out, u) == box(r, box(s, u)), "box of S*R equals box_R box_S");
    if (check_gp_morphism(x, y, r).functional && check_gp_morphism(y, z, s).functional)
        ensure(out == set_composition(r, s), "functional composition is set composition");
    return out;
}

std::vector<Relation> enumerate_gp_relations(const GPSpace& x, const GPSpace& y) {
    // Rows satisfying separation are intersections of admissible upsets.
    std::vector<ElementSet> cand = y.admissible();
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            ElementSet m = cand[i] & cand[j];
            if (std::find(cand.begin(), cand.end(), m) == cand.end()) cand.push_back(m);
        }
    sort_canonical(cand);
    std::vector<Relation> out;
    Relation cur;
    cur.rows.resize(x.size());
    const auto& px = x.poset();
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == x.size()) {
            if (check_gp_morphism(x, y, cur).gp) out.push_back(cur);
            return;
        }
        for (const auto& c : cand) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (px.le(j, i) && !c.subset_of(cur.rows[j])) ok = false;
                if (px.le(i, j) && !cur.rows[j].subset_of(c)) ok = false;
            }
            if (!ok) continue;
            cur.rows[i] = c;
            self(self, i + 1);
        }
        cur.rows[i] = ElementSet{};
    };
    rec(rec, 0);
    return out;
}

bool check_strong(const GPSpace& x, const GPSpace& y, const TotalMap& f, StrongKind kind) {
    if (!is_monotone(x.poset(), y.poset(), f)) return false;
    for (const auto& u : y.admissible())
        if (!x.is_admissible(preimage(f, u))) return false;
    if (kind == StrongKind::Esakia) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            bool ok = true;
            (y.poset().up(f[i]) & y.x0()).for_each([&](int t) {
                bool found = false;
                (x.poset().up(i) & x.x0()).for_each([&](int z) {
                    if (f[z] == t) found = true;
                });
                if (!found) ok = false;
            });
            if (!ok) return false;
        }
    }
    return true;
}

TotalMap strong_from_functional(const GPSpace& x, const GPSpace& y, const Relation& r) {
    require_gp(x, y, r);
    if (!check_gp_morphism(x, y, r).functional) fail(ErrorCode::NotFunctional, "relation is not functional");
    TotalMap f;
    for (const auto& row : r.rows) {
        auto l = y.poset().least(row);
        if (!l) fail(ErrorCode::NoLeastElement, "functional row without a least element");
        f.push_back(*l);
    }
    Relation back;
    for (int v : f) back.rows.push_back(y.poset().up(v));
    ensure(back == r, "R^{f^R} = R");
    ensure(check_strong(x, y, f, StrongKind::Priestley), "f^R is a strong Priestley morphism");
    return f;
}

Relation rel_from_strong(const GPSpace& x, const GPSpace& y, const TotalMap& f) {
    if (f.size() != x.size() || !check_strong(x, y, f, StrongKind::Priestley))
        fail(ErrorCode::NotStrong, "map is not a strong Priestley morphism");
    Relation r;
    for (int v : f) r.rows.push_back(y.poset().up(v));
    for (std::size_t i = 0; i < f.size(); ++i) ensure(y.poset().least(r.rows[i]) == f[i], "f^{R^f} = f");
    for (const auto& u : y.admissible()) ensure(box(r, u) == preimage(f, u), "h_{R^f}(U) = f^{-1}(U)");
    return r;
}

std::vector<TotalMap> enumerate_strong(const GPSpace& x, const GPSpace& y, StrongKind kind) {
    std::vector<TotalMap> out;
    TotalMap f(x.size(), -1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == x.size()) {
            if (check_strong(x, y, f, kind)) out.push_back(f);
            return;
        }
        for (std::size_t v = 0; v < y.size(); ++v) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (x.poset().le(j, i) && !y.poset().le(f[j], v)) ok = false;
                if (x.poset().le(i, j) && !y.poset().le(v, f[j])) ok = false;
            }
            if (!ok) continue;
            f[i] = static_cast<int>(v);
            self(self, i + 1);
        }
        f[i] = -1;
    };
    rec(rec, 0);
    return out;
}

bool one_one_pointwise(const GPSpace& x, const GPSpace& y, const Relation& r) {
    require_fits(x, y, r);
    const auto& px = x.poset();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!px.le(i, j) && r.rows[j].subset_of(r.rows[i])) return false;
    for (const auto& u : x.admissible()) {
        const ElementSet ru = image(r, u);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!u.contains(i) && r.rows[i].subset_of(ru)) return false;
    }
    return true;
}

TransferReport transfer_one_one_onto(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    TransferReport t;
    const HomRelation hr = rel_from_hom(l, k, h);
    const GPFlags flags = check_gp_morphism(hr.source, hr.target, hr.rel);
    t.h_injective = is_injective(h);
    t.h_surjective = is_surjective(h, k.size());
    t.r_onto = flags.onto;
    t.r_one_one = flags.one_one;
    ensure(t.h_injective == t.r_onto, "h is 1-1 iff R_h is onto");
    ensure(t.h_surjective == t.r_one_one, "h is onto iff R_h is 1-1");
    const RelationHom back = hom_from_rel(hr.source, hr.target, hr.rel);
    t.hr_injective = is_injective(back.table);
    t.hr_surjective = is_surjective(back.table, back.target.size());
    ensure(t.r_onto == t.hr_injective, "R is onto iff h_R is 1-1");
    ensure(t.r_one_one == t.hr_surjective, "R is 1-1 iff h_R is onto");
    return t;
}

ModalReport modal_frame_check(const FinitePoset& x, const Relation& r) {
    if (!x.is_antichain()) fail(ErrorCode::NotDiscrete, "modal frames need a discrete order");
    if (x.size() > 12) fail(ErrorCode::TooLarge, "modal frame check limited to 12 points");
    const GPSpace s(x);
    ModalReport m;
    m.gp = check_gp_morphism(s, s, r).gp;
    const std::uint64_t total = std::uint64_t{1} << x.size();
    std::vector<ElementSet> subsets;
    for (std::uint64_t k = 0; k < total; ++k) {
        ElementSet a;
        for (std::size_t i = 0; i < x.size(); ++i)
            if ((k >> i) & 1u) a.insert(i);
        subsets.push_back(a);
        m.box_table.push_back(box(r, a));
    }
    m.box_top = m.box_table.back() == x.all();
    m.box_meets = true;
    for (std::uint64_t a = 0; a < total && m.box_meets; ++a)
        for (std::uint64_t b = 0; b < total; ++b)
            if (m.box_table[a & b] != (m.box_table[a] & m.box_table[b])) {
                m.box_meets = false;
                break;
            }
    m.ok = m.rows_closed && m.preimages_clopen && m.gp && m.box_meets && m.box_top;
    return m;
}

namespace {

std::uint64_t encode(const Relation& r, std::size_t width) {
    std::uint64_t code = 0;
    for (std::size_t x = 0; x < r.rows.size(); ++x) code |= r.rows[x].word(0) << (x * width);
    return code;
}

} // namespace

CategoryReport check_category_laws(const std::vector<GPSpace>& spaces) {
    CategoryReport rep;
    const std::size_t n = spaces.size();
    rep.spaces = n;
    for (const auto& s : spaces)
        if (s.size() > 8) fail(ErrorCode::TooLarge, "category sweep limited to 8-point spaces");

    std::vector<std::vector<std::vector<Relation>>> rels(n, std::vector<std::vector<Relation>>(n));
    std::vector<std::vector<std::unordered_map<std::uint64_t, std::uint32_t>>> index(
        n, std::vector<std::unordered_map<std::uint64_t, std::uint32_t>>(n));
    std::vector<std::vector<std::vector<char>>> functional(n, std::vector<std::vector<char>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rels[i][j] = enumerate_gp_relations(spaces[i], spaces[j]);
            rep.relations += rels[i][j].size();
            for (std::uint32_t k = 0; k < rels[i][j].size(); ++k) {
                index[i][j].emplace(encode(rels[i][j][k], spaces[j].size()), k);
                functional[i][j].push_back(check_gp_morphism(spaces[i], spaces[j], rels[i][j][k]).functional);
            }
        }

    // comp[(i,j,k)][r * |R(j,k)| + s] = index of S*R in R(i,k)
    std::vector<std::vector<std::uint32_t>> comp(n * n * n);
    auto cid = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto& rij = rels[i][j];
                const auto& rjk = rels[j][k];
                auto& table = comp[cid(i, j, k)];
                table.resize(rij.size() * rjk.size());
                const auto& za = spaces[k].admissible();
                for (std::size_t r = 0; r < rij.size(); ++r)
                    for (std::size_t s = 0; s < rjk.size(); ++s) {
                        Relation c = compose_star_unchecked(spaces[i], spaces[k], rij[r], rjk[s]);
                        ++rep.compositions;
                        auto it = index[i][k].find(encode(c, spaces[k].size()));
                        if (it == index[i][k].end()) {
                            rep.associative = false;
                            rep.failure = "composite is not a gp relation";
                            return rep;
                        }
                        table[r * rjk.size() + s] = it->second;
                        for (const auto& u : za)
                            if (box(c, u) != box(rij[r], box(rjk[s], u))) {
                                rep.box_law = false;
                                rep.failure = "box law fails";
                            }
                        if (functional[i][j][r] && functional[j][k][s] && c != set_composition(rij[r], rjk[s])) {
                            rep.functional_law = false;
                            rep.failure = "functional composite differs from set composition";
                        }
                    }
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t idi = index[i][i].at(encode(identity_relation(spaces[i]), spaces[i].size()));
            const std::uint32_t idj = index[j][j].at(encode(identity_relation(spaces[j]), spaces[j].size()));
            const std::size_t nij = rels[i][j].size();
            for (std::uint32_t r = 0; r < nij; ++r) {
                // identity on the source: R * id_X, identity on the target: id_Y * R
                if (comp[cid(i, i, j)][idi * nij + r] != r || comp[cid(i, j, j)][r * rels[j][j].size() + idj] != r) {
                    rep.identities = false;
                    rep.failure = "identity law fails";
                }
            }
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const auto& c_ijk = comp[cid(i, j, k)];
                    const auto& c_jkl = comp[cid(j, k, l)];
                    const auto& c_ikl = comp[cid(i, k, l)];
                    const auto& c_ijl = comp[cid(i, j, l)];
                    const std::size_t nij = rels[i][j].size(), njk = rels[j][k].size(), nkl = rels[k][l].size(),
                                      njl = rels[j][l].size();
                    for (std::size_t r = 0; r < nij; ++r)
                        for (std::size_t s = 0; s < njk; ++s) {
                            const std::uint32_t sr = c_ijk[r * njk + s];
                            const std::uint32_t* lhs = &c_ikl[sr * nkl];
                            const std::uint32_t* ts = &c_jkl[s * nkl];
                            const std::uint32_t* rhs = &c_ijl[r * njl];
                            for (std::size_t t = 0; t < nkl; ++t)
                                if (lhs[t] != rhs[ts[t]]) {
                                    rep.associative = false;
                                    rep.failure = "associativity fails";
                                    return rep;
                                }
                            rep.triples += nkl;
                        }
                }
    return rep;
}

} // namespace semidual
