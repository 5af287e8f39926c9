#include "semidual/partial.hpp"

#include <algorithm>

namespace semidual {

namespace {

void require_well_formed(const GPSpace& x, const GPSpace& y, const PartialFn& f) {
    if (f.map.size() != x.size()) fail(ErrorCode::InvalidArgument, "partial map does not match the source");
    for (std::size_t p = 0; p < x.size(); ++p) {
        const int v = f.map[p];
        if ((v >= 0) != f.dom.contains(p)) fail(ErrorCode::InvalidArgument, "domain and map disagree");
        if (v >= static_cast<int>(y.size())) fail(ErrorCode::InvalidArgument, "partial map leaves the target");
    }
    if (!f.dom.subset_of(x.poset().all())) fail(ErrorCode::InvalidArgument, "domain leaves the source");
}

// (down f^{-1}(A))^c
ElementSet co_down_preimage(const GPSpace& x, const PartialFn& f, const ElementSet& a) {
    ElementSet pre;
    f.dom.for_each([&](int p) {
        if (a.contains(f.map[p])) pre.insert(p);
    });
    return x.poset().all() - x.poset().down_closure(pre);
}

Relation raw_rel(const GPSpace& x, const PartialFn& f) {
    Relation r;
    for (std::size_t p = 0; p < x.size(); ++p) r.rows.push_back(partial_image_above(x, f, p));
    return r;
}

PartialFn raw_partial(const GPSpace& x, const GPSpace& y, const Relation& r) {
    PartialFn f{{}, std::vector<int>(x.size(), -1)};
    for (std::size_t p = 0; p < x.size(); ++p) {
        auto l = y.poset().least(r.rows[p]);
        if (!l) continue;
        ElementSet cls;
        for (std::size_t q = 0; q < x.size(); ++q)
            if (r.rows[q] == r.rows[p]) cls.insert(q);
        if (!x.poset().maximal(cls).contains(p)) continue;
        f.dom.insert(p);
        f.map[p] = *l;
    }
    return f;
}

// First z in dom above p with f[up p] = up f(z), or -1.
int heyting_witness(const GPSpace& x, const GPSpace& y, const PartialFn& f, int p) {
    const ElementSet img = partial_image_above(x, f, p);
    int out = -1;
    (x.poset().up(p) & f.dom).for_each([&](int z) {
        if (out < 0 && img == y.poset().up(f.map[z])) out = z;
    });
    return out;
}

PartialFn raw_partial_from_fn(const GPSpace& x, const TotalMap& g) {
    PartialFn f{{}, std::vector<int>(x.size(), -1)};
    for (std::size_t p = 0; p < x.size(); ++p) {
        ElementSet fibre;
        for (std::size_t q = 0; q < x.size(); ++q)
            if (g[q] == g[p]) fibre.insert(q);
        if (x.poset().maximal(fibre).contains(p)) {
            f.dom.insert(p);
            f.map[p] = g[p];
        }
    }
    return f;
}

} // namespace

PartialFn make_partial(std::size_t source_size, const std::vector<IndexPair>& assignments) {
    PartialFn f{{}, std::vector<int>(source_size, -1)};
    for (auto [p, v] : assignments) {
        f.dom.insert(p);
        f.map.at(p) = v;
    }
    return f;
}

ElementSet partial_image_above(const GPSpace& x, const PartialFn& f, int p) {
    ElementSet out;
    (x.poset().up(p) & f.dom).for_each([&](int z) { out.insert(f.map[z]); });
    return out;
}

PartialFlags check_partial(const GPSpace& x, const GPSpace& y, const PartialFn& f) {
    require_well_formed(x, y, f);
    const auto& px = x.poset();
    const auto& py = y.poset();
    PartialFlags fl;

    fl.cond1 = true;
    f.dom.for_each([&](int p) {
        f.dom.for_each([&](int q) {
            if (px.lt(p, q) && !py.lt(f.map[p], f.map[q])) fl.cond1 = false;
        });
    });

    fl.cond2 = true;
    f.dom.for_each([&](int p) {
        py.up(f.map[p]).for_each([&](int t) {
            if (t == f.map[p]) return;
            bool found = false;
            (px.up(p) & f.dom).for_each([&](int z) {
                if (z != p && f.map[z] == t) found = true;
            });
            if (!found) fl.cond2 = false;
        });
    });

    const ElementSet yall = py.all();
    fl.cond3 = std::all_of(y.admissible().begin(), y.admissible().end(),
                           [&](const ElementSet& u) { return x.is_admissible(co_down_preimage(x, f, yall - u)); });

    fl.cond4 = true;
    for (std::size_t p = 0; p < x.size() && fl.cond4; ++p) {
        const ElementSet img = partial_image_above(x, f, p);
        (yall - img).for_each([&](int t) {
            bool sep = std::any_of(y.admissible().begin(), y.admissible().end(),
                                   [&](const ElementSet& u) { return img.subset_of(u) && !u.contains(t); });
            if (!sep) fl.cond4 = false;
        });
    }

    fl.esakia = fl.cond1 && fl.cond2 && fl.cond3 && fl.cond4;
    fl.kohler = fl.cond1 && fl.cond2;
    if (x.full_x0() && y.full_x0()) ensure(fl.esakia == fl.kohler, "partial Esakia iff partial Kohler on finite posets");
    fl.well = px.maximal(px.all()).subset_of(f.dom);

    fl.heyting = fl.esakia;
    for (std::size_t p = 0; p < x.size() && fl.heyting; ++p)
        if (heyting_witness(x, y, f, p) < 0) fl.heyting = false;

    ElementSet range;
    f.dom.for_each([&](int p) { range.insert(f.map[p]); });
    fl.onto = range == yall;

    fl.one_one = true;
    for (std::size_t p = 0; p < x.size() && fl.one_one; ++p) {
        const ElementSet img = partial_image_above(x, f, p);
        for (const auto& u : x.admissible()) {
            if (u.contains(p)) continue;
            bool found = std::any_of(y.admissible().begin(), y.admissible().end(), [&](const ElementSet& v) {
                return u.subset_of(co_down_preimage(x, f, yall - v)) && !img.subset_of(v);
            });
            if (!found) {
                fl.one_one = false;
                break;
            }
        }
    }
    return fl;
}

bool check_partial(const GPSpace& x, const GPSpace& y, const PartialFn& f, PartialKind kind) {
    const PartialFlags fl = check_partial(x, y, f);
    switch (kind) {
    case PartialKind::Esakia: return fl.esakia;
    case PartialKind::Kohler: return fl.kohler;
    case PartialKind::Well: return fl.esakia && fl.well;
    case PartialKind::Heyting: return fl.heyting;
    }
    return false;
}

PartialFn partial_from_rel(const GPSpace& x, const GPSpace& y, const Relation& r) {
    const GPFlags flags = check_gp_morphism(x, y, r);
    if (!flags.gp) fail(ErrorCode::NotGPMorphism, "relation is not a generalized Priestley morphism");
    if (!flags.esakia || !x.full_x0() || !y.full_x0())
        fail(ErrorCode::NotEsakiaMorphism, "relation is not a generalized Esakia morphism between Esakia spaces");
    PartialFn f = raw_partial(x, y, r);
    ensure(raw_rel(x, f) == r, "x R y iff some z in dom above x has f_R(z) = y");
    for (const auto& u : y.admissible())
        ensure(box(r, u) == co_down_preimage(x, f, y.poset().all() - u), "box_R U = (down f_R^{-1}(U^c))^c");
    ensure(check_partial(x, y, f).esakia, "f_R is a partial Esakia function");
    return f;
}

Relation rel_from_partial(const GPSpace& x, const GPSpace& y, const PartialFn& f) {
    if (!check_partial(x, y, f).esakia) fail(ErrorCode::NotPartialEsakia, "map is not a partial Esakia function");
    Relation r = raw_rel(x, f);
    ensure(check_gp_morphism(x, y, r).gp, "R_f is a generalized Priestley morphism");
    ensure(raw_partial(x, y, r) == f, "f_{R_f} = f");
    return r;
}

TotalMap esakia_fn_from_partial(const GPSpace& x, const GPSpace& y, const PartialFn& f) {
    if (!check_partial(x, y, f).heyting) fail(ErrorCode::NotPartialHeyting, "map is not a partial Heyting function");
    TotalMap g(x.size(), -1);
    for (std::size_t p = 0; p < x.size(); ++p) {
        const int z = heyting_witness(x, y, f, p);
        ensure(z >= 0, "Heyting witness exists");
        g[p] = f.map[z];
    }
    ensure(check_strong(x, y, g, StrongKind::Esakia), "g_f is an Esakia morphism");
    ensure(raw_partial_from_fn(x, g) == f, "f_{g_f} = f");
    return g;
}

PartialFn partial_from_esakia_fn(const GPSpace& x, const GPSpace& y, const TotalMap& g) {
    if (g.size() != x.size() || !check_strong(x, y, g, StrongKind::Esakia))
        fail(ErrorCode::NotEsakiaMorphism, "map is not an Esakia morphism");
    PartialFn f = raw_partial_from_fn(x, g);
    ensure(check_partial(x, y, f).heyting, "f_g is a partial Heyting function");
    for (std::size_t p = 0; p < x.size(); ++p)
        ensure(f.map[heyting_witness(x, y, f, p)] == g[p], "g_{f_g} = g");
    return f;
}

PartialFn compose_partial(const GPSpace& x, const GPSpace& y, const GPSpace& z, const PartialFn& f,
                          const PartialFn& g) {
    if (f.map.size() != x.size() || g.map.size() != y.size())
        fail(ErrorCode::CompositionMismatch, "partial functions are not composable");
    for (int v : f.map)
        if (v >= static_cast<int>(y.size())) fail(ErrorCode::CompositionMismatch, "partial functions are not composable");
    const Relation rf = rel_from_partial(x, y, f);
    const Relation rg = rel_from_partial(y, z, g);
    return partial_from_rel(x, z, compose_star(x, y, z, rf, rg));
}

std::vector<PartialFn> enumerate_partial(const GPSpace& x, const GPSpace& y, PartialKind kind) {
    std::vector<PartialFn> out;
    PartialFn f{{}, std::vector<int>(x.size(), -1)};
    auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == x.size()) {
            if (check_partial(x, y, f, kind)) out.push_back(f);
            return;
        }
        for (int v = -1; v < static_cast<int>(y.size()); ++v) {
            bool ok = true;
            if (v >= 0)
                for (std::size_t q = 0; q < p && ok; ++q) {
                    if (f.map[q] < 0) continue;
                    if (x.poset().lt(q, p) && !y.poset().lt(f.map[q], v)) ok = false;
                    if (x.poset().lt(p, q) && !y.poset().lt(v, f.map[q])) ok = false;
                }
            if (!ok) continue;
            f.map[p] = v;
            if (v >= 0) f.dom.insert(p);
            self(self, p + 1);
            f.dom.erase(p);
        }
        f.map[p] = -1;
    };
    rec(rec, 0);
    return out;
}

} // namespace semidual
