#include "semidual/dualspace.hpp"

#include <algorithm>
#include <numeric>

namespace semidual {

namespace {

constexpr std::size_t kSubsetScanLimit = 16;

bool contains_set(const std::vector<ElementSet>& v, const ElementSet& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

FinitePoset inclusion_poset(const std::vector<ElementSet>& sets, std::vector<std::string> names) {
    std::vector<IndexPair> gen;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (i != j && sets[i].subset_of(sets[j])) gen.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return FinitePoset::build(std::move(names), gen);
}

// Checks that pairs form a bijection onto `targets` and that the order
// relation is preserved (or reversed).
void ensure_bijection(const std::vector<SetPair>& pairs, const std::vector<ElementSet>& targets, bool reversing,
                      const char* what) {
    ensure(pairs.size() == targets.size(), what);
    for (const auto& p : pairs) {
        ensure(contains_set(targets, p.space_side), what);
        for (const auto& q : pairs) {
            bool alg = p.algebra_side.subset_of(q.algebra_side);
            bool sp = reversing ? q.space_side.subset_of(p.space_side) : p.space_side.subset_of(q.space_side);
            ensure(alg == sp, what);
        }
    }
}

} // namespace

std::vector<ElementSet> admissible_upsets(const FinitePoset& x, const ElementSet& x0) {
    std::vector<ElementSet> out;
    const ElementSet all = x.all();
    for (const auto& u : all_upsets(x))
        if (x.maximal(all - u).subset_of(x0)) out.push_back(u);
    return out;
}

GPSpace::GPSpace(FinitePoset x, ElementSet x0) : x_(std::move(x)), x0_(x0) {
    if (!x0_.subset_of(x_.all())) fail(ErrorCode::InvalidArgument, "X0 is not a subset of X");
    adm_ = admissible_upsets(x_, x0_);
}

GPSpace::GPSpace(FinitePoset x) : GPSpace(x, x.all()) {}

bool GPSpace::is_admissible(const ElementSet& u) const { return admissible_index(u) >= 0; }

int GPSpace::admissible_index(const ElementSet& u) const {
    auto it = std::lower_bound(adm_.begin(), adm_.end(), u, canonical_less);
    if (it == adm_.end() || *it != u) return -1;
    return static_cast<int>(it - adm_.begin());
}

const char* to_string(SpaceMode m) {
    switch (m) {
    case SpaceMode::Strict: return "strict";
    case SpaceMode::Star: return "star";
    case SpaceMode::Lenient: return "lenient";
    }
    return "?";
}

std::optional<SpaceMode> space_mode_from_string(const std::string& s) {
    for (SpaceMode m : {SpaceMode::Strict, SpaceMode::Star, SpaceMode::Lenient})
        if (s == to_string(m)) return m;
    return std::nullopt;
}

const char* to_string(CondState c) {
    switch (c) {
    case CondState::Pass: return "pass";
    case CondState::Fail: return "fail";
    case CondState::Skipped: return "skipped";
    }
    return "?";
}

GPSReport check_gps(const GPSpace& s, SpaceMode mode) {
    GPSReport r;
    r.mode = mode;
    const auto& x = s.poset();
    const auto& adm = s.admissible();
    const ElementSet all = x.all();
    auto state = [](bool b) { return b ? CondState::Pass : CondState::Fail; };

    // (1) compactness: vacuous on a finite discrete space.
    r.conditions[0] = CondState::Pass;
    r.conditions[1] = mode == SpaceMode::Lenient ? CondState::Skipped : state(s.x0() == all);
    r.conditions[2] = mode == SpaceMode::Star ? CondState::Skipped : state(x.maximal(all).subset_of(s.x0()));

    for (std::size_t p = 0; p < s.size(); ++p) {
        std::vector<const ElementSet*> ix;
        for (const auto& u : adm)
            if (!u.contains(p)) ix.push_back(&u);
        bool directed = true;
        for (std::size_t i = 0; i < ix.size() && directed; ++i)
            for (std::size_t j = i + 1; j < ix.size() && directed; ++j) {
                const ElementSet joined = *ix[i] | *ix[j];
                bool bound = std::any_of(ix.begin(), ix.end(), [&](const ElementSet* w) { return joined.subset_of(*w); });
                if (!bound) directed = false;
            }
        if (mode == SpaceMode::Star && ix.empty()) directed = false;
        if (directed != s.x0().contains(p)) r.directedness_failures.push_back(static_cast<int>(p));
    }
    r.conditions[3] = state(r.directedness_failures.empty());

    for (std::size_t a = 0; a < s.size() && !r.separation_failure; ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
            bool sep_le = std::all_of(adm.begin(), adm.end(),
                                      [&](const ElementSet& u) { return !u.contains(a) || u.contains(b); });
            if (sep_le != x.le(a, b)) {
                r.separation_failure = IndexPair{static_cast<int>(a), static_cast<int>(b)};
                break;
            }
        }
    r.conditions[4] = state(!r.separation_failure);
    r.ok = std::none_of(std::begin(r.conditions), std::end(r.conditions),
                        [](CondState c) { return c == CondState::Fail; });
    return r;
}

GPSpace dual_space(const MeetSemilattice& l) {
    if (!l.is_distributive()) fail(ErrorCode::NotDistributive, "dual space needs a distributive semilattice");
    if (!l.has_top()) fail(ErrorCode::InvalidArgument, "dual space needs a top element");
    if (l.size() == 1) fail(ErrorCode::EmptyPoset, "the one-element algebra has no optimal filters");
    std::vector<std::pair<int, ElementSet>> opt;
    for (const auto& f : enumerate_filters(l, FilterKind::Optimal))
        opt.emplace_back(filter_generator(l, f.members), f.members);
    std::sort(opt.begin(), opt.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ElementSet> sets;
    std::vector<std::string> names;
    ElementSet x0;
    for (std::size_t i = 0; i < opt.size(); ++i) {
        sets.push_back(opt[i].second);
        names.push_back(l.name(opt[i].first));
        if (is_prime_filter(l, opt[i].second)) x0.insert(i);
    }
    GPSpace s(inclusion_poset(sets, std::move(names)), x0);
    ensure(check_gps(s, SpaceMode::Strict).ok, "dual space satisfies the strict conditions");
    return s;
}

std::vector<int> dual_generators(const MeetSemilattice& l, const GPSpace& s) {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(l.poset().require(s.poset().name(i)));
    return out;
}

MeetSemilattice dual_algebra(const GPSpace& s, SpaceMode mode) {
    auto rep = check_gps(s, mode);
    if (!rep.ok) fail(ErrorCode::NotAValidSpace, std::string("space fails the ") + to_string(mode) + " conditions");
    std::vector<std::string> names;
    for (const auto& u : s.admissible()) names.push_back(s.poset().set_name(u));
    MeetSemilattice m(inclusion_poset(s.admissible(), std::move(names)));
    ensure(m.is_distributive(), "dual algebra is distributive");
    ensure(m.has_top() && *m.top() == static_cast<int>(m.size()) - 1, "X is the top of the dual algebra");
    return m;
}

PhiIso phi_iso(const MeetSemilattice& l) {
    GPSpace sp = dual_space(l);
    MeetSemilattice alg = dual_algebra(sp);
    const auto gens = dual_generators(l, sp);
    TotalMap table(l.size(), -1);
    for (std::size_t a = 0; a < l.size(); ++a) {
        ElementSet phi;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (l.le(gens[i], a)) phi.insert(i);
        table[a] = sp.admissible_index(phi);
        ensure(table[a] >= 0, "phi(a) is admissible");
    }
    ensure(is_injective(table) && alg.size() == l.size(), "phi is a bijection");
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b) {
            ensure(table[l.meet(a, b)] == alg.meet(table[a], table[b]), "phi preserves meets");
            ensure(l.le(a, b) == alg.le(table[a], table[b]), "phi reflects order");
        }
    return {std::move(sp), std::move(alg), std::move(table)};
}

PsiIso psi_iso(const GPSpace& s) {
    if (!check_gps(s, SpaceMode::Strict).ok) fail(ErrorCode::NotAValidSpace, "space fails the strict conditions");
    MeetSemilattice alg = dual_algebra(s);
    GPSpace dual = dual_space(alg);
    const auto gens = dual_generators(alg, dual);
    TotalMap table(s.size(), -1);
    for (std::size_t x = 0; x < s.size(); ++x) {
        ElementSet psi;
        for (std::size_t k = 0; k < s.admissible().size(); ++k)
            if (s.admissible()[k].contains(x)) psi.insert(k);
        for (std::size_t p = 0; p < gens.size(); ++p)
            if (alg.poset().up(gens[p]) == psi) table[x] = static_cast<int>(p);
        ensure(table[x] >= 0, "psi(x) is an optimal filter of X*");
        ensure(s.x0().contains(x) == dual.x0().contains(table[x]), "psi carries X0 onto the prime filters");
    }
    ensure(is_injective(table) && dual.size() == s.size(), "psi is a bijection");
    ensure(is_order_embedding(s.poset(), dual.poset(), table), "psi is an order isomorphism");
    return {std::move(alg), std::move(dual), std::move(table)};
}

GESReport check_ges(const GPSpace& s, SpaceMode mode) {
    GESReport r;
    const auto& x = s.poset();
    const auto& adm = s.admissible();
    const ElementSet all = x.all();
    r.gps_ok = check_gps(s, mode).ok;

    std::vector<ElementSet> clopens;
    r.arrow_closed = true;
    for (const auto& u : adm)
        for (const auto& v : adm) {
            ++r.difference_pairs;
            const ElementSet d = u - v;
            if (!contains_set(clopens, d)) clopens.push_back(d);
            if (!s.is_admissible(all - x.down_closure(d))) r.arrow_closed = false;
        }
    for (std::size_t i = 0; i < clopens.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const ElementSet u = clopens[i] | clopens[j];
            if (!contains_set(clopens, u)) clopens.push_back(u);
        }
    sort_canonical(clopens);
    r.esakia_clopens = std::move(clopens);
    r.lemma_ok = std::all_of(r.esakia_clopens.begin(), r.esakia_clopens.end(),
                             [&](const ElementSet& u) { return x.maximal(u).subset_of(s.x0()); });

    if (s.size() <= kSubsetScanLimit) {
        r.subsets_scanned = true;
        const std::uint64_t total = std::uint64_t{1} << s.size();
        std::vector<ElementSet> viol, conv;
        for (std::uint64_t m = 0; m < total; ++m) {
            ElementSet u;
            for (std::size_t i = 0; i < s.size(); ++i)
                if ((m >> i) & 1u) u.insert(i);
            if (!x.maximal(u).subset_of(s.x0()))
                viol.push_back(u);
            else if (!std::binary_search(r.esakia_clopens.begin(), r.esakia_clopens.end(), u, canonical_less))
                conv.push_back(u);
        }
        sort_canonical(viol);
        sort_canonical(conv);
        r.max_violations = std::move(viol);
        r.converse_counterexamples = std::move(conv);
    }
    r.valid = r.gps_ok && r.arrow_closed && r.lemma_ok;
    return r;
}

ElementSet heyting_arrow(const GPSpace& s, const ElementSet& u, const ElementSet& v) {
    if (!s.is_admissible(u) || !s.is_admissible(v))
        fail(ErrorCode::InvalidArgument, "arguments must be admissible upsets");
    if (!check_ges(s).valid) fail(ErrorCode::NotEsakia, "space is not a generalized Esakia space");
    const ElementSet out = s.poset().all() - s.poset().down_closure(u - v);
    if (!s.is_admissible(out)) fail(ErrorCode::NotAdmissible, "arrow result is not admissible");
    return out;
}

DualDescriptions dual_descriptions(const MeetSemilattice& l) {
    const GPSpace sp = dual_space(l);
    const auto gens = dual_generators(l, sp);
    const auto& x = sp.poset();
    const ElementSet all = x.all();
    const ElementSet& x0 = sp.x0();
    auto phi = [&](int a) {
        ElementSet out;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (l.le(gens[i], a)) out.insert(i);
        return out;
    };
    auto union_phi = [&](const ElementSet& s) {
        ElementSet out;
        s.for_each([&](int a) { out |= phi(a); });
        return out;
    };
    auto inter_phi = [&](const ElementSet& s) {
        ElementSet out = all;
        s.for_each([&](int a) { out &= phi(a); });
        return out;
    };
    auto point_of = [&](int g) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == g) return static_cast<int>(i);
        return -1;
    };

    DualDescriptions d;
    const auto upsets = all_upsets(x);
    std::vector<ElementSet> closed, open;
    for (const auto& u : upsets) {
        if (all - u == x.down_closure(x0 - u)) {
            closed.push_back(u);
            open.push_back(u);
        }
    }

    for (const auto& f : enumerate_filters(l, FilterKind::All)) d.filters.push_back({f.members, inter_phi(f.members)});
    ensure_bijection(d.filters, closed, true, "filters correspond to closed upsets");

    for (const auto& i : enumerate_ideals(l, IdealKind::Frink))
        d.frink_ideals.push_back({i.members, union_phi(i.members)});
    ensure_bijection(d.frink_ideals, upsets, false, "F-ideals correspond to open upsets");

    for (const auto& i : enumerate_ideals(l, IdealKind::All)) d.ideals.push_back({i.members, union_phi(i.members)});
    ensure_bijection(d.ideals, open, false, "ideals correspond to qualifying open upsets");

    std::vector<ElementSet> ups, downs;
    x0.for_each([&](int p) {
        ups.push_back(x.up(p));
        downs.push_back(all - x.down(p));
    });
    for (const auto& f : enumerate_filters(l, FilterKind::Prime)) {
        const int p = point_of(filter_generator(l, f.members));
        ensure(p >= 0 && x0.contains(p), "prime filter is a designated point");
        SetPair sp_pair{f.members, inter_phi(f.members)};
        ensure(sp_pair.space_side == x.up(p), "prime filter lands on an up-set of a point");
        d.prime_filters.push_back(sp_pair);
    }
    ensure_bijection(d.prime_filters, ups, true, "prime filters correspond to principal upsets");
    for (const auto& i : enumerate_ideals(l, IdealKind::Prime)) {
        const int p = point_of(filter_generator(l, l.poset().all() - i.members));
        ensure(p >= 0 && x0.contains(p), "prime ideal complement is a designated point");
        SetPair sp_pair{i.members, union_phi(i.members)};
        ensure(sp_pair.space_side == all - x.down(p), "prime ideal lands on a co-principal downset complement");
        d.prime_ideals.push_back(sp_pair);
    }
    ensure_bijection(d.prime_ideals, downs, false, "prime ideals correspond to complements of principal downsets");
    return d;
}

} // namespace semidual
