#include "semidual/envelope.hpp"

#include <algorithm>
#include <set>

#include "semidual/catalog.hpp"

namespace semidual {

namespace {

ElementSet sigma_union(const SigmaLattice& s, const ElementSet& a) {
    ElementSet u;
    a.for_each([&](int x) { u |= s.sigma[x]; });
    return u;
}

void require_distributive(const MeetSemilattice& l) {
    if (!l.is_distributive()) fail(ErrorCode::NotDistributive, "operation needs a distributive semilattice");
}

bool preserves_joins(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a; b < l.size(); ++b) {
            auto j = l.join(a, b);
            if (!j) continue;
            auto jk = k.join(h[a], h[b]);
            if (!jk || *jk != h[*j]) return false;
        }
    return true;
}

// Bounded lattice homomorphisms d -> m, optionally injective only.
std::vector<TotalMap> lattice_homs(const MeetSemilattice& d, const MeetSemilattice& m, bool injective) {
    std::vector<TotalMap> out;
    for (auto& h : enumerate_homs(d, m, HomKind::Bounded))
        if (preserves_joins(d, m, h.table) && (!injective || is_injective(h.table))) out.push_back(h.table);
    return out;
}

} // namespace

int SigmaLattice::index_of(const ElementSet& c) const {
    auto it = std::find(carrier.begin(), carrier.end(), c);
    return it == carrier.end() ? -1 : static_cast<int>(it - carrier.begin());
}

FinitePoset SigmaLattice::as_poset() const {
    std::vector<std::string> names;
    for (const auto& c : carrier) {
        std::string s = "{";
        bool first = true;
        c.for_each([&](int i) {
            if (!first) s += ',';
            s += point_names[i];
            first = false;
        });
        names.push_back(s + "}");
    }
    std::vector<IndexPair> gen;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (std::size_t j = 0; j < carrier.size(); ++j)
            if (i != j && carrier[i].subset_of(carrier[j])) gen.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return FinitePoset::build(std::move(names), gen);
}

MeetSemilattice SigmaLattice::as_lattice() const { return MeetSemilattice(as_poset()); }

SigmaLattice sigma_lattice(const MeetSemilattice& l) {
    SigmaLattice s;
    for (const auto& p : enumerate_filters(l, FilterKind::Prime)) {
        s.points.push_back(p.members);
        s.point_names.push_back(l.name(filter_generator(l, p.members)));
    }
    s.sigma.resize(l.size());
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t i = 0; i < s.points.size(); ++i)
            if (s.points[i].contains(a)) s.sigma[a].insert(i);

    std::vector<ElementSet> carrier;
    for (const auto& x : s.sigma)
        if (std::find(carrier.begin(), carrier.end(), x) == carrier.end()) carrier.push_back(x);
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            ElementSet u = carrier[i] | carrier[j];
            if (std::find(carrier.begin(), carrier.end(), u) == carrier.end()) carrier.push_back(u);
        }
    sort_canonical(carrier);
    s.carrier = std::move(carrier);
    s.is_envelope = l.is_distributive();
    s.injective = std::set<ElementSet, decltype(&canonical_less)>(s.sigma.begin(), s.sigma.end(), &canonical_less).size() ==
                  s.sigma.size();
    for (std::size_t i = 0; i < s.carrier.size(); ++i)
        for (std::size_t j = 0; j < s.carrier.size(); ++j)
            ensure(s.index_of(s.carrier[i] & s.carrier[j]) >= 0, "sigma carrier closed under intersection");
    return s;
}

bool sigma_cover(const MeetSemilattice& l, int b, const std::vector<int>& as) {
    require_distributive(l);
    const ElementSet a = ElementSet::from_indices(as);
    const bool by_filters = common_up(l, a).subset_of(l.poset().up(b));
    const SigmaLattice s = sigma_lattice(l);
    const bool by_sigma = s.sigma[b].subset_of(sigma_union(s, a));
    ensure(by_filters == by_sigma, "sigma cover tests disagree");
    return by_filters;
}

std::vector<IdealPair> ideal_correspondence(const MeetSemilattice& l) {
    require_distributive(l);
    const SigmaLattice s = sigma_lattice(l);
    const MeetSemilattice d = s.as_lattice();
    std::vector<IdealPair> out;
    for (const auto& fi : enumerate_ideals(l, IdealKind::Frink)) {
        // The ideal of D(L) generated by sigma[I] is the downset of its union.
        const int top = s.index_of(sigma_union(s, fi.members));
        ensure(top >= 0, "union of sigma images lies in the carrier");
        IdealPair p{fi.members, d.poset().down(top), false};
        ElementSet back;
        for (std::size_t a = 0; a < l.size(); ++a)
            if (p.envelope_ideal.contains(s.index_of(s.sigma[a]))) back.insert(a);
        ensure(back == p.frink_ideal, "sigma preimage recovers the F-ideal");
        p.prime = is_prime_frink_ideal(l, p.frink_ideal);
        ensure(p.prime == is_prime_ideal(d, p.envelope_ideal), "prime F-ideals match prime envelope ideals");
        out.push_back(p);
    }
    auto ideals = enumerate_ideals(d, IdealKind::All);
    ensure(ideals.size() == out.size(), "ideal correspondence is onto");
    for (const auto& p : out) {
        bool hit = std::any_of(ideals.begin(), ideals.end(), [&](const ClassifiedSet& c) { return c.members == p.envelope_ideal; });
        ensure(hit, "image is an envelope ideal");
        for (const auto& q : out)
            ensure(p.frink_ideal.subset_of(q.frink_ideal) == p.envelope_ideal.subset_of(q.envelope_ideal),
                   "ideal correspondence is an order isomorphism");
    }
    return out;
}

std::vector<FilterPair> optimal_prime_correspondence(const MeetSemilattice& l) {
    require_distributive(l);
    const SigmaLattice s = sigma_lattice(l);
    const MeetSemilattice d = s.as_lattice();
    std::vector<FilterPair> out;
    for (const auto& pd : enumerate_filters(d, FilterKind::Prime)) {
        FilterPair p{pd.members, {}};
        for (std::size_t a = 0; a < l.size(); ++a)
            if (pd.members.contains(s.index_of(s.sigma[a]))) p.optimal.insert(a);
        ensure(is_optimal_filter(l, p.optimal), "sigma preimage of a prime filter is optimal");
        ElementSet lifted;
        p.optimal.for_each([&](int a) { lifted.insert(s.index_of(s.sigma[a])); });
        ensure(d.poset().up_closure(lifted) == p.envelope_prime, "upward closure of sigma[F] recovers the prime filter");
        out.push_back(p);
    }
    auto opt = enumerate_filters(l, FilterKind::Optimal);
    ensure(opt.size() == out.size(), "optimal/prime correspondence is a bijection");
    for (const auto& p : out) {
        bool hit = std::any_of(opt.begin(), opt.end(), [&](const ClassifiedSet& c) { return c.members == p.optimal; });
        ensure(hit, "image is an enumerated optimal filter");
        for (const auto& q : out)
            ensure(p.optimal.subset_of(q.optimal) == p.envelope_prime.subset_of(q.envelope_prime),
                   "optimal/prime correspondence is an order isomorphism");
    }
    return out;
}

LatticeHom extend_sup_hom(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    require_distributive(l);
    require_distributive(k);
    if (!check_hom(l, k, h, HomKind::Sup)) fail(ErrorCode::NotSupHom, "map is not a sup-homomorphism");
    LatticeHom out{sigma_lattice(l), sigma_lattice(k), {}};
    const auto& sl = out.source;
    const auto& sk = out.target;
    auto image_of = [&](const ElementSet& a) {
        ElementSet u;
        a.for_each([&](int x) { u |= sk.sigma[h[x]]; });
        return sk.index_of(u);
    };
    for (const auto& c : sl.carrier) {
        ElementSet below;
        for (std::size_t a = 0; a < l.size(); ++a)
            if (sl.sigma[a].subset_of(c)) below.insert(a);
        ensure(sigma_union(sl, below) == c, "carrier element is a union of sigma images");
        const int img = image_of(below);
        ensure(img >= 0, "extension lands in the target carrier");
        // Every representation of c as a union of sigma images uses members of
        // `below`; each must give the same image.
        const auto members = below.indices();
        if (members.size() <= 20) {
            const std::uint64_t total = std::uint64_t{1} << members.size();
            for (std::uint64_t m = 0; m < total; ++m) {
                ElementSet a;
                for (std::size_t i = 0; i < members.size(); ++i)
                    if ((m >> i) & 1u) a.insert(members[i]);
                if (sigma_union(sl, a) == c) ensure(image_of(a) == img, "extension is well defined");
            }
        }
        out.table.push_back(img);
    }
    for (std::size_t a = 0; a < l.size(); ++a)
        ensure(out.table[sl.index_of(sl.sigma[a])] == sk.index_of(sk.sigma[h[a]]), "D(h) commutes with sigma");
    for (std::size_t i = 0; i < sl.carrier.size(); ++i)
        for (std::size_t j = 0; j < sl.carrier.size(); ++j) {
            ensure(sk.carrier[out.table[sl.index_of(sl.carrier[i] | sl.carrier[j])]] ==
                       (sk.carrier[out.table[i]] | sk.carrier[out.table[j]]),
                   "D(h) preserves unions");
            ensure(sk.carrier[out.table[sl.index_of(sl.carrier[i] & sl.carrier[j])]] ==
                       (sk.carrier[out.table[i]] & sk.carrier[out.table[j]]),
                   "D(h) preserves intersections");
        }
    if (is_injective(h)) ensure(is_injective(out.table), "D(h) is injective for injective h");
    return out;
}

UniversalReport check_universal_property(const MeetSemilattice& l, const MeetSemilattice& d, const TotalMap& e,
                                         std::size_t bound) {
    require_distributive(l);
    if (!d.is_lattice() || !d.is_distributive())
        fail(ErrorCode::NotDistributive, "target must be a distributive lattice");
    if (!check_hom(l, d, e, HomKind::Sup)) fail(ErrorCode::NotSupHom, "e is not a sup-homomorphism");
    if (!is_injective(e)) fail(ErrorCode::NotInjective, "e is not injective");

    UniversalReport rep;
    rep.bound = bound;
    rep.holds = true;
    for (const auto& m : distributive_lattice_catalog(bound)) {
        if (m.size() < l.size()) continue;
        ++rep.lattices_checked;
        const auto ks = lattice_homs(d, m, true);
        for (const auto& h : enumerate_homs(l, m, HomKind::Sup)) {
            if (!is_injective(h.table)) continue;
            ++rep.maps_checked;
            std::size_t matches = 0;
            for (const auto& k : ks) {
                bool commutes = true;
                for (std::size_t a = 0; a < l.size() && commutes; ++a)
                    if (k[e[a]] != h.table[a]) commutes = false;
                if (commutes) ++matches;
            }
            if (matches != 1) {
                rep.holds = false;
                rep.counter_target = m;
                rep.counter_map = h.table;
                rep.counter_reason = matches == 0 ? "no injective lattice extension" : "lattice extension not unique";
                return rep;
            }
        }
    }
    const SigmaLattice s = sigma_lattice(l);
    const MeetSemilattice env = s.as_lattice();
    if (env.size() == d.size()) {
        for (const auto& k : lattice_homs(d, env, true)) {
            bool commutes = true;
            for (std::size_t a = 0; a < l.size() && commutes; ++a)
                if (k[e[a]] != s.index_of(s.sigma[a])) commutes = false;
            if (commutes) {
                rep.iso = k;
                break;
            }
        }
    }
    return rep;
}

} // namespace semidual
