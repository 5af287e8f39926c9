#include "semidual/semilattice.hpp"

#include <algorithm>

namespace semidual {

namespace {

constexpr std::size_t kSubsetScanLimit = 20;

template <class F>
void for_each_subset(std::size_t n, F&& f) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m) {
        ElementSet s;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1u) s.insert(i);
        f(s);
    }
}

ElementSet image(const TotalMap& h, const ElementSet& s) {
    ElementSet out;
    s.for_each([&](int a) { out.insert(h[a]); });
    return out;
}

ElementSet preimage(const TotalMap& h, const ElementSet& s) {
    ElementSet out;
    for (std::size_t a = 0; a < h.size(); ++a)
        if (s.contains(h[a])) out.insert(a);
    return out;
}

} // namespace

MeetSemilattice::MeetSemilattice(FinitePoset p, std::optional<std::string> top_marker)
    : poset_(std::move(p)) {
    const std::size_t n = poset_.size();
    meet_.assign(n * n, -1);
    join_.assign(n * n, -1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            auto g = poset_.greatest(poset_.down(a) & poset_.down(b));
            if (!g)
                fail(ErrorCode::NotMeetSemilattice, "'" + poset_.name(a) + "' and '" + poset_.name(b) +
                                                        "' have no greatest lower bound");
            meet_[a * n + b] = meet_[b * n + a] = *g;
            auto l = poset_.least(poset_.up(a) & poset_.up(b));
            join_[a * n + b] = join_[b * n + a] = l ? *l : -1;
        }
    int bot = 0;
    for (std::size_t a = 1; a < n; ++a) bot = meet(bot, a);
    bottom_ = bot;
    top_ = poset_.greatest(poset_.all());
    if (top_marker) {
        int t = poset_.require(*top_marker);
        if (!top_ || *top_ != t)
            fail(ErrorCode::ValidationError, "top marker '" + *top_marker + "' is not the greatest element");
    }
    lattice_ = std::all_of(join_.begin(), join_.end(), [](int j) { return j >= 0; });

    // Distributivity: when some c1, c2 witness a = c1 ^ c2, minimal upper
    // bounds of {a,b1} and {a,b2} witness it too, so only those are scanned.
    distributive_ = true;
    std::vector<ElementSet> min_ub(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            min_ub[a * n + b] = poset_.minimal(poset_.up(a) & poset_.up(b));
    for (std::size_t a = 0; a < n && distributive_; ++a)
        for (std::size_t b1 = 0; b1 < n && distributive_; ++b1)
            for (std::size_t b2 = b1; b2 < n && distributive_; ++b2) {
                if (!le(meet(b1, b2), a)) continue;
                bool found = false;
                min_ub[a * n + b1].for_each([&](int c1) {
                    if (found) return;
                    min_ub[a * n + b2].for_each([&](int c2) {
                        if (meet(c1, c2) == static_cast<int>(a)) found = true;
                    });
                });
                if (!found) distributive_ = false;
            }

    arrow_.assign(n * n, -1);
    implicative_ = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            ElementSet cs;
            for (std::size_t c = 0; c < n; ++c)
                if (le(meet(a, c), b)) cs.insert(c);
            auto g = poset_.greatest(cs);
            if (g)
                arrow_[a * n + b] = *g;
            else
                implicative_ = false;
        }
}

std::optional<MeetSemilattice> MeetSemilattice::try_from(const FinitePoset& p) {
    try {
        return MeetSemilattice(p);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotMeetSemilattice) return std::nullopt;
        throw;
    }
}

int MeetSemilattice::meet_all(const ElementSet& s) const {
    if (s.empty()) {
        if (!top_) fail(ErrorCode::InvalidArgument, "empty meet without a top element");
        return *top_;
    }
    int m = s.first();
    s.for_each([&](int a) { m = meet(m, a); });
    return m;
}

std::optional<int> MeetSemilattice::join_all(const ElementSet& s) const {
    if (s.empty()) return bottom_;
    return poset_.least(common_up(*this, s));
}

Classification classify(const FinitePoset& p) {
    Classification c;
    auto l = MeetSemilattice::try_from(p);
    if (!l) return c;
    c.is_meet_semilattice = true;
    c.is_distributive = l->is_distributive();
    c.is_lattice = l->is_lattice();
    c.is_bounded = l->has_top();
    c.is_implicative = l->is_implicative();
    c.is_heyting = l->is_heyting();
    if (c.is_implicative) {
        ImplicativeTable t;
        t.n = l->size();
        t.arrow.resize(t.n * t.n);
        for (std::size_t a = 0; a < t.n; ++a)
            for (std::size_t b = 0; b < t.n; ++b) t.arrow[a * t.n + b] = l->arrow(a, b);
        c.arrow = std::move(t);
    }
    return c;
}

bool distributive_by_definition(const MeetSemilattice& l) {
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b1 = 0; b1 < n; ++b1)
            for (std::size_t b2 = 0; b2 < n; ++b2) {
                if (!l.le(l.meet(b1, b2), a)) continue;
                bool found = false;
                for (std::size_t c1 = 0; c1 < n && !found; ++c1) {
                    if (!l.le(b1, c1)) continue;
                    for (std::size_t c2 = 0; c2 < n && !found; ++c2)
                        if (l.le(b2, c2) && l.meet(c1, c2) == static_cast<int>(a)) found = true;
                }
                if (!found) return false;
            }
    return true;
}

ElementSet common_up(const MeetSemilattice& l, const ElementSet& a) {
    ElementSet r = l.poset().all();
    a.for_each([&](int x) { r &= l.poset().up(x); });
    return r;
}

ElementSet upper_bounds(const MeetSemilattice& l, const ElementSet& a) { return common_up(l, a); }

ElementSet lower_bounds(const MeetSemilattice& l, const ElementSet& a) {
    ElementSet r = l.poset().all();
    a.for_each([&](int x) { r &= l.poset().down(x); });
    return r;
}

const char* to_string(SetClass c) {
    switch (c) {
    case SetClass::Filter: return "filter";
    case SetClass::PrimeFilter: return "prime-filter";
    case SetClass::OptimalFilter: return "optimal-filter";
    case SetClass::Ideal: return "ideal";
    case SetClass::PrimeIdeal: return "prime-ideal";
    case SetClass::FrinkIdeal: return "frink-ideal";
    case SetClass::PrimeFrinkIdeal: return "prime-frink-ideal";
    }
    return "?";
}

bool is_filter(const MeetSemilattice& l, const ElementSet& s) {
    if (s.empty() || !l.poset().is_upset(s)) return false;
    bool ok = true;
    s.for_each([&](int a) {
        s.for_each([&](int b) {
            if (!s.contains(l.meet(a, b))) ok = false;
        });
    });
    return ok;
}

bool is_proper(const MeetSemilattice& l, const ElementSet& s) { return s != l.poset().all(); }

bool is_prime_filter(const MeetSemilattice& l, const ElementSet& s) {
    if (!is_filter(l, s) || !is_proper(l, s)) return false;
    // Finite filters are principal, so pairs of principal filters cover all pairs.
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            const auto& fa = l.poset().up(a);
            const auto& fb = l.poset().up(b);
            if ((fa & fb).subset_of(s) && !fa.subset_of(s) && !fb.subset_of(s)) return false;
        }
    return true;
}

bool is_frink_ideal(const MeetSemilattice& l, const ElementSet& s) {
    if (s.empty()) return false;
    // For a finite set every finite A inside it has A^{ul} within S^{ul},
    // so the largest A decides.
    return lower_bounds(l, upper_bounds(l, s)).subset_of(s);
}

bool is_optimal_filter(const MeetSemilattice& l, const ElementSet& s) {
    return is_filter(l, s) && is_frink_ideal(l, l.poset().all() - s);
}

bool is_ideal(const MeetSemilattice& l, const ElementSet& s) {
    if (s.empty() || !l.poset().is_downset(s)) return false;
    bool ok = true;
    s.for_each([&](int a) {
        s.for_each([&](int b) {
            if (ok && !(l.poset().up(a) & l.poset().up(b)).intersects(s)) ok = false;
        });
    });
    return ok;
}

namespace {
bool meet_prime(const MeetSemilattice& l, const ElementSet& s) {
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            if (s.contains(l.meet(a, b)) && !s.contains(a) && !s.contains(b)) return false;
    return true;
}
} // namespace

bool is_prime_ideal(const MeetSemilattice& l, const ElementSet& s) {
    return is_ideal(l, s) && is_proper(l, s) && meet_prime(l, s);
}

bool is_prime_frink_ideal(const MeetSemilattice& l, const ElementSet& s) {
    return is_frink_ideal(l, s) && is_proper(l, s) && meet_prime(l, s);
}

ElementSet filter_generated(const MeetSemilattice& l, const ElementSet& x) {
    if (x.empty()) {
        if (!l.has_top()) fail(ErrorCode::EmptyGeneratorsNoTop, "empty generator set and no top element");
        return ElementSet::single(*l.top());
    }
    return l.poset().up(l.meet_all(x));
}

ElementSet frink_ideal_generated(const MeetSemilattice& l, const ElementSet& x) {
    if (x.empty()) fail(ErrorCode::EmptyGenerators, "an F-ideal needs at least one generator");
    ElementSet s = x;
    for (;;) {
        ElementSet next = s;
        const ElementSet cu = common_up(l, s);
        for (std::size_t a = 0; a < l.size(); ++a)
            if (cu.subset_of(l.poset().up(a))) next.insert(a);
        if (next == s) return s;
        s = next;
    }
}

int filter_generator(const MeetSemilattice& l, const ElementSet& f) { return l.meet_all(f); }

std::vector<ClassifiedSet> enumerate_filters(const MeetSemilattice& l, FilterKind kind) {
    std::vector<ElementSet> sets;
    for (std::size_t a = 0; a < l.size(); ++a) {
        const ElementSet& f = l.poset().up(a);
        bool keep = false;
        switch (kind) {
        case FilterKind::All: keep = true; break;
        case FilterKind::Proper: keep = is_proper(l, f); break;
        case FilterKind::Prime: keep = is_prime_filter(l, f); break;
        case FilterKind::Optimal: keep = is_optimal_filter(l, f); break;
        }
        if (keep) sets.push_back(f);
    }
    sort_canonical(sets);
    SetClass cls = kind == FilterKind::Prime     ? SetClass::PrimeFilter
                   : kind == FilterKind::Optimal ? SetClass::OptimalFilter
                                                 : SetClass::Filter;
    std::vector<ClassifiedSet> out;
    for (auto& s : sets)
        out.push_back({s, cls, kind == FilterKind::Optimal && !l.is_distributive()});
    return out;
}

std::vector<ClassifiedSet> enumerate_ideals(const MeetSemilattice& l, IdealKind kind) {
    std::vector<ElementSet> sets;
    if (kind == IdealKind::All || kind == IdealKind::Prime) {
        // Finite ideals are directed downsets, hence principal.
        for (std::size_t a = 0; a < l.size(); ++a) {
            const ElementSet& i = l.poset().down(a);
            if (kind == IdealKind::All || is_prime_ideal(l, i)) sets.push_back(i);
        }
    } else {
        // F-ideals of a finite semilattice are the intersections of principal
        // downsets (the empty intersection included).
        std::vector<ElementSet> fam{l.poset().all()};
        for (std::size_t a = 0; a < l.size(); ++a) {
            std::vector<ElementSet> add;
            for (const auto& s : fam) add.push_back(s & l.poset().down(a));
            add.push_back(l.poset().down(a));
            for (auto& s : add)
                if (std::find(fam.begin(), fam.end(), s) == fam.end()) fam.push_back(s);
        }
        for (auto& s : fam) {
            ensure(is_frink_ideal(l, s), "intersection of principal downsets is an F-ideal");
            if (kind == IdealKind::Frink || is_prime_frink_ideal(l, s)) sets.push_back(s);
        }
    }
    sort_canonical(sets);
    SetClass cls = kind == IdealKind::All     ? SetClass::Ideal
                   : kind == IdealKind::Prime ? SetClass::PrimeIdeal
                   : kind == IdealKind::Frink ? SetClass::FrinkIdeal
                                              : SetClass::PrimeFrinkIdeal;
    std::vector<ClassifiedSet> out;
    for (auto& s : sets) out.push_back({s, cls, false});
    return out;
}

namespace {

ClassifiedSet separate_with(const MeetSemilattice& l, const ElementSet& f, const ElementSet& i,
                            FilterKind kind, bool frink) {
    if (!l.is_distributive()) fail(ErrorCode::NotDistributive, "separation needs a distributive semilattice");
    if (!is_filter(l, f)) fail(ErrorCode::InvalidArgument, "first argument is not a filter");
    if (frink ? !is_frink_ideal(l, i) : !is_ideal(l, i))
        fail(ErrorCode::InvalidArgument, frink ? "second argument is not an F-ideal" : "second argument is not an ideal");
    if (f.intersects(i)) fail(ErrorCode::NotDisjoint, "filter and ideal intersect");
    std::optional<ClassifiedSet> best;
    int best_gen = -1;
    for (const auto& c : enumerate_filters(l, kind)) {
        if (!f.subset_of(c.members) || c.members.intersects(i)) continue;
        int g = filter_generator(l, c.members);
        if (!best || g < best_gen) {
            best = c;
            best_gen = g;
        }
    }
    if (!best) fail(ErrorCode::NoWitness, "no separating filter found");
    return *best;
}

} // namespace

ClassifiedSet separate_prime(const MeetSemilattice& l, const ElementSet& f, const ElementSet& i) {
    return separate_with(l, f, i, FilterKind::Prime, false);
}

ClassifiedSet separate_optimal(const MeetSemilattice& l, const ElementSet& f, const ElementSet& i) {
    return separate_with(l, f, i, FilterKind::Optimal, true);
}

const char* to_string(HomKind k) {
    switch (k) {
    case HomKind::MeetTop: return "meet-top";
    case HomKind::Bounded: return "bounded";
    case HomKind::Sup: return "sup";
    case HomKind::Implicative: return "implicative";
    case HomKind::Heyting: return "heyting";
    }
    return "?";
}

std::optional<HomKind> hom_kind_from_string(const std::string& s) {
    for (HomKind k : {HomKind::MeetTop, HomKind::Bounded, HomKind::Sup, HomKind::Implicative, HomKind::Heyting})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

bool is_injective(const TotalMap& h) {
    std::vector<int> v = h;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_surjective(const TotalMap& h, std::size_t target_size) {
    std::vector<char> hit(target_size, 0);
    for (int y : h) hit[y] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool preserves_meets(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a; b < l.size(); ++b)
            if (h[l.meet(a, b)] != k.meet(h[a], h[b])) return false;
    return true;
}

bool sup_by_inclusion(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    if (l.size() > kSubsetScanLimit) fail(ErrorCode::TooLarge, "subset scan limited to 20 elements");
    bool ok = true;
    // The empty family is included: its intersection is the whole carrier.
    for_each_subset(l.size(), [&](const ElementSet& a) {
        if (!ok) return;
        const ElementSet cu = common_up(l, a);
        const ElementSet cuk = common_up(k, image(h, a));
        for (std::size_t b = 0; b < l.size() && ok; ++b)
            if (cu.subset_of(l.poset().up(b)) && !cuk.subset_of(k.poset().up(h[b]))) ok = false;
    });
    return ok;
}

bool sup_by_optimal_preimage(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    for (const auto& g : enumerate_filters(k, FilterKind::Optimal))
        if (!is_optimal_filter(l, preimage(h, g.members))) return false;
    return true;
}

bool preserves_existing_joins(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    if (l.size() > kSubsetScanLimit) fail(ErrorCode::TooLarge, "subset scan limited to 20 elements");
    bool ok = true;
    for_each_subset(l.size(), [&](const ElementSet& a) {
        if (!ok) return;
        auto j = l.join_all(a);
        if (!j) return;
        auto jk = k.join_all(image(h, a));
        if (!jk || *jk != h[*j]) ok = false;
    });
    return ok;
}

void require_kind(const MeetSemilattice& l, const MeetSemilattice& k, HomKind kind) {
    switch (kind) {
    case HomKind::MeetTop:
    case HomKind::Bounded:
    case HomKind::Sup:
        if (!l.has_top() || !k.has_top())
            fail(ErrorCode::KindUnavailable, std::string(to_string(kind)) + " needs a top on both sides");
        break;
    case HomKind::Implicative:
        if (!l.is_implicative() || !k.is_implicative())
            fail(ErrorCode::KindUnavailable, "implicative kind needs implicative source and target");
        break;
    case HomKind::Heyting:
        if (!l.is_heyting() || !k.is_heyting())
            fail(ErrorCode::KindUnavailable, "heyting kind needs Heyting source and target");
        break;
    }
}

namespace {

bool valid_table(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    if (h.size() != l.size()) return false;
    for (int y : h)
        if (y < 0 || static_cast<std::size_t>(y) >= k.size()) return false;
    return true;
}

bool preserves_arrows(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b)
            if (h[l.arrow(a, b)] != k.arrow(h[a], h[b])) return false;
    return true;
}

bool preserves_binary_joins(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a; b < l.size(); ++b) {
            auto j = l.join(a, b);
            if (!j) continue;
            auto jk = k.join(h[a], h[b]);
            if (!jk || *jk != h[*j]) return false;
        }
    return true;
}

} // namespace

bool check_hom(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h, HomKind kind) {
    require_kind(l, k, kind);
    if (!valid_table(l, k, h)) fail(ErrorCode::InvalidArgument, "map table does not fit source/target");
    if (!preserves_meets(l, k, h)) return false;
    if (h[*l.top()] != *k.top()) return false;
    switch (kind) {
    case HomKind::MeetTop: return true;
    case HomKind::Bounded: return h[l.bottom()] == k.bottom();
    case HomKind::Sup: {
        bool incl = l.size() <= kSubsetScanLimit ? sup_by_inclusion(l, k, h) : sup_by_optimal_preimage(l, k, h);
        if (l.is_distributive() && k.is_distributive() && l.size() <= kSubsetScanLimit) {
            ensure(incl == sup_by_optimal_preimage(l, k, h), "sup criteria disagree (optimal preimages)");
            ensure(incl == preserves_existing_joins(l, k, h), "sup criteria disagree (existing joins)");
        }
        return incl;
    }
    case HomKind::Implicative: return preserves_arrows(l, k, h);
    case HomKind::Heyting:
        return preserves_arrows(l, k, h) && h[l.bottom()] == k.bottom() && preserves_binary_joins(l, k, h);
    }
    return false;
}

std::vector<SemilatticeHom> enumerate_homs(const MeetSemilattice& l, const MeetSemilattice& k, HomKind kind) {
    require_kind(l, k, kind);
    const std::size_t n = l.size();
    const std::size_t m = k.size();
    // Constraint triples (a, b, c) with h(c) = op(h(a), h(b)), checked once the
    // last of the three is assigned.
    enum Op { Meet, Arrow, Join };
    struct Cons {
        int a, b, c;
        Op op;
    };
    std::vector<std::vector<Cons>> cons(n);
    auto add = [&](int a, int b, int c, Op op) {
        cons[std::max({a, b, c})].push_back({a, b, c, op});
    };
    const bool arrows = kind == HomKind::Implicative || kind == HomKind::Heyting;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a <= b) add(a, b, l.meet(a, b), Meet);
            if (arrows) add(a, b, l.arrow(a, b), Arrow);
            if (kind == HomKind::Heyting && a <= b) add(a, b, *l.join(a, b), Join);
        }
    std::vector<int> fixed(n, -1);
    fixed[*l.top()] = *k.top();
    if (kind == HomKind::Bounded || kind == HomKind::Sup || kind == HomKind::Heyting) {
        if (fixed[l.bottom()] >= 0 && fixed[l.bottom()] != k.bottom()) return {};
        fixed[l.bottom()] = k.bottom();
    }

    std::vector<SemilatticeHom> out;
    TotalMap h(n, -1);
    auto consistent = [&](std::size_t i) {
        for (const auto& c : cons[i]) {
            int want = -1;
            switch (c.op) {
            case Meet: want = k.meet(h[c.a], h[c.b]); break;
            case Arrow: want = k.arrow(h[c.a], h[c.b]); break;
            case Join: {
                auto j = k.join(h[c.a], h[c.b]);
                if (!j) return false;
                want = *j;
                break;
            }
            }
            if (h[c.c] != want) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (check_hom(l, k, h, kind)) out.push_back({kind, h});
            return;
        }
        for (std::size_t y = 0; y < m; ++y) {
            if (fixed[i] >= 0 && fixed[i] != static_cast<int>(y)) continue;
            h[i] = static_cast<int>(y);
            if (consistent(i)) self(self, i + 1);
        }
        h[i] = -1;
    };
    rec(rec, 0);
    return out;
}

} // namespace semidual
