#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semidual/poset.hpp"

namespace semidual {

// Finite meet semi-lattice with cached meet/join/arrow tables.
class MeetSemilattice {
public:
    // Throws NotMeetSemilattice when some pair lacks a greatest lower bound.
    // A supplied top marker must name the greatest element.
    explicit MeetSemilattice(FinitePoset p, std::optional<std::string> top_marker = std::nullopt);
    static std::optional<MeetSemilattice> try_from(const FinitePoset& p);

    const FinitePoset& poset() const { return poset_; }
    std::size_t size() const { return poset_.size(); }
    const std::string& name(int a) const { return poset_.name(a); }
    bool le(int a, int b) const { return poset_.le(a, b); }

    int meet(int a, int b) const { return meet_[a * size() + b]; }
    // Meet of a nonempty set; the empty meet is the top (InvalidArgument without one).
    int meet_all(const ElementSet& s) const;
    std::optional<int> join(int a, int b) const {
        int j = join_[a * size() + b];
        if (j < 0) return std::nullopt;
        return j;
    }
    // Least upper bound of s if it exists; the empty join is the bottom.
    std::optional<int> join_all(const ElementSet& s) const;

    int bottom() const { return bottom_; }
    bool has_top() const { return top_.has_value(); }
    std::optional<int> top() const { return top_; }

    bool is_lattice() const { return lattice_; }
    bool is_distributive() const { return distributive_; }
    bool is_implicative() const { return implicative_; }
    bool is_heyting() const { return implicative_ && lattice_; }
    // a -> b; only meaningful when is_implicative().
    int arrow(int a, int b) const { return arrow_[a * size() + b]; }

    // Elements in a canonical order suitable for output.
    const std::vector<std::string>& names() const { return poset_.names(); }

private:
    FinitePoset poset_;
    std::vector<int> meet_;
    std::vector<int> join_;
    std::vector<int> arrow_;
    int bottom_ = 0;
    std::optional<int> top_;
    bool lattice_ = false;
    bool distributive_ = false;
    bool implicative_ = false;
};

struct ImplicativeTable {
    std::size_t n = 0;
    std::vector<int> arrow;
    int operator()(int a, int b) const { return arrow[a * n + b]; }
};

struct Classification {
    bool is_meet_semilattice = false;
    bool is_distributive = false;
    bool is_lattice = false;
    bool is_bounded = false;
    bool is_implicative = false;
    bool is_heyting = false;
    std::optional<ImplicativeTable> arrow;
};

Classification classify(const FinitePoset& p);

// Definitional distributivity scan: b1 ^ b2 <= a gives c1 >= b1, c2 >= b2 with a = c1 ^ c2.
bool distributive_by_definition(const MeetSemilattice& l);

ElementSet upper_bounds(const MeetSemilattice& l, const ElementSet& a);
ElementSet lower_bounds(const MeetSemilattice& l, const ElementSet& a);
// Intersection of the principal upsets of the members (the whole carrier for the empty set).
ElementSet common_up(const MeetSemilattice& l, const ElementSet& a);

// ---- filters and ideals ---------------------------------------------------

enum class SetClass { Filter, PrimeFilter, OptimalFilter, Ideal, PrimeIdeal, FrinkIdeal, PrimeFrinkIdeal };
const char* to_string(SetClass c);

struct ClassifiedSet {
    ElementSet members;
    SetClass classification = SetClass::Filter;
    // Optimal filters computed on a non-distributive input.
    bool definitional_extension = false;
    friend bool operator==(const ClassifiedSet&, const ClassifiedSet&) = default;
};

bool is_filter(const MeetSemilattice& l, const ElementSet& s);
bool is_proper(const MeetSemilattice& l, const ElementSet& s);
bool is_prime_filter(const MeetSemilattice& l, const ElementSet& s);
bool is_optimal_filter(const MeetSemilattice& l, const ElementSet& s);
bool is_ideal(const MeetSemilattice& l, const ElementSet& s);
bool is_prime_ideal(const MeetSemilattice& l, const ElementSet& s);
bool is_frink_ideal(const MeetSemilattice& l, const ElementSet& s);
bool is_prime_frink_ideal(const MeetSemilattice& l, const ElementSet& s);

ElementSet filter_generated(const MeetSemilattice& l, const ElementSet& x);
ElementSet frink_ideal_generated(const MeetSemilattice& l, const ElementSet& x);

enum class FilterKind { All, Proper, Prime, Optimal };
enum class IdealKind { All, Prime, Frink, PrimeFrink };

std::vector<ClassifiedSet> enumerate_filters(const MeetSemilattice& l, FilterKind kind);
std::vector<ClassifiedSet> enumerate_ideals(const MeetSemilattice& l, IdealKind kind);

// Generator of a finite filter (its meet).
int filter_generator(const MeetSemilattice& l, const ElementSet& f);

ClassifiedSet separate_prime(const MeetSemilattice& l, const ElementSet& f, const ElementSet& i);
ClassifiedSet separate_optimal(const MeetSemilattice& l, const ElementSet& f, const ElementSet& i);

// ---- homomorphisms ---------------------------------------------------------

enum class HomKind { MeetTop, Bounded, Sup, Implicative, Heyting };
const char* to_string(HomKind k);
std::optional<HomKind> hom_kind_from_string(const std::string& s);

struct SemilatticeHom {
    HomKind kind = HomKind::MeetTop;
    TotalMap table;
    friend bool operator==(const SemilatticeHom&, const SemilatticeHom&) = default;
};

bool preserves_meets(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h);
// The three sup criteria; they agree on distributive inputs.
bool sup_by_inclusion(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h);
bool sup_by_optimal_preimage(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h);
bool preserves_existing_joins(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h);

// Throws KindUnavailable when the structures cannot carry the kind.
bool check_hom(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h, HomKind kind);
void require_kind(const MeetSemilattice& l, const MeetSemilattice& k, HomKind kind);

// All maps passing check_hom, in lexicographic order of their tables.
std::vector<SemilatticeHom> enumerate_homs(const MeetSemilattice& l, const MeetSemilattice& k, HomKind kind);

bool is_injective(const TotalMap& h);
bool is_surjective(const TotalMap& h, std::size_t target_size);

} // namespace semidual
