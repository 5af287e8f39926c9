#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semidual/semilattice.hpp"

namespace semidual {

// sigma(a) = prime filters containing a; the carrier is the union-closure of
// the sigma images, each stored as a set of point indices.
struct SigmaLattice {
    std::vector<ElementSet> points; // prime filters of the base, canonical order
    std::vector<std::string> point_names; // generator name of each point
    std::vector<ElementSet> sigma;  // indexed by base element
    std::vector<ElementSet> carrier; // canonical order
    bool is_envelope = false;        // base is distributive
    bool injective = false;          // distinct elements get distinct sigma images

    int index_of(const ElementSet& c) const;
    // Carrier ordered by inclusion, elements named like "{a,b}".
    FinitePoset as_poset() const;
    MeetSemilattice as_lattice() const;
};

SigmaLattice sigma_lattice(const MeetSemilattice& l);

// Both the filter test and the literal sigma inclusion are computed; they
// must agree.
bool sigma_cover(const MeetSemilattice& l, int b, const std::vector<int>& as);

struct IdealPair {
    ElementSet frink_ideal;   // over L
    ElementSet envelope_ideal; // over carrier indices
    bool prime = false;
};
std::vector<IdealPair> ideal_correspondence(const MeetSemilattice& l);

struct FilterPair {
    ElementSet envelope_prime; // over carrier indices
    ElementSet optimal;        // over L
};
std::vector<FilterPair> optimal_prime_correspondence(const MeetSemilattice& l);

struct LatticeHom {
    SigmaLattice source;
    SigmaLattice target;
    TotalMap table; // carrier index -> carrier index
};

LatticeHom extend_sup_hom(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h);

struct UniversalReport {
    bool holds = false;
    std::size_t bound = 0;
    std::size_t lattices_checked = 0;
    std::size_t maps_checked = 0;
    // On failure: the target lattice, the map h and what went wrong.
    std::optional<MeetSemilattice> counter_target;
    TotalMap counter_map;
    std::string counter_reason;
    // On success: the iso D -> carrier of D(L) carrying e onto sigma.
    std::optional<TotalMap> iso;
};

UniversalReport check_universal_property(const MeetSemilattice& l, const MeetSemilattice& d, const TotalMap& e,
                                         std::size_t bound = 6);

} // namespace semidual
