#pragma once

#include <cstddef>
#include <vector>

#include "semidual/poset.hpp"
#include "semidual/semilattice.hpp"

namespace semidual {

// Non-isomorphic posets with exactly n elements, named "0".."n-1".
// Element indices always form a linear extension of the order.
std::vector<FinitePoset> posets_of_size(std::size_t n);
// Sizes 1..max_size, smallest first.
std::vector<FinitePoset> poset_catalog(std::size_t max_size);

std::vector<MeetSemilattice> semilattice_catalog(std::size_t max_size);
std::vector<MeetSemilattice> distributive_lattice_catalog(std::size_t max_size, std::size_t min_size = 1);

// Named fixtures.
MeetSemilattice make_chain(std::size_t n);
FinitePoset chain_poset(std::size_t n);
FinitePoset antichain_poset(std::size_t n);
MeetSemilattice make_diamond(); // 0 < a,b < 1
MeetSemilattice make_v3();      // 0 < a, 0 < b
MeetSemilattice make_m3();      // 0 < a,b,c < 1

} // namespace semidual
