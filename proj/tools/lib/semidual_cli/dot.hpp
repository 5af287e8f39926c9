#pragma once

#include <string>

#include "semidual_cli/document.hpp"

namespace semidual::cli {

// Hasse diagram, bottom to top, one rank per height. Designated points of a
// space are drawn as double circles.
std::string poset_dot(const FinitePoset& p, const ElementSet* x0 = nullptr);
// Two clusters with dashed edges for the pairs.
std::string relation_dot(const FinitePoset& x, const FinitePoset& y, const Relation& r);
// UnsupportedKind for homs and partial functions.
std::string export_dot(const Document& d);

} // namespace semidual::cli
