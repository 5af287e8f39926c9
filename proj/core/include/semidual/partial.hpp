#pragma once

#include <vector>

#include "semidual/morphisms.hpp"

namespace semidual {

// Partial map X -> Y; map[x] = -1 outside dom.
struct PartialFn {
    ElementSet dom;
    std::vector<int> map;
    friend bool operator==(const PartialFn&, const PartialFn&) = default;
};

PartialFn make_partial(std::size_t source_size, const std::vector<IndexPair>& assignments);
// f[up(x)] over the domain.
ElementSet partial_image_above(const GPSpace& x, const PartialFn& f, int p);

struct PartialFlags {
    bool cond1 = false; // strictly monotone on dom
    bool cond2 = false; // strict increases lift
    bool cond3 = false; // (down f^{-1}(U^c))^c admissible
    bool cond4 = false; // separation of f[up x]
    bool esakia = false;
    bool kohler = false;
    bool well = false;
    bool heyting = false;
    bool onto = false;
    bool one_one = false;
};

enum class PartialKind { Esakia, Kohler, Well, Heyting };
// Literal scans; on spaces with X0 = X, Y0 = Y the esakia and kohler flags
// are asserted equal.
PartialFlags check_partial(const GPSpace& x, const GPSpace& y, const PartialFn& f);
bool check_partial(const GPSpace& x, const GPSpace& y, const PartialFn& f, PartialKind kind);

// E_R classes by row equality; dom = points with a principal row that are
// maximal in their class.
PartialFn partial_from_rel(const GPSpace& x, const GPSpace& y, const Relation& r);
// x R_f y iff some z in dom has x <= z and f(z) = y.
Relation rel_from_partial(const GPSpace& x, const GPSpace& y, const PartialFn& f);

TotalMap esakia_fn_from_partial(const GPSpace& x, const GPSpace& y, const PartialFn& f);
PartialFn partial_from_esakia_fn(const GPSpace& x, const GPSpace& y, const TotalMap& g);

// g * f for f: X -> Y and g: Y -> Z.
PartialFn compose_partial(const GPSpace& x, const GPSpace& y, const GPSpace& z, const PartialFn& f, const PartialFn& g);

// All partial maps passing check_partial(kind), domain-major lexicographic order.
std::vector<PartialFn> enumerate_partial(const GPSpace& x, const GPSpace& y, PartialKind kind);

} // namespace semidual
