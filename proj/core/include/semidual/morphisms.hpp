#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semidual/dualspace.hpp"

namespace semidual {

// Relation R between two spaces stored as rows: rows[x] = R[x] over the target.
struct Relation {
    std::vector<ElementSet> rows;
    friend bool operator==(const Relation&, const Relation&) = default;
};

ElementSet box(const Relation& r, const ElementSet& a);
// Order relation of a space (R[x] = up(x)), the identity for composition.
Relation identity_relation(const GPSpace& x);
std::vector<IndexPair> relation_pairs(const Relation& r);
Relation relation_from_pairs(std::size_t source_size, const std::vector<IndexPair>& pairs);

struct GPFlags {
    bool cond1 = false; // separation by admissible upsets
    bool cond2 = false; // box maps Y* into X*
    bool gp = false;
    bool total = false;
    bool functional = false;
    bool esakia = false;
    bool onto = false;
    bool one_one = false;
};

// Literal scan of the defining conditions; never throws on raw relations.
GPFlags check_gp_morphism(const GPSpace& x, const GPSpace& y, const Relation& r);
// Rows are upsets and x <= x' gives R[x'] within R[x]; equivalent to gp when X0 = X, Y0 = Y.
bool gp_closed_form(const GPSpace& x, const GPSpace& y, const Relation& r);
// Pointwise consequences of one_one: x !<= y gives R[y] not within R[x], and
// x outside an admissible U gives R[x] not within R[U]. Weaker than one_one in general.
bool one_one_pointwise(const GPSpace& x, const GPSpace& y, const Relation& r);

// Homomorphism h: L -> K; the relation runs from K_* to L_*.
struct HomRelation {
    GPSpace source; // K_*
    GPSpace target; // L_*
    Relation rel;
};
HomRelation rel_from_hom(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h);

// h_R: Y* -> X* on the dual algebras, indexed by admissible upsets.
struct RelationHom {
    MeetSemilattice source; // Y*
    MeetSemilattice target; // X*
    TotalMap table;
};
RelationHom hom_from_rel(const GPSpace& x, const GPSpace& y, const Relation& r);

// S * R for R: X -> Y and S: Y -> Z.
Relation compose_star(const GPSpace& x, const GPSpace& y, const GPSpace& z, const Relation& r, const Relation& s);
// Same, with the spaces' consistency checked by the caller. No gp check.
Relation compose_star_unchecked(const GPSpace& x, const GPSpace& z, const Relation& r, const Relation& s);

// All gp relations X -> Y, ordered by rows in canonical upset order.
std::vector<Relation> enumerate_gp_relations(const GPSpace& x, const GPSpace& y);

// ---- strong morphisms ------------------------------------------------------

enum class StrongKind { Priestley, Esakia };
bool check_strong(const GPSpace& x, const GPSpace& y, const TotalMap& f, StrongKind kind);
TotalMap strong_from_functional(const GPSpace& x, const GPSpace& y, const Relation& r);
Relation rel_from_strong(const GPSpace& x, const GPSpace& y, const TotalMap& f);
// All total maps passing check_strong(kind) in lexicographic order.
std::vector<TotalMap> enumerate_strong(const GPSpace& x, const GPSpace& y, StrongKind kind);

// ---- transfer and frames ---------------------------------------------------

struct TransferReport {
    bool h_injective = false;
    bool h_surjective = false;
    bool r_onto = false;
    bool r_one_one = false;
    // Space-level restatement through h_R.
    bool hr_injective = false;
    bool hr_surjective = false;
};
TransferReport transfer_one_one_onto(const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h);

struct ModalReport {
    bool rows_closed = true;     // vacuous on a discrete space
    bool preimages_clopen = true; // vacuous on a discrete space
    bool gp = false;
    bool box_meets = false;
    bool box_top = false;
    std::vector<ElementSet> box_table; // indexed by subset bitmask
    bool ok = false;
};
ModalReport modal_frame_check(const FinitePoset& x, const Relation& r);

// ---- category laws ---------------------------------------------------------

struct CategoryReport {
    std::size_t spaces = 0;
    std::size_t relations = 0;
    std::size_t compositions = 0;
    std::size_t triples = 0;
    bool associative = true;
    bool identities = true;
    bool box_law = true;      // box of S*R = box_R box_S
    bool functional_law = true; // S*R = S o R for functional pairs
    std::string failure;
    bool ok() const { return associative && identities && box_law && functional_law; }
};
// Exhaustive over every (X, Y, Z, W) drawn from `spaces`.
CategoryReport check_category_laws(const std::vector<GPSpace>& spaces);

} // namespace semidual
