#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semidual/semilattice.hpp"

namespace semidual {

// Finite generalized Priestley space: poset X, designated X0, and the
// admissible upsets X* (upsets whose complement has its maximal points in X0).
// Topological conditions are read discretely.
class GPSpace {
public:
    GPSpace(FinitePoset x, ElementSet x0);
    // X0 = X.
    explicit GPSpace(FinitePoset x);

    const FinitePoset& poset() const { return x_; }
    const ElementSet& x0() const { return x0_; }
    std::size_t size() const { return x_.size(); }
    const std::vector<ElementSet>& admissible() const { return adm_; }
    bool is_admissible(const ElementSet& u) const;
    int admissible_index(const ElementSet& u) const;
    bool full_x0() const { return x0_ == x_.all(); }

    friend bool operator==(const GPSpace& a, const GPSpace& b) { return a.x_ == b.x_ && a.x0_ == b.x0_; }

private:
    FinitePoset x_;
    ElementSet x0_;
    std::vector<ElementSet> adm_;
};

std::vector<ElementSet> admissible_upsets(const FinitePoset& x, const ElementSet& x0);

enum class SpaceMode { Strict, Star, Lenient };
const char* to_string(SpaceMode m);
std::optional<SpaceMode> space_mode_from_string(const std::string& s);

enum class CondState { Pass, Fail, Skipped };
const char* to_string(CondState c);

struct GPSReport {
    SpaceMode mode = SpaceMode::Strict;
    // conditions[0..4] correspond to the five conditions; (1) is vacuous.
    CondState conditions[5] = {CondState::Pass, CondState::Pass, CondState::Pass, CondState::Pass, CondState::Pass};
    bool ok = true;
    // First pair (x, y) with x not <= y that no admissible upset separates, for (5).
    std::optional<IndexPair> separation_failure;
    std::vector<int> directedness_failures; // points violating (4)
};

GPSReport check_gps(const GPSpace& s, SpaceMode mode);

// X = Opt(L) under inclusion, X0 = Pr(L); points are named by the generators
// of the principal optimal filters and listed in generator order.
GPSpace dual_space(const MeetSemilattice& l);
// Generator of each dual point.
std::vector<int> dual_generators(const MeetSemilattice& l, const GPSpace& s);

// X* ordered by inclusion in canonical order, named like "{x,y}".
MeetSemilattice dual_algebra(const GPSpace& s, SpaceMode mode = SpaceMode::Strict);

struct PhiIso {
    GPSpace space;
    MeetSemilattice algebra;
    TotalMap table; // a -> index of phi(a) in algebra
};
PhiIso phi_iso(const MeetSemilattice& l);

struct PsiIso {
    MeetSemilattice algebra; // X*
    GPSpace dual;            // (X*)_*
    TotalMap table;          // x -> point of dual
};
PsiIso psi_iso(const GPSpace& s);

ElementSet heyting_arrow(const GPSpace& s, const ElementSet& u, const ElementSet& v);

struct GESReport {
    bool gps_ok = false;
    std::size_t difference_pairs = 0;
    std::vector<ElementSet> esakia_clopens;
    bool down_clopen_vacuous = true;
    bool arrow_closed = false;
    bool lemma_ok = false; // max(U) within X0 for every Esakia clopen U
    bool subsets_scanned = false;
    std::vector<ElementSet> max_violations;         // any subset with max(U) outside X0
    std::vector<ElementSet> converse_counterexamples; // max(U) within X0, not Esakia clopen
    bool valid = false;
};

GESReport check_ges(const GPSpace& s, SpaceMode mode = SpaceMode::Strict);

struct SetPair {
    ElementSet algebra_side; // over L
    ElementSet space_side;   // over points
};

struct DualDescriptions {
    std::vector<SetPair> filters;       // filters <-> upsets C with X - C = down(X0 - C)
    std::vector<SetPair> frink_ideals;  // F-ideals <-> all upsets
    std::vector<SetPair> ideals;        // ideals <-> upsets U with X - U = down(X0 - U)
    std::vector<SetPair> prime_filters; // <-> up(x), x in X0
    std::vector<SetPair> prime_ideals;  // <-> complement of down(x), x in X0
};

DualDescriptions dual_descriptions(const MeetSemilattice& l);

} // namespace semidual
