#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semidual_cli/document.hpp"

namespace semidual::cli {

struct LawResult {
    std::string name;
    bool pass = true;
    std::size_t checked = 0; // instances examined
    std::string detail;
    std::optional<json> counterexample; // the failing instance, replayable on its own
};

struct SuiteReport {
    std::string suite;
    std::size_t max_size = 0;
    std::uint64_t seed = 0;
    std::vector<LawResult> laws;
    double wall_seconds = 0;
    bool pass() const;
    std::size_t instances() const;
};

json to_json(const LawResult& r);
json to_json(const SuiteReport& r, bool timing);

// duality | esakia | envelope | frink | category | all. SizeLimitExceeded above 7.
SuiteReport run_suite(const std::string& suite, std::size_t max_size, std::uint64_t seed);

// Batteries, one per acceptance criterion, plus supporting probes.
LawResult law_round_trips(std::size_t max_lattice);
LawResult law_hom_relation_bijection(std::size_t max_lattice);
LawResult law_refinements(std::size_t max_lattice);
LawResult law_esakia_layer(std::size_t max_algebra, std::size_t max_points);
LawResult law_category(std::size_t max_points);
LawResult law_transfer(std::size_t max_lattice);
LawResult law_collapse(std::size_t max_size);
LawResult law_frink(std::size_t max_size);
LawResult law_separation(std::size_t max_size);
LawResult law_worked_examples();
LawResult law_dual_descriptions(std::size_t max_lattice);
LawResult law_negative_fixtures();

LawResult law_envelope(std::size_t max_size);
LawResult law_esakia_spaces(std::size_t max_lattice);
// one_one implies its pointwise form; counts relations separating the two.
LawResult law_one_one_formulations(std::size_t max_points);
LawResult law_document_round_trip(std::size_t max_lattice, std::uint64_t seed);

// Counting anchors.
std::size_t count_meet_top_homs_d4();
std::size_t count_gp_relations_a2();
std::size_t count_implicative_homs(std::size_t source_chain, std::size_t target_chain);
std::size_t count_heyting_endos_d4();

} // namespace semidual::cli
