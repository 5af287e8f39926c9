// Runs the twelve acceptance criteria and prints one line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "semidual_cli/verify.hpp"

using namespace semidual::cli;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
};

Outcome from_laws(std::vector<LawResult> laws, std::vector<std::pair<std::string, bool>> anchors = {}) {
    Outcome o;
    for (const auto& l : laws) {
        if (!o.summary.empty()) o.summary += "; ";
        o.summary += l.name + " " + std::to_string(l.checked);
        if (!l.pass) {
            o.pass = false;
            o.summary += " FAILED: " + l.detail;
            if (l.counterexample) o.summary += " on " + l.counterexample->dump();
        }
    }
    for (const auto& [what, ok] : anchors) {
        o.summary += "; " + what + (ok ? "" : " FAILED");
        o.pass = o.pass && ok;
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"representation round trips (lattices <= 6)", [] { return from_laws({law_round_trips(6)}); }},
        {"hom/relation bijection (lattices <= 5)",
         [] {
             const auto homs = count_meet_top_homs_d4();
             const auto rels = count_gp_relations_a2();
             return from_laws({law_hom_relation_bijection(5)},
                              {{"homs(D4,D4)=" + std::to_string(homs), homs == 16},
                               {"relations(A2,A2)=" + std::to_string(rels), rels == 16}});
         }},
        {"refinement dualities (lattices <= 5)", [] { return from_laws({law_refinements(5)}); }},
        {"esakia/kohler layer (algebras <= 6, posets <= 4)",
         [] {
             const auto c2 = count_implicative_homs(2, 2);
             const auto c32 = count_implicative_homs(3, 2);
             const auto d4 = count_heyting_endos_d4();
             return from_laws({law_esakia_layer(6, 4)},
                              {{"impl(C2,C2)=" + std::to_string(c2), c2 == 2},
                               {"impl(C3,C2)=" + std::to_string(c32), c32 == 2},
                               {"heyting(D4,D4)=" + std::to_string(d4), d4 == 4}});
         }},
        {"category laws (spaces <= 3 points)", [] { return from_laws({law_category(3)}); }},
        {"1-1/onto transfer (lattices <= 5)", [] { return from_laws({law_transfer(5)}); }},
        {"finite collapse (catalog <= 7)", [] { return from_laws({law_collapse(7)}); }},
        {"frink separation (semi-lattices <= 5)", [] { return from_laws({law_frink(5)}); }},
        {"separation lemmas (semi-lattices <= 5)", [] { return from_laws({law_separation(5)}); }},
        {"worked examples", [] { return from_laws({law_worked_examples()}); }},
        {"dual descriptions (lattices <= 6)", [] { return from_laws({law_dual_descriptions(6)}); }},
        {"negative fixtures", [] { return from_laws({law_negative_fixtures()}); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = criteria[i].second();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << "  [" << o.summary << "]\n";
        std::cerr << "criterion " << (i + 1) << " took " << secs << " s\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
