#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "semidual/partial.hpp"

namespace semidual::cli {

using json = nlohmann::ordered_json;

enum class DocKind { Poset, Semilattice, Space, Hom, Relation, Partial };
const char* to_string(DocKind k);

struct Document {
    DocKind kind = DocKind::Poset;
    std::optional<FinitePoset> poset; // poset, semilattice, space
    std::optional<std::string> top;   // poset, semilattice
    ElementSet x0;                    // space
    std::string homkind;              // hom
    std::shared_ptr<const Document> source, target;
    // How the endpoints were written: a path string or an inline object.
    json source_ref, target_ref;
    TotalMap map;       // hom
    Relation relation;  // relation
    PartialFn partial;  // partial
};

bool operator==(const Document& a, const Document& b);

// Endpoints given as paths resolve against base_dir.
Document parse_json(const json& j, const std::filesystem::path& base_dir = {});
Document parse_text(const std::string& text, const std::filesystem::path& base_dir = {});
Document parse_file(const std::filesystem::path& path);
json emit(const Document& d);
std::string dump(const json& j);

// Views used by commands.
MeetSemilattice as_algebra(const Document& d);
GPSpace as_space(const Document& d);
bool is_algebra(const Document& d);
bool is_space_like(const Document& d);

// Constructors for outputs; endpoints are inlined.
Document poset_document(const FinitePoset& p, DocKind kind = DocKind::Poset, std::optional<std::string> top = {});
Document algebra_document(const MeetSemilattice& l);
Document space_document(const GPSpace& s);
Document hom_document(HomKind kind, const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h);
Document relation_document(const GPSpace& x, const GPSpace& y, const Relation& r);
Document partial_document(const GPSpace& x, const GPSpace& y, const PartialFn& f);
// Reuse an endpoint (and how it was written) from another document.
void take_source(Document& d, const Document& from);
void take_target(Document& d, const Document& from);

} // namespace semidual::cli
