#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "semidual/catalog.hpp"
#include "semidual_cli/document.hpp"

using namespace semidual;
using namespace semidual::cli;

namespace {

const std::filesystem::path fixtures = SEMIDUAL_FIXTURES;

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalError;
}

} // namespace

TEST_CASE("every well-formed fixture round trips") {
    for (const char* name : {"diamond.json", "d4_yz.json", "c2.json", "c3.json", "v3.json", "m3.json", "worked_hom.json",
                             "worked_relation.json", "worked_x.json", "partial_fn.json", "partial_relation.json",
                             "lenient_chain.json", "bad_relation.json", "inline_hom.json", "no_meet.json"}) {
        CAPTURE(name);
        const Document d = parse_file(fixtures / name);
        const std::string text = dump(emit(d));
        const Document back = parse_text(text, fixtures);
        CHECK(back == d);
        CHECK(dump(emit(back)) == text);
    }
}

TEST_CASE("generators are emitted as covers") {
    const auto j = json::parse(R"({"kind":"poset","elements":["a","b","c"],"le":[["a","b"],["b","c"],["a","c"]]})");
    const Document d = parse_json(j);
    CHECK(emit(d)["le"].dump() == R"([["a","b"],["b","c"]])");
    CHECK(d.poset->le(0, 2));
}

TEST_CASE("endpoint references keep their form") {
    const Document h = parse_file(fixtures / "worked_hom.json");
    CHECK(emit(h)["source"] == "d4_yz.json");
    CHECK(h.source->poset->names() == std::vector<std::string>{"0", "y", "z", "1"});
    CHECK(h.map == TotalMap{0, 0, 0, 1});
    const Document inl = parse_file(fixtures / "inline_hom.json");
    CHECK(emit(inl)["source"].is_object());
    CHECK(emit(inl)["target"] == "c2.json");
}

TEST_CASE("document kinds and views") {
    const Document p = parse_file(fixtures / "partial_fn.json");
    CHECK(p.kind == DocKind::Partial);
    CHECK(p.partial.dom == ElementSet{1});
    const Document s = parse_file(fixtures / "lenient_chain.json");
    CHECK(as_space(s).x0() == ElementSet{1});
    CHECK(code_of([&] { as_algebra(s); }) == ErrorCode::UnsupportedKind);
    const Document d = parse_file(fixtures / "diamond.json");
    CHECK(as_algebra(d).top() == 3);
    CHECK(as_space(d).full_x0());
    CHECK(std::string(to_string(DocKind::Relation)) == "relation");
}

TEST_CASE("error mapping") {
    CHECK(code_of([] { parse_file(fixtures / "malformed.json"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_file(fixtures / "missing.json"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_file(fixtures / "missing_field.json"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_file(fixtures / "unknown_element.json"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_file(fixtures / "cycle.json"); }) == ErrorCode::ValidationError);
    CHECK(code_of([] { parse_file(fixtures / "duplicate.json"); }) == ErrorCode::ValidationError);
    CHECK(code_of([] { parse_file(fixtures / "wrong_top.json"); }) == ErrorCode::ValidationError);
    CHECK(code_of([] { parse_text(R"({"kind":"poset","elements":"a"})"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_text(R"({"kind":"lattice","elements":["a"]})"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_text(R"([1,2])"); }) == ErrorCode::SchemaError);
    CHECK(code_of([] { parse_text("{"); }) == ErrorCode::ParseError);
}

TEST_CASE("constructed documents") {
    const auto d = make_diamond();
    const Document a = algebra_document(d);
    CHECK(a.kind == DocKind::Semilattice);
    CHECK(a.top == "1");
    const Document h = hom_document(HomKind::Bounded, d, d, {0, 1, 2, 3});
    CHECK(emit(h)["homkind"] == "bounded");
    CHECK(parse_json(emit(h)) == h);
    const GPSpace x(chain_poset(2));
    const Document r = relation_document(x, x, identity_relation(x));
    CHECK(emit(r)["pairs"].dump() == R"([["0","0"],["0","1"],["1","1"]])");
    CHECK(dump(json::object()) == "{}\n");
}
