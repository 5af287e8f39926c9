#include "semidual_cli/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace semidual::cli {

namespace {

constexpr int kMaxDepth = 8;

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    fail(ErrorCode::SchemaError, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) schema(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string text(const json& j, const std::string& where) {
    if (!j.is_string()) schema(where, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> text_list(const json& j, const std::string& where) {
    if (!j.is_array()) schema(where, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<NamePair> pair_list(const json& j, const std::string& where) {
    if (!j.is_array()) schema(where, "expected an array");
    std::vector<NamePair> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2) schema(at, "expected a pair");
        out.emplace_back(text(j[i][0], at + "[0]"), text(j[i][1], at + "[1]"));
    }
    return out;
}

int element(const FinitePoset& p, const std::string& name, const std::string& where) {
    auto i = p.index_of(name);
    if (!i) schema(where, "unknown element '" + name + "'");
    return *i;
}

FinitePoset parse_carrier(const json& j, const std::string& where) {
    auto elements = text_list(field(j, "elements", where), where + ".elements");
    auto le = j.contains("le") ? pair_list(j["le"], where + ".le") : std::vector<NamePair>{};
    try {
        return FinitePoset::build(std::move(elements), le);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::UnknownElement) schema(where + ".le", e.what());
        fail(ErrorCode::ValidationError, where + ": " + e.what());
    }
}

Document parse_at(const json& j, const std::filesystem::path& base, int depth, const std::string& where);

Document parse_file_at(const std::filesystem::path& path, int depth) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    json j;
    try {
        j = json::parse(ss.str());
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    return parse_at(j, path.parent_path(), depth, path.filename().string());
}

std::shared_ptr<const Document> endpoint(const json& ref, const std::filesystem::path& base, int depth,
                                         const std::string& where) {
    if (depth >= kMaxDepth) schema(where, "documents nested too deeply");
    if (ref.is_string()) return std::make_shared<Document>(parse_file_at(base / ref.get<std::string>(), depth + 1));
    if (ref.is_object()) return std::make_shared<Document>(parse_at(ref, base, depth + 1, where));
    schema(where, "expected a path or an inline document");
}

std::map<std::string, std::string> name_map(const json& j, const std::string& where) {
    if (!j.is_object()) schema(where, "expected an object");
    std::map<std::string, std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = text(it.value(), where + "." + it.key());
    return out;
}

Document parse_at(const json& j, const std::filesystem::path& base, int depth, const std::string& where) {
    Document d;
    const std::string kind = text(field(j, "kind", where), where + ".kind");
    if (kind == "poset" || kind == "semilattice") {
        d.kind = kind == "poset" ? DocKind::Poset : DocKind::Semilattice;
        d.poset = parse_carrier(j, where);
        if (j.contains("top")) {
            d.top = text(j["top"], where + ".top");
            element(*d.poset, *d.top, where + ".top");
        }
        if (d.kind == DocKind::Semilattice) {
            try {
                (void)as_algebra(d);
            } catch (const Error& e) {
                fail(ErrorCode::ValidationError, where + ": " + e.what());
            }
        }
    } else if (kind == "space") {
        d.kind = DocKind::Space;
        d.poset = parse_carrier(j, where);
        if (j.contains("x0")) {
            for (const auto& n : text_list(j["x0"], where + ".x0")) d.x0.insert(element(*d.poset, n, where + ".x0"));
        } else {
            d.x0 = d.poset->all();
        }
    } else if (kind == "hom" || kind == "relation" || kind == "partial") {
        d.kind = kind == "hom" ? DocKind::Hom : kind == "relation" ? DocKind::Relation : DocKind::Partial;
        d.source_ref = field(j, "source", where);
        d.target_ref = field(j, "target", where);
        d.source = endpoint(d.source_ref, base, depth, where + ".source");
        d.target = endpoint(d.target_ref, base, depth, where + ".target");
        const auto& src = *d.source->poset;
        const auto& tgt = *d.target->poset;
        if (d.kind == DocKind::Hom) {
            d.homkind = text(field(j, "homkind", where), where + ".homkind");
            if (!hom_kind_from_string(d.homkind)) schema(where + ".homkind", "unknown kind '" + d.homkind + "'");
            if (!is_algebra(*d.source) || !is_algebra(*d.target)) schema(where, "hom endpoints must be algebras");
            auto m = name_map(field(j, "map", where), where + ".map");
            d.map.assign(src.size(), -1);
            for (const auto& [k, v] : m)
                d.map[element(src, k, where + ".map")] = element(tgt, v, where + ".map." + k);
            for (std::size_t i = 0; i < src.size(); ++i)
                if (d.map[i] < 0) schema(where + ".map", "no image for '" + src.name(i) + "'");
        } else {
            if (!is_space_like(*d.source) || !is_space_like(*d.target))
                schema(where, "endpoints must be spaces or posets");
            if (d.kind == DocKind::Relation) {
                d.relation.rows.assign(src.size(), ElementSet{});
                const auto pairs = pair_list(field(j, "pairs", where), where + ".pairs");
                for (std::size_t i = 0; i < pairs.size(); ++i) {
                    const std::string at = where + ".pairs[" + std::to_string(i) + "]";
                    d.relation.rows[element(src, pairs[i].first, at)].insert(element(tgt, pairs[i].second, at));
                }
            } else {
                d.partial.map.assign(src.size(), -1);
                for (const auto& n : text_list(field(j, "dom", where), where + ".dom"))
                    d.partial.dom.insert(element(src, n, where + ".dom"));
                auto m = name_map(field(j, "map", where), where + ".map");
                for (const auto& [k, v] : m) {
                    int a = element(src, k, where + ".map");
                    if (!d.partial.dom.contains(a)) schema(where + ".map", "'" + k + "' is outside dom");
                    d.partial.map[a] = element(tgt, v, where + ".map." + k);
                }
                d.partial.dom.for_each([&](int a) {
                    if (d.partial.map[a] < 0) schema(where + ".map", "no image for '" + src.name(a) + "'");
                });
            }
        }
    } else {
        schema(where + ".kind", "unknown kind '" + kind + "'");
    }
    return d;
}

json carrier_json(const FinitePoset& p) {
    json j = json::object();
    j["elements"] = p.names();
    json le = json::array();
    for (auto [a, b] : p.covers()) le.push_back(json::array({p.name(a), p.name(b)}));
    j["le"] = std::move(le);
    return j;
}

json ref_json(const json& ref, const std::shared_ptr<const Document>& d) {
    if (ref.is_string()) return ref;
    return emit(*d);
}

bool same_endpoint(const std::shared_ptr<const Document>& a, const std::shared_ptr<const Document>& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}

} // namespace

const char* to_string(DocKind k) {
    switch (k) {
    case DocKind::Poset: return "poset";
    case DocKind::Semilattice: return "semilattice";
    case DocKind::Space: return "space";
    case DocKind::Hom: return "hom";
    case DocKind::Relation: return "relation";
    case DocKind::Partial: return "partial";
    }
    return "?";
}

bool operator==(const Document& a, const Document& b) {
    return a.kind == b.kind && a.poset == b.poset && a.top == b.top && a.x0 == b.x0 && a.homkind == b.homkind &&
           a.map == b.map && a.relation == b.relation && a.partial == b.partial && same_endpoint(a.source, b.source) &&
           same_endpoint(a.target, b.target);
}

Document parse_json(const json& j, const std::filesystem::path& base_dir) { return parse_at(j, base_dir, 0, "document"); }

Document parse_text(const std::string& t, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(t);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    return parse_json(j, base_dir);
}

Document parse_file(const std::filesystem::path& path) { return parse_file_at(path, 0); }

json emit(const Document& d) {
    json j = json::object();
    j["kind"] = to_string(d.kind);
    switch (d.kind) {
    case DocKind::Poset:
    case DocKind::Semilattice: {
        j.update(carrier_json(*d.poset));
        if (d.top) j["top"] = *d.top;
        break;
    }
    case DocKind::Space: {
        j.update(carrier_json(*d.poset));
        j["x0"] = d.poset->member_names(d.x0);
        break;
    }
    case DocKind::Hom: {
        j["homkind"] = d.homkind;
        j["source"] = ref_json(d.source_ref, d.source);
        j["target"] = ref_json(d.target_ref, d.target);
        json m = json::object();
        for (std::size_t i = 0; i < d.map.size(); ++i) m[d.source->poset->name(i)] = d.target->poset->name(d.map[i]);
        j["map"] = std::move(m);
        break;
    }
    case DocKind::Relation: {
        j["source"] = ref_json(d.source_ref, d.source);
        j["target"] = ref_json(d.target_ref, d.target);
        json pairs = json::array();
        for (auto [x, y] : relation_pairs(d.relation))
            pairs.push_back(json::array({d.source->poset->name(x), d.target->poset->name(y)}));
        j["pairs"] = std::move(pairs);
        break;
    }
    case DocKind::Partial: {
        j["source"] = ref_json(d.source_ref, d.source);
        j["target"] = ref_json(d.target_ref, d.target);
        j["dom"] = d.source->poset->member_names(d.partial.dom);
        json m = json::object();
        d.partial.dom.for_each(
            [&](int a) { m[d.source->poset->name(a)] = d.target->poset->name(d.partial.map[a]); });
        j["map"] = std::move(m);
        break;
    }
    }
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool is_algebra(const Document& d) { return d.kind == DocKind::Poset || d.kind == DocKind::Semilattice; }
bool is_space_like(const Document& d) { return is_algebra(d) || d.kind == DocKind::Space; }

MeetSemilattice as_algebra(const Document& d) {
    if (!is_algebra(d)) fail(ErrorCode::UnsupportedKind, std::string("expected an algebra, got ") + to_string(d.kind));
    return MeetSemilattice(*d.poset, d.top);
}

GPSpace as_space(const Document& d) {
    if (d.kind == DocKind::Space) return GPSpace(*d.poset, d.x0);
    if (is_algebra(d)) return GPSpace(*d.poset);
    fail(ErrorCode::UnsupportedKind, std::string("expected a space, got ") + to_string(d.kind));
}

Document poset_document(const FinitePoset& p, DocKind kind, std::optional<std::string> top) {
    Document d;
    d.kind = kind;
    d.poset = p;
    d.top = std::move(top);
    return d;
}

Document algebra_document(const MeetSemilattice& l) {
    std::optional<std::string> top;
    if (l.has_top()) top = l.name(*l.top());
    return poset_document(l.poset(), DocKind::Semilattice, top);
}

Document space_document(const GPSpace& s) {
    Document d;
    d.kind = DocKind::Space;
    d.poset = s.poset();
    d.x0 = s.x0();
    return d;
}

namespace {
void inline_endpoints(Document& d, Document src, Document tgt) {
    auto s = std::make_shared<const Document>(std::move(src));
    auto t = std::make_shared<const Document>(std::move(tgt));
    d.source_ref = emit(*s);
    d.target_ref = emit(*t);
    d.source = std::move(s);
    d.target = std::move(t);
}
} // namespace

Document hom_document(HomKind kind, const MeetSemilattice& l, const MeetSemilattice& k, const TotalMap& h) {
    Document d;
    d.kind = DocKind::Hom;
    d.homkind = to_string(kind);
    d.map = h;
    inline_endpoints(d, algebra_document(l), algebra_document(k));
    return d;
}

Document relation_document(const GPSpace& x, const GPSpace& y, const Relation& r) {
    Document d;
    d.kind = DocKind::Relation;
    d.relation = r;
    inline_endpoints(d, space_document(x), space_document(y));
    return d;
}

Document partial_document(const GPSpace& x, const GPSpace& y, const PartialFn& f) {
    Document d;
    d.kind = DocKind::Partial;
    d.partial = f;
    inline_endpoints(d, space_document(x), space_document(y));
    return d;
}

void take_source(Document& d, const Document& from) {
    d.source = from.source;
    d.source_ref = from.source_ref;
}

void take_target(Document& d, const Document& from) {
    d.target = from.target;
    d.target_ref = from.target_ref;
}

} // namespace semidual::cli
