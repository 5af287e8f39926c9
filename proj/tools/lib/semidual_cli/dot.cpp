#include "semidual_cli/dot.hpp"

#include <map>
#include <sstream>

namespace semidual::cli {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

void body(std::ostringstream& os, const FinitePoset& p, const ElementSet* x0, const std::string& prefix,
          const std::string& indent) {
    const auto h = p.heights();
    std::map<int, std::vector<int>> ranks;
    for (std::size_t i = 0; i < p.size(); ++i) ranks[h[i]].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < p.size(); ++i) {
        os << indent << quote(prefix + p.name(i));
        std::string attrs;
        if (!prefix.empty()) attrs += "label=" + quote(p.name(i));
        if (x0 && x0->contains(i)) attrs += std::string(attrs.empty() ? "" : ", ") + "shape=doublecircle";
        if (!attrs.empty()) os << " [" << attrs << "]";
        os << ";\n";
    }
    for (const auto& [rank, members] : ranks) {
        os << indent << "{ rank=same;";
        for (int m : members) os << ' ' << quote(prefix + p.name(m)) << ';';
        os << " }\n";
    }
    for (auto [a, b] : p.covers()) os << indent << quote(prefix + p.name(a)) << " -> " << quote(prefix + p.name(b)) << ";\n";
}

} // namespace

std::string poset_dot(const FinitePoset& p, const ElementSet* x0) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
    body(os, p, x0, "", "  ");
    os << "}\n";
    return os.str();
}

std::string relation_dot(const FinitePoset& x, const FinitePoset& y, const Relation& r) {
    std::ostringstream os;
    os << "digraph relation {\n  rankdir=BT;\n  node [shape=circle];\n";
    os << "  subgraph cluster_source {\n    label=\"source\";\n";
    body(os, x, nullptr, "s:", "    ");
    os << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
    body(os, y, nullptr, "t:", "    ");
    os << "  }\n";
    for (auto [a, b] : relation_pairs(r))
        os << "  " << quote("s:" + x.name(a)) << " -> " << quote("t:" + y.name(b))
           << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const Document& d) {
    switch (d.kind) {
    case DocKind::Poset:
    case DocKind::Semilattice: return poset_dot(*d.poset);
    case DocKind::Space: return poset_dot(*d.poset, &d.x0);
    case DocKind::Relation: return relation_dot(*d.source->poset, *d.target->poset, d.relation);
    default: break;
    }
    fail(ErrorCode::UnsupportedKind, std::string("cannot render a ") + to_string(d.kind) + " document as DOT");
}

} // namespace semidual::cli
