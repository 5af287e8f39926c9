#include "semidual_cli/commands.hpp"

#include <iostream>

#include "CLI11.hpp"
#include "semidual/catalog.hpp"
#include "semidual/envelope.hpp"
#include "semidual_cli/dot.hpp"
#include "semidual_cli/verify.hpp"

namespace semidual::cli {

namespace {

json names_of(const FinitePoset& p, const ElementSet& s) { return p.member_names(s); }

json set_names(const FinitePoset& p, const std::vector<ElementSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(p.set_name(s));
    return out;
}

json classification_json(const Document& d, int& status) {
    const FinitePoset& p = *d.poset;
    const Classification c = classify(p);
    json j = json::object();
    j["kind"] = "classification";
    j["is_meet_semilattice"] = c.is_meet_semilattice;
    j["is_distributive"] = c.is_distributive;
    j["is_lattice"] = c.is_lattice;
    j["is_bounded"] = c.is_bounded;
    j["is_implicative"] = c.is_implicative;
    j["is_heyting"] = c.is_heyting;
    if (c.is_meet_semilattice) {
        const MeetSemilattice l = as_algebra(d);
        j["bottom"] = l.name(l.bottom());
        j["top"] = l.has_top() ? json(l.name(*l.top())) : json(nullptr);
        if (c.arrow) {
            json arrow = json::object();
            for (std::size_t a = 0; a < l.size(); ++a) {
                json row = json::object();
                for (std::size_t b = 0; b < l.size(); ++b) row[l.name(b)] = l.name((*c.arrow)(a, b));
                arrow[l.name(a)] = std::move(row);
            }
            j["arrow"] = std::move(arrow);
        }
    }
    status = c.is_meet_semilattice ? 0 : 1;
    return j;
}

json space_report_json(const GPSpace& s, SpaceMode mode, int& status) {
    const GPSReport g = check_gps(s, mode);
    const GESReport e = check_ges(s, mode);
    const auto& p = s.poset();
    json j = json::object();
    j["kind"] = "space-report";
    j["mode"] = to_string(mode);
    json conds = json::object();
    for (int i = 0; i < 5; ++i) conds[std::to_string(i + 1)] = to_string(g.conditions[i]);
    j["conditions"] = std::move(conds);
    j["ok"] = g.ok;
    j["separation_failure"] = g.separation_failure
                                  ? json::array({p.name(g.separation_failure->first), p.name(g.separation_failure->second)})
                                  : json(nullptr);
    json dir = json::array();
    for (int x : g.directedness_failures) dir.push_back(p.name(x));
    j["directedness_failures"] = std::move(dir);
    json es = json::object();
    es["valid"] = e.valid;
    es["difference_pairs"] = e.difference_pairs;
    es["esakia_clopens"] = set_names(p, e.esakia_clopens);
    es["down_clopen"] = "vacuous";
    es["arrow_closed"] = e.arrow_closed;
    es["max_condition"] = e.lemma_ok;
    es["max_violations"] = set_names(p, e.max_violations);
    es["converse_counterexamples"] = set_names(p, e.converse_counterexamples);
    j["esakia"] = std::move(es);
    status = g.ok ? 0 : 1;
    return j;
}

json gp_flags_json(const GPFlags& f) {
    json j = json::object();
    j["kind"] = "relation-report";
    j["cond1"] = f.cond1;
    j["cond2"] = f.cond2;
    j["gp"] = f.gp;
    j["total"] = f.total;
    j["functional"] = f.functional;
    j["esakia"] = f.esakia;
    j["onto"] = f.onto;
    j["one_one"] = f.one_one;
    return j;
}

json partial_flags_json(const PartialFlags& f) {
    json j = json::object();
    j["kind"] = "partial-report";
    j["cond1"] = f.cond1;
    j["cond2"] = f.cond2;
    j["cond3"] = f.cond3;
    j["cond4"] = f.cond4;
    j["esakia"] = f.esakia;
    j["kohler"] = f.kohler;
    j["well"] = f.well;
    j["heyting"] = f.heyting;
    j["onto"] = f.onto;
    j["one_one"] = f.one_one;
    return j;
}

HomKind declared_kind(const Document& d) { return *hom_kind_from_string(d.homkind); }

json output(const json& result, const std::string& format) {
    if (format == "dot") return json(export_dot(parse_json(result)));
    return result;
}

void print(std::ostream& out, const json& j) {
    if (j.is_string())
        out << j.get<std::string>();
    else
        out << dump(j);
}

} // namespace

json cmd_check(const Document& d, SpaceMode mode, int& status) {
    switch (d.kind) {
    case DocKind::Poset:
    case DocKind::Semilattice: return classification_json(d, status);
    case DocKind::Space: return space_report_json(as_space(d), mode, status);
    case DocKind::Hom: {
        const MeetSemilattice l = as_algebra(*d.source), k = as_algebra(*d.target);
        const bool holds = check_hom(l, k, d.map, declared_kind(d));
        json j = json::object();
        j["kind"] = "hom-report";
        j["homkind"] = d.homkind;
        j["holds"] = holds;
        j["injective"] = is_injective(d.map);
        j["surjective"] = is_surjective(d.map, k.size());
        status = holds ? 0 : 1;
        return j;
    }
    case DocKind::Relation: {
        const GPFlags f = check_gp_morphism(as_space(*d.source), as_space(*d.target), d.relation);
        status = f.gp ? 0 : 1;
        return gp_flags_json(f);
    }
    case DocKind::Partial: {
        const PartialFlags f = check_partial(as_space(*d.source), as_space(*d.target), d.partial);
        status = f.esakia ? 0 : 1;
        return partial_flags_json(f);
    }
    }
    fail(ErrorCode::UnsupportedKind, "unknown document kind");
}

json cmd_dualize(const Document& d, SpaceMode mode) {
    if (is_algebra(d)) return emit(space_document(dual_space(as_algebra(d))));
    if (d.kind == DocKind::Space) return emit(algebra_document(dual_algebra(as_space(d), mode)));
    fail(ErrorCode::UnsupportedKind, std::string("cannot dualize a ") + to_string(d.kind) + " document");
}

json cmd_envelope(const Document& d) {
    const MeetSemilattice l = as_algebra(d);
    const SigmaLattice s = sigma_lattice(l);
    const MeetSemilattice carrier = s.as_lattice();
    json j = json::object();
    j["kind"] = "envelope";
    j["distributive"] = s.is_envelope;
    j["sigma_injective"] = s.injective;
    j["points"] = s.point_names;
    json pf = json::array();
    for (const auto& p : s.points) pf.push_back(names_of(l.poset(), p));
    j["prime_filters"] = std::move(pf);
    json sigma = json::object();
    for (std::size_t a = 0; a < l.size(); ++a) {
        json pts = json::array();
        s.sigma[a].for_each([&](int i) { pts.push_back(s.point_names[i]); });
        sigma[l.name(a)] = std::move(pts);
    }
    j["sigma"] = std::move(sigma);
    j["carrier"] = emit(algebra_document(carrier));
    if (s.is_envelope) {
        json ideals = json::array();
        for (const auto& p : ideal_correspondence(l)) {
            json e = json::object();
            e["frink_ideal"] = names_of(l.poset(), p.frink_ideal);
            e["envelope_ideal"] = names_of(carrier.poset(), p.envelope_ideal);
            e["prime"] = p.prime;
            ideals.push_back(std::move(e));
        }
        j["ideal_correspondence"] = std::move(ideals);
        json filters = json::array();
        for (const auto& p : optimal_prime_correspondence(l)) {
            json e = json::object();
            e["envelope_prime"] = names_of(carrier.poset(), p.envelope_prime);
            e["optimal"] = names_of(l.poset(), p.optimal);
            filters.push_back(std::move(e));
        }
        j["optimal_prime"] = std::move(filters);
    }
    return j;
}

json cmd_hom2rel(const Document& d) {
    if (d.kind != DocKind::Hom) fail(ErrorCode::UnsupportedKind, "hom2rel needs a hom document");
    const MeetSemilattice l = as_algebra(*d.source), k = as_algebra(*d.target);
    if (!check_hom(l, k, d.map, declared_kind(d)))
        fail(ErrorCode::ValidationError, "map is not a " + d.homkind + " homomorphism");
    const HomRelation hr = rel_from_hom(l, k, d.map);
    return emit(relation_document(hr.source, hr.target, hr.rel));
}

json cmd_rel2hom(const Document& d) {
    if (d.kind != DocKind::Relation) fail(ErrorCode::UnsupportedKind, "rel2hom needs a relation document");
    const RelationHom rh = hom_from_rel(as_space(*d.source), as_space(*d.target), d.relation);
    return emit(hom_document(HomKind::MeetTop, rh.source, rh.target, rh.table));
}

json cmd_fn2rel(const Document& d) {
    if (d.kind != DocKind::Partial) fail(ErrorCode::UnsupportedKind, "fn2rel needs a partial document");
    Document out;
    out.kind = DocKind::Relation;
    out.relation = rel_from_partial(as_space(*d.source), as_space(*d.target), d.partial);
    take_source(out, d);
    take_target(out, d);
    return emit(out);
}

json cmd_rel2fn(const Document& d) {
    if (d.kind != DocKind::Relation) fail(ErrorCode::UnsupportedKind, "rel2fn needs a relation document");
    Document out;
    out.kind = DocKind::Partial;
    out.partial = partial_from_rel(as_space(*d.source), as_space(*d.target), d.relation);
    take_source(out, d);
    take_target(out, d);
    return emit(out);
}

json cmd_compose(const Document& first, const Document& second) {
    if (first.kind != second.kind || (first.kind != DocKind::Relation && first.kind != DocKind::Partial))
        fail(ErrorCode::UnsupportedKind, "compose needs two relation or two partial documents");
    const GPSpace x = as_space(*first.source), y = as_space(*first.target);
    const GPSpace y2 = as_space(*second.source), z = as_space(*second.target);
    if (!(y == y2)) fail(ErrorCode::CompositionMismatch, "target of the first does not match source of the second");
    Document out;
    out.kind = first.kind;
    if (first.kind == DocKind::Relation)
        out.relation = compose_star(x, y, z, first.relation, second.relation);
    else
        out.partial = compose_partial(x, y, z, first.partial, second.partial);
    take_source(out, first);
    take_target(out, second);
    return emit(out);
}

namespace {

json enumerate_json(const std::string& what, const std::vector<std::string>& files, const std::string& kind,
                    std::size_t max_size) {
    json j = json::object();
    if (what == "posets") {
        if (max_size > 7) fail(ErrorCode::SizeLimitExceeded, "catalog limited to 7 elements");
        j["kind"] = "catalog";
        j["max_size"] = max_size;
        json counts = json::array(), posets = json::array();
        for (std::size_t n = 1; n <= max_size; ++n) {
            auto level = posets_of_size(n);
            counts.push_back(level.size());
            for (const auto& p : level) posets.push_back(emit(poset_document(p)));
        }
        j["counts"] = std::move(counts);
        j["posets"] = std::move(posets);
        return j;
    }
    if (files.size() != 2) fail(ErrorCode::InvalidArgument, "enumerate " + what + " needs a source and a target");
    const Document src = parse_file(files[0]), tgt = parse_file(files[1]);
    if (what == "homs") {
        const std::string k = kind.empty() ? "meet-top" : kind;
        auto hk = hom_kind_from_string(k);
        if (!hk) fail(ErrorCode::InvalidArgument, "unknown hom kind '" + k + "'");
        const MeetSemilattice l = as_algebra(src), m = as_algebra(tgt);
        const auto homs = enumerate_homs(l, m, *hk);
        j["kind"] = "hom-list";
        j["homkind"] = k;
        j["count"] = homs.size();
        json maps = json::array();
        for (const auto& h : homs) {
            json e = json::object();
            for (std::size_t a = 0; a < l.size(); ++a) e[l.name(a)] = m.name(h.table[a]);
            maps.push_back(std::move(e));
        }
        j["maps"] = std::move(maps);
        return j;
    }
    const GPSpace x = as_space(src), y = as_space(tgt);
    if (what == "relations") {
        const std::string k = kind.empty() ? "gp" : kind;
        j["kind"] = "relation-list";
        j["filter"] = k;
        json rels = json::array();
        for (const auto& r : enumerate_gp_relations(x, y)) {
            const GPFlags f = check_gp_morphism(x, y, r);
            bool keep = k == "gp" || (k == "total" && f.total) || (k == "functional" && f.functional) ||
                        (k == "esakia" && f.esakia) || (k == "onto" && f.onto) || (k == "one-one" && f.one_one);
            if (k != "gp" && k != "total" && k != "functional" && k != "esakia" && k != "onto" && k != "one-one")
                fail(ErrorCode::InvalidArgument, "unknown relation filter '" + k + "'");
            if (!keep) continue;
            json pairs = json::array();
            for (auto [a, b] : relation_pairs(r)) pairs.push_back(json::array({x.poset().name(a), y.poset().name(b)}));
            rels.push_back(std::move(pairs));
        }
        j["count"] = rels.size();
        j["relations"] = std::move(rels);
        return j;
    }
    if (what == "partials") {
        const std::string k = kind.empty() ? "esakia" : kind;
        PartialKind pk;
        if (k == "esakia") pk = PartialKind::Esakia;
        else if (k == "kohler") pk = PartialKind::Kohler;
        else if (k == "well") pk = PartialKind::Well;
        else if (k == "heyting") pk = PartialKind::Heyting;
        else fail(ErrorCode::InvalidArgument, "unknown partial kind '" + k + "'");
        j["kind"] = "partial-list";
        j["filter"] = k;
        json fns = json::array();
        for (const auto& f : enumerate_partial(x, y, pk)) {
            json e = json::object();
            e["dom"] = x.poset().member_names(f.dom);
            json m = json::object();
            f.dom.for_each([&](int a) { m[x.poset().name(a)] = y.poset().name(f.map[a]); });
            e["map"] = std::move(m);
            fns.push_back(std::move(e));
        }
        j["count"] = fns.size();
        j["functions"] = std::move(fns);
        return j;
    }
    if (what == "strong") {
        const std::string k = kind.empty() ? "priestley" : kind;
        if (k != "priestley" && k != "esakia") fail(ErrorCode::InvalidArgument, "unknown strong kind '" + k + "'");
        j["kind"] = "strong-list";
        j["filter"] = k;
        json maps = json::array();
        for (const auto& f : enumerate_strong(x, y, k == "esakia" ? StrongKind::Esakia : StrongKind::Priestley)) {
            json e = json::object();
            for (std::size_t a = 0; a < x.size(); ++a) e[x.poset().name(a)] = y.poset().name(f[a]);
            maps.push_back(std::move(e));
        }
        j["count"] = maps.size();
        j["maps"] = std::move(maps);
        return j;
    }
    fail(ErrorCode::InvalidArgument, "unknown enumeration '" + what + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite duality workbench for distributive and implicative meet semi-lattices", "semidual"};
    app.require_subcommand(1);

    std::string mode_name = "strict";
    std::string format = "json";
    std::string kind;
    std::string suite = "all";
    std::size_t max_size = 4;
    std::uint64_t seed = 1;
    bool timing = false;
    std::vector<std::string> files;

    auto add_mode = [&](CLI::App* c) {
        c->add_option("--mode", mode_name, "strict|star|lenient")->check(CLI::IsMember({"strict", "star", "lenient"}));
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
    };

    auto* check = app.add_subcommand("check", "Classify or check a document");
    check->add_option("file", files, "document")->required()->expected(1);
    add_mode(check);
    auto* dualize = app.add_subcommand("dualize", "Dual space of an algebra or dual algebra of a space");
    dualize->add_option("file", files, "document")->required()->expected(1);
    add_mode(dualize);
    add_format(dualize);
    auto* envelope = app.add_subcommand("envelope", "Stone map and distributive envelope");
    envelope->add_option("file", files, "algebra document")->required()->expected(1);

    std::vector<std::pair<std::string, CLI::App*>> unary;
    for (const char* name : {"hom2rel", "rel2hom", "fn2rel", "rel2fn"}) {
        auto* c = app.add_subcommand(name, std::string("Convert with ") + name);
        c->add_option("file", files, "document")->required()->expected(1);
        add_format(c);
        unary.emplace_back(name, c);
    }
    auto* compose = app.add_subcommand("compose", "Compose two relations (or partial functions), first then second");
    compose->add_option("files", files, "first and second document")->required()->expected(2);
    add_format(compose);

    std::string what;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate homs, relations, partials, strong maps or posets");
    enumerate->add_option("what", what, "homs|relations|partials|strong|posets")
        ->required()
        ->check(CLI::IsMember({"homs", "relations", "partials", "strong", "posets"}));
    enumerate->add_option("files", files, "source and target documents");
    enumerate->add_option("--kind", kind, "kind filter");
    enumerate->add_option("--max-size", max_size, "largest poset size for the catalog");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "duality|esakia|envelope|frink|category|all")
        ->check(CLI::IsMember({"duality", "esakia", "envelope", "frink", "category", "all"}));
    verify->add_option("--max-size", max_size, "largest instance size (at most 7)");
    verify->add_option("--seed", seed, "seed for sampled probes");
    verify->add_flag("--timing", timing, "include wall time in the report");

    auto* dot = app.add_subcommand("export-dot", "Render a document as DOT");
    dot->add_option("file", files, "document")->required()->expected(1);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const SpaceMode mode = *space_mode_from_string(mode_name);
        if (check->parsed()) {
            int status = 0;
            json j = cmd_check(parse_file(files[0]), mode, status);
            print(out, j);
            return status;
        }
        if (dualize->parsed()) {
            print(out, output(cmd_dualize(parse_file(files[0]), mode), format));
            return 0;
        }
        if (envelope->parsed()) {
            print(out, cmd_envelope(parse_file(files[0])));
            return 0;
        }
        for (const auto& [name, c] : unary) {
            if (!c->parsed()) continue;
            const Document d = parse_file(files[0]);
            json j = name == "hom2rel"   ? cmd_hom2rel(d)
                     : name == "rel2hom" ? cmd_rel2hom(d)
                     : name == "fn2rel"  ? cmd_fn2rel(d)
                                         : cmd_rel2fn(d);
            print(out, output(j, format));
            return 0;
        }
        if (compose->parsed()) {
            print(out, output(cmd_compose(parse_file(files[0]), parse_file(files[1])), format));
            return 0;
        }
        if (enumerate->parsed()) {
            print(out, enumerate_json(what, files, kind, max_size));
            return 0;
        }
        if (verify->parsed()) {
            const SuiteReport rep = run_suite(suite, max_size, seed);
            print(out, to_json(rep, timing));
            if (!timing) err << "verify: " << rep.wall_seconds << " s\n";
            return rep.pass() ? 0 : 1;
        }
        if (dot->parsed()) {
            out << export_dot(parse_file(files[0]));
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace semidual::cli
