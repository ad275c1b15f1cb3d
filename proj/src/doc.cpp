#include "tcat/doc.hpp"

#include <json.hpp>
#include <sstream>

namespace tcat {

using nlohmann::json;  // std::map-backed objects, so dumps are key-sorted

namespace {

Element element_from_json(const json& value, const std::string& kind) {
    if (kind == "identity") {
        if (!value.is_string()) throw ParseError("expected an object name");
        return Element::atom(value.get<std::string>());
    }
    if (kind == "maybe") {
        if (value.is_null()) return Element::atom("#none");
        if (!value.is_string()) throw ParseError("maybe values are names or null");
        return Element::tag("some", Element::atom(value.get<std::string>()));
    }
    if (kind == "writer") {
        if (!value.is_array() || value.size() != 2)
            throw ParseError("writer values are [monoid_element, name] pairs");
        return Element::pair(Element::atom(value[0].get<std::string>()),
                             Element::atom(value[1].get<std::string>()));
    }
    if (kind == "reader") {
        if (!value.is_object()) throw ParseError("reader values map points to names");
        std::vector<Element> parts;
        for (const auto& [k, v] : value.items()) {
            (void)k;  // keys are sorted by the json object
            parts.push_back(Element::atom(v.get<std::string>()));
        }
        return Element::tuple(std::move(parts));
    }
    if (kind == "list") {
        if (!value.is_array()) throw ParseError("list values are arrays of names");
        std::vector<Element> items;
        for (const auto& v : value) items.push_back(Element::atom(v.get<std::string>()));
        return Element::list(std::move(items));
    }
    throw ParseError("unknown monad kind '" + kind + "'");
}

json element_to_json(const Element& e, const std::string& kind,
                     const std::vector<std::string>& reader_points) {
    if (kind == "identity") return e.label();
    if (kind == "maybe") {
        if (e.is_atom()) return nullptr;
        return e.at(0).label();
    }
    if (kind == "writer") return json::array({e.at(0).label(), e.at(1).label()});
    if (kind == "reader") {
        json out = json::object();
        for (std::size_t i = 0; i < reader_points.size(); ++i)
            out[reader_points[i]] = e.at(i).label();
        return out;
    }
    if (kind == "list") {
        json out = json::array();
        for (const auto& v : e.parts()) out.push_back(v.label());
        return out;
    }
    throw ParseError("unknown monad kind '" + kind + "'");
}

MonadSpec monad_from_json(const json& m, std::string& kind,
                          std::vector<std::string>& reader_points, std::string& section) {
    if (!m.is_object() || !m.contains("kind"))
        throw ParseError("monad: expected {\"kind\": ...}");
    kind = m["kind"].get<std::string>();
    json canonical;
    canonical["kind"] = kind;
    if (kind == "identity" || kind == "maybe" || kind == "list") {
        section = canonical.dump();
        return kind == "identity" ? MonadSpec::identity()
                                  : (kind == "maybe" ? MonadSpec::maybe() : MonadSpec::list());
    }
    if (kind == "writer") {
        if (!m.contains("monoid")) throw ParseError("writer monad needs a monoid table");
        const json& mono = m["monoid"];
        FiniteMonoid monoid;
        for (const auto& e : mono.at("elements")) monoid.elements.push_back(e.get<std::string>());
        monoid.unit = mono.at("unit").get<std::string>();
        for (const auto& [a, row] : mono.at("table").items())
            for (const auto& [b, c] : row.items()) monoid.table[{a, b}] = c.get<std::string>();
        std::sort(monoid.elements.begin(), monoid.elements.end());
        json table = json::object();
        for (const auto& [key, value] : monoid.table) table[key.first][key.second] = value;
        canonical["monoid"] = {{"elements", monoid.elements},
                               {"table", table},
                               {"unit", monoid.unit}};
        section = canonical.dump();
        try {
            return MonadSpec::writer(std::move(monoid));
        } catch (const Error& e) {
            throw ParseError(std::string("monoid rejected: ") + e.what());
        }
    }
    if (kind == "reader") {
        if (!m.contains("set")) throw ParseError("reader monad needs a point set");
        for (const auto& s : m["set"]) reader_points.push_back(s.get<std::string>());
        std::sort(reader_points.begin(), reader_points.end());
        reader_points.erase(std::unique(reader_points.begin(), reader_points.end()),
                            reader_points.end());
        canonical["set"] = reader_points;
        section = canonical.dump();
        return MonadSpec::reader(reader_points);
    }
    throw ParseError("unknown monad kind '" + kind + "'");
}

// Rewrites a T-value over names into one over the named elements, guided by
// the monad kind: writer pairs keep their monoid component, reader tuples
// and lists relabel every slot.
Element relabel(const Element& e, const std::map<std::string, Element>& table,
                const std::string& kind, const char* what) {
    auto lookup = [&](const Element& atom) {
        auto it = table.find(atom.label());
        if (it == table.end())
            throw ParseError(std::string("unknown ") + what + " '" + atom.label() + "'");
        return it->second;
    };
    if (kind == "identity") return lookup(e);
    if (kind == "maybe") return e.is_atom() ? e : Element::tag("some", lookup(e.at(0)));
    if (kind == "writer") return Element::pair(e.at(0), lookup(e.at(1)));
    if (kind == "reader" || kind == "list") {
        std::vector<Element> parts;
        for (const auto& v : e.parts()) parts.push_back(lookup(v));
        return kind == "list" ? Element::list(std::move(parts))
                              : Element::tuple(std::move(parts));
    }
    throw ParseError("unknown monad kind '" + kind + "'");
}

TCatData tcategory_from_json(const json& t, const MonadSpec& monad, const std::string& kind,
                              const std::vector<std::string>& reader_points,
                              std::string& section) {
    if (t.contains("builtin")) {
        const std::string which = t["builtin"].get<std::string>();
        if (which == "discrete" || which == "chaotic") {
            std::vector<std::string> names;
            for (const auto& o : t.at("objects")) names.push_back(o.get<std::string>());
            std::sort(names.begin(), names.end());
            section = json{{"builtin", which}, {"objects", names}}.dump();
            SetObj E = SetObj::of_names(names);
            return which == "discrete" ? discrete_tcat(E, monad) : chaotic_tcat(E, monad);
        }
        if (which == "algebra") {
            std::vector<std::string> names;
            for (const auto& o : t.at("carrier")) names.push_back(o.get<std::string>());
            std::sort(names.begin(), names.end());
            SetObj A = SetObj::of_names(names);
            SetObj TA = monad.apply(A);
            std::vector<std::pair<Element, Element>> entries;
            json action = json::object();
            for (const auto& [k, v] : t.at("action").items()) {
                auto key = Element::parse(k);
                if (!key || !TA.contains(*key))
                    throw ParseError("action key '" + k + "' is not an element of TA");
                entries.emplace_back(*key, Element::atom(v.get<std::string>()));
                action[key->show()] = v.get<std::string>();
            }
            section =
                json{{"action", action}, {"builtin", which}, {"carrier", names}}.dump();
            try {
                return algebra_tcat(A, Morph::table(TA, A, std::move(entries), "action"),
                                    monad);
            } catch (const CapabilityError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(std::string("algebra rejected: ") + e.what());
            }
        }
        throw ParseError("unknown builtin '" + which + "'");
    }

    std::vector<std::string> object_names;
    for (const auto& o : t.at("objects")) object_names.push_back(o.get<std::string>());
    SetObj X0 = SetObj::of_names(object_names);

    std::map<std::string, Element> obj_table;
    for (const auto& o : object_names) obj_table[o] = Element::atom(o);

    std::vector<Element> arrow_elems;
    std::map<std::string, Element> arrow_table;
    std::vector<std::pair<Element, Element>> d0_entries, d1_entries;
    SetObj TX0 = monad.apply(X0);
    for (const auto& a : t.at("arrows")) {
        std::string name = a.at("name").get<std::string>();
        Element arrow = Element::atom(name);
        if (arrow_table.count(name)) throw ParseError("duplicate arrow '" + name + "'");
        arrow_table[name] = arrow;
        arrow_elems.push_back(arrow);
        std::string dom = a.at("dom").get<std::string>();
        if (!obj_table.count(dom)) throw ParseError("unknown object '" + dom + "'");
        d0_entries.emplace_back(arrow, Element::atom(dom));
        Element tvalue = element_from_json(a.at("cod_list_or_T_value"), kind);
        if (!TX0.contains(tvalue))
            throw ParseError("arrow '" + name + "' has an input outside T(objects)");
        d1_entries.emplace_back(arrow, tvalue);
    }
    SetObj X1 = SetObj::finite(arrow_elems);
    TGraph g{monad, X0, X1, Morph::table(X1, X0, std::move(d0_entries), "d0"),
             Morph::table(X1, TX0, std::move(d1_entries), "d1")};
    ComposablePairs x2 = build_X2(g);

    std::vector<std::pair<Element, Element>> comp_entries;
    for (const auto& c : t.at("comp")) {
        std::string outer = c.at("outer").get<std::string>();
        if (!arrow_table.count(outer)) throw ParseError("unknown arrow '" + outer + "'");
        auto inner_raw = c.at("inner");
        Element inner = relabel(element_from_json(inner_raw, kind), arrow_table, kind, "arrow");
        Element key = Element::pair(arrow_table.at(outer), inner);
        if (!x2.apex.contains(key))
            throw ParseError("comp entry (" + outer + ", " + inner.show() +
                             ") is not a composable pair");
        std::string result = c.at("result").get<std::string>();
        if (!arrow_table.count(result)) throw ParseError("unknown arrow '" + result + "'");
        comp_entries.emplace_back(key, arrow_table.at(result));
    }
    std::vector<std::pair<Element, Element>> unit_entries;
    for (const auto& u : t.at("unit")) {
        std::string object = u.at("object").get<std::string>();
        std::string arrow = u.at("arrow").get<std::string>();
        if (!obj_table.count(object)) throw ParseError("unknown object '" + object + "'");
        if (!arrow_table.count(arrow)) throw ParseError("unknown arrow '" + arrow + "'");
        unit_entries.emplace_back(Element::atom(object), arrow_table.at(arrow));
    }
    TCatData built;
    try {
        built = TCatData::assemble(
            g, Morph::table(x2.apex, X1, std::move(comp_entries), "comp"),
            Morph::table(X0, X1, std::move(unit_entries), "unit"));
    } catch (const Error& e) {
        throw ParseError(std::string("tcategory rejected: ") + e.what());
    }
    json canonical;
    json objects = json::array(), arrows = json::array(), comp = json::array(),
         unit = json::array();
    for (const auto& o : built.graph.X0.elements()) objects.push_back(o.label());
    for (const auto& a : built.graph.X1.elements()) {
        json entry;
        entry["cod_list_or_T_value"] = element_to_json(built.graph.d1(a), kind, reader_points);
        entry["dom"] = built.graph.d0(a).label();
        entry["name"] = a.label();
        arrows.push_back(entry);
    }
    for (const auto& z : built.x2.apex.elements()) {
        json entry;
        entry["inner"] = element_to_json(z.at(1), kind, reader_points);
        entry["outer"] = z.at(0).label();
        entry["result"] = built.comp(z).label();
        comp.push_back(entry);
    }
    for (const auto& o : built.graph.X0.elements()) {
        json entry;
        entry["arrow"] = built.unit(o).label();
        entry["object"] = o.label();
        unit.push_back(entry);
    }
    canonical["arrows"] = arrows;
    canonical["comp"] = comp;
    canonical["objects"] = objects;
    canonical["unit"] = unit;
    section = canonical.dump();
    return built;
}

std::vector<std::pair<Element, Element>> table_from_json(const json& m, const SetObj& dom,
                                                         const char* what) {
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& [k, v] : m.items()) {
        auto key = Element::parse(k);
        auto val = Element::parse(v.get<std::string>());
        if (!key || !val) throw ParseError(std::string("bad element in ") + what);
        if (!dom.contains(*key))
            throw ParseError(std::string(what) + ": key " + k + " not in the level");
        entries.emplace_back(*key, *val);
    }
    return entries;
}

TSimplicialObject tsimplicial_from_json(const json& t, const MonadSpec& monad) {
    TSimplicialObject X;
    X.monad = monad;
    const json& levels = t.at("levels");
    X.depth = static_cast<int>(levels.size()) - 1;
    if (X.depth < 0) throw ParseError("tsimplicial: at least one level required");
    for (const auto& level : levels) {
        std::vector<Element> elems;
        for (const auto& e : level) {
            auto parsed = Element::parse(e.get<std::string>());
            if (!parsed) throw ParseError("tsimplicial: bad element " + e.dump());
            elems.push_back(*parsed);
        }
        X.levels.push_back(SetObj::finite(std::move(elems)));
    }
    X.inner.assign(X.depth + 1, {});
    X.last.assign(X.depth + 1, Morph());
    X.degen.assign(std::max(X.depth, 0), {});
    const json& faces = t.at("inner_faces");
    for (int n = 1; n <= X.depth; ++n) {
        const json& row = faces.at(n);
        if (static_cast<int>(row.size()) != n)
            throw ParseError("tsimplicial: level " + std::to_string(n) + " needs " +
                             std::to_string(n) + " inner faces");
        for (int i = 0; i < n; ++i)
            X.inner[n].push_back(Morph::table(
                X.levels[n], X.levels[n - 1], table_from_json(row.at(i), X.levels[n], "face"),
                "d" + std::to_string(i)));
    }
    const json& lasts = t.at("last_faces");
    for (int n = 1; n <= X.depth; ++n)
        X.last[n] = Morph::table(X.levels[n], monad.apply(X.levels[n - 1]),
                                 table_from_json(lasts.at(n), X.levels[n], "last face"),
                                 "d" + std::to_string(n));
    if (t.contains("degeneracies")) {
        const json& degens = t.at("degeneracies");
        for (int n = 0; n < X.depth; ++n) {
            const json& row = degens.at(n);
            for (int i = 0; i <= n; ++i)
                X.degen[n].push_back(
                    Morph::table(X.levels[n], X.levels[n + 1],
                                 table_from_json(row.at(i), X.levels[n], "degeneracy"),
                                 "s" + std::to_string(i)));
        }
    }
    return X;
}

json tsimplicial_section_json(const TSimplicialObject& X);

}  // namespace

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    Document doc;
    if (j.contains("depth")) {
        doc.depth = j["depth"].get<int>();
        if (doc.depth < 1) throw ParseError("depth must be at least 1");
    }
    if (j.contains("name")) doc.name = j["name"].get<std::string>();
    std::vector<std::string> reader_points;
    if (j.contains("monad"))
        doc.monad = monad_from_json(j["monad"], doc.monad_kind, reader_points,
                                    doc.monad_section);
    else {
        doc.monad_kind = "identity";
        doc.monad_section = json{{"kind", "identity"}}.dump();
    }
    if (j.contains("tcategory"))
        doc.tcategory = tcategory_from_json(j["tcategory"], doc.monad, doc.monad_kind,
                                            reader_points, doc.tcategory_section);
    if (j.contains("tsimplicial")) {
        doc.tsimplicial = tsimplicial_from_json(j["tsimplicial"], doc.monad);
        doc.tsimplicial_section = tsimplicial_section_json(*doc.tsimplicial).dump();
    }
    if (!doc.tcategory && !doc.tsimplicial)
        throw ParseError("document contains neither a tcategory nor a tsimplicial object");
    return doc;
}

namespace {

json morph_to_json(const Morph& f) {
    json out = json::object();
    for (const auto& e : f.dom().elements()) out[e.show()] = f(e).show();
    return out;
}

json tsimplicial_section_json(const TSimplicialObject& X) {
    json t;
    json levels = json::array();
    for (const auto& level : X.levels) {
        json row = json::array();
        for (const auto& e : level.elements()) row.push_back(e.show());
        levels.push_back(row);
    }
    t["levels"] = levels;
    json faces = json::array(), lasts = json::array(), degens = json::array();
    faces.push_back(json::array());
    lasts.push_back(nullptr);
    for (int n = 1; n <= X.depth; ++n) {
        json row = json::array();
        for (int i = 0; i < n; ++i) row.push_back(morph_to_json(X.face(n, i)));
        faces.push_back(row);
        lasts.push_back(morph_to_json(X.last_face(n)));
    }
    t["inner_faces"] = faces;
    t["last_faces"] = lasts;
    if (X.has_degeneracies()) {
        for (int n = 0; n < X.depth; ++n) {
            json row = json::array();
            for (int i = 0; i <= n; ++i) row.push_back(morph_to_json(X.degeneracy(n, i)));
            degens.push_back(row);
        }
        t["degeneracies"] = degens;
    }
    return t;
}

}  // namespace

std::string serialize_document(const Document& doc) {
    json j;
    j["depth"] = doc.depth;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["monad"] = json::parse(doc.monad_section);
    if (!doc.tcategory_section.empty()) j["tcategory"] = json::parse(doc.tcategory_section);
    if (!doc.tsimplicial_section.empty())
        j["tsimplicial"] = json::parse(doc.tsimplicial_section);
    return j.dump(2) + "\n";
}

std::string serialize_tsimplicial(const TSimplicialObject& X, const std::string& monad_section,
                                  const std::string& name) {
    Document doc;
    doc.depth = X.depth;
    doc.monad = X.monad;
    doc.monad_section = json::parse(monad_section).dump();
    doc.tsimplicial = X;
    doc.tsimplicial_section = tsimplicial_section_json(X).dump();
    doc.name = name;
    return serialize_document(doc);
}

void Report::field(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
}

void Report::check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(CheckLine{name, pass, detail});
}

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::render_text() const {
    std::ostringstream out;
    out << "command: " << command << "\n";
    for (const auto& [k, v] : fields) out << k << ": " << v << "\n";
    for (const auto& c : checks) {
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
    out << (all_passed() ? "result: ok" : "result: failures") << "\n";
    return out.str();
}

std::string Report::render_json() const {
    json j;
    j["command"] = command;
    json fs = json::object();
    for (const auto& [k, v] : fields) fs[k] = v;
    j["fields"] = fs;
    json cs = json::array();
    for (const auto& c : checks) {
        json line;
        line["name"] = c.name;
        line["pass"] = c.pass;
        if (!c.detail.empty()) line["detail"] = c.detail;
        cs.push_back(line);
    }
    j["checks"] = cs;
    j["ok"] = all_passed();
    return j.dump(2) + "\n";
}

namespace {

std::string sizes_string(const std::vector<SetObj>& levels) {
    std::ostringstream out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) out << ",";
        out << levels[i].size();
    }
    return out.str();
}

TSimplicialObject object_of(const Document& doc, int depth) {
    if (doc.tsimplicial) return *doc.tsimplicial;
    return nerve(*doc.tcategory, depth);
}

void report_sa(Report& r, const SAReport& sa, const std::string& label) {
    r.check(label, sa.ok(),
            sa.ok() ? std::to_string(sa.checked) + " identities"
                    : simp_id_name(sa.failures.front().instance.id) + " at " +
                          sa.failures.front().witness);
}

}  // namespace

Report run_command(const std::string& command, const std::vector<std::string>& documents,
                   std::optional<int> depth_override) {
    Report r;
    r.command = command;
    std::vector<Document> docs;
    for (const auto& text : documents) docs.push_back(parse_document(text));
    if (docs.empty()) throw ParseError("no documents given");
    const Document& doc = docs.front();
    int depth = depth_override.value_or(doc.depth);
    r.field("depth", std::to_string(depth));
    r.field("monad", doc.monad_kind);

    if (command == "validate") {
        if (!doc.tcategory) throw ParseError("validate needs a tcategory document");
        const TCatData& cat = *doc.tcategory;
        for (const auto& ax : check_all_axioms(cat))
            r.check(axiom_name(ax.axiom), ax.ok, ax.witness);
        StructureClass cls = classify(PartialStructure{cat.graph, cat.comp, cat.unit});
        std::string flags;
        for (const auto& f : cls.flags()) flags += f + " ";
        r.field("ladder", flags);
        TSimplicialObject N = nerve(cat, depth);
        r.field("levels", sizes_string(N.levels));
        report_sa(r, check_sa_axioms(N), "simplicial-identities");
        r.check("segal", check_segal(N));
        return r;
    }
    if (command == "nerve" || command == "counts") {
        TSimplicialObject N = object_of(doc, depth);
        r.field("levels", sizes_string(N.levels));
        if (doc.tcategory) {
            r.field("composable-pairs", std::to_string(doc.tcategory->x2.apex.size()));
            r.field("composable-triples", std::to_string(doc.tcategory->x3.apex.size()));
        }
        if (command == "nerve") report_sa(r, check_sa_axioms(N), "simplicial-identities");
        return r;
    }
    if (command == "segal") {
        TSimplicialObject N = object_of(doc, depth);
        r.field("levels", sizes_string(N.levels));
        report_sa(r, check_sa_axioms(N), "simplicial-identities");
        bool segal = check_segal(N);
        r.check("segal", segal,
                segal ? "" : "a nerve square is not a pullback within depth");
        return r;
    }
    if (command == "hom" || command == "two-cells" || command == "compose") {
        if (docs.size() < 2) throw ParseError(command + " needs two documents");
        if (docs[0].monad_section != docs[1].monad_section)
            throw ParseError("the two documents must use the same monad");
    }
    if (command == "hom") {
        TSimplicialObject Y = object_of(docs[0], depth);
        TSimplicialObject X = object_of(docs[1], depth);
        if (!check_segal(X)) {
            r.check("target-is-tcategory", false, "the target must satisfy the nerve condition");
            return r;
        }
        int eff = std::min({depth, Y.depth, X.depth});
        for (int d = 0; d <= 2; ++d)
            r.field("simplices-deg" + std::to_string(d),
                    std::to_string(enumerate_hom_simplices(Y, X, d, eff).size()));
        r.check("hom-segal-deg0", hom_segal_check(Y, X, 0, eff));
        return r;
    }
    if (command == "two-cells") {
        TSimplicialObject A = object_of(docs[0], depth);
        TSimplicialObject B = object_of(docs[1], depth);
        int eff = std::min({depth, A.depth, B.depth});
        auto functors = enumerate_tfunctors(A, B, eff);
        r.field("functors", std::to_string(functors.size()));
        std::size_t total = 0;
        bool roundtrips = true;
        for (const auto& f : functors)
            for (const auto& g : functors)
                for (const auto& t : enumerate_two_cells(A, B, f, g)) {
                    ++total;
                    TNat back = hat_to_alpha(A, B, alpha_to_hat(A, B, t));
                    if (!equal_on_dom(back.alpha, t.alpha)) roundtrips = false;
                }
        r.field("two-cells", std::to_string(total));
        r.check("roundtrip-identity", roundtrips);
        return r;
    }
    if (command == "compose") {
        TSimplicialObject Y = object_of(docs[0], depth);
        TSimplicialObject X = object_of(docs[1], depth);
        int eff = std::min({depth, Y.depth, X.depth});
        auto ones = enumerate_hom_simplices(Y, X, 1, eff);
        auto twos = enumerate_hom_simplices(Y, X, 2, eff);
        r.field("one-simplices", std::to_string(ones.size()));
        std::size_t pairs = 0;
        bool agrees = true;
        for (const auto& x : ones)
            for (const auto& y : ones) {
                if (!(x.face(0) == y.face(1))) continue;
                ++pairs;
                auto composed = compose_one_simplices(x, y);
                std::size_t found = 0;
                for (const auto& z : twos)
                    if (z.face(2) == x && z.face(0) == y) {
                        ++found;
                        if (!(z == composed.two_cell)) agrees = false;
                    }
                if (found != 1) agrees = false;
            }
        r.field("composable-pairs", std::to_string(pairs));
        r.check("constructive-equals-search", agrees);
        return r;
    }
    if (command == "power-delta1") {
        if (!doc.tcategory) throw ParseError("power-delta1 needs a tcategory document");
        TSimplicialObject X = nerve(*doc.tcategory, depth + 2);
        r.field("effective-input-depth", std::to_string(depth + 2));
        DeltaOnePower P = delta1_power(X, depth);
        r.field("power-levels", sizes_string(P.L.levels));
        report_sa(r, check_sa_axioms(P.L), "power-simplicial-identities");
        HomReport d = check_power_diagrams(P, X);
        r.check("universal-1-simplex-diagrams", d.ok(),
                d.ok() ? "" : d.violations.front());
        r.check("segal-closure", check_power_closure(P));
        // universal property against a point and the input itself
        TSimplicialObject point =
            nerve(discrete_tcat(SetObj::of_names({"pt"}), doc.monad), depth);
        auto up = check_universal_property(P, X, {&point, &X}, depth);
        std::ostringstream counts;
        for (std::size_t i = 0; i < up.counts.size(); ++i) {
            if (i) counts << " ";
            counts << up.counts[i].first << "=" << up.counts[i].second;
        }
        r.field("universal-property-counts", counts.str());
        r.check("universal-property", up.ok(), up.ok() ? "" : up.violations.front());
        return r;
    }
    if (command == "copower") {
        TSimplicialObject Y = object_of(doc, depth);
        for (int k = 0; k <= 1; ++k) {
            TSimplicialObject Z = copower(FiniteSimplicialSet::standard(k, depth), Y);
            r.field("copower-delta" + std::to_string(k) + "-levels", sizes_string(Z.levels));
            report_sa(r, check_sa_axioms(Z), "copower-delta" + std::to_string(k) + "-identities");
        }
        return r;
    }
    if (command == "comonad") {
        TSimplicialObject X = object_of(doc, depth);
        if (!X.monad.preserves_finiteness())
            throw CapabilityError("the comonad commands need a finiteness-preserving monad");
        ComonadLawReport laws = check_comonad_laws(X.levels, X.monad);
        r.check("comonad-laws", laws.ok(), laws.ok() ? "" : laws.violations.front());
        RPresheaf P = RPresheaf::restriction(X);
        report_sa(r, lift_K(P).check_identities(), "lifted-presheaf-identities");
        CoalgebraData C = tsimp_to_coalgebra(X);
        CoalgebraReport crep = check_coalgebra(C);
        r.check("coalgebra-laws", crep.ok(), crep.ok() ? "" : crep.violations.front());
        if (crep.ok()) {
            TSimplicialObject back = coalgebra_to_tsimp(C);
            bool roundtrip = true;
            for (int n = 1; n <= X.depth; ++n)
                if (!equal_on_dom(back.last_face(n), X.last_face(n))) roundtrip = false;
            r.check("roundtrip-identity", roundtrip);
        }
        return r;
    }
    throw ParseError("unknown command '" + command + "'");
}

int exit_code_for(const Report& report) { return report.all_passed() ? 0 : 1; }

}  // namespace tcat
