#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tcat/doc.hpp"
#include "tcat/hom.hpp"

namespace py = pybind11;
using namespace tcat;

namespace {

MonadSpec monad_by_name(const std::string& kind) {
    if (kind == "identity") return MonadSpec::identity();
    if (kind == "maybe") return MonadSpec::maybe();
    if (kind == "writer-z2") return MonadSpec::writer(FiniteMonoid::cyclic2());
    if (kind == "list") return MonadSpec::list();
    throw Error("unknown monad shorthand '" + kind + "'");
}

py::dict report_to_dict(const Report& report) {
    py::dict out;
    out["command"] = report.command;
    py::dict fields;
    for (const auto& [k, v] : report.fields) fields[py::str(k)] = v;
    out["fields"] = fields;
    py::list checks;
    for (const auto& c : report.checks) {
        py::dict line;
        line["name"] = c.name;
        line["pass"] = c.pass;
        line["detail"] = c.detail;
        checks.append(line);
    }
    out["checks"] = checks;
    out["ok"] = report.all_passed();
    return out;
}

py::dict run(const std::string& command, const std::vector<std::string>& documents,
             std::optional<int> depth) {
    return report_to_dict(run_command(command, documents, depth));
}

std::vector<std::size_t> nerve_level_sizes(const std::string& document, int depth) {
    Document doc = parse_document(document);
    if (!doc.tcategory) throw Error("document has no tcategory");
    TSimplicialObject N = nerve(*doc.tcategory, depth);
    std::vector<std::size_t> sizes;
    for (const auto& level : N.levels) sizes.push_back(level.size());
    return sizes;
}

bool document_segal(const std::string& document, int depth) {
    Document doc = parse_document(document);
    TSimplicialObject X = doc.tsimplicial ? *doc.tsimplicial : nerve(*doc.tcategory, depth);
    return check_segal(X);
}

py::dict document_sa(const std::string& document, int depth) {
    Document doc = parse_document(document);
    TSimplicialObject X = doc.tsimplicial ? *doc.tsimplicial : nerve(*doc.tcategory, depth);
    SAReport rep = check_sa_axioms(X);
    py::dict out;
    out["ok"] = rep.ok();
    out["checked"] = rep.checked;
    py::list failures;
    for (const auto& f : rep.failures) {
        py::dict line;
        line["identity"] = simp_id_name(f.instance.id);
        line["n"] = f.instance.n;
        line["witness"] = f.witness;
        failures.append(line);
    }
    out["failures"] = failures;
    return out;
}

std::size_t hom_count(const std::string& source_doc, const std::string& target_doc, int degree,
                      int depth) {
    Document ys = parse_document(source_doc);
    Document xs = parse_document(target_doc);
    TSimplicialObject Y = ys.tsimplicial ? *ys.tsimplicial : nerve(*ys.tcategory, depth);
    TSimplicialObject X = xs.tsimplicial ? *xs.tsimplicial : nerve(*xs.tcategory, depth);
    return enumerate_hom_simplices(Y, X, degree, std::min({depth, Y.depth, X.depth})).size();
}

py::list simplex_hom(int m, int n, bool top_preserving) {
    py::list out;
    for (const auto& f :
         enumerate_hom(m, n, top_preserving ? HomKind::DeltaR : HomKind::Delta))
        out.append(f.values());
    return out;
}

py::dict monad_laws(const std::string& kind, const std::vector<std::string>& carrier,
                    int bound) {
    MonadSpec T = monad_by_name(kind);
    MonadLawReport rep = check_monad_laws(T, SetObj::of_names(carrier), bound);
    py::dict out;
    out["ok"] = rep.ok();
    out["violations"] = rep.violations;
    return out;
}

}  // namespace

PYBIND11_MODULE(_tcat, m) {
    m.doc() = "finite checker for generalized multicategories over a monad";

    // translators run newest-first, so the base class goes first
    auto base = py::register_exception<Error>(m, "TcatError");
    py::register_exception<ParseError>(m, "DocumentError", base.ptr());
    py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());

    m.def("run", &run, py::arg("command"), py::arg("documents"),
          py::arg("depth") = std::nullopt,
          "Run a CLI command over document texts and return the report.");
    m.def("parse_roundtrip",
          [](const std::string& text) { return serialize_document(parse_document(text)); },
          "Parse a document and return its canonical serialization.");
    m.def("nerve_level_sizes", &nerve_level_sizes, py::arg("document"), py::arg("depth") = 4);
    m.def("segal", &document_segal, py::arg("document"), py::arg("depth") = 4);
    m.def("simplicial_identities", &document_sa, py::arg("document"), py::arg("depth") = 4);
    m.def("hom_count", &hom_count, py::arg("source"), py::arg("target"), py::arg("degree"),
          py::arg("depth") = 3);
    m.def("simplex_hom", &simplex_hom, py::arg("m"), py::arg("n"),
          py::arg("top_preserving") = false,
          "Value tables of the monotone maps [m] -> [n].");
    m.def("monad_laws", &monad_laws, py::arg("kind"), py::arg("carrier"),
          py::arg("bound") = 3);
}
