#include "tcat/tcat.hpp"

namespace tcat {

void TGraph::check_typing() const {
    if (!X1.is_finite()) throw Error("TGraph: X1 must be an explicit finite carrier");
    if (d0.dom() != X1 || d0.cod() != X0) throw Error("TGraph: d0 must be X1 -> X0");
    if (d1.dom() != X1 || d1.cod() != T.apply(X0)) throw Error("TGraph: d1 must be X1 -> TX0");
    for (const auto& e : X1.elements()) {
        (void)d0(e);
        if (!T.apply(X0).contains(d1(e)))
            throw Error("TGraph: d1 lands outside TX0 at " + e.show());
    }
}

ComposablePairs build_X2(const TGraph& g) {
    Morph Td0 = g.T.lift(g.d0);
    PullbackResult pb = pullback(g.d1, Td0, g.T.lift_fibers(g.d0));
    return ComposablePairs{pb.apex, pb.p1, pb.p2};
}

ComposablePairs build_X3(const TGraph& g, const ComposablePairs& x2) {
    Morph Td0 = g.T.lift(x2.d0);
    PullbackResult pb = pullback(x2.dtop, Td0, g.T.lift_fibers(x2.d0));
    return ComposablePairs{pb.apex, pb.p1, pb.p2};
}

TCatData TCatData::assemble(TGraph graph, Morph comp, Morph unit) {
    graph.check_typing();
    ComposablePairs x2 = build_X2(graph);
    ComposablePairs x3 = build_X3(graph, x2);
    if (comp.dom() != x2.apex || comp.cod() != graph.X1)
        throw Error("TCatData: composition must be X2 -> X1");
    if (unit.dom() != graph.X0 || unit.cod() != graph.X1)
        throw Error("TCatData: unit must be X0 -> X1");
    return TCatData{std::move(graph), std::move(comp), std::move(unit), std::move(x2),
                    std::move(x3)};
}

// The two induced maps X3 -> X2 pair the prescribed components; membership in
// the pullback is asserted on evaluation.
Morph TCatData::x3_d1() const {
    Morph d0_outer = x3.d0;        // X3 -> X2
    Morph d3 = x3.dtop;            // X3 -> T X2
    Morph Tcomp = graph.T.lift(comp);
    SetObj X2 = x2.apex;
    Morph x2d0 = x2.d0;
    return Morph::from_fn(x3.apex, X2,
                          [d0_outer, d3, Tcomp, X2, x2d0](const Element& z) {
                              Element value = Element::pair(x2d0(d0_outer(z)), Tcomp(d3(z)));
                              if (!X2.contains(value))
                                  throw Error("x3_d1: induced pair escapes X2 at " + z.show());
                              return value;
                          },
                          "d1");
}

Morph TCatData::x3_d2() const {
    Morph d0_outer = x3.d0;
    Morph d3 = x3.dtop;
    Morph comp_ = comp;
    Morph Tdtop = graph.T.lift(x2.dtop);
    Morph mX1 = graph.T.mult_at(graph.X1);
    SetObj X2 = x2.apex;
    return Morph::from_fn(x3.apex, X2,
                          [d0_outer, d3, comp_, Tdtop, mX1, X2](const Element& z) {
                              Element value =
                                  Element::pair(comp_(d0_outer(z)), mX1(Tdtop(d3(z))));
                              if (!X2.contains(value))
                                  throw Error("x3_d2: induced pair escapes X2 at " + z.show());
                              return value;
                          },
                          "d2");
}

Morph TCatData::s0_into_x2() const {
    Morph Tunit = graph.T.lift(unit);
    Morph d1 = graph.d1;
    SetObj X2 = x2.apex;
    return Morph::from_fn(graph.X1, X2,
                          [Tunit, d1, X2](const Element& x) {
                              Element value = Element::pair(x, Tunit(d1(x)));
                              if (!X2.contains(value))
                                  throw Error("s0: induced pair escapes X2 at " + x.show());
                              return value;
                          },
                          "s0");
}

Morph TCatData::s1_into_x2() const {
    Morph unit_ = unit;
    Morph d0 = graph.d0;
    Morph iX1 = graph.T.unit_at(graph.X1);
    SetObj X2 = x2.apex;
    return Morph::from_fn(graph.X1, X2,
                          [unit_, d0, iX1, X2](const Element& x) {
                              Element value = Element::pair(unit_(d0(x)), iX1(x));
                              if (!X2.contains(value))
                                  throw Error("s1: induced pair escapes X2 at " + x.show());
                              return value;
                          },
                          "s1");
}

std::string axiom_name(CatAxiom axiom) {
    switch (axiom) {
        case CatAxiom::CompositionBoundary: return "composition-boundary";
        case CatAxiom::UnitBoundary: return "unit-boundary";
        case CatAxiom::Associativity: return "associativity";
        case CatAxiom::UnitLaws: return "unit-laws";
    }
    return "?";
}

namespace {
AxiomReport compare(CatAxiom axiom, const Morph& lhs, const Morph& rhs) {
    Element witness;
    if (equal_on_dom(lhs, rhs, &witness)) return AxiomReport{axiom, true, ""};
    return AxiomReport{axiom, false, witness.show()};
}

AxiomReport check_axiom_impl(const TCatData& data, CatAxiom axiom);
}  // namespace

AxiomReport check_axiom(const TCatData& data, CatAxiom axiom) {
    // An induced map escaping its pullback is itself an axiom violation, so
    // evaluation failures are reported, never thrown.
    try {
        return check_axiom_impl(data, axiom);
    } catch (const Error& e) {
        return AxiomReport{axiom, false, e.what()};
    }
}

namespace {
AxiomReport check_axiom_impl(const TCatData& data, CatAxiom axiom) {
    const TGraph& g = data.graph;
    switch (axiom) {
        case CatAxiom::CompositionBoundary: {
            Morph lhs1 = compose(g.d1, data.comp);
            Morph rhs1 = compose(g.T.mult_at(g.X0),
                                 compose(g.T.lift(g.d1), data.x2.dtop));
            AxiomReport r = compare(axiom, lhs1, rhs1);
            if (!r.ok) return r;
            return compare(axiom, compose(g.d0, data.comp), compose(g.d0, data.x2.d0));
        }
        case CatAxiom::UnitBoundary: {
            AxiomReport r =
                compare(axiom, compose(g.d1, data.unit), g.T.unit_at(g.X0));
            if (!r.ok) return r;
            return compare(axiom, compose(g.d0, data.unit), Morph::identity(g.X0));
        }
        case CatAxiom::Associativity:
            return compare(axiom, compose(data.comp, data.x3_d1()),
                           compose(data.comp, data.x3_d2()));
        case CatAxiom::UnitLaws: {
            AxiomReport r = compare(axiom, compose(data.comp, data.s0_into_x2()),
                                    Morph::identity(g.X1));
            if (!r.ok) return r;
            return compare(axiom, compose(data.comp, data.s1_into_x2()),
                           Morph::identity(g.X1));
        }
    }
    throw Error("unknown axiom");
}
}  // namespace

std::vector<AxiomReport> check_all_axioms(const TCatData& data) {
    return {check_axiom(data, CatAxiom::CompositionBoundary),
            check_axiom(data, CatAxiom::UnitBoundary),
            check_axiom(data, CatAxiom::Associativity),
            check_axiom(data, CatAxiom::UnitLaws)};
}

std::vector<std::string> StructureClass::flags() const {
    std::vector<std::string> out;
    if (t_graph) out.push_back("t-graph");
    if (reflexive_graph) out.push_back("reflexive-t-graph");
    if (magmoid) out.push_back("t-magmoid");
    if (reflexive_magmoid) out.push_back("reflexive-t-magmoid");
    if (unital_magmoid) out.push_back("unital-t-magmoid");
    if (semicategory) out.push_back("t-semicategory");
    if (reflexive_semicategory) out.push_back("reflexive-t-semicategory");
    if (category) out.push_back("t-category");
    return out;
}

StructureClass classify(const PartialStructure& partial) {
    StructureClass out;
    partial.graph.check_typing();
    out.t_graph = true;

    ComposablePairs x2 = build_X2(partial.graph);
    bool comp_ok = false, unit_ok = false, assoc_ok = false, unit_laws_ok = false;
    Morph no_map;  // placeholder for absent structure, never evaluated
    if (partial.comp) {
        TCatData probe{partial.graph, *partial.comp, partial.unit.value_or(no_map), x2,
                       build_X3(partial.graph, x2)};
        comp_ok = check_axiom(probe, CatAxiom::CompositionBoundary).ok;
        if (comp_ok) assoc_ok = check_axiom(probe, CatAxiom::Associativity).ok;
        if (partial.unit) {
            unit_ok = check_axiom(probe, CatAxiom::UnitBoundary).ok;
            if (comp_ok && unit_ok) unit_laws_ok = check_axiom(probe, CatAxiom::UnitLaws).ok;
        }
    } else if (partial.unit) {
        TCatData probe{partial.graph, no_map, *partial.unit, x2, ComposablePairs{}};
        unit_ok = check_axiom(probe, CatAxiom::UnitBoundary).ok;
    }

    out.reflexive_graph = unit_ok;
    out.magmoid = comp_ok;
    out.reflexive_magmoid = comp_ok && unit_ok;
    out.unital_magmoid = out.reflexive_magmoid && unit_laws_ok;
    out.semicategory = comp_ok && assoc_ok;
    out.reflexive_semicategory = out.semicategory && unit_ok;
    out.category = out.reflexive_semicategory && unit_laws_ok;
    return out;
}

TCatData discrete_tcat(const SetObj& E, const MonadSpec& T) {
    TGraph g{T, E, E, Morph::identity(E), T.unit_at(E)};
    ComposablePairs x2 = build_X2(g);
    return TCatData::assemble(g, x2.d0, Morph::identity(E));
}

TCatData chaotic_tcat(const SetObj& E, const MonadSpec& T) {
    if (!T.preserves_finiteness())
        throw CapabilityError("chaotic construction requires a finiteness-preserving monad");
    SetObj TE = T.apply(E);
    std::vector<Element> arrows;
    for (const auto& t : TE.elements())
        for (const auto& x : E.elements()) arrows.push_back(Element::pair(t, x));
    SetObj X1 = SetObj::finite(std::move(arrows));
    TGraph g{T, E, X1, Morph::tuple_component(X1, E, 1),
             Morph::tuple_component(X1, TE, 0)};
    ComposablePairs x2 = build_X2(g);
    Morph Tpi0 = T.lift(g.d1);
    Morph mE = T.mult_at(E);
    Morph comp = Morph::from_fn(
        x2.apex, X1,
        [mE, Tpi0, x2](const Element& z) {
            // boundary-forced: inputs m(T(d1) of inner), output d0 of outer
            return Element::pair(mE(Tpi0(z.at(1))), z.at(0).at(1));
        },
        "comp");
    Morph unit = Morph::from_fn(
        g.X0, X1,
        [iE = T.unit_at(E)](const Element& x) { return Element::pair(iE(x), x); }, "unit");
    return TCatData::assemble(g, comp, unit);
}

TCatData algebra_tcat(const SetObj& A, const Morph& action, const MonadSpec& T) {
    if (!T.preserves_finiteness())
        throw CapabilityError("algebra construction requires a finiteness-preserving monad");
    SetObj TA = T.apply(A);
    if (action.dom() != TA || action.cod() != A)
        throw Error("algebra_tcat: the action must be TA -> A");
    Element witness;
    if (!equal_on_dom(compose(action, T.unit_at(A)), Morph::identity(A), &witness))
        throw Error("algebra_tcat: unit law fails at " + witness.show());
    if (!equal_on_dom(compose(action, T.lift(action)), compose(action, T.mult_at(A)), &witness))
        throw Error("algebra_tcat: multiplication law fails at " + witness.show());

    TGraph g{T, A, TA, action, Morph::identity(TA)};
    ComposablePairs x2 = build_X2(g);
    Morph mA = T.mult_at(A);
    Morph comp = Morph::from_fn(x2.apex, TA,
                                [mA](const Element& z) { return mA(z.at(1)); }, "comp");
    return TCatData::assemble(g, comp, T.unit_at(A));
}

FunctorReport check_tfunctor(const Morph& f0, const Morph& f1, const TCatData& X,
                             const TCatData& Y) {
    FunctorReport report;
    const MonadSpec& T = X.graph.T;
    Element witness;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) report.violations.push_back(what + " fails at " + witness.show());
    };
    if (f0.dom() != X.graph.X0 || f0.cod() != Y.graph.X0 || f1.dom() != X.graph.X1 ||
        f1.cod() != Y.graph.X1) {
        report.violations.push_back("component typing mismatch");
        return report;
    }
    require(equal_on_dom(compose(Y.graph.d0, f1), compose(f0, X.graph.d0), &witness),
            "output square");
    require(equal_on_dom(compose(Y.graph.d1, f1), compose(T.lift(f0), X.graph.d1), &witness),
            "input square");
    require(equal_on_dom(compose(Y.unit, f0), compose(f1, X.unit), &witness), "unit square");
    if (!report.ok()) return report;

    // f2 by pullback pairing
    SetObj Y2 = Y.x2.apex;
    Morph x2d0 = X.x2.d0, x2dtop = X.x2.dtop;
    Morph Tf1 = T.lift(f1);
    Morph f2 = Morph::from_fn(X.x2.apex, Y2,
                              [f1, Tf1, Y2, x2d0, x2dtop](const Element& z) {
                                  Element value = Element::pair(f1(x2d0(z)), Tf1(x2dtop(z)));
                                  if (!Y2.contains(value))
                                      throw Error("f2 escapes Y2 at " + z.show());
                                  return value;
                              },
                              "f2");
    require(equal_on_dom(compose(Y.comp, f2), compose(f1, X.comp), &witness),
            "composition square");
    return report;
}

}  // namespace tcat
