#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcat/limits.hpp"
#include "tcat/monad.hpp"

namespace tcat {

// Objects and multiarrows: d0 gives the output object, d1 the T-shaped input.
struct TGraph {
    MonadSpec T;
    SetObj X0, X1;
    Morph d0;  // X1 -> X0
    Morph d1;  // X1 -> T X0

    void check_typing() const;
};

// X2 is the object of composable pairs (x, t) with d1(x) = T(d0)(t); X3 the
// object of composable triples, both computed as pullbacks.
struct ComposablePairs {
    SetObj apex;
    Morph d0;    // apex -> X1, the outer arrow
    Morph dtop;  // apex -> T X1, the tuple of inner arrows
};

ComposablePairs build_X2(const TGraph& g);
ComposablePairs build_X3(const TGraph& g, const ComposablePairs& x2);

// A T-category presentation: a T-graph with composition and unit structure.
// The derived levels X2, X3 and the induced maps between them are part of
// the value, always canonically computed.
struct TCatData {
    TGraph graph;
    Morph comp;  // X2 -> X1
    Morph unit;  // X0 -> X1
    ComposablePairs x2, x3;

    // induced maps, computed by pullback pairing
    Morph x3_d1() const;  // X3 -> X2
    Morph x3_d2() const;  // X3 -> X2
    Morph s0_into_x2() const;  // X1 -> X2
    Morph s1_into_x2() const;  // X1 -> X2

    static TCatData assemble(TGraph graph, Morph comp, Morph unit);
};

enum class CatAxiom {
    CompositionBoundary,  // d1.comp = m.Td1.dtop and d0.comp = d0.d0
    UnitBoundary,         // d1.unit = i and d0.unit = 1
    Associativity,        // comp.x3_d1 = comp.x3_d2
    UnitLaws,             // comp.s0 = 1 = comp.s1
};

std::string axiom_name(CatAxiom axiom);

struct AxiomReport {
    CatAxiom axiom;
    bool ok;
    std::string witness;  // failing element, empty when ok
};

AxiomReport check_axiom(const TCatData& data, CatAxiom axiom);
std::vector<AxiomReport> check_all_axioms(const TCatData& data);

// A partially structured object from the structure ladder.
struct PartialStructure {
    TGraph graph;
    std::optional<Morph> comp;
    std::optional<Morph> unit;
};

struct StructureClass {
    bool t_graph = false;
    bool reflexive_graph = false;
    bool magmoid = false;
    bool reflexive_magmoid = false;
    bool unital_magmoid = false;
    bool semicategory = false;
    bool reflexive_semicategory = false;
    bool category = false;

    std::vector<std::string> flags() const;
};

StructureClass classify(const PartialStructure& partial);

// Canonical constructions.
TCatData discrete_tcat(const SetObj& E, const MonadSpec& T);
TCatData chaotic_tcat(const SetObj& E, const MonadSpec& T);
// Validates the Eilenberg-Moore laws of (A, action) first.
TCatData algebra_tcat(const SetObj& A, const Morph& action, const MonadSpec& T);

struct FunctorReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks that (f0, f1) is a T-functor X -> Y: the graph squares, the derived
// f2, and the unit/composition squares.
FunctorReport check_tfunctor(const Morph& f0, const Morph& f1, const TCatData& X,
                             const TCatData& Y);

}  // namespace tcat
