#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tcat/setobj.hpp"

namespace tcat {

// A finite monoid given by its multiplication table; validated on construction.
struct FiniteMonoid {
    std::vector<std::string> elements;
    std::string unit;
    std::map<std::pair<std::string, std::string>, std::string> table;

    // Throws with a witness when the table is partial, non-associative, or
    // the unit fails a unit law.
    void validate() const;
    const std::string& mul(const std::string& a, const std::string& b) const;

    static FiniteMonoid cyclic2();  // {1, g} with g*g = 1
};

// A finitary monad on the computable base category, as a value: object and
// morphism actions, unit, multiplication, a fiber oracle for lifted maps,
// and a finiteness flag.  The builtins cover the identity, maybe, writer,
// reader, and list monads; user monads register the same interface.
class MonadSpec {
public:
    MonadSpec();  // the identity monad

    static MonadSpec identity();
    static MonadSpec maybe();
    static MonadSpec writer(FiniteMonoid monoid);
    static MonadSpec reader(std::vector<std::string> point_names);
    static MonadSpec list();

    const std::string& name() const;
    bool preserves_finiteness() const;

    SetObj apply(const SetObj& X) const;          // TX
    Morph lift(const Morph& f) const;             // Tf : TA -> TB
    // Structural functor action on a single element of TA, without
    // materializing any carrier.
    Element map_eval(const std::function<Element(const Element&)>& f, const Element& t) const;
    Morph unit_at(const SetObj& X) const;         // X -> TX
    Morph mult_at(const SetObj& X) const;         // T^2 X -> TX
    // Fibers of lift(f); requires f to have a finite domain.
    FiberOracle lift_fibers(const Morph& f) const;

    // Requires preserves_finiteness; convenience for T^k X.
    SetObj iterate_obj(const SetObj& X, int k) const;
    Morph iterate_lift(const Morph& f, int k) const;

    bool operator==(const MonadSpec& other) const { return data_ == other.data_; }

    struct Data;
    explicit MonadSpec(std::shared_ptr<const Data> data);

private:
    std::shared_ptr<const Data> data_;
};

struct MonadLawReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies the unit and associativity laws of T elementwise on X.  For the
// list monad the check runs over lists of length at most `bound`.
MonadLawReport check_monad_laws(const MonadSpec& T, const SetObj& X, int bound = 3);

// A morphism of the Kleisli category: dom -> T(cod), carried by `body`.
struct KleisliMorph {
    SetObj dom, cod;
    Morph body;
};

KleisliMorph kleisli_identity(const MonadSpec& T, const SetObj& X);
KleisliMorph kleisli_compose(const MonadSpec& T, const KleisliMorph& g, const KleisliMorph& f);

// All elements of TX for a finiteness-preserving monad, or all elements of
// bounded size for the list monad (lists of length <= bound).
std::vector<Element> bounded_carrier(const MonadSpec& T, const SetObj& X, int bound);

}  // namespace tcat
