#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcat/element.hpp"

namespace tcat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation needs a capability the inputs lack, e.g. when a
// construction must materialize TX for a monad that does not preserve
// finiteness.  The CLI maps it to its own exit code.
struct CapabilityError : Error {
    using Error::Error;
};

// An object of the computable base category: either an explicit finite
// carrier (kept sorted and duplicate-free) or the free carrier TX of a
// non-finiteness-preserving monad over a base, with decidable membership.
class SetObj {
public:
    SetObj();  // empty finite set
    static SetObj finite(std::vector<Element> elements);
    static SetObj free_carrier(std::string monad_name, SetObj base);

    bool is_finite() const;
    // Throws on free carriers.  The rvalue overload returns by value so that
    // iterating over `maker().elements()` is safe.
    const std::vector<Element>& elements() const&;
    std::vector<Element> elements() &&;
    std::size_t size() const;  // throws on free carriers
    const std::string& carrier_monad() const;
    const SetObj& base() const;

    bool contains(const Element& e) const;
    bool operator==(const SetObj& other) const;
    bool operator!=(const SetObj& other) const { return !(*this == other); }
    std::string show() const;

    static SetObj singleton(Element e) { return finite({std::move(e)}); }
    static SetObj of_names(const std::vector<std::string>& names);

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

using EvalFn = std::function<Element(const Element&)>;

// An evaluable morphism of the base category.  Bodies are closures built by
// the named constructors below; equality of morphisms is always elementwise
// over a finite domain, never structural.
class Morph {
public:
    Morph();
    Morph(SetObj dom, SetObj cod, std::string name, EvalFn fn);

    static Morph identity(const SetObj& X);
    static Morph table(SetObj dom, SetObj cod,
                       std::vector<std::pair<Element, Element>> entries,
                       std::string name = "table");
    static Morph constant(SetObj dom, Element value, SetObj cod);
    static Morph from_fn(SetObj dom, SetObj cod, EvalFn fn, std::string name = "fn");
    // Component projection out of a set of Tuples.
    static Morph tuple_component(SetObj dom, SetObj cod, std::size_t index);

    Element operator()(const Element& e) const;
    const SetObj& dom() const&;
    const SetObj& cod() const&;
    SetObj dom() && { return dom(); }
    SetObj cod() && { return cod(); }
    const std::string& name() const;
    bool is_identity_body() const;

    // Materialize as a table over the finite domain (canonical order).
    Morph tabulate() const;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

Morph compose(const Morph& g, const Morph& f);

// Elementwise equality over the (finite) common domain; the witness receives
// a point where the two sides differ.
bool equal_on_dom(const Morph& f, const Morph& g, Element* witness = nullptr);

// Enumerates finite fibers g^{-1}(c) of a fixed morphism g.
struct FiberOracle {
    std::function<std::vector<Element>(const Element&)> fibers;
    std::vector<Element> operator()(const Element& c) const { return fibers(c); }
    explicit operator bool() const { return static_cast<bool>(fibers); }
};

// Fiber oracle by scanning a finite domain.
FiberOracle scan_oracle(const Morph& g);

}  // namespace tcat
