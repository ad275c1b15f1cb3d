#include "tcat/setobj.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace tcat {

struct SetObj::Data {
    bool finite;
    std::vector<Element> elements;  // sorted, duplicate-free
    std::string monad_name;
    std::shared_ptr<const SetObj> base;
};

SetObj::SetObj() : data_(std::make_shared<const Data>(Data{true, {}, "", nullptr})) {}

SetObj SetObj::finite(std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 1; i < elements.size(); ++i)
        if (elements[i] == elements[i - 1])
            throw Error("SetObj: duplicate element " + elements[i].show());
    SetObj s;
    s.data_ = std::make_shared<const Data>(Data{true, std::move(elements), "", nullptr});
    return s;
}

SetObj SetObj::free_carrier(std::string monad_name, SetObj base) {
    SetObj s;
    s.data_ = std::make_shared<const Data>(
        Data{false, {}, std::move(monad_name), std::make_shared<const SetObj>(std::move(base))});
    return s;
}

SetObj SetObj::of_names(const std::vector<std::string>& names) {
    std::vector<Element> elems;
    elems.reserve(names.size());
    for (const auto& n : names) elems.push_back(Element::atom(n));
    return finite(std::move(elems));
}

bool SetObj::is_finite() const { return data_->finite; }

const std::vector<Element>& SetObj::elements() const& {
    if (!data_->finite)
        throw CapabilityError("attempted to enumerate the free carrier " + show());
    return data_->elements;
}

std::vector<Element> SetObj::elements() && {
    const SetObj& self = *this;
    return self.elements();
}

std::size_t SetObj::size() const { return elements().size(); }

const std::string& SetObj::carrier_monad() const { return data_->monad_name; }

const SetObj& SetObj::base() const {
    if (data_->finite) throw Error("SetObj::base on a finite carrier");
    return *data_->base;
}

bool SetObj::contains(const Element& e) const {
    if (data_->finite)
        return std::binary_search(data_->elements.begin(), data_->elements.end(), e);
    // Free carriers exist only for the list monad: members are lists over the base.
    if (!e.is_list()) return false;
    for (const auto& item : e.parts())
        if (!data_->base->contains(item)) return false;
    return true;
}

bool SetObj::operator==(const SetObj& other) const {
    if (data_ == other.data_) return true;
    if (data_->finite != other.data_->finite) return false;
    if (data_->finite) return data_->elements == other.data_->elements;
    return data_->monad_name == other.data_->monad_name && *data_->base == *other.data_->base;
}

std::string SetObj::show() const {
    if (!data_->finite) return data_->monad_name + "<" + data_->base->show() + ">";
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < data_->elements.size(); ++i) {
        if (i) out << ',';
        out << data_->elements[i].show();
    }
    out << '}';
    return out.str();
}

struct Morph::Data {
    SetObj dom, cod;
    std::string name;
    EvalFn fn;
    bool identity = false;
};

Morph::Morph() : Morph(SetObj(), SetObj(), "empty", [](const Element& e) { return e; }) {}

Morph::Morph(SetObj dom, SetObj cod, std::string name, EvalFn fn)
    : data_(std::make_shared<const Data>(
          Data{std::move(dom), std::move(cod), std::move(name), std::move(fn), false})) {}

Morph Morph::identity(const SetObj& X) {
    Morph m(X, X, "id", [](const Element& e) { return e; });
    auto d = std::make_shared<Data>(*m.data_);
    d->identity = true;
    m.data_ = std::move(d);
    return m;
}

Morph Morph::table(SetObj dom, SetObj cod,
                   std::vector<std::pair<Element, Element>> entries, std::string name) {
    auto map = std::make_shared<std::map<Element, Element>>();
    for (auto& [k, v] : entries) {
        if (!dom.contains(k)) throw Error("table: key " + k.show() + " not in domain");
        if (!cod.contains(v)) throw Error("table: value " + v.show() + " not in codomain");
        if (!map->emplace(k, v).second) throw Error("table: duplicate key " + k.show());
    }
    if (dom.is_finite() && map->size() != dom.size())
        throw Error("table: not total on its domain");
    return Morph(std::move(dom), std::move(cod), std::move(name),
                 [map, n = name](const Element& e) {
                     auto it = map->find(e);
                     if (it == map->end())
                         throw Error("table miss at " + e.show());
                     return it->second;
                 });
}

Morph Morph::constant(SetObj dom, Element value, SetObj cod) {
    if (!cod.contains(value)) throw Error("constant: value not in codomain");
    return Morph(std::move(dom), std::move(cod), "const",
                 [value](const Element&) { return value; });
}

Morph Morph::from_fn(SetObj dom, SetObj cod, EvalFn fn, std::string name) {
    return Morph(std::move(dom), std::move(cod), std::move(name), std::move(fn));
}

Morph Morph::tuple_component(SetObj dom, SetObj cod, std::size_t index) {
    return Morph(std::move(dom), std::move(cod), "pi" + std::to_string(index),
                 [index](const Element& e) {
                     if (!e.is_tuple() || index >= e.size())
                         throw Error("tuple component " + std::to_string(index) +
                                     " of " + e.show());
                     return e.at(index);
                 });
}

Element Morph::operator()(const Element& e) const {
    if (data_->dom.is_finite() && !data_->dom.contains(e))
        throw Error("morphism '" + data_->name + "' applied outside its domain: " + e.show());
    return data_->fn(e);
}

const SetObj& Morph::dom() const& { return data_->dom; }
const SetObj& Morph::cod() const& { return data_->cod; }
const std::string& Morph::name() const { return data_->name; }
bool Morph::is_identity_body() const { return data_->identity; }

Morph Morph::tabulate() const {
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& e : dom().elements()) entries.emplace_back(e, (*this)(e));
    return table(dom(), cod(), std::move(entries), name());
}

Morph compose(const Morph& g, const Morph& f) {
    if (f.cod() != g.dom())
        throw Error("compose: codomain of '" + f.name() + "' (" + f.cod().show() +
                    ") does not match domain of '" + g.name() + "' (" + g.dom().show() + ")");
    if (f.is_identity_body()) return g;
    if (g.is_identity_body()) return f;
    return Morph(f.dom(), g.cod(), g.name() + "." + f.name(),
                 [g, f](const Element& e) { return g(f(e)); });
}

bool equal_on_dom(const Morph& f, const Morph& g, Element* witness) {
    if (f.dom() != g.dom()) throw Error("equal_on_dom: different domains");
    for (const auto& e : f.dom().elements()) {
        if (f(e) != g(e)) {
            if (witness) *witness = e;
            return false;
        }
    }
    return true;
}

FiberOracle scan_oracle(const Morph& g) {
    // one scan of the domain, on first query
    auto table = std::make_shared<std::map<Element, std::vector<Element>>>();
    auto built = std::make_shared<bool>(false);
    return FiberOracle{[g, table, built](const Element& c) {
        if (!*built) {
            for (const auto& b : g.dom().elements()) (*table)[g(b)].push_back(b);
            *built = true;
        }
        auto it = table->find(c);
        return it == table->end() ? std::vector<Element>{} : it->second;
    }};
}

}  // namespace tcat
