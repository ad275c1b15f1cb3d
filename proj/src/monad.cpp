#include "tcat/monad.hpp"

#include <algorithm>
#include <functional>

namespace tcat {

void FiniteMonoid::validate() const {
    if (std::find(elements.begin(), elements.end(), unit) == elements.end())
        throw Error("monoid: unit '" + unit + "' is not an element");
    for (const auto& a : elements)
        for (const auto& b : elements) {
            auto it = table.find({a, b});
            if (it == table.end()) throw Error("monoid: table misses (" + a + "," + b + ")");
            if (std::find(elements.begin(), elements.end(), it->second) == elements.end())
                throw Error("monoid: product (" + a + "," + b + ") lands outside the carrier");
        }
    for (const auto& a : elements) {
        if (mul(unit, a) != a || mul(a, unit) != a)
            throw Error("monoid: unit law fails at " + a);
        for (const auto& b : elements)
            for (const auto& c : elements)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error("monoid: associativity fails at (" + a + "," + b + "," + c + ")");
    }
}

const std::string& FiniteMonoid::mul(const std::string& a, const std::string& b) const {
    auto it = table.find({a, b});
    if (it == table.end()) throw Error("monoid: table misses (" + a + "," + b + ")");
    return it->second;
}

FiniteMonoid FiniteMonoid::cyclic2() {
    FiniteMonoid m;
    m.elements = {"1", "g"};
    m.unit = "1";
    m.table[{"1", "1"}] = "1";
    m.table[{"1", "g"}] = "g";
    m.table[{"g", "1"}] = "g";
    m.table[{"g", "g"}] = "1";
    return m;
}

struct MonadSpec::Data {
    std::string name;
    bool finiteness;
    std::function<SetObj(const SetObj&)> on_obj;
    std::function<Morph(const Morph&)> on_morph;
    std::function<Morph(const SetObj&)> unit;
    std::function<Morph(const SetObj&)> mult;
    std::function<FiberOracle(const Morph&)> lift_fibers;
    std::function<Element(const std::function<Element(const Element&)>&, const Element&)>
        map_eval;
};

MonadSpec::MonadSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

const std::string& MonadSpec::name() const { return data_->name; }
bool MonadSpec::preserves_finiteness() const { return data_->finiteness; }
SetObj MonadSpec::apply(const SetObj& X) const { return data_->on_obj(X); }
Morph MonadSpec::lift(const Morph& f) const { return data_->on_morph(f); }
Morph MonadSpec::unit_at(const SetObj& X) const { return data_->unit(X); }
Morph MonadSpec::mult_at(const SetObj& X) const { return data_->mult(X); }
FiberOracle MonadSpec::lift_fibers(const Morph& f) const { return data_->lift_fibers(f); }

Element MonadSpec::map_eval(const std::function<Element(const Element&)>& f,
                            const Element& t) const {
    return data_->map_eval(f, t);
}

SetObj MonadSpec::iterate_obj(const SetObj& X, int k) const {
    SetObj r = X;
    for (int i = 0; i < k; ++i) r = apply(r);
    return r;
}

Morph MonadSpec::iterate_lift(const Morph& f, int k) const {
    Morph r = f;
    for (int i = 0; i < k; ++i) r = lift(r);
    return r;
}

namespace {

MonadSpec make_identity() {
    auto d = std::make_shared<MonadSpec::Data>();
    d->name = "identity";
    d->finiteness = true;
    d->on_obj = [](const SetObj& X) { return X; };
    d->on_morph = [](const Morph& f) { return f; };
    d->unit = [](const SetObj& X) { return Morph::identity(X); };
    d->mult = [](const SetObj& X) { return Morph::identity(X); };
    d->lift_fibers = [](const Morph& f) { return scan_oracle(f); };
    d->map_eval = [](const std::function<Element(const Element&)>& f, const Element& t) {
        return f(t);
    };
    return MonadSpec(std::move(d));
}

const char* kNone = "#none";

MonadSpec make_maybe() {
    auto d = std::make_shared<MonadSpec::Data>();
    d->name = "maybe";
    d->finiteness = true;
    auto some = [](const Element& e) { return Element::tag("some", e); };
    d->on_obj = [some](const SetObj& X) {
        std::vector<Element> elems{Element::atom(kNone)};
        for (const auto& e : X.elements()) elems.push_back(some(e));
        return SetObj::finite(std::move(elems));
    };
    auto on_obj = d->on_obj;
    d->on_morph = [some, on_obj](const Morph& f) {
        return Morph::from_fn(on_obj(f.dom()), on_obj(f.cod()),
                              [some, f](const Element& e) {
                                  if (e.is_atom()) return e;  // #none
                                  return some(f(e.at(0)));
                              },
                              "maybe<" + f.name() + ">");
    };
    d->unit = [some, on_obj](const SetObj& X) {
        return Morph::from_fn(X, on_obj(X), [some](const Element& e) { return some(e); }, "some");
    };
    d->mult = [on_obj](const SetObj& X) {
        return Morph::from_fn(on_obj(on_obj(X)), on_obj(X),
                              [](const Element& e) { return e.is_atom() ? e : e.at(0); },
                              "join");
    };
    d->map_eval = [some](const std::function<Element(const Element&)>& f, const Element& t) {
        return t.is_atom() ? t : some(f(t.at(0)));
    };
    auto lift = d->on_morph;
    d->lift_fibers = [lift](const Morph& f) { return scan_oracle(lift(f)); };
    return MonadSpec(std::move(d));
}

MonadSpec make_writer(FiniteMonoid monoid) {
    monoid.validate();
    auto m = std::make_shared<const FiniteMonoid>(std::move(monoid));
    auto d = std::make_shared<MonadSpec::Data>();
    d->name = "writer";
    d->finiteness = true;
    d->on_obj = [m](const SetObj& X) {
        std::vector<Element> elems;
        for (const auto& w : m->elements)
            for (const auto& e : X.elements()) elems.push_back(Element::pair(Element::atom(w), e));
        return SetObj::finite(std::move(elems));
    };
    auto on_obj = d->on_obj;
    d->on_morph = [on_obj](const Morph& f) {
        return Morph::from_fn(on_obj(f.dom()), on_obj(f.cod()),
                              [f](const Element& e) { return Element::pair(e.at(0), f(e.at(1))); },
                              "writer<" + f.name() + ">");
    };
    d->unit = [m, on_obj](const SetObj& X) {
        Element one = Element::atom(m->unit);
        return Morph::from_fn(X, on_obj(X),
                              [one](const Element& e) { return Element::pair(one, e); }, "unit");
    };
    d->mult = [m, on_obj](const SetObj& X) {
        return Morph::from_fn(on_obj(on_obj(X)), on_obj(X),
                              [m](const Element& e) {
                                  const Element& inner = e.at(1);
                                  return Element::pair(
                                      Element::atom(m->mul(e.at(0).label(), inner.at(0).label())),
                                      inner.at(1));
                              },
                              "mult");
    };
    d->map_eval = [](const std::function<Element(const Element&)>& f, const Element& t) {
        return Element::pair(t.at(0), f(t.at(1)));
    };
    auto lift = d->on_morph;
    d->lift_fibers = [lift](const Morph& f) { return scan_oracle(lift(f)); };
    return MonadSpec(std::move(d));
}

MonadSpec make_reader(std::vector<std::string> points) {
    if (points.empty()) throw Error("reader: the index set must be nonempty");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t k = points.size();
    auto d = std::make_shared<MonadSpec::Data>();
    d->name = "reader";
    d->finiteness = true;
    // TX = X^S as tuples indexed by the sorted point names.
    d->on_obj = [k](const SetObj& X) {
        std::vector<Element> tuples;
        std::vector<Element> current(k);
        std::function<void(std::size_t)> walk = [&](std::size_t i) {
            if (i == k) {
                tuples.push_back(Element::tuple(current));
                return;
            }
            for (const auto& e : X.elements()) {
                current[i] = e;
                walk(i + 1);
            }
        };
        walk(0);
        return SetObj::finite(std::move(tuples));
    };
    auto on_obj = d->on_obj;
    d->on_morph = [k, on_obj](const Morph& f) {
        return Morph::from_fn(on_obj(f.dom()), on_obj(f.cod()),
                              [k, f](const Element& e) {
                                  std::vector<Element> out;
                                  out.reserve(k);
                                  for (std::size_t i = 0; i < k; ++i) out.push_back(f(e.at(i)));
                                  return Element::tuple(std::move(out));
                              },
                              "reader<" + f.name() + ">");
    };
    d->unit = [k, on_obj](const SetObj& X) {
        return Morph::from_fn(X, on_obj(X),
                              [k](const Element& e) {
                                  return Element::tuple(std::vector<Element>(k, e));
                              },
                              "unit");
    };
    d->mult = [k, on_obj](const SetObj& X) {
        // diagonal: (f : S -> X^S) |-> (s |-> f(s)(s))
        return Morph::from_fn(on_obj(on_obj(X)), on_obj(X),
                              [k](const Element& e) {
                                  std::vector<Element> out;
                                  out.reserve(k);
                                  for (std::size_t i = 0; i < k; ++i) out.push_back(e.at(i).at(i));
                                  return Element::tuple(std::move(out));
                              },
                              "mult");
    };
    d->map_eval = [](const std::function<Element(const Element&)>& f, const Element& t) {
        std::vector<Element> out;
        out.reserve(t.size());
        for (const auto& x : t.parts()) out.push_back(f(x));
        return Element::tuple(std::move(out));
    };
    auto lift = d->on_morph;
    d->lift_fibers = [lift](const Morph& f) { return scan_oracle(lift(f)); };
    return MonadSpec(std::move(d));
}

MonadSpec make_list() {
    auto d = std::make_shared<MonadSpec::Data>();
    d->name = "list";
    d->finiteness = false;
    d->on_obj = [](const SetObj& X) { return SetObj::free_carrier("list", X); };
    auto on_obj = d->on_obj;
    d->on_morph = [on_obj](const Morph& f) {
        return Morph::from_fn(on_obj(f.dom()), on_obj(f.cod()),
                              [f](const Element& e) {
                                  std::vector<Element> out;
                                  out.reserve(e.size());
                                  for (const auto& x : e.parts()) out.push_back(f(x));
                                  return Element::list(std::move(out));
                              },
                              "list<" + f.name() + ">");
    };
    d->unit = [on_obj](const SetObj& X) {
        return Morph::from_fn(X, on_obj(X),
                              [](const Element& e) { return Element::list({e}); }, "unit");
    };
    d->mult = [on_obj](const SetObj& X) {
        return Morph::from_fn(on_obj(on_obj(X)), on_obj(X),
                              [](const Element& e) {
                                  std::vector<Element> out;
                                  for (const auto& xs : e.parts())
                                      for (const auto& x : xs.parts()) out.push_back(x);
                                  return Element::list(std::move(out));
                              },
                              "concat");
    };
    d->map_eval = [](const std::function<Element(const Element&)>& f, const Element& t) {
        std::vector<Element> out;
        out.reserve(t.size());
        for (const auto& x : t.parts()) out.push_back(f(x));
        return Element::list(std::move(out));
    };
    d->lift_fibers = [](const Morph& f) {
        // The fiber of list(f) over [c_1..c_k] is the product of the fibers
        // f^{-1}(c_i), enumerated in canonical order.
        FiberOracle base = scan_oracle(f);
        return FiberOracle{[base](const Element& c) {
            std::vector<Element> result;
            std::vector<std::vector<Element>> fibers;
            for (const auto& ci : c.parts()) {
                fibers.push_back(base(ci));
                if (fibers.back().empty()) return result;
            }
            std::vector<Element> current(fibers.size());
            std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (i == fibers.size()) {
                    result.push_back(Element::list(current));
                    return;
                }
                for (const auto& b : fibers[i]) {
                    current[i] = b;
                    walk(i + 1);
                }
            };
            walk(0);
            return result;
        }};
    };
    return MonadSpec(std::move(d));
}

}  // namespace

MonadSpec::MonadSpec() : MonadSpec(make_identity()) {}

MonadSpec MonadSpec::identity() { return make_identity(); }
MonadSpec MonadSpec::maybe() { return make_maybe(); }
MonadSpec MonadSpec::writer(FiniteMonoid monoid) { return make_writer(std::move(monoid)); }
MonadSpec MonadSpec::reader(std::vector<std::string> p) { return make_reader(std::move(p)); }
MonadSpec MonadSpec::list() { return make_list(); }

std::vector<Element> bounded_carrier(const MonadSpec& T, const SetObj& X, int bound) {
    if (T.preserves_finiteness()) return T.apply(X).elements();
    if (!X.is_finite()) {
        // lists over lists: expand the base first
        std::vector<Element> base = bounded_carrier(T, X.base(), bound);
        SetObj expanded = SetObj::finite(std::move(base));
        return bounded_carrier(T, expanded, bound);
    }
    std::vector<Element> result;
    std::vector<Element> current;
    std::function<void(int)> walk = [&](int remaining) {
        result.push_back(Element::list(current));
        if (remaining == 0) return;
        for (const auto& e : X.elements()) {
            current.push_back(e);
            walk(remaining - 1);
            current.pop_back();
        }
    };
    walk(bound);
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

// Elements of T^layers X for the list monad with every list of length at
// most `bound` and at most `bound` atoms in total.
std::vector<Element> leaf_bounded_lists(const SetObj& X, int layers, int bound) {
    if (layers == 0) return X.elements();
    std::vector<std::pair<Element, int>> inner;  // (element, leaf count)
    if (layers == 1) {
        for (const auto& e : X.elements()) inner.emplace_back(e, 1);
    } else {
        for (const auto& e : leaf_bounded_lists(X, layers - 1, bound)) {
            int leaves = 0;
            std::function<void(const Element&)> count = [&](const Element& t) {
                if (t.is_list())
                    for (const auto& u : t.parts()) count(u);
                else
                    ++leaves;
            };
            count(e);
            inner.emplace_back(e, leaves);
        }
    }
    std::vector<Element> out;
    std::vector<Element> current;
    std::function<void(int)> walk = [&](int budget) {
        out.push_back(Element::list(current));
        if (static_cast<int>(current.size()) >= bound) return;
        for (const auto& [e, leaves] : inner) {
            if (leaves > budget) continue;
            current.push_back(e);
            walk(budget - leaves);
            current.pop_back();
        }
    };
    walk(bound);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

MonadLawReport check_monad_laws(const MonadSpec& T, const SetObj& X, int bound) {
    MonadLawReport report;
    auto check = [&](const Morph& lhs, const Morph& rhs, const std::vector<Element>& points,
                     const std::string& law) {
        for (const auto& e : points) {
            if (lhs(e) != rhs(e)) {
                report.violations.push_back(law + " fails at " + e.show() + ": " +
                                            lhs(e).show() + " vs " + rhs(e).show());
                return;
            }
        }
    };

    const SetObj TX = T.apply(X);
    const Morph mX = T.mult_at(X);
    auto layer = [&](int k) {
        if (T.preserves_finiteness()) return T.iterate_obj(X, k).elements();
        return leaf_bounded_lists(X, k, bound);
    };
    check(compose(mX, T.lift(mX)), compose(mX, T.mult_at(TX)), layer(3),
          "associativity m.Tm = m.mT");
    check(compose(mX, T.lift(T.unit_at(X))), Morph::identity(TX), layer(1),
          "right unit m.Ti = 1");
    check(compose(mX, T.unit_at(TX)), Morph::identity(TX), layer(1), "left unit m.iT = 1");
    return report;
}

KleisliMorph kleisli_identity(const MonadSpec& T, const SetObj& X) {
    return KleisliMorph{X, X, T.unit_at(X)};
}

KleisliMorph kleisli_compose(const MonadSpec& T, const KleisliMorph& g, const KleisliMorph& f) {
    if (f.cod != g.dom) throw Error("kleisli_compose: type mismatch");
    return KleisliMorph{f.dom, g.cod, compose(T.mult_at(g.cod), compose(T.lift(g.body), f.body))};
}

}  // namespace tcat
