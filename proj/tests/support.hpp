#pragma once

#include "tcat/tsimp.hpp"

// shared builders for the test suites
namespace tcat::testing {

inline Element el(const std::string& text) { return *Element::parse(text); }

// The poset category [k] over the identity monad; arrows are (src, tgt)
// pairs with d0 the target and d1 the source.
inline TCatData ordinal_category(int k) {
    std::vector<Element> objects, arrows;
    for (int i = 0; i <= k; ++i) objects.push_back(Element::atom(std::to_string(i)));
    for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            arrows.push_back(Element::pair(Element::atom(std::to_string(i)),
                                           Element::atom(std::to_string(j))));
    SetObj X0 = SetObj::finite(objects);
    SetObj X1 = SetObj::finite(arrows);
    TGraph g{MonadSpec::identity(), X0, X1, Morph::tuple_component(X1, X0, 1),
             Morph::tuple_component(X1, X0, 0)};
    ComposablePairs x2 = build_X2(g);
    Morph comp = Morph::from_fn(x2.apex, X1,
                                [](const Element& z) {
                                    return Element::pair(z.at(1).at(0), z.at(0).at(1));
                                },
                                "comp");
    Morph unit = Morph::from_fn(X0, X1,
                                [](const Element& x) { return Element::pair(x, x); }, "unit");
    return TCatData::assemble(g, comp, unit);
}

inline TSimplicialObject z2_bar(int depth) {
    MonadSpec wr = MonadSpec::writer(FiniteMonoid::cyclic2());
    SetObj one = SetObj::of_names({"*"});
    Morph act = Morph::from_fn(wr.apply(one), one,
                               [](const Element&) { return Element::atom("*"); }, "act");
    return bar_resolution(one, act, wr, depth);
}

}  // namespace tcat::testing
