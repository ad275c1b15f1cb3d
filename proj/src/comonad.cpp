#include "tcat/comonad.hpp"

namespace tcat {

RPresheaf RPresheaf::restriction(const TSimplicialObject& X) {
    RPresheaf P;
    P.monad = X.monad;
    P.depth = X.depth;
    P.levels = X.levels;
    P.faces = X.inner;
    P.degens = X.degen;
    return P;
}

SAReport RPresheaf::check_identities() const {
    SAReport report;
    Element w;
    auto expect = [&](const Morph& lhs, const Morph& rhs, SimpId id, int n, int i, int j) {
        ++report.checked;
        if (!equal_on_dom(lhs, rhs, &w))
            report.failures.push_back({SimpIdInstance{id, n, i, j}, w.show()});
    };
    for (int n = 2; n <= depth; ++n)
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                expect(compose(face(n - 1, i), face(n, j)),
                       compose(face(n - 1, j - 1), face(n, i)), SimpId::FaceFace, n, i, j);
    if (degens.empty()) return report;
    for (int n = 0; n + 2 <= depth; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                expect(compose(degeneracy(n + 1, j + 1), degeneracy(n, i)),
                       compose(degeneracy(n + 1, i), degeneracy(n, j)), SimpId::DegenDegen, n,
                       i, j);
    for (int n = 1; n + 1 <= depth; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                expect(compose(degeneracy(n - 1, j - 1), face(n, i)),
                       compose(face(n + 1, i), degeneracy(n, j)), SimpId::FaceDegenUnder, n, i,
                       j);
    for (int n = 0; n + 1 <= depth; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = j; i <= j + 1 && i <= n; ++i)
                expect(compose(face(n + 1, i), degeneracy(n, j)), Morph::identity(levels[n]),
                       SimpId::FaceDegenId, n, i, j);
    for (int n = 2; n + 1 <= depth; ++n)
        for (int j = 0; j <= n - 2; ++j)
            for (int i = j + 2; i < n + 1; ++i)
                expect(compose(face(n + 1, i), degeneracy(n, j)),
                       compose(degeneracy(n - 1, j), face(n, i - 1)), SimpId::FaceDegenOver, n,
                       i, j);
    return report;
}

std::vector<SetObj> K_levels(const std::vector<SetObj>& levels, const MonadSpec& T) {
    if (!T.preserves_finiteness())
        throw CapabilityError("the sequence comonad needs a finiteness-preserving monad");
    std::vector<SetObj> out;
    if (levels.empty()) return out;
    out.push_back(levels[0]);
    for (std::size_t n = 1; n < levels.size(); ++n) {
        SetObj tk = T.apply(out.back());
        std::vector<Element> pairs;
        for (const auto& x : levels[n].elements())
            for (const auto& t : tk.elements()) pairs.push_back(Element::pair(x, t));
        out.push_back(SetObj::finite(std::move(pairs)));
    }
    return out;
}

std::vector<Morph> K_counit(const std::vector<SetObj>& levels, const MonadSpec& T) {
    std::vector<SetObj> K = K_levels(levels, T);
    std::vector<Morph> eps;
    eps.push_back(Morph::identity(levels[0]));
    for (std::size_t n = 1; n < levels.size(); ++n)
        eps.push_back(Morph::tuple_component(K[n], levels[n], 0));
    return eps;
}

Element K_comult_eval(const MonadSpec& T, int n, const Element& e) {
    if (n == 0) return e;
    return Element::pair(
        e, T.map_eval([&T, n](const Element& x) { return K_comult_eval(T, n - 1, x); },
                      e.at(1)));
}

Element K_map_eval(const MonadSpec& T,
                   const std::function<Element(int, const Element&)>& component, int n,
                   const Element& e) {
    if (n == 0) return component(0, e);
    return Element::pair(component(n, e.at(0)),
                         T.map_eval(
                             [&](const Element& x) {
                                 return K_map_eval(T, component, n - 1, x);
                             },
                             e.at(1)));
}

ComonadLawReport check_comonad_laws(const std::vector<SetObj>& levels, const MonadSpec& T) {
    ComonadLawReport report;
    std::vector<SetObj> K = K_levels(levels, T);
    auto eps = [](int n, const Element& e) { return n == 0 ? e : e.at(0); };
    auto delta = [&T](int n, const Element& e) { return K_comult_eval(T, n, e); };
    for (std::size_t n = 0; n < levels.size(); ++n) {
        for (const auto& e : K[n].elements()) {
            Element d = delta(static_cast<int>(n), e);
            if (K_map_eval(T, eps, static_cast<int>(n), d) != e) {
                report.violations.push_back("K(eps).delta != 1 at level " + std::to_string(n) +
                                            ", " + e.show());
                break;
            }
            if (eps(static_cast<int>(n), d) != e) {
                report.violations.push_back("epsK.delta != 1 at level " + std::to_string(n) +
                                            ", " + e.show());
                break;
            }
            Element lhs = K_map_eval(
                T, [&](int m, const Element& x) { return delta(m, x); },
                static_cast<int>(n), d);
            Element rhs = K_comult_eval(T, static_cast<int>(n), d);
            if (lhs != rhs) {
                report.violations.push_back("coassociativity fails at level " +
                                            std::to_string(n) + ", " + e.show());
                break;
            }
        }
    }
    return report;
}

namespace {

Morph k_face_action(const RPresheaf& P, const std::vector<SetObj>& K, int a, int i) {
    const MonadSpec& T = P.monad;
    if (a == 1) return compose(P.face(1, 0), Morph::tuple_component(K[1], P.levels[1], 0));
    if (i == a - 1) {
        Morph top = P.face(a, a - 1);
        Morph mk = T.mult_at(K[a - 2]);
        Morph tproj = T.lift(Morph::tuple_component(K[a - 1], T.apply(K[a - 2]), 1));
        return Morph::from_fn(K[a], K[a - 1],
                              [top, mk, tproj](const Element& e) {
                                  return Element::pair(top(e.at(0)), mk(tproj(e.at(1))));
                              },
                              "d" + std::to_string(i));
    }
    Morph fx = P.face(a, i);
    Morph inner = T.lift(k_face_action(P, K, a - 1, i));
    return Morph::from_fn(K[a], K[a - 1],
                          [fx, inner](const Element& e) {
                              return Element::pair(fx(e.at(0)), inner(e.at(1)));
                          },
                          "d" + std::to_string(i));
}

Morph k_degen_action(const RPresheaf& P, const std::vector<SetObj>& K, int a, int i) {
    const MonadSpec& T = P.monad;
    if (i == a) {
        Morph sx = P.degeneracy(a, a);
        Morph eps = a == 0 ? Morph::identity(P.levels[0])
                           : Morph::tuple_component(K[a], P.levels[a], 0);
        Morph unit = T.unit_at(K[a]);
        return Morph::from_fn(K[a], K[a + 1],
                              [sx, eps, unit](const Element& e) {
                                  return Element::pair(sx(eps(e)), unit(e));
                              },
                              "s" + std::to_string(i));
    }
    Morph sx = P.degeneracy(a, i);
    Morph inner = T.lift(k_degen_action(P, K, a - 1, i));
    return Morph::from_fn(K[a], K[a + 1],
                          [sx, inner](const Element& e) {
                              return Element::pair(sx(e.at(0)), inner(e.at(1)));
                          },
                          "s" + std::to_string(i));
}

}  // namespace

RPresheaf lift_K(const RPresheaf& P) {
    std::vector<SetObj> K = K_levels(P.levels, P.monad);
    RPresheaf out;
    out.monad = P.monad;
    out.depth = P.depth;
    out.levels = K;
    out.faces.assign(P.depth + 1, {});
    out.degens.assign(std::max(P.depth, 0), {});
    for (int a = 1; a <= P.depth; ++a)
        for (int i = 0; i < a; ++i) out.faces[a].push_back(k_face_action(P, K, a, i));
    if (!P.degens.empty())
        for (int a = 0; a < P.depth; ++a)
            for (int i = 0; i <= a; ++i) out.degens[a].push_back(k_degen_action(P, K, a, i));
    return out;
}

CoalgebraData tsimp_to_coalgebra(const TSimplicialObject& X) {
    CoalgebraData C;
    C.carrier = RPresheaf::restriction(X);
    std::vector<SetObj> K = K_levels(X.levels, X.monad);
    C.zeta.push_back(Morph::identity(X.level(0)));
    for (int n = 1; n <= X.depth; ++n) {
        Morph dn = X.last_face(n);
        Morph inner = X.monad.lift(C.zeta.back());
        C.zeta.push_back(Morph::from_fn(X.level(n), K[n],
                                        [dn, inner](const Element& e) {
                                            return Element::pair(e, inner(dn(e)));
                                        },
                                        "zeta"));
    }
    return C;
}

CoalgebraReport check_coalgebra(const CoalgebraData& C) {
    CoalgebraReport report;
    const RPresheaf& P = C.carrier;
    const MonadSpec& T = P.monad;
    std::vector<SetObj> K = K_levels(P.levels, T);
    std::vector<Morph> eps = K_counit(P.levels, T);
    auto zeta_eval = [&C](int m, const Element& x) { return C.zeta[m](x); };
    Element w;
    for (int n = 0; n <= P.depth; ++n) {
        if (!equal_on_dom(compose(eps[n], C.zeta[n]), Morph::identity(P.levels[n]), &w))
            report.violations.push_back("counit law fails at level " + std::to_string(n) +
                                        ", " + w.show());
        for (const auto& x : P.levels[n].elements()) {
            Element z = C.zeta[n](x);
            if (K_map_eval(T, zeta_eval, n, z) != K_comult_eval(T, n, z)) {
                report.violations.push_back("coassociativity fails at level " +
                                            std::to_string(n) + ", " + x.show());
                break;
            }
        }
    }
    // naturality against the lifted structure, one generator at a time
    RPresheaf KP = lift_K(P);
    for (int n = 1; n <= P.depth; ++n)
        for (int i = 0; i < n; ++i)
            if (!equal_on_dom(compose(C.zeta[n - 1], P.face(n, i)),
                              compose(KP.face(n, i), C.zeta[n]), &w))
                report.violations.push_back("zeta not natural for face (n=" +
                                            std::to_string(n) + ",i=" + std::to_string(i) +
                                            ") at " + w.show());
    if (!P.degens.empty())
        for (int n = 0; n < P.depth; ++n)
            for (int i = 0; i <= n; ++i)
                if (!equal_on_dom(compose(C.zeta[n + 1], P.degeneracy(n, i)),
                                  compose(KP.degeneracy(n, i), C.zeta[n]), &w))
                    report.violations.push_back("zeta not natural for degeneracy (n=" +
                                                std::to_string(n) + ",i=" + std::to_string(i) +
                                                ") at " + w.show());
    return report;
}

TSimplicialObject coalgebra_to_tsimp(const CoalgebraData& C) {
    CoalgebraReport report = check_coalgebra(C);
    if (!report.ok()) throw Error("coalgebra_to_tsimp: " + report.violations.front());
    const RPresheaf& P = C.carrier;
    const MonadSpec& T = P.monad;
    std::vector<SetObj> K = K_levels(P.levels, T);
    TSimplicialObject X;
    X.monad = T;
    X.depth = P.depth;
    X.levels = P.levels;
    X.inner = P.faces;
    X.degen = P.degens;
    X.last.assign(P.depth + 1, Morph());
    for (int n = 1; n <= P.depth; ++n) {
        Morph eps = n == 1 ? Morph::identity(P.levels[0])
                           : Morph::tuple_component(K[n - 1], P.levels[n - 1], 0);
        X.last[n] = compose(T.lift(eps),
                            compose(Morph::tuple_component(K[n], T.apply(K[n - 1]), 1),
                                    C.zeta[n]));
    }
    return X;
}

}  // namespace tcat
