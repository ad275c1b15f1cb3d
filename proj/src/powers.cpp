#include "tcat/powers.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tcat {

FiniteSimplicialSet FiniteSimplicialSet::standard(int k, int depth) {
    FiniteSimplicialSet A;
    A.depth = depth;
    std::vector<std::vector<SimplexMap>> maps;
    for (int n = 0; n <= depth; ++n) {
        maps.push_back(enumerate_hom(n, k, HomKind::Delta));
        std::vector<std::string> names;
        for (const auto& m : maps[n]) {
            std::string name;
            for (int v : m.values()) name += std::to_string(v);
            names.push_back(name);
        }
        A.simplices.push_back(std::move(names));
    }
    auto index_of = [&](int n, const SimplexMap& m) {
        return static_cast<int>(std::lower_bound(maps[n].begin(), maps[n].end(), m) -
                                maps[n].begin());
    };
    A.face.resize(depth + 1);
    A.degen.resize(depth + 1);
    for (int n = 0; n <= depth; ++n) {
        for (int i = 0; i <= n; ++i) {
            std::vector<int> fi, si;
            for (const auto& m : maps[n]) {
                if (n >= 1) fi.push_back(index_of(n - 1, compose(m, SimplexMap::face(n - 1, i))));
                if (n + 1 <= depth)
                    si.push_back(index_of(n + 1, compose(m, SimplexMap::degeneracy(n, i))));
            }
            A.face[n].push_back(std::move(fi));
            A.degen[n].push_back(std::move(si));
        }
    }
    return A;
}

std::vector<std::string> FiniteSimplicialSet::check_identities() const {
    std::vector<std::string> violations;
    auto complain = [&](const std::string& what, int n, int i, int j, int idx) {
        violations.push_back(what + " fails at n=" + std::to_string(n) + " i=" +
                             std::to_string(i) + " j=" + std::to_string(j) + " simplex " +
                             simplices[n][idx]);
    };
    for (int n = 2; n <= depth; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (std::size_t idx = 0; idx < simplices[n].size(); ++idx)
                    if (face_of(n - 1, i, face_of(n, j, idx)) !=
                        face_of(n - 1, j - 1, face_of(n, i, idx)))
                        complain("face-face", n, i, j, static_cast<int>(idx));
    for (int n = 0; n + 1 <= depth; ++n)
        for (int j = 0; j <= n; ++j)
            for (std::size_t idx = 0; idx < simplices[n].size(); ++idx) {
                for (int i = j; i <= j + 1; ++i)
                    if (face_of(n + 1, i, degen_of(n, j, idx)) != static_cast<int>(idx))
                        complain("face-degen-id", n, i, j, static_cast<int>(idx));
                for (int i = 0; i < j; ++i)
                    if (n >= 1 && face_of(n + 1, i, degen_of(n, j, idx)) !=
                                      degen_of(n - 1, j - 1, face_of(n, i, idx)))
                        complain("face-degen-under", n, i, j, static_cast<int>(idx));
                for (int i = j + 2; i <= n + 1; ++i)
                    if (face_of(n + 1, i, degen_of(n, j, idx)) !=
                        degen_of(n - 1, j, face_of(n, i - 1, idx)))
                        complain("face-degen-over", n, i, j, static_cast<int>(idx));
            }
    for (int n = 0; n + 2 <= depth; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (std::size_t idx = 0; idx < simplices[n].size(); ++idx)
                    if (degen_of(n + 1, j + 1, degen_of(n, i, idx)) !=
                        degen_of(n + 1, i, degen_of(n, j, idx)))
                        complain("degen-degen", n, i, j, static_cast<int>(idx));
    return violations;
}

namespace {

Element component_tag(const std::string& name, const Element& y) {
    return Element::pair(Element::atom("@" + name), y);
}

}  // namespace

TSimplicialObject copower(const FiniteSimplicialSet& A, const TSimplicialObject& Y) {
    const int depth = std::min(A.depth, Y.depth);
    TSimplicialObject Z;
    Z.monad = Y.monad;
    Z.depth = depth;
    Z.inner.assign(depth + 1, {});
    Z.last.assign(depth + 1, Morph());
    Z.degen.assign(std::max(depth, 0), {});

    auto names = std::make_shared<std::vector<std::vector<std::string>>>(A.simplices);
    auto index = std::make_shared<std::vector<std::map<std::string, int>>>(depth + 1);
    for (int n = 0; n <= depth; ++n) {
        std::vector<Element> elems;
        for (std::size_t a = 0; a < (*names)[n].size(); ++a) {
            (*index)[n][(*names)[n][a]] = static_cast<int>(a);
            for (const auto& y : Y.level(n).elements())
                elems.push_back(component_tag((*names)[n][a], y));
        }
        Z.levels.push_back(SetObj::finite(std::move(elems)));
    }
    auto split = [index](int n, const Element& e) {
        return std::make_pair((*index)[n].at(e.at(0).label().substr(1)), e.at(1));
    };

    for (int n = 1; n <= depth; ++n) {
        for (int i = 0; i < n; ++i) {
            Morph dy = Y.face(n, i);
            auto row = A.face[n][i];
            Z.inner[n].push_back(Morph::from_fn(
                Z.level(n), Z.level(n - 1),
                [names, n, row, dy, split](const Element& e) {
                    auto [a, y] = split(n, e);
                    return component_tag((*names)[n - 1][row[a]], dy(y));
                },
                "d" + std::to_string(i)));
        }
        Morph dy = Y.last_face(n);
        auto row = A.face[n][n];
        SetObj Ylow = Y.level(n - 1);
        SetObj Zlow = Z.level(n - 1);
        const MonadSpec T = Y.monad;
        Z.last[n] = Morph::from_fn(
            Z.level(n), T.apply(Zlow),
            [names, n, row, dy, split, Ylow, Zlow, T](const Element& e) {
                auto [a, y] = split(n, e);
                std::string target = (*names)[n - 1][row[a]];
                Morph incl = Morph::from_fn(
                    Ylow, Zlow,
                    [target](const Element& v) { return component_tag(target, v); }, "incl");
                return T.lift(incl)(dy(y));
            },
            "d" + std::to_string(n));
    }
    for (int n = 0; n < depth; ++n) {
        for (int i = 0; i <= n; ++i) {
            Morph sy = Y.degeneracy(n, i);
            auto row = A.degen[n][i];
            Z.degen[n].push_back(Morph::from_fn(
                Z.level(n), Z.level(n + 1),
                [names, n, row, sy, split](const Element& e) {
                    auto [a, y] = split(n, e);
                    return component_tag((*names)[n + 1][row[a]], sy(y));
                },
                "s" + std::to_string(i)));
        }
    }
    return Z;
}

namespace {

// Tuples (x_0 .. x_n) over X_{n+1} with d_k x_{k-1} = d_k x_k.
SetObj power_level(const TSimplicialObject& X, int n) {
    std::vector<Element> out;
    std::vector<Element> current(n + 1);
    std::function<void(int)> walk = [&](int k) {
        if (k == n + 1) {
            out.push_back(Element::tuple(current));
            return;
        }
        for (const auto& x : X.level(n + 1).elements()) {
            if (k >= 1 && X.face(n + 1, k)(current[k - 1]) != X.face(n + 1, k)(x)) continue;
            current[k] = x;
            walk(k + 1);
        }
    };
    walk(0);
    return SetObj::finite(std::move(out));
}

}  // namespace

PowerG power_G(const TSimplicialObject& X) {
    if (X.depth < 1) throw Error("power_G: depth must be at least 1");
    PowerG P;
    P.depth = X.depth - 1;
    for (int n = 0; n <= P.depth; ++n) {
        P.levels.push_back(power_level(X, n));
        std::vector<Morph> projections;
        for (int j = 0; j <= n; ++j)
            projections.push_back(Morph::tuple_component(P.levels[n], X.level(n + 1), j));
        P.proj.push_back(std::move(projections));
    }
    P.faces.assign(P.depth + 1, {});
    P.degens.assign(P.depth + 1, {});
    for (int n = 1; n <= P.depth; ++n) {
        for (int i = 0; i < n; ++i) {
            SetObj target = P.levels[n - 1];
            Morph shifted = X.face(n + 1, i + 1);
            Morph plain = X.face(n + 1, i);
            P.faces[n].push_back(Morph::from_fn(
                P.levels[n], target,
                [shifted, plain, i, n, target](const Element& w) {
                    std::vector<Element> parts;
                    for (int j = 0; j <= n - 1; ++j) {
                        if (j <= i - 1)
                            parts.push_back(shifted(w.at(j)));
                        else
                            parts.push_back(plain(w.at(j + 1)));
                    }
                    Element value = Element::tuple(std::move(parts));
                    if (!target.contains(value))
                        throw Error("power face escapes its level at " + w.show());
                    return value;
                },
                "d" + std::to_string(i)));
        }
    }
    for (int n = 0; n < P.depth; ++n) {
        for (int i = 0; i <= n; ++i) {
            SetObj target = P.levels[n + 1];
            Morph lower = X.degeneracy(n + 1, i);
            Morph upper = X.degeneracy(n + 1, i + 1);
            P.degens[n].push_back(Morph::from_fn(
                P.levels[n], target,
                [lower, upper, i, n, target](const Element& w) {
                    std::vector<Element> parts;
                    for (int j = 0; j <= n + 1; ++j) {
                        if (j <= i)
                            parts.push_back(upper(w.at(j)));
                        else
                            parts.push_back(lower(w.at(j - 1)));
                    }
                    Element value = Element::tuple(std::move(parts));
                    if (!target.contains(value))
                        throw Error("power degeneracy escapes its level at " + w.show());
                    return value;
                },
                "s" + std::to_string(i)));
        }
    }
    return P;
}

RPresheaf PowerG::as_presheaf(const MonadSpec& T) const {
    RPresheaf P;
    P.monad = T;
    P.depth = depth;
    P.levels = levels;
    P.faces = faces;
    P.degens = degens;
    P.degens.resize(std::max(depth, 0));
    return P;
}

std::vector<Morph> u_to_uhat(const TSimplicialObject& Y, const TSimplicialObject& X,
                             const PowerG& GX, const std::vector<std::vector<Morph>>& u,
                             int depth) {
    (void)X;
    std::vector<Morph> uhat;
    for (int m = 0; m <= depth; ++m) {
        SetObj target = GX.levels.at(m);
        std::vector<Morph> comps;
        for (int k = 0; k <= m; ++k)
            comps.push_back(compose(u.at(m + 1).at(k + 1), Y.degeneracy(m, k)));
        uhat.push_back(Morph::from_fn(
            Y.level(m), target,
            [comps, target](const Element& y) {
                std::vector<Element> parts;
                for (const auto& c : comps) parts.push_back(c(y));
                Element value = Element::tuple(std::move(parts));
                if (!target.contains(value))
                    throw Error("u_to_uhat: image escapes the power at " + y.show());
                return value;
            },
            "uhat"));
    }
    return uhat;
}

std::vector<std::vector<Morph>> uhat_to_u(const TSimplicialObject& Y,
                                          const TSimplicialObject& X, const PowerG& GX,
                                          const std::vector<Morph>& uhat, int depth) {
    std::vector<std::vector<Morph>> u(depth + 1);
    for (int m = 0; m <= depth; ++m)
        for (int k = 0; k <= m; ++k)
            u[m].push_back(
                compose(X.face(m + 1, k), compose(GX.proj.at(m).at(k), uhat.at(m))));
    (void)Y;
    return u;
}

namespace {

// Canonical comparison T((G power X)_n) -> (G power TX)_n, as tuples of
// lifted projections.
Element can_eval(const MonadSpec& T, const PowerG& GX, int n, const Element& t) {
    std::vector<Element> parts;
    for (int j = 0; j <= n; ++j) parts.push_back(T.lift(GX.proj[n][j])(t));
    return Element::tuple(std::move(parts));
}

// Fibers of the comparison over a tuple of TX_{n+1} values.
std::vector<Element> can_fibers(const MonadSpec& T, const PowerG& GX, int n,
                                const Element& target) {
    if (T.preserves_finiteness()) {
        std::vector<Element> fiber;
        SetObj TGX = T.apply(GX.levels[n]);
        for (const auto& t : TGX.elements())
            if (can_eval(T, GX, n, t) == target) fiber.push_back(t);
        return fiber;
    }
    // For the list monad the comparison zips lists componentwise, so the
    // fiber is empty or the single unzipped list.
    std::size_t len = target.at(0).size();
    for (int j = 1; j <= n; ++j)
        if (target.at(j).size() != len) return {};
    std::vector<Element> items;
    for (std::size_t r = 0; r < len; ++r) {
        std::vector<Element> parts;
        for (int j = 0; j <= n; ++j) parts.push_back(target.at(j).at(r));
        Element w = Element::tuple(std::move(parts));
        if (!GX.levels[n].contains(w)) return {};
        items.push_back(w);
    }
    return {Element::list(std::move(items))};
}

// (G power TX)_n, materialized for finiteness-preserving monads and symbolic
// otherwise; it is only ever a codomain marker in the infinite case.
SetObj power_of_TX_level(const TSimplicialObject& X, int n) {
    const MonadSpec& T = X.monad;
    if (!T.preserves_finiteness())
        return SetObj::free_carrier("power" + std::to_string(n), T.apply(X.level(n + 1)));
    SetObj TX = T.apply(X.level(n + 1));
    std::vector<Element> out;
    std::vector<Element> current(n + 1);
    std::vector<Morph> faces;
    for (int k = 1; k <= n; ++k) faces.push_back(T.lift(X.face(n + 1, k)));
    std::function<void(int)> walk = [&](int k) {
        if (k == n + 1) {
            out.push_back(Element::tuple(current));
            return;
        }
        for (const auto& z : TX.elements()) {
            if (k >= 1 && faces[k - 1](current[k - 1]) != faces[k - 1](z)) continue;
            current[k] = z;
            walk(k + 1);
        }
    };
    walk(0);
    return SetObj::finite(std::move(out));
}

}  // namespace

DeltaOnePower delta1_power(const TSimplicialObject& X, int depth) {
    if (depth < 1) throw Error("delta1_power: depth must be at least 1");
    if (X.depth < depth + 1)
        throw Error("delta1_power: the input must be available to depth " +
                    std::to_string(depth + 1));
    const MonadSpec& T = X.monad;
    DeltaOnePower P;
    P.GX = power_G(X);
    const PowerG& GX = P.GX;

    // L_0: pullback of i X_0 against d_1 . pi_0
    Morph d1pi0 = compose(X.last_face(1), GX.proj[0][0]);
    PullbackResult base = pullback(T.unit_at(X.level(0)), d1pi0, scan_oracle(d1pi0));
    TSimplicialObject& L = P.L;
    L.monad = T;
    L.depth = depth;
    L.levels = {base.apex};
    L.inner.assign(depth + 1, {});
    L.last.assign(depth + 1, Morph());
    L.degen.assign(std::max(depth, 0), {});
    P.p = {base.p1};
    P.q = {base.p2};

    // levels by the recursive hexagon limit
    for (int n = 0; n + 1 <= depth; ++n) {
        SetObj TL = T.apply(L.levels[n]);
        SetObj Avertex = power_of_TX_level(X, n);
        SetObj TXn = T.apply(X.level(n));

        Morph Tq = T.lift(P.q[n]);
        PowerG GXcopy = GX;  // value capture keeps the projections alive
        Morph a = Morph::from_fn(TL, Avertex,
                                 [T, GXcopy, n, Tq](const Element& beta) {
                                     return can_eval(T, GXcopy, n, Tq(beta));
                                 },
                                 "can.Tq");
        Morph b = T.lift(P.p[n]);
        Morph c = X.last_face(n + 1);
        Morph d = T.unit_at(X.level(n + 1));
        Morph e = compose(X.last_face(n + 2), GX.proj[n + 1][n + 1]);
        Morph last_top = X.last_face(n + 2);
        Morph f = Morph::from_fn(GX.levels[n + 1], Avertex,
                                 [last_top, n](const Element& w) {
                                     std::vector<Element> parts;
                                     for (int j = 0; j <= n; ++j)
                                         parts.push_back(last_top(w.at(j)));
                                     return Element::tuple(std::move(parts));
                                 },
                                 "Gxi.can");
        Morph mTd = compose(T.mult_at(X.level(n)), T.lift(X.last_face(n + 1)));
        Morph g = Morph::from_fn(Avertex, TXn,
                                 [mTd, n](const Element& zeta) { return mTd(zeta.at(n)); },
                                 "m.Td.pi");
        Morph h = Morph::identity(TXn);
        Morph i = mTd;

        Morph qn = P.q[n];
        // cache the comparison fibers: one scan of T((G power X)_n) total
        auto can_table = std::make_shared<std::map<Element, std::vector<Element>>>();
        bool can_cached = T.preserves_finiteness();
        if (can_cached) {
            SetObj TGX = T.apply(GX.levels[n]);
            for (const auto& t : TGX.elements())
                (*can_table)[can_eval(T, GXcopy, n, t)].push_back(t);
        }
        FiberOracle lifted_q = T.lift_fibers(qn);
        FiberOracle fib_a{[T, GXcopy, n, can_table, can_cached, lifted_q](const Element& zeta) {
            std::vector<Element> result;
            std::vector<Element> cf;
            if (can_cached) {
                auto it = can_table->find(zeta);
                if (it != can_table->end()) cf = it->second;
            } else {
                cf = can_fibers(T, GXcopy, n, zeta);
            }
            for (const auto& t : cf)
                for (const auto& beta : lifted_q(t)) result.push_back(beta);
            return result;
        }};
        FiberOracle fib_b = T.lift_fibers(P.p[n]);

        HexagonResult hex = limit_hexagon(HexagonLegs{a, b, c, d, e, f, g, h, i,
                                                      std::optional<FiberOracle>(fib_a),
                                                      std::optional<FiberOracle>(fib_b)});
        L.levels.push_back(hex.apex);
        L.last[n + 1] = hex.projB;
        P.p.push_back(hex.projD);
        P.q.push_back(hex.projF);
    }

    // remaining faces and degeneracies: the unique pairings through the
    // limit projections
    for (int lvl = 1; lvl <= depth; ++lvl) {
        SetObj target = L.levels[lvl - 1];
        for (int i = 0; i < lvl; ++i) {
            Morph px = X.face(lvl, i);
            Morph qx = GX.faces[lvl][i];
            Morph pl = P.p[lvl], ql = P.q[lvl];
            if (lvl == 1) {
                L.inner[1].push_back(Morph::from_fn(
                    L.levels[1], target,
                    [px, qx, pl, ql, target](const Element& ell) {
                        Element value = Element::pair(px(pl(ell)), qx(ql(ell)));
                        if (!target.contains(value))
                            throw Error("power face escapes L_0 at " + ell.show());
                        return value;
                    },
                    "d0"));
                continue;
            }
            Morph beta_map = i <= lvl - 2
                                 ? L.monad.lift(L.face(lvl - 1, i))
                                 : compose(L.monad.mult_at(L.levels[lvl - 2]),
                                           L.monad.lift(L.last_face(lvl - 1)));
            L.inner[lvl].push_back(Morph::from_fn(
                L.levels[lvl], target,
                [px, qx, pl, ql, beta_map, target](const Element& ell) {
                    Element value = Element::tuple(
                        {beta_map(ell.at(0)), px(pl(ell)), qx(ql(ell))});
                    if (!target.contains(value))
                        throw Error("power face escapes its level at " + ell.show());
                    return value;
                },
                "d" + std::to_string(i)));
        }
    }
    for (int lvl = 0; lvl < depth; ++lvl) {
        SetObj target = L.levels[lvl + 1];
        for (int i = 0; i <= lvl; ++i) {
            Morph px = X.degeneracy(lvl, i);
            Morph qx = GX.degens[lvl][i];
            Morph pl = P.p[lvl], ql = P.q[lvl];
            Morph beta_map = i < lvl ? L.monad.lift(L.degeneracy(lvl - 1, i))
                                     : L.monad.unit_at(L.levels[lvl]);
            bool use_unit_of_self = (i == lvl);
            L.degen[lvl].push_back(Morph::from_fn(
                L.levels[lvl], target,
                [px, qx, pl, ql, beta_map, use_unit_of_self, lvl, target](const Element& ell) {
                    Element beta = use_unit_of_self
                                       ? beta_map(ell)
                                       : beta_map(lvl >= 1 ? ell.at(0) : ell);
                    Element value = Element::tuple({beta, px(pl(ell)), qx(ql(ell))});
                    if (!target.contains(value))
                        throw Error("power degeneracy escapes its level at " + ell.show());
                    return value;
                },
                "s" + std::to_string(i)));
        }
    }
    return P;
}

HomReport check_power_diagrams(const DeltaOnePower& P, const TSimplicialObject& X) {
    HomReport report;
    const TSimplicialObject& L = P.L;
    const MonadSpec& T = L.monad;
    Element w;
    // p is a morphism of T-simplicial objects
    MorphismReport pm = check_tsimp_morphism(TSimpMorphism{P.p}, L, X);
    for (const auto& v : pm.violations) report.violations.push_back("p: " + v);
    // q is a presheaf morphism into the power
    for (int n = 1; n <= L.depth; ++n)
        for (int i = 0; i < n; ++i)
            if (!equal_on_dom(compose(P.GX.faces[n][i], P.q[n]),
                              compose(P.q[n - 1], L.face(n, i)), &w))
                report.violations.push_back("q face square (n=" + std::to_string(n) +
                                            ",i=" + std::to_string(i) + ") at " + w.show());
    for (int n = 0; n < L.depth; ++n)
        for (int i = 0; i <= n; ++i)
            if (!equal_on_dom(compose(P.GX.degens[n][i], P.q[n]),
                              compose(P.q[n + 1], L.degeneracy(n, i)), &w))
                report.violations.push_back("q degeneracy square (n=" + std::to_string(n) +
                                            ",i=" + std::to_string(i) + ") at " + w.show());
    // the xi-compatibility of q: can . Tq . d = (G xi . can) . qR
    for (int n = 0; n + 1 <= L.depth; ++n) {
        Morph Tq = T.lift(P.q[n]);
        Morph last_top = X.last_face(n + 2);
        for (const auto& ell : L.levels[n + 1].elements()) {
            Element lhs = can_eval(T, P.GX, n, Tq(L.last_face(n + 1)(ell)));
            std::vector<Element> parts;
            for (int j = 0; j <= n; ++j) parts.push_back(last_top(P.q[n + 1](ell).at(j)));
            if (lhs != Element::tuple(std::move(parts))) {
                report.violations.push_back("q xi square fails at level " +
                                            std::to_string(n + 1) + ", " + ell.show());
                break;
            }
        }
    }
    // xi . g . q = i . p, levelwise
    for (int n = 0; n <= L.depth; ++n) {
        Morph lhs = compose(X.last_face(n + 1), compose(P.GX.proj[n][n], P.q[n]));
        Morph rhs = compose(T.unit_at(X.level(n)), P.p[n]);
        if (!equal_on_dom(lhs, rhs, &w))
            report.violations.push_back("t-section square fails at level " +
                                        std::to_string(n) + ", " + w.show());
    }
    return report;
}

UniversalPropertyReport check_universal_property(
    const DeltaOnePower& P, const TSimplicialObject& X,
    const std::vector<const TSimplicialObject*>& samples, int up_to) {
    UniversalPropertyReport report;
    const TSimplicialObject& L = P.L;
    for (const TSimplicialObject* Yp : samples) {
        const TSimplicialObject& Y = *Yp;
        const int eff = std::min({up_to, Y.depth, L.depth, X.depth});
        auto morphisms = enumerate_tsimp_morphisms(Y, L, eff);
        auto simplices = enumerate_hom_simplices(Y, X, 1, eff);
        report.counts.emplace_back(morphisms.size(), simplices.size());
        std::set<std::string> expected;
        for (const auto& s : simplices) expected.insert(s.key());
        std::set<std::string> seen;
        for (const auto& t : morphisms) {
            // induced 1-simplex: u-components through (p, q)
            HomSimplex x(&Y, &X, 1);
            for (int m = 0; m <= 2; ++m) {
                for (int k = 0; k <= m + 1; ++k) {
                    SimplexMap chi = SimplexMap::chi(m, k);
                    Morph comp =
                        k <= m
                            ? compose(X.face(m + 1, k),
                                      compose(P.GX.proj[m][k],
                                              compose(P.q[m], t.components[m])))
                            : compose(P.p[m], t.components[m]);
                    x.set(chi, comp.tabulate());
                }
            }
            std::string key = x.key();
            if (!expected.count(key)) {
                report.violations.push_back("induced simplex is not a valid 1-simplex");
                continue;
            }
            if (!seen.insert(key).second)
                report.violations.push_back("two morphisms induce the same 1-simplex");
        }
        if (seen.size() != expected.size())
            report.violations.push_back(
                "universal property fails: " + std::to_string(seen.size()) + " images vs " +
                std::to_string(expected.size()) + " simplices");
    }
    return report;
}

bool check_power_closure(const DeltaOnePower& P) { return check_segal(P.L); }

}  // namespace tcat
