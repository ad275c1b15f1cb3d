#include "tcat/tsimp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tcat {

Morph TSimplicialObject::face(int n, int i) const {
    if (n < 1 || n > depth || i < 0 || i >= n) throw Error("face index out of range");
    if (static_cast<int>(inner.size()) <= n || static_cast<int>(inner[n].size()) <= i)
        throw Error("face not built");
    return inner[n][i];
}

Morph TSimplicialObject::last_face(int n) const {
    if (n < 1 || n > depth) throw Error("last face index out of range");
    return last[n];
}

Morph TSimplicialObject::degeneracy(int n, int i) const {
    if (n < 0 || n >= depth || i < 0 || i > n) throw Error("degeneracy index out of range");
    if (static_cast<int>(degen.size()) <= n || static_cast<int>(degen[n].size()) <= i)
        throw Error("degeneracy not built");
    return degen[n][i];
}

bool TSimplicialObject::has_degeneracies() const {
    return !degen.empty() && !degen[0].empty();
}

Morph TSimplicialObject::presheaf_action(const SimplexMap& psi) const {
    if (!psi.is_top_preserving()) throw Error("presheaf_action: map not top-preserving");
    const int m = psi.cod(), p = psi.dom();
    if (m > depth) throw Error("presheaf_action: level exceeds depth");
    if (psi.is_identity()) return Morph::identity(levels[m]);
    // peel one degeneracy
    for (int j = 0; j + 1 <= p; ++j) {
        if (psi(j) == psi(j + 1)) {
            std::vector<int> v;
            for (int t = 0; t <= p; ++t)
                if (t != j + 1) v.push_back(psi(t));
            SimplexMap rest(p - 1, m, std::move(v));
            return compose(degeneracy(p - 1, j), presheaf_action(rest));
        }
    }
    // injective, non-identity: peel the least missing value (always < m here)
    std::vector<bool> hit(m + 1, false);
    for (int t = 0; t <= p; ++t) hit[psi(t)] = true;
    int missing = 0;
    while (hit[missing]) ++missing;
    std::vector<int> v;
    for (int t = 0; t <= p; ++t) v.push_back(psi(t) < missing ? psi(t) : psi(t) - 1);
    SimplexMap rest(p, m - 1, std::move(v));
    return compose(presheaf_action(rest), face(m, missing));
}

Morph TSimplicialObject::kleisli_action(const SimplexMap& phi) const {
    const int n = phi.cod(), m = phi.dom();
    if (n > depth) throw Error("kleisli_action: level exceeds depth");
    TopFactorization fac = factorize(phi);
    if (fac.k == n) return compose(monad.unit_at(levels[m]), presheaf_action(fac.top));
    Morph acc = last_face(n);  // X_n -> T X_{n-1}
    for (int j = n - 1; j > fac.k; --j)
        acc = compose(monad.mult_at(levels[j - 1]), compose(monad.lift(last_face(j)), acc));
    return compose(monad.lift(presheaf_action(fac.top)), acc);
}

std::string simp_id_name(SimpId id) {
    switch (id) {
        case SimpId::FaceFace: return "face-face";
        case SimpId::LastFaceInner: return "last-face-inner";
        case SimpId::LastFaceLast: return "last-face-last";
        case SimpId::DegenDegen: return "degen-degen";
        case SimpId::FaceDegenUnder: return "face-degen-under";
        case SimpId::FaceDegenId: return "face-degen-id";
        case SimpId::LastFaceDegenId: return "last-face-degen-id";
        case SimpId::FaceDegenOver: return "face-degen-over";
        case SimpId::LastFaceDegen: return "last-face-degen";
    }
    return "?";
}

std::vector<SimpIdInstance> sa_instances(const TSimplicialObject& X) {
    std::vector<SimpIdInstance> out;
    const int N = X.depth;
    const bool degens = X.has_degeneracies();
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) out.push_back({SimpId::FaceFace, n, i, j});
    for (int n = 2; n <= N; ++n)
        for (int i = 0; i <= n - 2; ++i) out.push_back({SimpId::LastFaceInner, n, i, 0});
    for (int n = 2; n <= N; ++n) out.push_back({SimpId::LastFaceLast, n, 0, 0});
    if (degens) {
        for (int n = 0; n + 2 <= N; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i) out.push_back({SimpId::DegenDegen, n, i, j});
        for (int n = 1; n + 1 <= N; ++n)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) out.push_back({SimpId::FaceDegenUnder, n, i, j});
        for (int n = 0; n + 1 <= N; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = j; i <= j + 1 && i != n + 1; ++i)
                    out.push_back({SimpId::FaceDegenId, n, i, j});
        for (int n = 0; n + 1 <= N; ++n) out.push_back({SimpId::LastFaceDegenId, n, 0, n});
        for (int n = 2; n + 1 <= N; ++n)
            for (int j = 0; j <= n - 2; ++j)
                for (int i = j + 2; i < n + 1; ++i)
                    out.push_back({SimpId::FaceDegenOver, n, i, j});
        for (int n = 1; n + 1 <= N; ++n)
            for (int j = 0; j < n; ++j) out.push_back({SimpId::LastFaceDegen, n, 0, j});
    }
    return out;
}

bool check_sa_instance(const TSimplicialObject& X, const SimpIdInstance& inst,
                       std::string* witness) {
    const auto [id, n, i, j] = inst;
    Morph lhs, rhs;
    switch (id) {
        case SimpId::FaceFace:
            lhs = compose(X.face(n - 1, i), X.face(n, j));
            rhs = compose(X.face(n - 1, j - 1), X.face(n, i));
            break;
        case SimpId::LastFaceInner:
            lhs = compose(X.monad.lift(X.face(n - 1, i)), X.last_face(n));
            rhs = compose(X.last_face(n - 1), X.face(n, i));
            break;
        case SimpId::LastFaceLast:
            lhs = compose(X.monad.mult_at(X.level(n - 2)),
                          compose(X.monad.lift(X.last_face(n - 1)), X.last_face(n)));
            rhs = compose(X.last_face(n - 1), X.face(n, n - 1));
            break;
        case SimpId::DegenDegen:
            lhs = compose(X.degeneracy(n + 1, j + 1), X.degeneracy(n, i));
            rhs = compose(X.degeneracy(n + 1, i), X.degeneracy(n, j));
            break;
        case SimpId::FaceDegenUnder:
            lhs = compose(X.degeneracy(n - 1, j - 1), X.face(n, i));
            rhs = compose(X.face(n + 1, i), X.degeneracy(n, j));
            break;
        case SimpId::FaceDegenId:
            lhs = compose(X.face(n + 1, i), X.degeneracy(n, j));
            rhs = Morph::identity(X.level(n));
            break;
        case SimpId::LastFaceDegenId:
            lhs = compose(X.last_face(n + 1), X.degeneracy(n, n));
            rhs = X.monad.unit_at(X.level(n));
            break;
        case SimpId::FaceDegenOver:
            lhs = compose(X.face(n + 1, i), X.degeneracy(n, j));
            rhs = compose(X.degeneracy(n - 1, j), X.face(n, i - 1));
            break;
        case SimpId::LastFaceDegen:
            lhs = compose(X.last_face(n + 1), X.degeneracy(n, j));
            rhs = compose(X.monad.lift(X.degeneracy(n - 1, j)), X.last_face(n));
            break;
    }
    Element w;
    if (equal_on_dom(lhs, rhs, &w)) return true;
    if (witness) *witness = w.show();
    return false;
}

SAReport check_sa_subset(const TSimplicialObject& X, const std::vector<SimpIdInstance>& insts) {
    SAReport report;
    for (const auto& inst : insts) {
        ++report.checked;
        std::string w;
        if (!check_sa_instance(X, inst, &w)) report.failures.push_back({inst, w});
    }
    return report;
}

SAReport check_sa_axioms(const TSimplicialObject& X) {
    return check_sa_subset(X, sa_instances(X));
}

namespace {

// Levels by iterated pullback of the nerve square, plus d_0 and the last face
// at each level.
void build_levels(TSimplicialObject& X, const TGraph& g, int depth) {
    X.monad = g.T;
    X.depth = depth;
    X.levels = {g.X0};
    X.inner.assign(depth + 1, {});
    X.last.assign(depth + 1, Morph());
    if (depth == 0) return;
    X.levels.push_back(g.X1);
    X.inner[1] = {g.d0};
    X.last[1] = g.d1;
    for (int n = 2; n <= depth; ++n) {
        PullbackResult pb = pullback(X.last[n - 1], g.T.lift(X.inner[n - 1][0]),
                                     g.T.lift_fibers(X.inner[n - 1][0]));
        X.levels.push_back(pb.apex);
        X.inner[n] = {pb.p1};
        X.last[n] = pb.p2;
    }
}

// Inner faces d_i for i >= 1, by pullback pairing from the composition map.
void build_inner_faces(TSimplicialObject& X, const Morph& comp) {
    if (X.depth >= 2) X.inner[2].push_back(comp);
    for (int n = 2; n < X.depth; ++n) {
        // faces X_{n+1} -> X_n, 1 <= i <= n; level n+1 elements are pairs.
        for (int i = 1; i <= n; ++i) {
            SetObj target = X.level(n);
            Morph head;  // applied to the d_0 part
            Morph tail;  // applied to the last part, landing in T X_{n-1}
            if (i <= n - 1) {
                head = X.face(n, i - 1);
                tail = X.monad.lift(X.face(n, i));
            } else {
                head = X.face(n, n - 1);
                tail = compose(X.monad.mult_at(X.level(n - 1)),
                               X.monad.lift(X.last_face(n)));
            }
            Morph result = Morph::from_fn(
                X.level(n + 1), target,
                [head, tail, target](const Element& z) {
                    Element value = Element::pair(head(z.at(0)), tail(z.at(1)));
                    if (!target.contains(value))
                        throw Error("induced face escapes its level at " + z.show());
                    return value;
                },
                "d" + std::to_string(i));
            X.inner[n + 1].push_back(result);
        }
    }
}

// Degeneracies by pullback pairing from the unit map.
void build_degeneracies(TSimplicialObject& X, const Morph& unit) {
    X.degen.assign(std::max(X.depth, 0), {});
    if (X.depth < 1) return;
    X.degen[0] = {unit};
    for (int n = 1; n < X.depth; ++n) {
        SetObj target = X.level(n + 1);
        for (int i = 0; i <= n; ++i) {
            Morph head, tail;
            if (i == 0) {
                head = Morph::identity(X.level(n));
                tail = compose(X.monad.lift(X.degeneracy(n - 1, 0)), X.last_face(n));
            } else if (i < n) {
                head = compose(X.degeneracy(n - 1, i - 1), X.face(n, 0));
                tail = compose(X.monad.lift(X.degeneracy(n - 1, i)), X.last_face(n));
            } else {
                head = compose(X.degeneracy(n - 1, n - 1), X.face(n, 0));
                tail = X.monad.unit_at(X.level(n));
            }
            Morph result = Morph::from_fn(
                X.level(n), target,
                [head, tail, target](const Element& x) {
                    Element value = Element::pair(head(x), tail(x));
                    if (!target.contains(value))
                        throw Error("induced degeneracy escapes its level at " + x.show());
                    return value;
                },
                "s" + std::to_string(i));
            X.degen[n].push_back(result);
        }
    }
}

}  // namespace

TSimplicialObject nerve(const TCatData& data, int depth) {
    if (depth < 1) throw Error("nerve: depth must be at least 1");
    TSimplicialObject X;
    build_levels(X, data.graph, depth);
    build_inner_faces(X, data.comp);
    build_degeneracies(X, data.unit);
    return X;
}

TSimplicialObject ladder_object(const PartialStructure& partial, int depth) {
    TSimplicialObject X;
    build_levels(X, partial.graph, depth);
    if (partial.comp) build_inner_faces(X, *partial.comp);
    if (partial.unit) build_degeneracies(X, *partial.unit);
    return X;
}

std::vector<SimpIdInstance> ladder_guarantees(const TSimplicialObject& X, bool has_comp,
                                              bool has_unit, bool associative, bool unital) {
    std::vector<SimpIdInstance> out;
    for (const auto& inst : sa_instances(X)) {
        const auto [id, n, i, j] = inst;
        bool keep = false;
        switch (id) {
            case SimpId::FaceFace:
                // i = 0 and far-apart cases hold in any magmoid; adjacent
                // inner cases need associativity.
                keep = has_comp && (i == 0 || j - i >= 2 || associative);
                break;
            case SimpId::LastFaceInner:
            case SimpId::LastFaceLast:
                keep = has_comp || (id == SimpId::LastFaceInner && i == 0);
                break;
            case SimpId::DegenDegen:
            case SimpId::LastFaceDegenId:
            case SimpId::LastFaceDegen:
                keep = has_unit;
                break;
            case SimpId::FaceDegenUnder:
                keep = has_unit && (i == 0 || has_comp);
                break;
            case SimpId::FaceDegenOver:
                keep = has_unit && has_comp;
                break;
            case SimpId::FaceDegenId:
                keep = has_unit && ((i == 0 && j == 0) || unital);
                break;
        }
        if (keep) out.push_back(inst);
    }
    return out;
}

LadderReport derived_identity_suite(const PartialStructure& partial, int depth) {
    LadderReport report;
    report.cls = classify(partial);
    TSimplicialObject X = ladder_object(partial, depth);
    report.sa = check_sa_subset(
        X, ladder_guarantees(X, partial.comp.has_value(), partial.unit.has_value(),
                             report.cls.semicategory, report.cls.unital_magmoid));
    return report;
}

bool check_segal(const TSimplicialObject& X) {
    if (X.depth < 2) throw Error("check_segal: depth must be at least 2");
    for (int n = 2; n <= X.depth; ++n) {
        Morph d0_low = X.face(n - 1, 0);
        if (!is_pullback_square(X.face(n, 0), X.last_face(n), X.last_face(n - 1),
                                X.monad.lift(d0_low), X.monad.lift_fibers(d0_low)))
            return false;
    }
    return true;
}

TCatData tcat_from_tsimp(const TSimplicialObject& X) {
    if (X.depth < 2 || !X.has_degeneracies())
        throw Error("tcat_from_tsimp: need depth >= 2 with degeneracies");
    TGraph g{X.monad, X.level(0), X.level(1), X.face(1, 0), X.last_face(1)};
    ComposablePairs x2 = build_X2(g);
    // canonical comparison X_2 -> x2.apex, inverted by table
    std::vector<std::pair<Element, Element>> inverse_entries;
    for (const auto& e : X.level(2).elements())
        inverse_entries.emplace_back(Element::pair(X.face(2, 0)(e), X.last_face(2)(e)), e);
    Morph from_pairs = Morph::table(x2.apex, X.level(2), std::move(inverse_entries), "cmp-inv");
    Morph comp = compose(X.face(2, 1), from_pairs);
    return TCatData::assemble(g, comp, X.degeneracy(0, 0));
}

namespace {

// Injective monotone maps [m] -> [k], as subsets of [k] of size m+1.
std::vector<SimplexMap> injections(int m, int k) {
    std::vector<SimplexMap> out;
    for (const auto& f : enumerate_hom(m, k, HomKind::Delta))
        if (f.is_injective()) out.push_back(f);
    return out;
}

std::vector<SimplexMap> surjections(int a, int b) {
    std::vector<SimplexMap> out;
    for (const auto& f : enumerate_hom(a, b, HomKind::Delta)) {
        std::vector<bool> hit(b + 1, false);
        for (int t = 0; t <= a; ++t) hit[f(t)] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) out.push_back(f);
    }
    return out;
}

}  // namespace

CoskeletalLevel coskeletal_step(const TSimplicialObject& X, int n) {
    if (!X.monad.preserves_finiteness())
        throw CapabilityError("coskeletal step requires a finiteness-preserving monad");
    if (n < 0 || n > X.depth) throw Error("coskeletal_step: level out of range");
    // Vertices: proper subobjects of [n+1] with domain [n] and (for n >= 1)
    // [n-1]; a subobject gets X_m when it hits the top, T X_m otherwise.
    Diagram diagram;
    std::vector<SimplexMap> top_layer = injections(n, n + 1);  // = delta_j, j = 0..n+1
    std::vector<SimplexMap> low_layer = n >= 1 ? injections(n - 1, n + 1) : std::vector<SimplexMap>{};
    auto vertex_obj = [&](const SimplexMap& phi, int m) {
        return phi.is_top_preserving() ? X.level(m) : X.monad.apply(X.level(m));
    };
    for (const auto& phi : top_layer) diagram.vertices.push_back(vertex_obj(phi, n));
    for (const auto& phi : low_layer) diagram.vertices.push_back(vertex_obj(phi, n - 1));

    // Edges: for each inclusion low = top . theta, the action of theta.
    for (std::size_t a = 0; a < low_layer.size(); ++a) {
        for (std::size_t b = 0; b < top_layer.size(); ++b) {
            const SimplexMap& phi = low_layer[a];
            const SimplexMap& psi = top_layer[b];
            // theta with psi . theta = phi, if any (theta = delta_t)
            for (const auto& theta : injections(n - 1, n)) {
                if (!(compose(psi, theta) == phi)) continue;
                Morph action;
                if (psi.is_top_preserving()) {
                    if (theta.is_top_preserving())
                        action = X.presheaf_action(theta);
                    else
                        action = X.last_face(n);
                } else {
                    if (theta.is_top_preserving())
                        action = X.monad.lift(X.presheaf_action(theta));
                    else
                        action = compose(X.monad.mult_at(X.level(n - 1)),
                                         X.monad.lift(X.last_face(n)));
                }
                diagram.edges.push_back({b, top_layer.size() + a, action});
            }
        }
    }
    LimitResult lim = finite_limit(diagram);
    CoskeletalLevel out;
    out.level = lim.apex;
    // the new face d_j is the projection of the subobject missing value j
    out.faces.assign(top_layer.size(), Morph());
    for (std::size_t b = 0; b < top_layer.size(); ++b) {
        const SimplexMap& psi = top_layer[b];
        std::vector<bool> hit(n + 2, false);
        for (int t = 0; t <= n; ++t) hit[psi(t)] = true;
        int missing = 0;
        while (hit[missing]) ++missing;
        out.faces[missing] = lim.projections[b];
    }
    return out;
}

DegenerateLevel degenerate_step(const TSimplicialObject& X, int n) {
    if (n < 0 || n >= X.depth + 1) throw Error("degenerate_step: level out of range");
    if (!X.has_degeneracies()) throw Error("degenerate_step: object lacks degeneracies");
    // Components sigma_j : [n+1] -> [n] (j = 0..n) carry X_n; the quotient
    // glues s_t(x) in component j with s_{t'}(x) in component j' whenever
    // sigma_t . sigma_j = sigma_{t'} . sigma_{j'}.
    std::vector<SimplexMap> comps;
    for (int j = 0; j <= n; ++j) comps.push_back(SimplexMap::degeneracy(n, j));

    auto tagged = [&](int j, const Element& x) {
        return Element::tag("c" + std::to_string(j), x);
    };
    // union-find over tagged elements
    std::map<Element, Element> parent;
    std::function<Element(const Element&)> find = [&](const Element& e) {
        auto it = parent.find(e);
        if (it == parent.end() || it->second == e) return e;
        Element root = find(it->second);
        parent[e] = root;
        return root;
    };
    auto unite = [&](const Element& a, const Element& b) {
        Element ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (rb < ra) std::swap(ra, rb);
        parent[rb] = ra;  // canonical representative: least element
    };
    for (int j = 0; j <= n; ++j)
        for (const auto& x : X.level(n).elements()) parent.emplace(tagged(j, x), tagged(j, x));

    if (n >= 1) {
        for (const auto& quot : surjections(n + 1, n - 1)) {
            // all factorizations quot = sigma_t . sigma_j
            std::vector<std::pair<int, int>> factorizations;
            for (int j = 0; j <= n; ++j)
                for (int t = 0; t <= n - 1; ++t)
                    if (compose(SimplexMap::degeneracy(n - 1, t), comps[j]) == quot)
                        factorizations.emplace_back(j, t);
            for (std::size_t u = 1; u < factorizations.size(); ++u) {
                auto [j0, t0] = factorizations[0];
                auto [j1, t1] = factorizations[u];
                Morph s0 = X.degeneracy(n - 1, t0), s1 = X.degeneracy(n - 1, t1);
                for (const auto& x : X.level(n - 1).elements())
                    unite(tagged(j0, s0(x)), tagged(j1, s1(x)));
            }
        }
    }
    std::vector<Element> reps;
    for (const auto& [e, _] : parent)
        if (find(e) == e) reps.push_back(e);
    DegenerateLevel out;
    out.level = SetObj::finite(std::move(reps));
    for (int j = 0; j <= n; ++j) {
        std::vector<std::pair<Element, Element>> entries;
        for (const auto& x : X.level(n).elements())
            entries.emplace_back(x, find(tagged(j, x)));
        out.degens.push_back(
            Morph::table(X.level(n), out.level, std::move(entries), "s" + std::to_string(j)));
    }
    return out;
}

MorphismReport check_tsimp_morphism(const TSimpMorphism& f, const TSimplicialObject& X,
                                    const TSimplicialObject& Y) {
    MorphismReport report;
    const int N = std::min(X.depth, Y.depth);
    if (static_cast<int>(f.components.size()) < N + 1) {
        report.violations.push_back("missing components");
        return report;
    }
    Element w;
    for (int n = 1; n <= N; ++n) {
        for (int i = 0; i < n; ++i)
            if (!equal_on_dom(compose(Y.face(n, i), f.components[n]),
                              compose(f.components[n - 1], X.face(n, i)), &w))
                report.violations.push_back("inner face square (n=" + std::to_string(n) +
                                            ",i=" + std::to_string(i) + ") at " + w.show());
        if (!equal_on_dom(compose(Y.last_face(n), f.components[n]),
                          compose(X.monad.lift(f.components[n - 1]), X.last_face(n)), &w))
            report.violations.push_back("last face square (n=" + std::to_string(n) + ") at " +
                                        w.show());
    }
    if (X.has_degeneracies() && Y.has_degeneracies()) {
        for (int n = 0; n < N; ++n)
            for (int i = 0; i <= n; ++i)
                if (!equal_on_dom(compose(Y.degeneracy(n, i), f.components[n]),
                                  compose(f.components[n + 1], X.degeneracy(n, i)), &w))
                    report.violations.push_back("degeneracy square (n=" + std::to_string(n) +
                                                ",i=" + std::to_string(i) + ") at " + w.show());
    }
    return report;
}

MorphismReport check_kleisli_identities(const TSimplicialObject& X) {
    MorphismReport report;
    Element w;
    // Contravariant functoriality over generator pairs within depth.
    for (int b = 1; b <= X.depth; ++b) {
        std::vector<SimplexMap> gens_into_b;  // maps [a] -> [b]
        for (int i = 0; i <= b; ++i) gens_into_b.push_back(SimplexMap::face(b - 1, i));
        if (b + 1 <= X.depth)
            for (int i = 0; i <= b; ++i) gens_into_b.push_back(SimplexMap::degeneracy(b, i));
        for (const auto& g2 : gens_into_b) {
            if (g2.cod() > X.depth) continue;
            std::vector<SimplexMap> gens_into_a;
            const int a = g2.dom();
            if (a >= 1)
                for (int i = 0; i <= a; ++i) gens_into_a.push_back(SimplexMap::face(a - 1, i));
            if (a + 1 <= X.depth)
                for (int i = 0; i <= a; ++i) gens_into_a.push_back(SimplexMap::degeneracy(a, i));
            for (const auto& g1 : gens_into_a) {
                SimplexMap both = compose(g2, g1);
                KleisliMorph k1{X.level(g1.cod()), X.level(g1.dom()), X.kleisli_action(g1)};
                KleisliMorph k2{X.level(g2.cod()), X.level(g2.dom()), X.kleisli_action(g2)};
                Morph lhs = X.kleisli_action(both);
                Morph rhs = kleisli_compose(X.monad, k1, k2).body;
                if (!equal_on_dom(lhs, rhs, &w))
                    report.violations.push_back("kleisli identity " + both.show() + " at " +
                                                w.show());
            }
        }
    }
    return report;
}

TSimplicialObject bar_resolution(const SetObj& A, const Morph& action, const MonadSpec& T,
                                 int depth) {
    if (!T.preserves_finiteness())
        throw CapabilityError("bar resolution requires a finiteness-preserving monad");
    // validates the algebra laws
    (void)algebra_tcat(A, action, T);

    TSimplicialObject X;
    X.monad = T;
    X.depth = depth;
    X.inner.assign(depth + 1, {});
    X.last.assign(depth + 1, Morph());
    X.degen.assign(std::max(depth, 0), {});
    for (int n = 0; n <= depth; ++n) X.levels.push_back(T.iterate_obj(A, n));
    for (int n = 1; n <= depth; ++n) {
        X.inner[n].push_back(T.iterate_lift(action, n - 1));  // d_0
        for (int i = 1; i < n; ++i)
            X.inner[n].push_back(
                T.iterate_lift(T.mult_at(T.iterate_obj(A, i - 1)), n - 1 - i));
        X.last[n] = Morph::from_fn(X.level(n), T.apply(X.level(n - 1)),
                                   [](const Element& e) { return e; }, "d" + std::to_string(n));
    }
    for (int n = 0; n < depth; ++n)
        for (int i = 0; i <= n; ++i)
            X.degen[n].push_back(T.iterate_lift(T.unit_at(T.iterate_obj(A, i)), n - i));
    return X;
}

}  // namespace tcat
