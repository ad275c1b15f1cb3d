#include "tcat/hom.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace tcat {

std::vector<Morph> enumerate_maps(const SetObj& dom, const SetObj& cod) {
    std::vector<Morph> out;
    const auto& xs = dom.elements();
    const auto& ys = cod.elements();
    if (xs.empty()) return {Morph::table(dom, cod, {}, "map")};
    if (ys.empty()) return out;
    std::vector<std::size_t> pick(xs.size(), 0);
    while (true) {
        std::vector<std::pair<Element, Element>> entries;
        for (std::size_t i = 0; i < xs.size(); ++i) entries.emplace_back(xs[i], ys[pick[i]]);
        out.push_back(Morph::table(dom, cod, std::move(entries), "map"));
        std::size_t i = 0;
        while (i < pick.size() && pick[i] + 1 == ys.size()) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
    }
    return out;
}

SegalPairing::SegalPairing(const TSimplicialObject* X) : X_(X) {
    tables_.resize(X->depth + 1);
}

std::optional<Element> SegalPairing::solve(int m, const Element& head,
                                           const Element& tail) const {
    if (m < 1 || m > X_->depth) throw Error("SegalPairing: level out of range");
    if (!tables_[m]) {
        auto table = std::make_shared<std::map<Element, Element>>();
        Morph d0 = X_->face(m, 0);
        Morph dm = X_->last_face(m);
        for (const auto& e : X_->level(m).elements()) {
            Element key = Element::pair(d0(e), dm(e));
            if (!table->emplace(key, e).second)
                throw Error("SegalPairing: boundary pair is not monic at level " +
                            std::to_string(m));
        }
        tables_[m] = std::move(table);
    }
    auto it = tables_[m]->find(Element::pair(head, tail));
    if (it == tables_[m]->end()) return std::nullopt;
    return it->second;
}

HomSimplex::HomSimplex(const TSimplicialObject* source, const TSimplicialObject* target,
                       int degree)
    : source_(source),
      target_(target),
      degree_(degree),
      components_(std::make_shared<std::map<std::vector<int>, Morph>>()),
      pairing_(std::make_shared<SegalPairing>(target)),
      extension_cache_(std::make_shared<std::map<std::vector<int>, Morph>>()) {}

void HomSimplex::set(const SimplexMap& phi, Morph component) {
    if (phi.cod() != degree_) throw Error("HomSimplex::set: wrong simplex degree");
    if (phi.dom() > 2) throw Error("HomSimplex::set: only components at m <= 2 are stored");
    (*components_)[phi.values()] = std::move(component);
}

bool HomSimplex::has(const SimplexMap& phi) const {
    return components_->count(phi.values()) > 0;
}

Morph HomSimplex::at(const SimplexMap& phi) const {
    if (phi.cod() != degree_) throw Error("HomSimplex::at: wrong simplex degree");
    const int m = phi.dom();
    if (m <= 2) {
        auto it = components_->find(phi.values());
        if (it == components_->end())
            throw Error("HomSimplex: missing component at " + phi.show());
        return it->second;
    }
    if (auto it = extension_cache_->find(phi.values()); it != extension_cache_->end())
        return it->second;
    // Extend through the Segal pullback of the target level.
    Morph head = at(compose(phi, SimplexMap::face(m - 1, 0)));
    Morph tail_lift = target_->monad.lift(at(compose(phi, SimplexMap::face(m - 1, m))));
    Morph d0 = source_->face(m, 0);
    Morph dm = source_->last_face(m);
    auto pairing = pairing_;
    Morph result = Morph::from_fn(
        source_->level(m), target_->level(m),
        [head, tail_lift, d0, dm, pairing, m](const Element& y) {
            auto solved = pairing->solve(m, head(d0(y)), tail_lift(dm(y)));
            if (!solved)
                throw Error("hom simplex extension impossible at level " + std::to_string(m) +
                            ", " + y.show());
            return *solved;
        },
        "x" + std::to_string(m));
    extension_cache_->emplace(phi.values(), result);
    return result;
}

HomSimplex HomSimplex::reindex(const SimplexMap& theta) const {
    if (theta.cod() != degree_) throw Error("HomSimplex::reindex: degree mismatch");
    HomSimplex out(source_, target_, theta.dom());
    for (int m = 0; m <= 2; ++m)
        for (const auto& phi : enumerate_hom(m, theta.dom(), HomKind::Delta))
            out.set(phi, at(compose(theta, phi)));
    return out;
}

HomSimplex HomSimplex::face(int i) const {
    return reindex(SimplexMap::face(degree_ - 1, i));
}

HomSimplex HomSimplex::hom_degeneracy(int i) const {
    return reindex(SimplexMap::degeneracy(degree_, i));
}

std::string HomSimplex::key() const {
    std::ostringstream out;
    for (const auto& [values, comp] : *components_) {
        out << '<';
        for (int v : values) out << v << '.';
        out << '|';
        for (const auto& y : comp.dom().elements()) out << comp(y).show() << ';';
        out << '>';
    }
    return out.str();
}

HomReport validate_hom_simplex(const HomSimplex& x, int up_to) {
    HomReport report;
    const TSimplicialObject& Y = x.source();
    const TSimplicialObject& X = x.target();
    if (up_to > Y.depth || up_to > X.depth)
        throw Error("validate_hom_simplex: up_to exceeds the available depth");
    Element w;
    const int n = x.degree();
    for (int m = 0; m <= up_to; ++m) {
        for (const auto& phi : enumerate_hom(m, n, HomKind::Delta)) {
            // an impossible extension (non-Segal target with inconsistent
            // data) is a reported violation, not an escape
            try {
                x.at(phi);
            } catch (const Error& e) {
                report.violations.push_back(e.what());
                continue;
            }
            Morph xphi = x.at(phi);
            // naturality for the top-preserving generators out of level m
            try {
                for (int i = 0; i < m; ++i) {
                    SimplexMap delta = SimplexMap::face(m - 1, i);
                    if (!equal_on_dom(compose(X.face(m, i), xphi),
                                      compose(x.at(compose(phi, delta)), Y.face(m, i)), &w))
                        report.violations.push_back("face naturality fails at phi=" +
                                                    phi.show() + " i=" + std::to_string(i) +
                                                    ", " + w.show());
                }
            } catch (const Error& e) {
                report.violations.push_back(e.what());
            }
            if (m + 1 <= up_to)
                for (int i = 0; i <= m; ++i) {
                    SimplexMap sigma = SimplexMap::degeneracy(m, i);
                    if (!equal_on_dom(compose(X.degeneracy(m, i), xphi),
                                      compose(x.at(compose(phi, sigma)), Y.degeneracy(m, i)),
                                      &w))
                        report.violations.push_back("degeneracy naturality fails at phi=" +
                                                    phi.show() + " i=" + std::to_string(i) +
                                                    ", " + w.show());
                }
            if (m >= 1) {
                SimplexMap delta_top = SimplexMap::face(m - 1, m);
                if (!equal_on_dom(
                        compose(X.last_face(m), xphi),
                        compose(X.monad.lift(x.at(compose(phi, delta_top))), Y.last_face(m)),
                        &w))
                    report.violations.push_back("last-face condition fails at phi=" +
                                                phi.show() + ", " + w.show());
            }
        }
    }
    return report;
}

namespace {

// wait/force tables while searching: a slot is one (m, phi) component
using Table = std::map<Element, Element>;

Morph table_morph(const SetObj& dom, const SetObj& cod, const Table& t) {
    std::vector<std::pair<Element, Element>> entries(t.begin(), t.end());
    return Morph::table(dom, cod, std::move(entries), "x");
}

}  // namespace

std::vector<HomSimplex> enumerate_hom_simplices(const TSimplicialObject& Y,
                                                const TSimplicialObject& X, int degree,
                                                int up_to) {
    const int n = degree;
    std::vector<HomSimplex> results;
    std::vector<SimplexMap> phis0 = enumerate_hom(0, n, HomKind::Delta);
    std::vector<SimplexMap> phis1 = enumerate_hom(1, n, HomKind::Delta);
    std::vector<SimplexMap> phis2 = enumerate_hom(2, n, HomKind::Delta);

    // degenerate 1-simplices of Y are forced by the level-0 choices
    std::map<Element, Element> s0_image;  // s_0(y0) -> y0
    for (const auto& y0 : Y.level(0).elements()) s0_image[Y.degeneracy(0, 0)(y0)] = y0;

    std::map<std::vector<int>, Table> chosen0, chosen1;

    std::function<void()> finish;
    // level-2 components are forced; build, filter, and record
    SegalPairing pairing(&X);
    finish = [&]() {
        HomSimplex x(&Y, &X, n);
        for (const auto& phi : phis0)
            x.set(phi, table_morph(Y.level(0), X.level(0), chosen0[phi.values()]));
        for (const auto& phi : phis1)
            x.set(phi, table_morph(Y.level(1), X.level(1), chosen1[phi.values()]));
        if (Y.depth >= 2) {
            for (const auto& phi : phis2) {
                Table t;
                const Table& head = chosen1[compose(phi, SimplexMap::face(1, 0)).values()];
                const Table& tail = chosen1[compose(phi, SimplexMap::face(1, 2)).values()];
                Morph tail_m = X.monad.lift(table_morph(Y.level(1), X.level(1), tail));
                for (const auto& y : Y.level(2).elements()) {
                    auto solved =
                        pairing.solve(2, head.at(Y.face(2, 0)(y)), tail_m(Y.last_face(2)(y)));
                    if (!solved) return;
                    t[y] = *solved;
                }
                // middle face and degeneracy naturality on the stored levels
                const Table& mid = chosen1[compose(phi, SimplexMap::face(1, 1)).values()];
                for (const auto& y : Y.level(2).elements())
                    if (mid.at(Y.face(2, 1)(y)) != X.face(2, 1)(t.at(y))) return;
                for (int i = 0; i <= 1; ++i) {
                    if (phi(i) != phi(i + 1)) continue;  // phi factors through sigma_i
                    const Table& low = chosen1[compose(phi, SimplexMap::face(1, i)).values()];
                    for (const auto& [y1, v] : low)
                        if (t.at(Y.degeneracy(1, i)(y1)) != X.degeneracy(1, i)(v)) return;
                }
                x.set(phi, table_morph(Y.level(2), X.level(2), t));
            }
        }
        results.push_back(std::move(x));
    };

    // choose level-1 components slot by slot with local filtering
    std::function<void(std::size_t)> choose1 = [&](std::size_t slot) {
        if (slot == phis1.size()) {
            finish();
            return;
        }
        const SimplexMap& phi = phis1[slot];
        const Table& at_d0 = chosen0[compose(phi, SimplexMap::face(0, 0)).values()];
        const Table& at_d1 = chosen0[compose(phi, SimplexMap::face(0, 1)).values()];
        const bool constant = phi(0) == phi(1);
        Morph tail_morph = X.monad.lift(table_morph(Y.level(0), X.level(0), at_d1));
        // per-element candidates from the boundary constraints; for constant
        // phi the degenerate elements of Y_1 are forced outright
        std::vector<std::pair<Element, std::vector<Element>>> options;
        for (const auto& y : Y.level(1).elements()) {
            Element want_head = at_d0.at(Y.face(1, 0)(y));
            Element want_tail = tail_morph(Y.last_face(1)(y));
            std::vector<Element> cands;
            for (const auto& c : X.level(1).elements())
                if (X.face(1, 0)(c) == want_head && X.last_face(1)(c) == want_tail)
                    cands.push_back(c);
            if (constant) {
                if (auto deg = s0_image.find(y); deg != s0_image.end()) {
                    const Table& at_pt = chosen0[SimplexMap::constant(0, n, phi(0)).values()];
                    Element forced = X.degeneracy(0, 0)(at_pt.at(deg->second));
                    bool allowed = std::find(cands.begin(), cands.end(), forced) != cands.end();
                    cands.clear();
                    if (allowed) cands.push_back(forced);
                }
            }
            if (cands.empty()) return;
            options.emplace_back(y, std::move(cands));
        }
        Table t;
        std::function<void(std::size_t)> assign = [&](std::size_t i) {
            if (i == options.size()) {
                chosen1[phi.values()] = t;
                choose1(slot + 1);
                return;
            }
            for (const auto& cand : options[i].second) {
                t[options[i].first] = cand;
                assign(i + 1);
            }
            t.erase(options[i].first);
        };
        assign(0);
    };

    // choose level-0 components
    std::vector<Morph> maps0 = enumerate_maps(Y.level(0), X.level(0));
    std::function<void(std::size_t)> choose0 = [&](std::size_t slot) {
        if (slot == phis0.size()) {
            if (Y.depth >= 1)
                choose1(0);
            else
                finish();
            return;
        }
        for (const auto& m : maps0) {
            Table t;
            for (const auto& y : Y.level(0).elements()) t[y] = m(y);
            chosen0[phis0[slot].values()] = std::move(t);
            choose0(slot + 1);
        }
    };
    choose0(0);

    // full validation within the requested depth, deterministic order
    std::vector<HomSimplex> valid;
    for (auto& x : results)
        if (validate_hom_simplex(x, std::min({up_to, Y.depth, X.depth})).ok())
            valid.push_back(std::move(x));
    std::sort(valid.begin(), valid.end());
    return valid;
}

std::vector<TSimpMorphism> enumerate_tsimp_morphisms(const TSimplicialObject& Y,
                                                     const TSimplicialObject& X, int up_to) {
    std::vector<TSimpMorphism> out;
    for (const auto& x : enumerate_hom_simplices(Y, X, 0, up_to)) {
        TSimpMorphism f;
        for (int m = 0; m <= std::min({up_to, Y.depth, X.depth}); ++m)
            f.components.push_back(x.at(SimplexMap::constant(m, 0, 0)).tabulate());
        out.push_back(std::move(f));
    }
    return out;
}

HomSimplex hom_simplex_of_morphism(const TSimplicialObject& Y, const TSimplicialObject& X,
                                   const TSimpMorphism& f) {
    HomSimplex x(&Y, &X, 0);
    for (int m = 0; m <= 2; ++m) x.set(SimplexMap::constant(m, 0, 0), f.components.at(m));
    return x;
}

namespace {

// The constructive filler: components z_phi for phi : [m] -> [2], defined by
// the four-case analysis with memoization.
struct Filler {
    const HomSimplex& x;  // d_2 z
    const HomSimplex& y;  // d_0 z
    const TSimplicialObject& A;
    const TSimplicialObject& B;
    SegalPairing pairing;
    std::map<std::vector<int>, Morph> memo;

    Filler(const HomSimplex& x_, const HomSimplex& y_)
        : x(x_), y(y_), A(x_.source()), B(x_.target()), pairing(&B) {}

    Morph component(const SimplexMap& phi) {
        auto it = memo.find(phi.values());
        if (it != memo.end()) return it->second;
        Morph result = build(phi);
        memo.emplace(phi.values(), result);
        return result;
    }

    Morph build(const SimplexMap& phi) {
        const int m = phi.dom();
        if (phi(0) > 0)  // z_phi = y at sigma_0 . phi
            return y.at(compose(SimplexMap::degeneracy(1, 0), phi));
        if (phi(m) < 2)  // z_phi = x at sigma_1 . phi
            return x.at(compose(SimplexMap::degeneracy(1, 1), phi));
        bool hits_middle = false;
        for (int t = 0; t <= m; ++t)
            if (phi(t) == 1) hits_middle = true;
        if (hits_middle) {
            // image {0,1,2}: induced into the Segal pullback of B_m
            Morph head = component(compose(phi, SimplexMap::face(m - 1, 0)));
            Morph tail = B.monad.lift(component(compose(phi, SimplexMap::face(m - 1, m))));
            Morph d0 = A.face(m, 0);
            Morph dm = A.last_face(m);
            auto* self = this;
            (void)self;
            SegalPairing* p = &pairing;
            return Morph::from_fn(A.level(m), B.level(m),
                                  [head, tail, d0, dm, p, m](const Element& a) {
                                      auto solved = p->solve(m, head(d0(a)), tail(dm(a)));
                                      if (!solved)
                                          throw Error("filler escapes the Segal pullback at " +
                                                      a.show());
                                      return *solved;
                                  },
                                  "z");
        }
        // image exactly {0, 2}: split the first jump and collapse
        int i = 0;
        while (phi(i) != 2) ++i;
        std::vector<int> lifted = phi.values();
        lifted.insert(lifted.begin() + i, 1);
        SimplexMap phi1(m + 1, 2, std::move(lifted));
        Morph z1 = component(phi1);
        Morph result = compose(B.face(m + 1, i), compose(z1, A.degeneracy(m, i)));
        // the collapse must be compatible with the split coequalizer
        Element w;
        if (!equal_on_dom(compose(result, A.face(m + 1, i)), compose(B.face(m + 1, i), z1), &w))
            throw Error("filler is not constant on the collapse fork at " + w.show());
        return result;
    }
};

}  // namespace

ComposeResult compose_one_simplices(const HomSimplex& x, const HomSimplex& y) {
    if (x.degree() != 1 || y.degree() != 1)
        throw Error("compose_one_simplices: arguments must be 1-simplices");
    if (!(x.face(0) == y.face(1)))
        throw Error("compose_one_simplices: d_0 x must equal d_1 y");
    Filler filler(x, y);
    HomSimplex z(&x.source(), &x.target(), 2);
    for (int m = 0; m <= 2; ++m)
        for (const auto& phi : enumerate_hom(m, 2, HomKind::Delta))
            z.set(phi, filler.component(phi).tabulate());
    return ComposeResult{z, z.face(1)};
}

std::vector<HomSimplex> horn_fillers_by_search(const HomSimplex& x, const HomSimplex& y,
                                               int up_to) {
    std::vector<HomSimplex> out;
    for (const auto& z : enumerate_hom_simplices(x.source(), x.target(), 2, up_to))
        if (z.face(0) == y && z.face(2) == x) out.push_back(z);
    return out;
}

bool hom_segal_check(const TSimplicialObject& Y, const TSimplicialObject& X, int n,
                     int up_to) {
    auto top = enumerate_hom_simplices(Y, X, n + 2, up_to);
    auto mid = enumerate_hom_simplices(Y, X, n + 1, up_to);
    // pairs (u, v) with d_0 u = d_{n+1} v
    std::size_t pairs = 0;
    for (const auto& u : mid)
        for (const auto& v : mid)
            if (u.face(0) == v.face(n + 1)) ++pairs;
    std::set<std::string> images;
    for (const auto& z : top) {
        std::string key = z.face(n + 2).key() + "//" + z.face(0).key();
        if (!images.insert(key).second) return false;  // not injective
    }
    return pairs == top.size();
}

std::vector<TFunctorData> enumerate_tfunctors(const TSimplicialObject& A,
                                              const TSimplicialObject& B, int up_to) {
    std::vector<TFunctorData> out;
    for (const auto& f : enumerate_tsimp_morphisms(A, B, up_to))
        out.push_back(TFunctorData{f.components[0], f.components[1]});
    return out;
}

TFunctorData identity_tfunctor(const TSimplicialObject& A) {
    return TFunctorData{Morph::identity(A.level(0)), Morph::identity(A.level(1))};
}

TFunctorData compose_tfunctors(const TFunctorData& g, const TFunctorData& f) {
    return TFunctorData{compose(g.f0, f.f0), compose(g.f1, f.f1)};
}

namespace {

// alpha' and alpha'' of the component form, by Segal pairing into B_2.
Morph alpha_prime(const TSimplicialObject& A, const TSimplicialObject& B, const TNat& t,
                  SegalPairing& pairing) {
    Morph alpha = t.alpha, d0 = A.face(1, 0), f1 = t.f.f1;
    Morph iB1 = B.monad.unit_at(B.level(1));
    return Morph::from_fn(A.level(1), B.level(2),
                          [alpha, d0, f1, iB1, &pairing](const Element& a) {
                              auto solved = pairing.solve(2, alpha(d0(a)), iB1(f1(a)));
                              if (!solved) throw Error("alpha' escapes B_2 at " + a.show());
                              return *solved;
                          },
                          "alpha'");
}

Morph alpha_second(const TSimplicialObject& A, const TSimplicialObject& B, const TNat& t,
                   SegalPairing& pairing) {
    Morph g1 = t.g.f1, d1 = A.last_face(1);
    Morph Talpha = B.monad.lift(t.alpha);
    return Morph::from_fn(A.level(1), B.level(2),
                          [g1, d1, Talpha, &pairing](const Element& a) {
                              auto solved = pairing.solve(2, g1(a), Talpha(d1(a)));
                              if (!solved) throw Error("alpha'' escapes B_2 at " + a.show());
                              return *solved;
                          },
                          "alpha''");
}

Morph hat_prime(const TSimplicialObject& A, const TSimplicialObject& B, const HatCell& c,
                SegalPairing& pairing) {
    Morph hat = c.hat, d0 = A.face(2, 0);
    Morph Tf1 = B.monad.lift(c.f.f1);
    Morph d2 = A.last_face(2);
    return Morph::from_fn(A.level(2), B.level(2),
                          [hat, d0, Tf1, d2, &pairing](const Element& a) {
                              auto solved = pairing.solve(2, hat(d0(a)), Tf1(d2(a)));
                              if (!solved) throw Error("hat' escapes B_2 at " + a.show());
                              return *solved;
                          },
                          "hat'");
}

Morph hat_second(const TSimplicialObject& A, const TSimplicialObject& B, const HatCell& c,
                 SegalPairing& pairing) {
    Morph g1 = c.g.f1, d0 = A.face(2, 0);
    Morph That = B.monad.lift(c.hat);
    Morph d2 = A.last_face(2);
    return Morph::from_fn(A.level(2), B.level(2),
                          [g1, d0, That, d2, &pairing](const Element& a) {
                              auto solved = pairing.solve(2, g1(d0(a)), That(d2(a)));
                              if (!solved) throw Error("hat'' escapes B_2 at " + a.show());
                              return *solved;
                          },
                          "hat''");
}

}  // namespace

HomReport validate_tnat(const TSimplicialObject& A, const TSimplicialObject& B,
                        const TNat& t) {
    HomReport report;
    Element w;
    SegalPairing pairing(&B);
    Morph iB0 = B.monad.unit_at(B.level(0));
    try {
        if (!equal_on_dom(compose(B.last_face(1), t.alpha), compose(iB0, t.f.f0), &w))
            report.violations.push_back("d_1.alpha != i.f_0 at " + w.show());
        if (!equal_on_dom(compose(B.face(1, 0), t.alpha), t.g.f0, &w))
            report.violations.push_back("d_0.alpha != g_0 at " + w.show());
        if (!report.ok()) return report;
        Morph ap = alpha_prime(A, B, t, pairing);
        Morph as = alpha_second(A, B, t, pairing);
        if (!equal_on_dom(compose(B.face(2, 1), ap), compose(B.face(2, 1), as), &w))
            report.violations.push_back("d_1.alpha' != d_1.alpha'' at " + w.show());
    } catch (const Error& e) {
        report.violations.push_back(e.what());
    }
    return report;
}

HomReport validate_hat(const TSimplicialObject& A, const TSimplicialObject& B,
                       const HatCell& c) {
    HomReport report;
    Element w;
    SegalPairing pairing(&B);
    try {
        if (!equal_on_dom(compose(B.last_face(1), c.hat),
                          compose(B.monad.lift(c.f.f0), A.last_face(1)), &w))
            report.violations.push_back("d_1.hat != Tf_0.d_1 at " + w.show());
        if (!equal_on_dom(compose(B.face(1, 0), c.hat), compose(c.g.f0, A.face(1, 0)), &w))
            report.violations.push_back("d_0.hat != g_0.d_0 at " + w.show());
        if (!report.ok()) return report;
        Morph hp = hat_prime(A, B, c, pairing);
        Morph hs = hat_second(A, B, c, pairing);
        if (!equal_on_dom(compose(B.face(2, 1), hp), compose(c.hat, A.face(2, 1)), &w))
            report.violations.push_back("d_1.hat' != hat.d_1 at " + w.show());
        if (!equal_on_dom(compose(B.face(2, 1), hs), compose(c.hat, A.face(2, 1)), &w))
            report.violations.push_back("d_1.hat'' != hat.d_1 at " + w.show());
    } catch (const Error& e) {
        report.violations.push_back(e.what());
    }
    return report;
}

TNat hat_to_alpha(const TSimplicialObject& A, const TSimplicialObject& B, const HatCell& c) {
    HomReport r = validate_hat(A, B, c);
    if (!r.ok()) throw Error("hat_to_alpha: " + r.violations.front());
    return TNat{c.f, c.g, compose(c.hat, A.degeneracy(0, 0))};
}

HatCell alpha_to_hat(const TSimplicialObject& A, const TSimplicialObject& B, const TNat& t) {
    HomReport r = validate_tnat(A, B, t);
    if (!r.ok()) throw Error("alpha_to_hat: " + r.violations.front());
    SegalPairing pairing(&B);
    Morph ap = alpha_prime(A, B, t, pairing);
    Morph as = alpha_second(A, B, t, pairing);
    Element w;
    if (!equal_on_dom(compose(B.face(2, 1), ap), compose(B.face(2, 1), as), &w))
        throw Error("alpha_to_hat: common-value condition fails at " + w.show());
    return HatCell{t.f, t.g, compose(B.face(2, 1), ap).tabulate()};
}

std::vector<TNat> enumerate_two_cells(const TSimplicialObject& A, const TSimplicialObject& B,
                                      const TFunctorData& f, const TFunctorData& g) {
    std::vector<TNat> out;
    for (const auto& alpha : enumerate_maps(A.level(0), B.level(1))) {
        TNat t{f, g, alpha};
        if (validate_tnat(A, B, t).ok()) out.push_back(std::move(t));
    }
    return out;
}

TNat whisker_post(const TSimplicialObject& A, const TSimplicialObject& B,
                  const TSimplicialObject& C, const TNat& t, const TFunctorData& h) {
    TNat out{compose_tfunctors(h, t.f), compose_tfunctors(h, t.g), compose(h.f1, t.alpha)};
    HomReport r = validate_tnat(A, C, out);
    if (!r.ok()) throw Error("whisker_post: " + r.violations.front());
    (void)B;
    return out;
}

TNat whisker_pre(const TSimplicialObject& W, const TSimplicialObject& A,
                 const TSimplicialObject& B, const TNat& t, const TFunctorData& h) {
    TNat out{compose_tfunctors(t.f, h), compose_tfunctors(t.g, h), compose(t.alpha, h.f0)};
    HomReport r = validate_tnat(W, B, out);
    if (!r.ok()) throw Error("whisker_pre: " + r.violations.front());
    (void)A;
    return out;
}

namespace {

// The 1-simplex of hom(A, B) carried by a 2-cell in 1-simplex form.
HomSimplex one_simplex_of_hat(const TSimplicialObject& A, const TSimplicialObject& B,
                              const HatCell& c) {
    SegalPairing pairing(&B);
    auto f2 = [&](const TFunctorData& fd) {
        Morph f1 = fd.f1;
        Morph d0 = A.face(2, 0);
        Morph tail = B.monad.lift(fd.f1);
        Morph d2 = A.last_face(2);
        SegalPairing* p = &pairing;
        return Morph::from_fn(A.level(2), B.level(2),
                              [f1, d0, tail, d2, p](const Element& a) {
                                  auto solved = p->solve(2, f1(d0(a)), tail(d2(a)));
                                  if (!solved) throw Error("functor level-2 escape");
                                  return *solved;
                              },
                              "f2");
    };
    HomSimplex x(&A, &B, 1);
    x.set(SimplexMap::constant(0, 1, 0), c.f.f0);
    x.set(SimplexMap::constant(0, 1, 1), c.g.f0);
    x.set(SimplexMap::constant(1, 1, 0), c.f.f1);
    x.set(SimplexMap::constant(1, 1, 1), c.g.f1);
    x.set(SimplexMap::identity(1), c.hat);
    x.set(SimplexMap::constant(2, 1, 0), f2(c.f).tabulate());
    x.set(SimplexMap::constant(2, 1, 1), f2(c.g).tabulate());
    x.set(SimplexMap::degeneracy(1, 0), hat_prime(A, B, c, pairing).tabulate());
    x.set(SimplexMap::degeneracy(1, 1), hat_second(A, B, c, pairing).tabulate());
    return x;
}

HatCell hat_of_one_simplex(const HomSimplex& x) {
    TFunctorData f{x.at(SimplexMap::constant(0, 1, 0)), x.at(SimplexMap::constant(1, 1, 0))};
    TFunctorData g{x.at(SimplexMap::constant(0, 1, 1)), x.at(SimplexMap::constant(1, 1, 1))};
    return HatCell{f, g, x.at(SimplexMap::identity(1))};
}

}  // namespace

TNat vertical_compose(const TSimplicialObject& A, const TSimplicialObject& B, const TNat& t,
                      const TNat& s) {
    HomSimplex xs = one_simplex_of_hat(A, B, alpha_to_hat(A, B, s));
    HomSimplex xt = one_simplex_of_hat(A, B, alpha_to_hat(A, B, t));
    ComposeResult composed = compose_one_simplices(xs, xt);
    return hat_to_alpha(A, B, hat_of_one_simplex(composed.composite));
}

}  // namespace tcat
