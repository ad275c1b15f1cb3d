#include "tcat/limits.hpp"

#include <algorithm>
#include <set>

namespace tcat {

PullbackResult pullback(const Morph& f, const Morph& g, const FiberOracle& g_fibers) {
    if (f.cod() != g.cod()) throw Error("pullback: the two legs have different codomains");
    if (!f.dom().is_finite())
        throw CapabilityError("pullback: first leg has a non-finite domain");
    std::vector<Element> pairs;
    for (const auto& a : f.dom().elements()) {
        const Element c = f(a);
        for (const auto& b : g_fibers(c)) pairs.push_back(Element::pair(a, b));
    }
    SetObj apex = SetObj::finite(std::move(pairs));
    return PullbackResult{apex, Morph::tuple_component(apex, f.dom(), 0),
                          Morph::tuple_component(apex, g.dom(), 1)};
}

PullbackResult pullback(const Morph& f, const Morph& g) {
    return pullback(f, g, scan_oracle(g));
}

PullbackResult product(const SetObj& A, const SetObj& B) {
    SetObj point = SetObj::singleton(Element::atom("#pt"));
    Element pt = Element::atom("#pt");
    return pullback(Morph::constant(A, pt, point), Morph::constant(B, pt, point));
}

EqualizerResult equalizer(const Morph& f, const Morph& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw Error("equalizer: the maps are not parallel");
    std::vector<Element> kept;
    for (const auto& a : f.dom().elements())
        if (f(a) == g(a)) kept.push_back(a);
    SetObj apex = SetObj::finite(std::move(kept));
    return EqualizerResult{apex, Morph::from_fn(apex, f.dom(),
                                                [](const Element& e) { return e; }, "incl")};
}

LimitResult finite_limit(const Diagram& diagram) {
    const std::size_t n = diagram.vertices.size();
    for (const auto& v : diagram.vertices)
        if (!v.is_finite()) throw CapabilityError("finite_limit: non-finite vertex");
    std::vector<Element> tuples;
    std::vector<Element> current(n);
    // depth-first product walk, pruning on edges whose endpoints are fixed
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
        if (k == n) {
            tuples.push_back(Element::tuple(current));
            return;
        }
        for (const auto& x : diagram.vertices[k].elements()) {
            current[k] = x;
            bool ok = true;
            for (const auto& e : diagram.edges) {
                if (std::max(e.src, e.dst) != k) continue;
                if (e.map(current[e.src]) != current[e.dst]) {
                    ok = false;
                    break;
                }
            }
            if (ok) walk(k + 1);
        }
    };
    walk(0);
    SetObj apex = SetObj::finite(std::move(tuples));
    LimitResult result{apex, {}};
    for (std::size_t i = 0; i < n; ++i)
        result.projections.push_back(Morph::tuple_component(apex, diagram.vertices[i], i));
    return result;
}

HexagonResult limit_hexagon(const HexagonLegs& legs) {
    const Morph &a = legs.a, &b = legs.b, &c = legs.c, &d = legs.d, &e = legs.e, &f = legs.f;
    if (a.dom() != b.dom()) throw Error("limit_hexagon: a and b must share the B vertex");
    if (c.dom() != d.dom()) throw Error("limit_hexagon: c and d must share the D vertex");
    if (e.dom() != f.dom()) throw Error("limit_hexagon: e and f must share the F vertex");
    if (a.cod() != f.cod() || b.cod() != c.cod() || d.cod() != e.cod())
        throw Error("limit_hexagon: mismatched corner objects");

    // When every vertex is finite, check the compatibility of the three
    // composites into the center.
    if (a.dom().is_finite()) {
        for (const auto& x : a.dom().elements())
            if (legs.g(a(x)) != legs.h(b(x)))
                throw Error("limit_hexagon: g.a != h.b at " + x.show());
        for (const auto& x : c.dom().elements())
            if (legs.h(c(x)) != legs.i(d(x)))
                throw Error("limit_hexagon: h.c != i.d at " + x.show());
        for (const auto& x : e.dom().elements())
            if (legs.i(e(x)) != legs.g(f(x)))
                throw Error("limit_hexagon: i.e != g.f at " + x.show());
    }

    FiberOracle fib_a = legs.fibers_a ? *legs.fibers_a
                                      : (a.dom().is_finite() ? scan_oracle(a) : FiberOracle{});
    FiberOracle fib_b = legs.fibers_b ? *legs.fibers_b
                                      : (b.dom().is_finite() ? scan_oracle(b) : FiberOracle{});
    if (!fib_a || !fib_b)
        throw CapabilityError("limit_hexagon: missing fiber oracle for an infinite B vertex");

    // U = {(beta, phi) : a(beta) = f(phi)} and V = {(beta, x) : b(beta) = c(x)}.
    std::vector<std::pair<Element, Element>> U, V;
    for (const auto& phi : f.dom().elements())
        for (const auto& beta : fib_a(f(phi))) U.emplace_back(beta, phi);
    for (const auto& x : c.dom().elements())
        for (const auto& beta : fib_b(c(x))) V.emplace_back(beta, x);

    // W (the pullback of g.a and i) is never materialized: the final pullback
    // of the induced maps U -> W <- V compares their two components (the
    // B-part and the E-part) directly.
    std::vector<Element> triples;
    for (const auto& [beta_u, phi] : U) {
        const Element e_phi = e(phi);
        for (const auto& [beta_v, x] : V) {
            if (beta_u != beta_v) continue;
            if (e_phi != d(x)) continue;
            triples.push_back(Element::tuple({beta_u, x, phi}));
        }
    }
    SetObj apex = SetObj::finite(std::move(triples));
    return HexagonResult{apex, Morph::tuple_component(apex, a.dom(), 0),
                         Morph::tuple_component(apex, c.dom(), 1),
                         Morph::tuple_component(apex, e.dom(), 2)};
}

bool is_pullback_square(const Morph& p1, const Morph& p2, const Morph& f, const Morph& g,
                        const FiberOracle& g_fibers) {
    if (p1.dom() != p2.dom()) throw Error("is_pullback_square: projections disagree on apex");
    for (const auto& x : p1.dom().elements())
        if (f(p1(x)) != g(p2(x)))
            throw Error("is_pullback_square: square does not commute at " + x.show());
    PullbackResult pb = pullback(f, g, g_fibers);
    std::set<Element> seen;
    for (const auto& x : p1.dom().elements()) {
        Element image = Element::pair(p1(x), p2(x));
        if (!pb.apex.contains(image)) return false;
        if (!seen.insert(image).second) return false;  // not injective
    }
    return seen.size() == pb.apex.size();
}

bool is_pullback_square(const Morph& p1, const Morph& p2, const Morph& f, const Morph& g) {
    return is_pullback_square(p1, p2, f, g, scan_oracle(g));
}

}  // namespace tcat
