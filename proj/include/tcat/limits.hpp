#pragma once

#include <optional>
#include <vector>

#include "tcat/setobj.hpp"

namespace tcat {

// Pullback of f : A -> C and g : B -> C.  Elements are pairs (a,b); iterated
// pullbacks therefore nest on the left.
struct PullbackResult {
    SetObj apex;
    Morph p1;  // apex -> A
    Morph p2;  // apex -> B
};

// Requires A explicit finite; `g_fibers` must enumerate the g-fiber over
// every value f takes.
PullbackResult pullback(const Morph& f, const Morph& g, const FiberOracle& g_fibers);
// Convenience overload scanning a finite B.
PullbackResult pullback(const Morph& f, const Morph& g);

// Binary product as pairs, and the equalizer of a parallel pair as a
// subobject with its inclusion.
PullbackResult product(const SetObj& A, const SetObj& B);
struct EqualizerResult {
    SetObj apex;
    Morph include;
};
EqualizerResult equalizer(const Morph& f, const Morph& g);

// Brute-force limit of an arbitrary finite diagram of finite sets; the
// correctness oracle for every specialized limit routine.  Elements are
// Tuples indexed by vertex order.
struct Diagram {
    struct Edge {
        std::size_t src, dst;
        Morph map;  // vertices[src] -> vertices[dst]
    };
    std::vector<SetObj> vertices;
    std::vector<Edge> edges;
};

struct LimitResult {
    SetObj apex;
    std::vector<Morph> projections;
};

LimitResult finite_limit(const Diagram& diagram);

// Limit of the hexagon-with-center diagram
//
//        a        b        c        d        e        f
//   B ------> A,  B ---> C,  D ---> C,  D ---> E,  F ---> E,  F ---> A,
//   g : A -> G,   h : C -> G,   i : E -> G   (g.a = h.b etc.)
//
// computed via three pullbacks U, V, W and a final pullback of the induced
// maps U -> W <- V.  B may be a free carrier provided fiber oracles for a and
// b are supplied; apex elements are triples (B-part, D-part, F-part).
struct HexagonLegs {
    Morph a, b, c, d, e, f, g, h, i;
    std::optional<FiberOracle> fibers_a;  // fibers of a, needed when B is infinite
    std::optional<FiberOracle> fibers_b;
};

struct HexagonResult {
    SetObj apex;
    Morph projB, projD, projF;
};

HexagonResult limit_hexagon(const HexagonLegs& legs);

// True iff the commuting square
//
//      apex --p2--> B
//       |p1         |g
//       v           v
//       A ----f---> C
//
// is a pullback, tested by comparing the canonical map into pullback(f, g)
// with a bijection.  The apex must be explicit finite.
bool is_pullback_square(const Morph& p1, const Morph& p2, const Morph& f, const Morph& g,
                        const FiberOracle& g_fibers);
bool is_pullback_square(const Morph& p1, const Morph& p2, const Morph& f, const Morph& g);

}  // namespace tcat
