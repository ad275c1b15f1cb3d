#pragma once

#include <map>
#include <memory>

#include "tcat/tsimp.hpp"

namespace tcat {

// All maps dom -> cod as tables, in a deterministic order.
std::vector<Morph> enumerate_maps(const SetObj& dom, const SetObj& cod);

// Solves the Segal pullback of a target level: the unique e in X_m with
// d_0(e) = head and d_m(e) = tail, via a lookup table per level.
class SegalPairing {
public:
    explicit SegalPairing(const TSimplicialObject* X);
    // nullopt when no such element exists; multiplicity is a hard error.
    std::optional<Element> solve(int m, const Element& head, const Element& tail) const;

private:
    const TSimplicialObject* X_;
    mutable std::vector<std::shared_ptr<std::map<Element, Element>>> tables_;
};

// An n-simplex of the hom simplicial set hom(Y, X): components
// x_phi : Y_m -> X_m stored for m <= 2 and phi : [m] -> [n] in Delta.  When X
// satisfies the Segal condition the stored components determine every higher
// one by pullback pairing; extensions are cached.
class HomSimplex {
public:
    HomSimplex(const TSimplicialObject* source, const TSimplicialObject* target, int degree);

    int degree() const { return degree_; }
    const TSimplicialObject& source() const { return *source_; }
    const TSimplicialObject& target() const { return *target_; }

    void set(const SimplexMap& phi, Morph component);
    bool has(const SimplexMap& phi) const;
    // The component at phi : [m] -> [n]; extends beyond m = 2 on demand.
    Morph at(const SimplexMap& phi) const;

    // Reindexing along theta : [n'] -> [n]; faces and degeneracies of the
    // hom simplicial set are the special cases.
    HomSimplex reindex(const SimplexMap& theta) const;
    HomSimplex face(int i) const;
    HomSimplex hom_degeneracy(int i) const;

    // Canonical tabulation of the stored components; equality of simplices.
    std::string key() const;
    bool operator==(const HomSimplex& other) const { return key() == other.key(); }
    bool operator<(const HomSimplex& other) const { return key() < other.key(); }

private:
    const TSimplicialObject* source_;
    const TSimplicialObject* target_;
    int degree_;
    std::shared_ptr<std::map<std::vector<int>, Morph>> components_;
    std::shared_ptr<SegalPairing> pairing_;
    std::shared_ptr<std::map<std::vector<int>, Morph>> extension_cache_;
};

struct HomReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks naturality for the top-preserving generators and the last-face
// condition on every stored level, then extends to `up_to` (Segal targets)
// and re-checks the extension.
HomReport validate_hom_simplex(const HomSimplex& x, int up_to);

// All degree-n hom simplices, by constrained search over the m <= 2
// components.  Requires the target to satisfy the Segal condition.
std::vector<HomSimplex> enumerate_hom_simplices(const TSimplicialObject& Y,
                                                const TSimplicialObject& X, int degree,
                                                int up_to);

// Degree-0 simplices are morphisms of T-simplicial objects.
std::vector<TSimpMorphism> enumerate_tsimp_morphisms(const TSimplicialObject& Y,
                                                     const TSimplicialObject& X, int up_to);
HomSimplex hom_simplex_of_morphism(const TSimplicialObject& Y, const TSimplicialObject& X,
                                   const TSimpMorphism& f);

// Composition of 1-simplices x, y with d_0 x = d_1 y over a T-category
// target: the unique 2-simplex z with d_2 z = x and d_0 z = y, built by the
// constructive case analysis, and its middle face d_1 z.
struct ComposeResult {
    HomSimplex two_cell;
    HomSimplex composite;
};
ComposeResult compose_one_simplices(const HomSimplex& x, const HomSimplex& y);

// Exhaustive-search oracle for the same filler; test-only companion of
// compose_one_simplices.
std::vector<HomSimplex> horn_fillers_by_search(const HomSimplex& x, const HomSimplex& y,
                                               int up_to);

// Segal condition of the hom simplicial set at index n: hom_{n+2} is in
// bijection with the compatible pairs of (n+1)-simplices.
bool hom_segal_check(const TSimplicialObject& Y, const TSimplicialObject& X, int n, int up_to);

// T-functors between Segal objects, presented by their two lowest components.
struct TFunctorData {
    Morph f0, f1;
};

std::vector<TFunctorData> enumerate_tfunctors(const TSimplicialObject& A,
                                              const TSimplicialObject& B, int up_to);
TFunctorData identity_tfunctor(const TSimplicialObject& A);
TFunctorData compose_tfunctors(const TFunctorData& g, const TFunctorData& f);

// A 2-cell in component form: alpha : A_0 -> B_1.
struct TNat {
    TFunctorData f, g;
    Morph alpha;
};

// A 2-cell in 1-simplex form: hat : A_1 -> B_1.
struct HatCell {
    TFunctorData f, g;
    Morph hat;
};

HomReport validate_tnat(const TSimplicialObject& A, const TSimplicialObject& B, const TNat& t);
HomReport validate_hat(const TSimplicialObject& A, const TSimplicialObject& B,
                       const HatCell& c);

TNat hat_to_alpha(const TSimplicialObject& A, const TSimplicialObject& B, const HatCell& c);
HatCell alpha_to_hat(const TSimplicialObject& A, const TSimplicialObject& B, const TNat& t);

std::vector<TNat> enumerate_two_cells(const TSimplicialObject& A, const TSimplicialObject& B,
                                      const TFunctorData& f, const TFunctorData& g);

TNat whisker_post(const TSimplicialObject& A, const TSimplicialObject& B,
                  const TSimplicialObject& C, const TNat& t, const TFunctorData& h);
TNat whisker_pre(const TSimplicialObject& W, const TSimplicialObject& A,
                 const TSimplicialObject& B, const TNat& t, const TFunctorData& h);

// Vertical composition through the simplicial structure: the 1-simplex form
// of t after s (s first), for 2-cells s : f => g and t : g => h.
TNat vertical_compose(const TSimplicialObject& A, const TSimplicialObject& B, const TNat& t,
                      const TNat& s);

}  // namespace tcat
