#pragma once

#include "tcat/comonad.hpp"
#include "tcat/hom.hpp"

namespace tcat {

// A finite simplicial set presented by tables of named simplices.
struct FiniteSimplicialSet {
    int depth = 0;
    std::vector<std::vector<std::string>> simplices;   // names per level
    std::vector<std::vector<std::vector<int>>> face;   // face[n][i][k], 0 <= i <= n
    std::vector<std::vector<std::vector<int>>> degen;  // degen[n][i][k], 0 <= i <= n

    // The standard simplex Delta[k], truncated.
    static FiniteSimplicialSet standard(int k, int depth);
    int face_of(int n, int i, int idx) const { return face.at(n).at(i).at(idx); }
    int degen_of(int n, int i, int idx) const { return degen.at(n).at(i).at(idx); }
    // The simplicial identities of the action tables, within depth.
    std::vector<std::string> check_identities() const;
};

// The copower A . Y: level n is the disjoint union of A_n copies of Y_n,
// with the last faces twisted through the lifted component inclusions.
TSimplicialObject copower(const FiniteSimplicialSet& A, const TSimplicialObject& Y);

// The power of the underlying presheaf of X by G = Delta_r[1].  Level n is
// the set of tuples (x_0, ..., x_n) in X_{n+1} with d_k x_{k-1} = d_k x_k;
// proj[n][j] extracts x_j.  g = (proj[n][n])_n lands in the shifted presheaf
// XR and t = d_0 . proj[n][0] in X.
struct PowerG {
    int depth = 0;
    std::vector<SetObj> levels;
    std::vector<std::vector<Morph>> faces;   // faces[n][i], 0 <= i <= n-1
    std::vector<std::vector<Morph>> degens;  // degens[n][i], 0 <= i <= n
    std::vector<std::vector<Morph>> proj;    // proj[n][j] : level n -> X_{n+1}

    Morph g_component(int n) const { return proj.at(n).at(n); }
    RPresheaf as_presheaf(const MonadSpec& T) const;
};

PowerG power_G(const TSimplicialObject& X);  // depth = X.depth - 1

// The two directions of the correspondence between 1-simplex families
// u[m][k] : Y_m -> X_m (k <= m) over Delta_r and presheaf morphisms
// uhat[m] : Y_m -> (G power X)_m.
std::vector<Morph> u_to_uhat(const TSimplicialObject& Y, const TSimplicialObject& X,
                             const PowerG& GX, const std::vector<std::vector<Morph>>& u,
                             int depth);
std::vector<std::vector<Morph>> uhat_to_u(const TSimplicialObject& Y,
                                          const TSimplicialObject& X, const PowerG& GX,
                                          const std::vector<Morph>& uhat, int depth);

// The power of X by Delta[1]: a T-simplicial object L with a morphism p to X
// and a presheaf morphism q to G power X, built by the recursive limits.
struct DeltaOnePower {
    TSimplicialObject L;
    std::vector<Morph> p;
    std::vector<Morph> q;
    PowerG GX;
};

// Requires X.depth >= depth + 1.
DeltaOnePower delta1_power(const TSimplicialObject& X, int depth);

// Elementwise verification of the three universal-1-simplex diagrams.
HomReport check_power_diagrams(const DeltaOnePower& P, const TSimplicialObject& X);

struct UniversalPropertyReport {
    std::vector<std::string> violations;
    std::vector<std::pair<std::size_t, std::size_t>> counts;  // (|Y -> L|, |hom(Y,X)_1|)
    bool ok() const { return violations.empty(); }
};

// For each sample Y: morphisms Y -> L must biject with 1-simplices of
// hom(Y, X) under composition with the universal pair (p, q).
UniversalPropertyReport check_universal_property(const DeltaOnePower& P,
                                                 const TSimplicialObject& X,
                                                 const std::vector<const TSimplicialObject*>& samples,
                                                 int up_to);

// Segal closure of the power of a T-category.
bool check_power_closure(const DeltaOnePower& P);

}  // namespace tcat
