#pragma once

#include "tcat/tsimp.hpp"

namespace tcat {

// A truncated presheaf over the top-preserving maps: levels with inner faces
// d_i : X_n -> X_{n-1} for 0 <= i < n and degeneracies, no last faces.
struct RPresheaf {
    MonadSpec monad;  // carried along for the lifted structure
    int depth = 0;
    std::vector<SetObj> levels;
    std::vector<std::vector<Morph>> faces;   // faces[n][i], n >= 1
    std::vector<std::vector<Morph>> degens;  // degens[n][i], n < depth

    Morph face(int n, int i) const { return faces.at(n).at(i); }
    Morph degeneracy(int n, int i) const { return degens.at(n).at(i); }

    static RPresheaf restriction(const TSimplicialObject& X);
    // The presheaf identities that survive without last faces.
    SAReport check_identities() const;
};

// Levels of the sequence comonad: K(X)_0 = X_0 and
// K(X)_{n+1} = X_{n+1} x T K(X)_n, right-nested pairs.
// Requires a finiteness-preserving monad.
std::vector<SetObj> K_levels(const std::vector<SetObj>& levels, const MonadSpec& T);

// The counit (projections) of K.
std::vector<Morph> K_counit(const std::vector<SetObj>& levels, const MonadSpec& T);

// The comultiplication (recursive pairing) and the action of K on a level
// family, evaluated structurally: iterated copies of K are never
// materialized as carriers.
Element K_comult_eval(const MonadSpec& T, int n, const Element& e);
Element K_map_eval(const MonadSpec& T,
                   const std::function<Element(int, const Element&)>& component, int n,
                   const Element& e);

struct ComonadLawReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Counit and coassociativity laws of K, elementwise within depth.
ComonadLawReport check_comonad_laws(const std::vector<SetObj>& levels, const MonadSpec& T);

// The lift of K through the forgetful functor to sequences: the presheaf
// structure on the K levels of P.
RPresheaf lift_K(const RPresheaf& P);

// A coalgebra for the lifted comonad.
struct CoalgebraData {
    RPresheaf carrier;
    std::vector<Morph> zeta;  // zeta[n] : X_n -> K(X)_n
};

CoalgebraData tsimp_to_coalgebra(const TSimplicialObject& X);

// Validates the coalgebra laws and the naturality of zeta against the lifted
// structure (reported per generator case), then extracts the last faces.
struct CoalgebraReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

CoalgebraReport check_coalgebra(const CoalgebraData& C);
TSimplicialObject coalgebra_to_tsimp(const CoalgebraData& C);

}  // namespace tcat
