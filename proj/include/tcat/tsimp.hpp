#pragma once

#include <string>
#include <vector>

#include "tcat/simplex.hpp"
#include "tcat/tcat.hpp"

namespace tcat {

// A depth-truncated T-simplicial object: levels X_0..X_N, inner faces
// d_i : X_n -> X_{n-1} (i < n), last faces d_n : X_n -> T X_{n-1}, and
// degeneracies s_i : X_n -> X_{n+1}.  Degeneracy vectors may be left empty
// when the structure genuinely lacks them (semisimplicial data).
struct TSimplicialObject {
    MonadSpec monad;
    int depth = 0;
    std::vector<SetObj> levels;               // size depth+1
    std::vector<std::vector<Morph>> inner;    // inner[n][i], n >= 1, 0 <= i < n
    std::vector<Morph> last;                  // last[n], n >= 1 (entry 0 unused)
    std::vector<std::vector<Morph>> degen;    // degen[n][i], 0 <= i <= n < depth

    const SetObj& level(int n) const { return levels.at(n); }
    Morph face(int n, int i) const;        // d_i : X_n -> X_{n-1}, i < n
    Morph last_face(int n) const;          // d_n : X_n -> T X_{n-1}
    Morph degeneracy(int n, int i) const;  // s_i : X_n -> X_{n+1}
    bool has_degeneracies() const;

    // Contravariant action of a top-preserving map psi : [p] -> [m] on the
    // underlying presheaf, X_m -> X_p.
    Morph presheaf_action(const SimplexMap& psi) const;
    // Contravariant Kleisli action of an arbitrary monotone phi : [m] -> [n],
    // X_n -> T X_m.
    Morph kleisli_action(const SimplexMap& phi) const;
};

// The T-simplicial identity families, indexed as instances (kind, n, i, j).
enum class SimpId {
    FaceFace,         // d_i d_j = d_{j-1} d_i            (i < j < n)
    LastFaceInner,    // T d_i . d_n = d_{n-1} . d_i      (i <= n-2)
    LastFaceLast,     // m . T d_{n-1} . d_n = d_{n-1} . d_{n-1}
    DegenDegen,       // s_{j+1} s_i = s_i s_j            (i <= j)
    FaceDegenUnder,   // d_i s_j = s_{j-1} d_i            (i < j)
    FaceDegenId,      // d_i s_j = 1                      (j <= i <= j+1)
    LastFaceDegenId,  // d_{n+1} s_n = i X_n
    FaceDegenOver,    // d_i s_j = s_j d_{i-1}            (j+1 < i < n+1)
    LastFaceDegen,    // d_{n+1} s_j = T s_j . d_n        (j < n)
};

std::string simp_id_name(SimpId id);

struct SimpIdInstance {
    SimpId id;
    int n, i, j;
};

struct SAFailure {
    SimpIdInstance instance;
    std::string witness;
};

struct SAReport {
    std::vector<SAFailure> failures;
    int checked = 0;
    bool ok() const { return failures.empty(); }
};

// All identity instances meaningful for the object within its depth;
// instances touching degeneracies are included only when they are present.
std::vector<SimpIdInstance> sa_instances(const TSimplicialObject& X);
bool check_sa_instance(const TSimplicialObject& X, const SimpIdInstance& inst,
                       std::string* witness = nullptr);
SAReport check_sa_axioms(const TSimplicialObject& X);
SAReport check_sa_subset(const TSimplicialObject& X, const std::vector<SimpIdInstance>& insts);

// Nerve of a T-category presentation: levels by iterated pullback, faces and
// degeneracies induced by composition and unit.
TSimplicialObject nerve(const TCatData& data, int depth);

// Builds the semisimplicial (and, when a unit is present, reflexive) data a
// partial ladder structure induces; identities are NOT assumed to hold.
TSimplicialObject ladder_object(const PartialStructure& partial, int depth);

// Exactly the identity instances the structure ladder guarantees at the
// given level flags, within depth.
std::vector<SimpIdInstance> ladder_guarantees(const TSimplicialObject& X, bool has_comp,
                                              bool has_unit, bool associative, bool unital);

struct LadderReport {
    StructureClass cls;
    SAReport sa;
};

// Builds the derived structure of `partial`, classifies it, and checks the
// identities its ladder level claims.
LadderReport derived_identity_suite(const PartialStructure& partial, int depth);

// True iff every square (d_0, d_n ; d_{n-1}, T d_0) with 2 <= n <= depth is a
// pullback.
bool check_segal(const TSimplicialObject& X);

// Extracts the T-category presentation of a Segal T-simplicial object of
// depth >= 2 (inverse to nerve up to the canonical comparison).
TCatData tcat_from_tsimp(const TSimplicialObject& X);

// Candidate level n+1 for the right (coskeletal) truncation adjoint: the
// finite limit over the proper-subobject diagram restricted to the top two
// layers.  faces[j] is the new d_j for j <= n; faces[n+1] lands in T X_n.
struct CoskeletalLevel {
    SetObj level;
    std::vector<Morph> faces;
};
CoskeletalLevel coskeletal_step(const TSimplicialObject& X, int n);

// Candidate level n+1 for the left (degenerate) truncation adjoint: the
// finite colimit over the proper-quotient diagram, computed as a quotient of
// a finite coproduct.  degens[j] is the new s_j : X_n -> level.
struct DegenerateLevel {
    SetObj level;
    std::vector<Morph> degens;
};
DegenerateLevel degenerate_step(const TSimplicialObject& X, int n);

// A morphism of T-simplicial objects as its level components.
struct TSimpMorphism {
    std::vector<Morph> components;
};

struct MorphismReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

MorphismReport check_tsimp_morphism(const TSimpMorphism& f, const TSimplicialObject& X,
                                    const TSimplicialObject& Y);

// Checks the simplicial identities of the underlying Kleisli simplicial
// object by comparing generator composites through kleisli_compose.
MorphismReport check_kleisli_identities(const TSimplicialObject& X);

// The T-simplicial object with levels T^n A induced by an algebra (A, action);
// validates the algebra laws first.
TSimplicialObject bar_resolution(const SetObj& A, const Morph& action, const MonadSpec& T,
                                 int depth);

}  // namespace tcat
