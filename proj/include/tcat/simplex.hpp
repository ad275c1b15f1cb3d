#pragma once

#include <string>
#include <vector>

namespace tcat {

// A monotone map [m] -> [n] between the finite ordinals [k] = {0 < ... < k},
// stored as its dense value table.  Canonical form makes equality decidable;
// generator words (face/degeneracy decompositions) are derived views.
class SimplexMap {
public:
    SimplexMap(int dom, int cod, std::vector<int> values);

    static SimplexMap identity(int n);
    // delta_i : [n] -> [n+1], the injection skipping value i (0 <= i <= n+1).
    static SimplexMap face(int n, int i);
    // sigma_i : [n+1] -> [n], the surjection repeating value i (0 <= i <= n).
    static SimplexMap degeneracy(int n, int i);
    // chi^m_j : [m] -> [1], sending i to 0 when i < j and to 1 otherwise
    // (0 <= j <= m+1); top-preserving exactly when j <= m.
    static SimplexMap chi(int m, int j);
    static SimplexMap constant(int m, int n, int value);

    int dom() const { return dom_; }
    int cod() const { return cod_; }
    int operator()(int k) const;
    const std::vector<int>& values() const { return values_; }

    bool is_identity() const;
    bool is_injective() const;
    // f(dom) = cod, i.e. f lies in the wide subcategory Delta_r.
    bool is_top_preserving() const;

    bool operator==(const SimplexMap& other) const;
    bool operator<(const SimplexMap& other) const;
    std::string show() const;

private:
    int dom_;
    int cod_;
    std::vector<int> values_;
};

// Pointwise composite g . f (f first).
SimplexMap compose(const SimplexMap& g, const SimplexMap& f);

// Unique factorization phi = incl . top with top : [m] -> [k] top-preserving,
// k = phi(m), and incl = delta_n delta_{n-1} ... delta_{k+1}.
struct TopFactorization {
    int k;
    SimplexMap top;
    SimplexMap incl;
};
TopFactorization factorize(const SimplexMap& phi);

// The monad R = (-)+1 on Delta_r^op, acting on top-preserving maps by
// extending with a fresh top; requires is_top_preserving(psi).
SimplexMap apply_R(const SimplexMap& psi);
// The right adjoint U_R of the inclusion Delta_r^op -> Delta^op: the same
// fresh-top extension, defined for every monotone map.
SimplexMap apply_UR(const SimplexMap& phi);
// Extension [m+1] -> [n] of theta : [m] -> [n] sending the new point to the
// codomain top; satisfies top_extension(theta) . face(m, m+1) = theta.
SimplexMap top_extension(const SimplexMap& theta);

enum class HomKind { Delta, DeltaR };

// Complete duplicate-free list of monotone maps [m] -> [n], restricted to
// top-preserving ones for DeltaR.  Lexicographic in the value tables.
std::vector<SimplexMap> enumerate_hom(int m, int n, HomKind which);

}  // namespace tcat
