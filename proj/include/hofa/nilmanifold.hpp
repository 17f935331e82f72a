#pragma once

#include <optional>
#include <vector>

#include "hofa/brackets.hpp"
#include "hofa/linalg.hpp"
#include "hofa/rational.hpp"

namespace hofa {

/// The elementary two-step nilmanifold of dimension 2d+1: the upper
/// triangular model with horizontal coordinates (x_1..x_d, y_1..y_d) and
/// central coordinate z. structure_constants is a strictly upper triangular
/// integer matrix over the 2d horizontal indices; the standard model pairs
/// x_i with y_i (C[i][d+i] = 1). frequency scales the vertical character.
struct ElemNilmanifold {
    int d = 1;
    std::vector<IntVec> structure_constants;  // (2d) x (2d), strictly upper
    BigInt frequency = 1;

    static ElemNilmanifold standard(int d, const BigInt& frequency = BigInt(1));
    int horiz_dim() const { return 2 * d; }
    bool is_standard() const;
    /// Max |C_ij| (the complexity bound Q of the model).
    BigInt complexity() const;
};

struct GroupElement {
    RatVec x, y;
    Rat z;

    static GroupElement identity(int d);
    int d() const { return static_cast<int>(x.size()); }
    bool operator==(const GroupElement& o) const { return x == o.x && y == o.y && z == o.z; }
    bool is_lattice() const;  // all 2d+1 coordinates integral
};

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, const BigInt& e);  // closed form
GroupElement power_binary(const GroupElement& g, const BigInt& e);  // repeated mul
GroupElement commutator(const GroupElement& u, const GroupElement& v);

/// Unique representative of g Gamma in (-1/2, 1/2]^{2d+1}:
/// ({x}, {y}, {z - x.[y]}).
GroupElement project_fundamental(const GroupElement& g);

/// The elementary polynomial sequence g(n) = (alpha n, beta n, P(n)).
struct PolySeq {
    RatVec alpha, beta;
    Poly vertical;

    int d() const { return static_cast<int>(alpha.size()); }
    RatVec horiz() const;  // (alpha, beta), length 2d
    GroupElement at(const BigInt& n) const;          // direct coordinates
    GroupElement at_group_route(const BigInt& n) const;  // via group products
    bool is_periodic(const BigInt& N) const;  // g(n+N) Gamma = g(n) Gamma for n in [0,N)
};

/// F((x,y,z)Gamma) = e(-sum x_i [y_i] + z) evaluated at the fundamental
/// representative; the exact phase as a rational mod 1.
Mod1 nilseq_phase(const ElemNilmanifold& m, const PolySeq& g, const BigInt& n);
std::complex<double> eval_nilsequence(const ElemNilmanifold& m, const PolySeq& g,
                                      const BigInt& n);

/// Phase of the Fourier-expanded nilcharacter with the manifold's structure
/// constants and frequency: -k sum_{i<j} C_ij g_i n [g_j n] + k P(n).
Mod1 nilchar_phase(const ElemNilmanifold& m, const PolySeq& g, const BigInt& n);
/// Same phase as a symbolic bracket expression.
BracketExpr nilchar_bracket_expr(const ElemNilmanifold& m, const PolySeq& g);

/// omega(u1, u2) = x.w - y.z for u1 = (x, y), u2 = (z, w).
Rat omega(const ElemNilmanifold& m, const RatVec& u1, const RatVec& u2);
Rat omega(const ElemNilmanifold& m, const IntVec& u1, const RatVec& u2);
Rat omega(const ElemNilmanifold& m, const IntVec& u1, const IntVec& u2);

struct Factorization {
    GroupElement epsilon;  // constant part
    PolySeq g1;            // lies in the common kernel of the etas
    PolySeq gamma;         // q-rational part
    BigInt q;
};

/// Factorization g = epsilon * g1 * gamma with g1 horizontal in the common
/// kernel of the given horizontal characters (which must annihilate g's
/// horizontal frequencies mod 1) and gamma q-rational. Exact; the
/// recomposition is verified for n in [0, N).
Factorization factorize_I(const PolySeq& g, const std::vector<IntVec>& etas,
                          const BigInt& N);

struct BasisChange {
    ElemNilmanifold manifold;
    PolySeq seq;
    std::vector<BracketTerm> lower;
};

/// Change of basis for the nilcharacter: given an integer matrix A invertible
/// over Q acting on the horizontal basis, returns (M', g', lower) with
///   nilchar(M, g, 2n) = nilchar(M', g', n) + sum(lower)(n)   (mod 1),
/// lower drawn from the fixed catalogue (fractional products, fractional
/// linears). The identity is verified pointwise on [0, N).
BasisChange change_basis(const ElemNilmanifold& m, const PolySeq& g,
                         const std::vector<IntVec>& a, const BigInt& N);

}  // namespace hofa
