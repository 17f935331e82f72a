#pragma once

#include <optional>
#include <vector>

#include "hofa/rational.hpp"

namespace hofa {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major
using IntVec = std::vector<BigInt>;

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
BigInt dot(const IntVec& a, const IntVec& b);

/// Rank over Q (exact Gaussian elimination).
int rank(RatMat m);
int rank_int(const std::vector<IntVec>& rows);

/// Greedy maximal linearly independent subset; returns indices in input order.
std::vector<int> independent_subset(const std::vector<IntVec>& rows);

/// One solution of A x = b over Q, if consistent.
std::optional<RatVec> solve(RatMat a, RatVec b);

/// Basis of the right kernel of A over Q.
std::vector<RatVec> nullspace(RatMat a);

/// Basis of the lattice { x in Z^n : A x = 0 } for an integer matrix A.
/// The result is a basis, and the lattice is saturated (any integer vector in
/// the Q-span of the basis is an integer combination of it).
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a);

/// Saturated integer basis of span_Q(v_1, ..., v_k) ∩ Z^n.
std::vector<IntVec> saturated_basis(const std::vector<RatVec>& span);

/// Divides out the gcd of the entries (gcd 0 input returned unchanged).
IntVec primitive(IntVec v);

BigInt lcm_of_denominators(const RatVec& v);

}  // namespace hofa
