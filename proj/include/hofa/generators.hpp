#pragma once

#include <vector>

#include "hofa/config.hpp"
#include "hofa/fn_zn.hpp"
#include "hofa/nilmanifold.hpp"
#include "hofa/rbpl.hpp"

namespace hofa {

/// Kernel of an integer matrix mod a prime p; basis vectors with entries in
/// [0, p).
std::vector<IntVec> modp_kernel(const std::vector<IntVec>& rows, const BigInt& p);

/// Random rational with denominator dividing den.
Rat random_rational(Rng& rng, const BigInt& den);

/// Random N-periodic elementary bracket quadratic (denominator-N horizontal
/// frequencies, vertical quadratic solved for periodicity).
PolySeq random_periodic_quadratic(Rng& rng, int d, const BigInt& N);

/// A bracket quadratic violating the periodicity lemma's denominator
/// conclusions (and hence not N-periodic).
PolySeq random_nonconforming_quadratic(Rng& rng, int d, const BigInt& N);

/// Planted exact-zero instance: a handful of coordinates with exactly
/// integral frequencies, the rest tied by a single planted relation vector;
/// the small relations of the instance are validated by enumeration so the
/// solver and the brute-force oracle see the same structure.
struct PlantedRBPL {
    RBPLInstance instance;
    std::vector<IntVec> planted_relations;
    long validation_box = 0;
};
PlantedRBPL plant_rbpl(Rng& rng, int d, const BigInt& N);

/// Random valid certificate in dimension d+1 (eta relations exact against a
/// sampled alpha~), for exercising the affine extension. force_nu_zero picks
/// the all-nu-zero branch.
struct PlantedAffine {
    Certificate cert;   // dimension d+1
    RatVec alpha_tilde; // length d+1, denominator N
    RatVec alpha;       // heads, length d
};
PlantedAffine plant_affine_certificate(Rng& rng, int d, const BigInt& N,
                                       bool force_nu_zero);

/// Planted isotropic instance for the dichotomy: coordinate blocks that
/// cancel pointwise (paired, zero-alpha, zero-beta), so the mean is 1 while
/// the horizontal frequencies are nontrivial.
PolySeq plant_dichotomy(Rng& rng, int d, const BigInt& N);

/// Generic random periodic quadratic for the negative control (no planted
/// cancellation).
PolySeq random_generic_quadratic(Rng& rng, int d, const BigInt& N);

/// chi_h(n) = e(a h n / N) with quadratic-phase witnesses f1, f2 making the
/// per-h correlation exactly 1.
struct PlantedChiFamily {
    long a = 0;
    std::vector<long> H;
    FnZN f1, f2;
    std::vector<FnZN> chi;  // indexed by h in [0, N)
};
PlantedChiFamily plant_chi_family(Rng& rng, const BigInt& N, double eta_density);

/// Random one-bounded function with unit-modulus random phases.
FnZN random_phase_function(Rng& rng, long n);
/// Random subset of Z/NZ, each element kept with probability half.
std::vector<long> random_subset(Rng& rng, long n);

}  // namespace hofa
