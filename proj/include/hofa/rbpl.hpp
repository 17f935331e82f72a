#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hofa/config.hpp"
#include "hofa/linalg.hpp"
#include "hofa/rational.hpp"

namespace hofa {

/// Input data of the refined bracket polynomial lemma: for every h in H,
/// dist_circle(beta + a . {alpha h}) <= K/N.
struct RBPLInstance {
    BigInt N;  // prime
    int d = 0;
    RatVec a;      // |a|_inf <= M
    RatVec alpha;  // denominator N
    Rat beta;
    Rat K;
    std::vector<long> H;

    Rat delta() const { return Rat(static_cast<long>(H.size()), to_long(N)); }
    Rat m_bound() const;  // max(1, |a|_inf)
    void validate() const;
};

/// Output families: w_1..w_r and eta_1..eta_{d-r}, linearly independent,
/// mutually orthogonal, with ||eta_j . alpha|| = 0 exactly and |w_i . a|
/// small (zero for exact-zero instances).
struct Certificate {
    int d = 0;
    std::vector<IntVec> w;
    std::vector<IntVec> eta;

    int r() const { return static_cast<int>(w.size()); }
};

struct VerifyReport {
    bool counts_ok = false;
    bool independent_ok = false;
    bool orthogonal_ok = false;
    bool eta_exact_ok = false;  // ||eta_j . alpha|| = 0 for all j
    std::vector<Rat> w_abs;     // |w_i . a|
    std::vector<Rat> w_dist;    // ||w_i . a||_{R/Z}
    std::vector<Rat> eta_dist;  // ||eta_j . alpha||_{R/Z}
    BigInt max_entry;           // largest |entry| over both families

    bool structure_ok() const { return counts_ok && independent_ok && orthogonal_ok; }
    /// Exact-zero mode: structure plus ||eta.alpha|| = 0 and ||w.a|| = 0 (mod 1).
    bool pass_exact() const;
    /// Absolute mode: structure plus ||eta.alpha|| = 0 and |w.a| <= bound.
    bool pass_abs(const Rat& bound) const;
};

VerifyReport verify(const RBPLInstance& inst, const Certificate& cert);

/// Nonzero integer vector within `width` of the line R.a and of euclidean
/// length at most `length`, by exhaustive box enumeration (smallest sup-norm,
/// then lexicographic). nullopt when the box holds no such vector.
std::optional<IntVec> tube_vector(const RatVec& a, const Rat& width, const Rat& length);

struct SolveStep {
    IntVec eta;
    int pivot = -1;
    BigInt q;
    double class_density = 0;
    Rat k_measured;   // N * max dist within the retained class
    bool in_tube = false;
};

struct SolveResult {
    std::optional<Certificate> certificate;
    bool degenerate = false;
    std::string reason;
    std::vector<SolveStep> steps;

    bool ok() const { return certificate.has_value(); }
};

/// The iteration of the refined bracket polynomial lemma: pigeonhole the
/// level, pick the relation vector for the current direction (preferring the
/// tube), update (a, w, H) and repeat until the termination threshold.
SolveResult solve(const RBPLInstance& inst, const Config& cfg);

/// Ground-truth search: enumerate every integer vector of sup-norm at most
/// height_bound, collect exact relations and w-candidates with
/// |w . a| <= w_threshold, and greedily extract maximal independent
/// orthogonal families (w side first, then the eta side; the swapped order
/// is tried when the counts do not fill the dimension).
std::optional<Certificate> brute_force(const RBPLInstance& inst, long height_bound,
                                       const Rat& w_threshold);

/// The affine-extension corollary: from a certificate for
/// (a~, alpha~) = ((a, 1), (alpha, beta)) in dimension d+1, produce one for
/// (a, alpha) in dimension d. Covers both proof branches.
Certificate extend_affine(const Certificate& cert_d1);

/// Q-subspace equality of the kernels cut out by two eta families.
bool eta_kernels_equal(int d, const std::vector<IntVec>& a,
                       const std::vector<IntVec>& b);

}  // namespace hofa
