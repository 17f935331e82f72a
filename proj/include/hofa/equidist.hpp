#pragma once

#include <string>
#include <vector>

#include "hofa/config.hpp"
#include "hofa/nilmanifold.hpp"
#include "hofa/rbpl.hpp"

namespace hofa {

struct DichotomyDiagnostics {
    double mean = 0;                 // |E_n F(g(n)Gamma)|
    double vdc_threshold = 0;        // per-h correlation cutoff used
    double good_h_density = 0;       // density of the van der Corput set
    double class_density = 0;        // density after the frequency pigeonhole
    std::vector<double> h_correlations;  // per-h |E_n e(dphi_h(n))|
};

struct DichotomyResult {
    enum class Branch { SmallN, Certificate };
    Branch branch = Branch::SmallN;
    int r = 0;
    std::vector<IntVec> w;    // r integer 2d-tuples
    std::vector<IntVec> eta;  // 2d - r integer 2d-tuples
    DichotomyDiagnostics diagnostics;
};

/// |E_{n in [N]} F(g(n)Gamma)| with exact phases; requires g periodic mod N.
double mean_correlation(const ElemNilmanifold& m, const PolySeq& g, const BigInt& N);

/// The equidistribution dichotomy for a periodic elementary bracket quadratic
/// with mean at least delta: van der Corput over h, exact isolation of the
/// top terms, frequency pigeonhole, the refined bracket polynomial lemma via
/// the affine extension, and the unwinding to a w/eta certificate whose eta
/// kernel is omega-isotropic.
DichotomyResult run_dichotomy(const ElemNilmanifold& m, const PolySeq& g,
                              const BigInt& N, double delta, const Config& cfg);

struct DichotomyReport {
    bool counts_ok = false;
    bool independent_ok = false;
    bool orthogonal_ok = false;
    bool eta_norm_ok = false;    // ||eta_j . psi_horiz(g)||_{C^infty[N]} = 0
    bool omega_norm_ok = false;  // ||omega(w_i, psi_horiz(g))||_{C^infty[N]} = 0
    bool isotropy_ok = false;    // ker(eta family) is omega-isotropic
    std::string detail;

    bool pass() const {
        return counts_ok && independent_ok && orthogonal_ok && eta_norm_ok &&
               omega_norm_ok && isotropy_ok;
    }
};

DichotomyReport verify_dichotomy(const ElemNilmanifold& m, const PolySeq& g,
                                 const BigInt& N, const DichotomyResult& result);

}  // namespace hofa
