#pragma once

#include <vector>

#include "hofa/brackets.hpp"
#include "hofa/fn_zn.hpp"
#include "hofa/rational.hpp"

namespace hofa {

struct FourierTerm {
    Cplx coef;
    Rat freq_n;  // rational frequency in n (denominator N in periodic mode)
    Rat freq_h;  // rational frequency in h (denominator H), zero when unused
};

struct FourierExpansion {
    std::vector<FourierTerm> terms;
    double l1_bound = 0;           // sum of |coef|, the recorded budget
    double measured_l1_error = 0;  // exhaustive L^1 error against the target
    bool degenerate = false;       // small-N branch or budget exhausted

    Cplx eval(const BigInt& n, const BigInt& h = BigInt(0)) const;
};

/// One bilinear product k * {alpha h + off_h} * {beta n + off_n}.
struct BilinearProd {
    BigInt k;
    Rat alpha_h, off_h;
    Rat beta_n, off_n;
};

struct FourierOptions {
    double delta = 0.05;
    int cutoff_order = 3;       // smoothness of the plateau bump
    int grid = 256;             // per-dimension sampling grid (power of two)
    int start_modes = 64;       // initial per-pair mode budget
    int max_modes = 8192;       // growth cap before flagging degenerate
    long small_n_cutoff = 4;    // the lemma's small-N branch
};

/// Expansion of e(sum_i k_i {alpha_i n + off1} {beta_i n + off2}) for integer
/// k_i, phases of denominator N (N prime): the smooth-cutoff construction of
/// the periodic case, truncated adaptively until the exhaustively measured
/// L^1[N] error is at most delta. All emitted frequencies have denominator
/// dividing N.
FourierExpansion expand_frac_product(const std::vector<BracketTerm>& prods,
                                     const BigInt& N, const FourierOptions& opt);

/// Bilinear variant over (n, h) in [N] x [H]: phases e(c n + d h), c with
/// denominator N and d with denominator H.
FourierExpansion expand_bilinear(const std::vector<BilinearProd>& prods,
                                 const BigInt& N, const BigInt& H,
                                 const FourierOptions& opt);

/// Expansion of e(sum_i a_i {alpha_i n}) via the a = [a] + {a} split.
FourierExpansion expand_trivial(const RatVec& a, const RatVec& alpha,
                                const BigInt& N, const FourierOptions& opt);

/// Box-product expansion: e(sum_i {u_i} {v_i}) with the arguments given by
/// exact value tables u_vals[i][n], v_vals[i][m]. Output phases act on the
/// fractional values with half-integer frequency vectors.
struct BoxTerm {
    Cplx coef;
    RatVec freq_u, freq_v;  // entries in (1/2) Z
};
struct BoxExpansion {
    std::vector<BoxTerm> terms;
    double l1_bound = 0;
    double measured_l1_error = 0;
    bool degenerate = false;

    Cplx eval(const RatVec& u, const RatVec& v) const;
};
BoxExpansion expand_box_product(const std::vector<std::vector<Rat>>& u_vals,
                                const std::vector<std::vector<Rat>>& v_vals,
                                const FourierOptions& opt);

}  // namespace hofa
