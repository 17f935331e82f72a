#include "hofa/equidist.hpp"

#include <algorithm>
#include <complex>

#include "hofa/fn_zn.hpp"
#include <map>
#include <stdexcept>

namespace hofa {

namespace {

// Exact phase of the elementary bracket quadratic at n.
Mod1 phase_at(const PolySeq& g, const BigInt& n) {
    Rat s = g.vertical.eval(n);
    for (int i = 0; i < g.d(); ++i)
        s -= g.alpha[i] * Rat(n) * Rat(int_part(g.beta[i] * Rat(n)));
    return Mod1(s);
}

// The omega companion vector: a . {psi h} = omega(psi, {psi h}) for
// a = (-beta, alpha).
RatVec omega_vector(const PolySeq& g) {
    RatVec a(2 * g.d());
    for (int i = 0; i < g.d(); ++i) {
        a[i] = -g.beta[i];
        a[g.d() + i] = g.alpha[i];
    }
    return a;
}

}  // namespace

double mean_correlation(const ElemNilmanifold& m, const PolySeq& g, const BigInt& N) {
    if (m.d != g.d()) throw std::invalid_argument("mean_correlation: dimension mismatch");
    if (!g.is_periodic(N))
        throw std::invalid_argument("mean_correlation: g is not periodic mod N");
    Cplx s = 0;
    for (BigInt n = 0; n < N; ++n) s += phase_at(g, n).unit();
    return std::abs(s) / to_long(N);
}

DichotomyResult run_dichotomy(const ElemNilmanifold& m, const PolySeq& g,
                              const BigInt& N, double delta, const Config& cfg) {
    if (!m.is_standard())
        throw std::invalid_argument("run_dichotomy: needs the standard elementary model");
    DichotomyResult res;
    res.diagnostics.mean = mean_correlation(m, g, N);
    if (res.diagnostics.mean < delta)
        throw std::invalid_argument("run_dichotomy: mean correlation below delta");
    if (N <= cfg.equidist_small_n_cutoff) {
        res.branch = DichotomyResult::Branch::SmallN;
        return res;
    }
    const int d = g.d();
    const long n_long = to_long(N);

    // Reduce to |alpha_i|, |beta_i| <= 1/2 via the exact identity
    // alpha n [beta n] = {alpha} n [{beta} n] + {alpha}[beta] n^2 (mod 1),
    // compensating in the vertical polynomial.
    PolySeq gr;
    gr.alpha.resize(d);
    gr.beta.resize(d);
    Poly adj;
    for (int i = 0; i < d; ++i) {
        gr.alpha[i] = frac(g.alpha[i]);
        gr.beta[i] = frac(g.beta[i]);
        adj = adj + Poly::monomial(gr.alpha[i] * Rat(int_part(g.beta[i])), 2);
    }
    gr.vertical = g.vertical - adj;

    // van der Corput: keep h with |E_n e(phi(n+h) - phi(n))| large.
    double theta = cfg.equidist_vdc_fraction * delta * delta;
    res.diagnostics.vdc_threshold = theta;
    std::vector<Mod1> phi(n_long);
    for (long n = 0; n < n_long; ++n) phi[n] = phase_at(gr, BigInt(n));
    std::vector<long> good;
    res.diagnostics.h_correlations.resize(n_long);
    for (long h = 0; h < n_long; ++h) {
        Cplx s = 0;
        for (long n = 0; n < n_long; ++n)
            s += (phi[(n + h) % n_long] - phi[n]).unit();
        double corr = std::abs(s) / n_long;
        res.diagnostics.h_correlations[h] = corr;
        if (corr >= theta) good.push_back(h);
    }
    res.diagnostics.good_h_density = double(good.size()) / n_long;

    // Exact top coefficient of the differenced phase:
    //   c_h = (2 a2 - sum alpha_i beta_i) h + a . {psi h},
    // the lower-order terms being the catalogued fractional products.
    RatVec a = omega_vector(gr);
    Rat cross;
    for (int i = 0; i < d; ++i) cross += gr.alpha[i] * gr.beta[i];
    Rat gamma_t = Rat(2) * gr.vertical.coeff(2) - cross;
    RatVec psi = gr.horiz();
    auto c_of = [&](long h) {
        Rat v = gamma_t * Rat(h);
        for (int i = 0; i < 2 * d; ++i) v += a[i] * frac(psi[i] * Rat(h));
        return frac(v);
    };

    // Frequency pigeonhole: the largest class of equal c_h (mod 1).
    std::map<Rat, std::vector<long>> classes;
    for (long h : good) classes[c_of(h)].push_back(h);
    if (classes.empty())
        throw std::invalid_argument("run_dichotomy: no usable h after van der Corput");
    Rat best = classes.begin()->first;
    for (const auto& [v, hs] : classes)
        if (hs.size() > classes[best].size()) best = v;
    std::vector<long> H = classes[best];
    res.diagnostics.class_density = double(H.size()) / n_long;

    // Refined bracket polynomial lemma through the affine extension:
    // a~ = (a, 1), alpha~ = (psi, gamma_t), beta = -best.
    RBPLInstance inst;
    inst.N = N;
    inst.d = 2 * d + 1;
    inst.a = a;
    inst.a.push_back(Rat(1));
    inst.alpha = psi;
    inst.alpha.push_back(frac(gamma_t));
    inst.beta = -best;
    inst.K = Rat(0);
    inst.H = H;

    Config solver_cfg = cfg;
    solver_cfg.rbpl_small_n_cutoff = std::min<long>(cfg.rbpl_small_n_cutoff, 10);
    SolveResult sol = solve(inst, solver_cfg);
    if (!sol.ok())
        throw std::runtime_error("run_dichotomy: rbpl solve degenerate: " + sol.reason);
    Certificate cert = extend_affine(*sol.certificate);

    // Unwinding plus the isotropy refinement: add the omega covectors of the
    // w family until the eta kernel is isotropic. Everything stays exact.
    auto covector = [&](const IntVec& w) {
        IntVec j(2 * d);
        for (int i = 0; i < d; ++i) {
            j[i] = -w[d + i];
            j[d + i] = w[i];
        }
        return j;  // j . v = omega(w, v)
    };
    std::vector<IntVec> etas = cert.eta;
    std::vector<IntVec> wfam = cert.w;
    for (int guard = 0; guard <= 2 * d + 1; ++guard) {
        // kernel of the eta family and the isotropy test
        RatMat emat;
        for (const auto& e : etas) {
            RatVec row(2 * d);
            for (int i = 0; i < 2 * d; ++i) row[i] = Rat(e[i]);
            emat.push_back(row);
        }
        std::vector<RatVec> kernel =
            emat.empty() ? [&] {
                std::vector<RatVec> full;
                for (int i = 0; i < 2 * d; ++i) {
                    RatVec e(2 * d);
                    e[i] = Rat(1);
                    full.push_back(e);
                }
                return full;
            }()
                         : nullspace(emat);
        bool isotropic = true;
        for (size_t i = 0; i < kernel.size() && isotropic; ++i)
            for (size_t j = i + 1; j < kernel.size(); ++j)
                if (!omega(m, kernel[i], kernel[j]).is_zero()) {
                    isotropic = false;
                    break;
                }
        if (isotropic) {
            wfam = saturated_basis(kernel);
            break;
        }
        // enlarge the relation family by the omega covectors of the current w
        std::vector<IntVec> pool = etas;
        for (const auto& w : wfam) {
            IntVec jw = covector(w);
            if (dist_circle(dot(jw, psi)).is_zero()) pool.push_back(jw);
        }
        auto keep = independent_subset(pool);
        std::vector<IntVec> next;
        for (int idx : keep) next.push_back(pool[idx]);
        if (next.size() == etas.size())
            throw std::logic_error("run_dichotomy: isotropy refinement stalled");
        etas = next;
        // w family: saturated integer basis of the new kernel
        RatMat emat2;
        for (const auto& e : etas) {
            RatVec row(2 * d);
            for (int i = 0; i < 2 * d; ++i) row[i] = Rat(e[i]);
            emat2.push_back(row);
        }
        wfam = saturated_basis(nullspace(emat2));
    }

    // exact final checks (bug guards)
    for (const auto& e : etas)
        if (!dist_circle(dot(e, psi)).is_zero())
            throw std::logic_error("run_dichotomy: eta relation broken");
    for (const auto& w : wfam) {
        RatVec wr(2 * d);
        for (int i = 0; i < 2 * d; ++i) wr[i] = Rat(w[i]);
        if (!dist_circle(omega(m, wr, psi)).is_zero())
            throw std::logic_error("run_dichotomy: omega relation broken");
    }
    res.branch = DichotomyResult::Branch::Certificate;
    res.w = wfam;
    res.eta = etas;
    res.r = static_cast<int>(wfam.size());
    return res;
}

DichotomyReport verify_dichotomy(const ElemNilmanifold& m, const PolySeq& g,
                                 const BigInt& N, const DichotomyResult& result) {
    DichotomyReport rep;
    if (result.branch != DichotomyResult::Branch::Certificate) {
        rep.detail = "not a certificate branch";
        return rep;
    }
    const int hd = 2 * g.d();
    rep.counts_ok =
        static_cast<int>(result.w.size() + result.eta.size()) == hd &&
        result.r == static_cast<int>(result.w.size());
    rep.independent_ok =
        (result.w.empty() || rank_int(result.w) == static_cast<int>(result.w.size())) &&
        (result.eta.empty() ||
         rank_int(result.eta) == static_cast<int>(result.eta.size()));
    rep.orthogonal_ok = true;
    for (const auto& w : result.w)
        for (const auto& e : result.eta)
            if (dot(w, e) != 0) rep.orthogonal_ok = false;

    RatVec psi = g.horiz();
    rep.eta_norm_ok = true;
    for (const auto& e : result.eta) {
        Poly p = Poly::monomial(dot(e, psi), 1);
        if (!c_infty_norm(p, N).is_zero()) rep.eta_norm_ok = false;
    }
    rep.omega_norm_ok = true;
    for (const auto& w : result.w) {
        RatVec wr(hd);
        for (int i = 0; i < hd; ++i) wr[i] = Rat(w[i]);
        Poly p = Poly::monomial(omega(m, wr, psi), 1);
        if (!c_infty_norm(p, N).is_zero()) rep.omega_norm_ok = false;
    }

    // Isotropy of the common eta kernel.
    RatMat emat;
    for (const auto& e : result.eta) {
        RatVec row(hd);
        for (int i = 0; i < hd; ++i) row[i] = Rat(e[i]);
        emat.push_back(row);
    }
    std::vector<RatVec> kernel;
    if (emat.empty()) {
        for (int i = 0; i < hd; ++i) {
            RatVec e(hd);
            e[i] = Rat(1);
            kernel.push_back(e);
        }
    } else {
        kernel = nullspace(emat);
    }
    rep.isotropy_ok = true;
    for (size_t i = 0; i < kernel.size(); ++i)
        for (size_t j = i + 1; j < kernel.size(); ++j)
            if (!omega(m, kernel[i], kernel[j]).is_zero()) rep.isotropy_ok = false;
    return rep;
}

}  // namespace hofa
