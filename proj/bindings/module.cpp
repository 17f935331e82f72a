// Python bindings for the main laboratory operations. Exact rationals cross
// the boundary as "p/q" strings; structured objects as their canonical JSON.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hofa/acceptance.hpp"
#include "hofa/additive.hpp"
#include "hofa/brackets.hpp"
#include "hofa/equidist.hpp"
#include "hofa/fourier.hpp"
#include "hofa/generators.hpp"
#include "hofa/gowers.hpp"
#include "hofa/nilmanifold.hpp"
#include "hofa/rbpl.hpp"
#include "hofa/serialize.hpp"

namespace py = pybind11;
using namespace hofa;

namespace {

RatVec rats(const std::vector<std::string>& xs) {
    RatVec out;
    for (const auto& s : xs) out.push_back(Rat::parse(s));
    return out;
}

FnZN fn_of(const std::vector<Cplx>& values) {
    FnZN f;
    f.n = static_cast<long>(values.size());
    f.values = values;
    return f;
}

PolySeq polyseq_of(const std::string& json) {
    return polyseq_from_json(Json::parse(json));
}

}  // namespace

PYBIND11_MODULE(_hofalab, m) {
    m.doc() = "exact bracket-polynomial and equidistribution laboratory";

    // ratmod
    m.def("frac", [](const std::string& x) { return frac(Rat::parse(x)).str(); },
          "signed fractional part in (-1/2, 1/2]");
    m.def("int_part",
          [](const std::string& x) { return int_part(Rat::parse(x)).get_str(); });
    m.def("dist_circle",
          [](const std::string& x) { return dist_circle(Rat::parse(x)).str(); });
    m.def("c_infty_norm", [](const std::vector<std::string>& coeffs, long n) {
        return c_infty_norm(Poly(rats(coeffs)), BigInt(n)).str();
    });

    // brackets
    m.def("eval_bracket_expr", [](const std::string& expr_json, long n) {
        BracketExpr e = bracket_expr_from_json(Json::parse(expr_json));
        return eval_mod1(e, BigInt(n)).value().str();
    });
    m.def("is_periodic_phase", [](const std::string& expr_json, long n) {
        BracketExpr e = bracket_expr_from_json(Json::parse(expr_json));
        return is_periodic_phase(e, BigInt(n));
    });
    m.def("eval_trilinear",
          [](int d, const std::vector<std::string>& alpha,
             const std::vector<std::string>& beta, const std::vector<std::string>& gamma,
             const std::vector<std::string>& alpha_p,
             const std::vector<std::string>& beta_p, long x, long y, long z) {
              TrilinearT t;
              t.d = d;
              t.alpha = rats(alpha);
              t.beta = rats(beta);
              t.gamma = rats(gamma);
              t.alpha_p = rats(alpha_p);
              t.beta_p = rats(beta_p);
              return eval_T(t, BigInt(x), BigInt(y), BigInt(z)).value().str();
          });

    // nilmanifold
    m.def("nilseq_phase", [](const std::string& polyseq_json, long n) {
        PolySeq g = polyseq_of(polyseq_json);
        return nilseq_phase(ElemNilmanifold::standard(g.d()), g, BigInt(n))
            .value()
            .str();
    });
    m.def("eval_nilsequence", [](const std::string& polyseq_json, long n) {
        PolySeq g = polyseq_of(polyseq_json);
        return eval_nilsequence(ElemNilmanifold::standard(g.d()), g, BigInt(n));
    });
    m.def("omega", [](const std::vector<std::string>& u1,
                      const std::vector<std::string>& u2) {
        int d = static_cast<int>(u1.size()) / 2;
        return omega(ElemNilmanifold::standard(d), rats(u1), rats(u2)).str();
    });

    // gowers / counting
    m.def("gowers_norm", [](const std::vector<Cplx>& values, int s) {
        return gowers_norm(fn_of(values), s, 1);
    });
    m.def("lambda_count",
          [](const std::vector<Cplx>& f, const std::vector<Cplx>& g,
             const std::vector<Cplx>& k, const std::vector<Cplx>& p,
             const std::vector<long>& pc, const std::vector<long>& qc) {
              IntPoly P{pc}, Q{qc};
              return lambda(fn_of(f), fn_of(g), fn_of(k), fn_of(p), P, Q);
          });
    m.def("lambda1_count", [](const std::vector<Cplx>& f, const std::vector<Cplx>& g,
                              const std::vector<Cplx>& k, const std::vector<Cplx>& p) {
        return lambda1(fn_of(f), fn_of(g), fn_of(k), fn_of(p));
    });
    m.def("dual_function",
          [](const std::vector<Cplx>& f, const std::vector<Cplx>& g,
             const std::vector<Cplx>& k, const std::vector<long>& pc,
             const std::vector<long>& qc) {
              IntPoly P{pc}, Q{qc};
              return dual_D(fn_of(f), fn_of(g), fn_of(k), P, Q).values;
          });

    // additive
    m.def("bohr_build", [](const std::vector<std::string>& freqs,
                           const std::string& rho, long n) {
        return bohr_build(rats(freqs), Rat::parse(rho), BigInt(n)).members;
    });
    m.def("find_regular_radius", [](const std::vector<std::string>& freqs,
                                    const std::string& rho, long n) {
        auto r = find_regular_radius(rats(freqs), Rat::parse(rho), BigInt(n));
        return py::make_tuple(r.found, r.rho.str());
    });
    m.def("energy", [](const std::vector<long>& a, long n) {
        return energy(a, BigInt(n)).str();
    });
    m.def("energy4", [](const std::vector<long>& a1, const std::vector<long>& a2,
                        const std::vector<long>& a3, const std::vector<long>& a4,
                        long n) { return energy4(a1, a2, a3, a4, BigInt(n)).str(); });

    // fourier
    m.def("expand_frac_product",
          [](const std::string& k, const std::string& alpha, const std::string& beta,
             long n, double delta) {
              FourierOptions opt;
              opt.delta = delta;
              std::vector<BracketTerm> prods{BracketTerm::frac_prod(
                  Rat::parse(k), Rat::parse(alpha), Rat::parse(beta))};
              auto e = expand_frac_product(prods, BigInt(n), opt);
              std::vector<py::tuple> terms;
              for (const auto& t : e.terms)
                  terms.push_back(py::make_tuple(t.coef, t.freq_n.str()));
              return py::make_tuple(terms, e.measured_l1_error, e.degenerate);
          });

    // rbpl
    m.def("rbpl_solve", [](const std::string& instance_json) {
        Config cfg;
        RBPLInstance inst = rbpl_instance_from_json(Json::parse(instance_json));
        SolveResult sol = solve(inst, cfg);
        Json j;
        j["degenerate"] = sol.degenerate;
        if (sol.degenerate) j["reason"] = sol.reason;
        if (sol.ok()) j["certificate"] = to_json(*sol.certificate);
        return j.dump();
    });
    m.def("rbpl_verify", [](const std::string& instance_json,
                            const std::string& cert_json) {
        RBPLInstance inst = rbpl_instance_from_json(Json::parse(instance_json));
        Certificate cert = certificate_from_json(Json::parse(cert_json));
        return verify(inst, cert).pass_exact();
    });
    m.def("rbpl_brute_force",
          [](const std::string& instance_json, long height, const std::string& thresh) {
              RBPLInstance inst = rbpl_instance_from_json(Json::parse(instance_json));
              auto cert = brute_force(inst, height, Rat::parse(thresh));
              if (!cert) return std::string("null");
              return to_json(*cert).dump();
          });
    m.def("rbpl_plant", [](int d, long n, std::uint64_t seed) {
        Rng rng(seed);
        return to_json(plant_rbpl(rng, d, BigInt(n)).instance).dump();
    });

    // equidist
    m.def("run_dichotomy", [](const std::string& polyseq_json, long n, double delta) {
        Config cfg;
        PolySeq g = polyseq_of(polyseq_json);
        ElemNilmanifold mfd = ElemNilmanifold::standard(g.d());
        DichotomyResult res = run_dichotomy(mfd, g, BigInt(n), delta, cfg);
        Json j = to_json(res);
        j["verified"] = verify_dichotomy(mfd, g, BigInt(n), res).pass();
        return j.dump();
    });
    m.def("mean_correlation", [](const std::string& polyseq_json, long n) {
        PolySeq g = polyseq_of(polyseq_json);
        return mean_correlation(ElemNilmanifold::standard(g.d()), g, BigInt(n));
    });
    m.def("plant_dichotomy", [](int d, long n, std::uint64_t seed) {
        Rng rng(seed);
        return to_json(plant_dichotomy(rng, d, BigInt(n))).dump();
    });

    // acceptance
    m.def("run_acceptance", [](const std::string& outdir, std::uint64_t seed) {
        Config cfg;
        cfg.seed = seed;
        auto results = run_acceptance(cfg, outdir, false);
        std::vector<py::tuple> out;
        for (const auto& r : results)
            out.push_back(py::make_tuple(r.id, r.name, r.pass, r.detail));
        return out;
    });
}
