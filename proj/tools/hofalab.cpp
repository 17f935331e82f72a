// Command-line driver: reproducible experiments over the laboratory modules,
// with config files and CSV/JSON outputs.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "hofa/acceptance.hpp"
#include "hofa/additive.hpp"
#include "hofa/equidist.hpp"
#include "hofa/fourier.hpp"
#include "hofa/generators.hpp"
#include "hofa/gowers.hpp"
#include "hofa/rbpl.hpp"
#include "hofa/serialize.hpp"

using namespace hofa;

namespace {

Json load_json(const std::string& path) {
    return Json::parse(read_text(path));
}

RatVec parse_rat_list(const std::string& csv) {
    RatVec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rat::parse(item));
    return out;
}

std::vector<long> parse_long_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

IntPoly parse_int_poly(const std::string& csv) {
    IntPoly p;
    p.coeffs = parse_long_list(csv);
    return p;
}

void emit(const Table& t, const std::string& out, const std::string& format) {
    if (out.empty()) {
        std::cout << (format == "json" ? emit_json(t) : emit_csv(t));
    } else {
        write_table(t, out, format);
    }
}

void emit_json_out(const Json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_text(out, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hofalab: exact bracket-polynomial and equidistribution laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::string config_path, out_path, format = "csv";
    int threads_flag = 0;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--out", out_path, "output file or directory");
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads_flag, "worker cap (HOFA_THREADS fallback)");

    // gowers norm
    auto* gowers_cmd = app.add_subcommand("gowers", "Gowers uniformity norms");
    auto* gnorm = gowers_cmd->add_subcommand("norm", "U^s norm of a function");
    std::string gn_input;
    int gn_s = 2;
    gnorm->add_option("--input", gn_input, "FnZN json file")->required();
    gnorm->add_option("--s", gn_s, "order, 1..4")->check(CLI::Range(1, 4));

    // counting operators
    auto* count_cmd = app.add_subcommand("count", "counting operators");
    std::string cf, cg, ck, cp, cP = "0,1", cQ = "0,2";
    auto add_fn_opts = [&](CLI::App* c, bool need_p) {
        c->add_option("--f", cf)->required();
        c->add_option("--g", cg)->required();
        c->add_option("--k", ck)->required();
        if (need_p) c->add_option("--p", cp)->required();
        c->add_option("--P", cP, "integer polynomial coefficients c0,c1,...");
        c->add_option("--Q", cQ, "integer polynomial coefficients c0,c1,...");
    };
    auto* clambda = count_cmd->add_subcommand("lambda", "Lambda(f,g,k,p; P,Q)");
    add_fn_opts(clambda, true);
    auto* clambda1 = count_cmd->add_subcommand("lambda1", "Lambda^1(f,g,k,p)");
    add_fn_opts(clambda1, true);
    auto* cdual = count_cmd->add_subcommand("dual", "dual function D(f,g,k)");
    add_fn_opts(cdual, false);
    auto* cgap = count_cmd->add_subcommand(
        "gap", "|Lambda - Lambda^1| against N for structured inputs (experiment)");
    long gap_max_n = 61;
    cgap->add_option("--max-n", gap_max_n);
    cgap->add_option("--P", cP);
    cgap->add_option("--Q", cQ);

    // rbpl
    auto* rbpl_cmd = app.add_subcommand("rbpl", "refined bracket polynomial lemma");
    auto* rsolve = rbpl_cmd->add_subcommand("solve", "run the iteration");
    std::string r_instance, r_cert;
    rsolve->add_option("--instance", r_instance, "instance json")->required();
    auto* rverify = rbpl_cmd->add_subcommand("verify", "verify a certificate");
    rverify->add_option("--instance", r_instance)->required();
    rverify->add_option("--certificate", r_cert)->required();
    auto* roracle = rbpl_cmd->add_subcommand("oracle", "brute-force ground truth");
    long r_height = 6;
    std::string r_thresh = "0";
    roracle->add_option("--instance", r_instance)->required();
    roracle->add_option("--height", r_height, "sup-norm bound");
    roracle->add_option("--w-threshold", r_thresh, "|w.a| bound, exact rational");
    auto* rplant = rbpl_cmd->add_subcommand("plant", "generate a planted instance");
    int r_d = 3;
    long r_n = 31;
    std::uint64_t r_seed = 1;
    rplant->add_option("--d", r_d);
    rplant->add_option("--N", r_n);
    rplant->add_option("--seed", r_seed);

    // equidist
    auto* eq_cmd = app.add_subcommand("equidist", "equidistribution dichotomy");
    auto* eq_run = eq_cmd->add_subcommand("run", "run the pipeline");
    std::string eq_instance;
    double eq_delta = 0.1;
    eq_run->add_option("--instance", eq_instance, "instance json {N, g}")->required();
    eq_run->add_option("--delta", eq_delta);
    auto* eq_plant = eq_cmd->add_subcommand("plant", "generate a planted instance");
    int eq_d = 2;
    long eq_n = 101;
    std::uint64_t eq_seed = 1;
    eq_plant->add_option("--d", eq_d);
    eq_plant->add_option("--N", eq_n);
    eq_plant->add_option("--seed", eq_seed);

    // fourier
    auto* fourier_cmd = app.add_subcommand("fourier", "periodic Fourier expansions");
    auto* fexp = fourier_cmd->add_subcommand("expand", "expand a product of fracs");
    std::string f_alpha = "1/31", f_beta = "2/31";
    long f_k = 1, f_n = 31;
    double f_delta = 0.05;
    fexp->add_option("--alpha", f_alpha);
    fexp->add_option("--beta", f_beta);
    fexp->add_option("--k", f_k);
    fexp->add_option("--N", f_n);
    fexp->add_option("--delta", f_delta);

    // bohr
    auto* bohr_cmd = app.add_subcommand("bohr", "Bohr sets");
    auto* bbuild = bohr_cmd->add_subcommand("build", "membership of B(S, rho)");
    std::string b_freqs, b_rho = "1/10";
    long b_n = 101;
    bbuild->add_option("--freqs", b_freqs, "comma list of rationals")->required();
    bbuild->add_option("--rho", b_rho);
    bbuild->add_option("--N", b_n);
    auto* bregular = bohr_cmd->add_subcommand("regular", "regular radius search");
    bregular->add_option("--freqs", b_freqs)->required();
    bregular->add_option("--rho", b_rho);
    bregular->add_option("--N", b_n);

    // energy
    auto* energy_cmd = app.add_subcommand("energy", "additive energies");
    std::string e_a, e_b, e_a3, e_a4;
    long e_n = 101;
    energy_cmd->add_option("--a", e_a, "comma list of residues")->required();
    energy_cmd->add_option("--b", e_b, "second set (defaults to a)");
    energy_cmd->add_option("--a3", e_a3, "third set (four-set energy)");
    energy_cmd->add_option("--a4", e_a4, "fourth set (four-set energy)");
    energy_cmd->add_option("--N", e_n);

    // quadruples
    auto* quad_cmd = app.add_subcommand("quadruples", "additive quadruple counting");
    long q_n = 31;
    double q_eta = 0.5, q_delta = 0.5;
    std::uint64_t q_seed = 1;
    quad_cmd->add_option("--N", q_n);
    quad_cmd->add_option("--eta", q_eta, "target density of H");
    quad_cmd->add_option("--delta", q_delta);
    quad_cmd->add_option("--seed", q_seed);
    std::string q_csv;
    quad_cmd->add_option("--csv-correlations", q_csv,
                         "write per-quadruple correlations to this csv");

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Config cfg;
        if (!config_path.empty()) cfg = Config::load(config_path);
        if (threads_flag > 0) cfg.threads = threads_flag;
        int threads = effective_threads(cfg.threads);

        if (gnorm->parsed()) {
            FnZN f = fnzn_from_json(load_json(gn_input));
            double v = gowers_norm(f, gn_s, threads);
            if (out_path.empty()) {
                std::printf("%s\n", format_double(v).c_str());
            } else {
                Table t;
                t.header = {"s", "norm"};
                t.rows.push_back({std::to_string(gn_s), format_double(v)});
                write_table(t, out_path, format);
            }
            return 0;
        }
        if (clambda->parsed() || clambda1->parsed() || cdual->parsed()) {
            FnZN f = fnzn_from_json(load_json(cf));
            FnZN g = fnzn_from_json(load_json(cg));
            FnZN k = fnzn_from_json(load_json(ck));
            IntPoly P = parse_int_poly(cP), Q = parse_int_poly(cQ);
            if (cdual->parsed()) {
                FnZN d = dual_D(f, g, k, P, Q);
                emit_json_out(to_json(d), out_path);
                return 0;
            }
            FnZN p = fnzn_from_json(load_json(cp));
            Cplx v = clambda->parsed() ? lambda(f, g, k, p, P, Q) : lambda1(f, g, k, p);
            if (out_path.empty()) {
                std::printf("%s %s\n", format_double(v.real()).c_str(),
                            format_double(v.imag()).c_str());
            } else {
                Table t;
                t.header = {"re", "im"};
                t.rows.push_back({format_double(v.real()), format_double(v.imag())});
                write_table(t, out_path, format);
            }
            return 0;
        }
        if (cgap->parsed()) {
            // no pass/fail claim: the Lambda vs Lambda^1 identity is
            // asymptotic; this tabulates the gap on interval indicators
            IntPoly P = parse_int_poly(cP), Q = parse_int_poly(cQ);
            Table t;
            t.header = {"N", "lambda_re", "lambda1_re", "gap"};
            for (long n = 5; n <= gap_max_n; ++n) {
                bool prime = n > 1;
                for (long p = 2; p * p <= n; ++p)
                    if (n % p == 0) prime = false;
                if (!prime) continue;
                std::vector<long> interval;
                for (long x = 0; x < n / 3; ++x) interval.push_back(x);
                FnZN ind = FnZN::indicator(n, interval);
                Cplx l = lambda(ind, ind, ind, ind, P, Q);
                Cplx l1 = lambda1(ind, ind, ind, ind);
                t.rows.push_back({std::to_string(n), format_double(l.real()),
                                  format_double(l1.real()),
                                  format_double(std::abs(l - l1))});
            }
            emit(t, out_path, format);
            return 0;
        }
        if (rsolve->parsed()) {
            RBPLInstance inst = rbpl_instance_from_json(load_json(r_instance));
            SolveResult sol = solve(inst, cfg);
            Json j;
            j["degenerate"] = sol.degenerate;
            if (sol.degenerate) j["reason"] = sol.reason;
            if (sol.ok()) {
                j["certificate"] = to_json(*sol.certificate);
                auto rep = verify(inst, *sol.certificate);
                j["pass_exact"] = rep.pass_exact();
            }
            emit_json_out(j, out_path);
            return sol.ok() ? 0 : 1;
        }
        if (rverify->parsed()) {
            RBPLInstance inst = rbpl_instance_from_json(load_json(r_instance));
            Certificate cert = certificate_from_json(load_json(r_cert));
            auto rep = verify(inst, cert);
            Json j;
            j["counts_ok"] = rep.counts_ok;
            j["independent_ok"] = rep.independent_ok;
            j["orthogonal_ok"] = rep.orthogonal_ok;
            j["eta_exact_ok"] = rep.eta_exact_ok;
            Json wabs = Json::array(), wdist = Json::array(), edist = Json::array();
            for (const auto& v : rep.w_abs) wabs.push_back(v.str());
            for (const auto& v : rep.w_dist) wdist.push_back(v.str());
            for (const auto& v : rep.eta_dist) edist.push_back(v.str());
            j["w_abs"] = wabs;
            j["w_dist"] = wdist;
            j["eta_dist"] = edist;
            j["max_entry"] = rep.max_entry.get_str();
            j["pass_exact"] = rep.pass_exact();
            emit_json_out(j, out_path);
            return rep.pass_exact() ? 0 : 1;
        }
        if (roracle->parsed()) {
            RBPLInstance inst = rbpl_instance_from_json(load_json(r_instance));
            auto cert = brute_force(inst, r_height, Rat::parse(r_thresh));
            Json j;
            j["found"] = cert.has_value();
            if (cert) j["certificate"] = to_json(*cert);
            emit_json_out(j, out_path);
            return 0;
        }
        if (rplant->parsed()) {
            Rng rng(r_seed);
            PlantedRBPL plant = plant_rbpl(rng, r_d, BigInt(r_n));
            emit_json_out(to_json(plant.instance), out_path);
            return 0;
        }
        if (eq_run->parsed()) {
            Json inst = load_json(eq_instance);
            BigInt N(inst.at("N").get<std::string>());
            PolySeq g = polyseq_from_json(inst.at("g"));
            ElemNilmanifold m = ElemNilmanifold::standard(g.d());
            DichotomyResult res = run_dichotomy(m, g, N, eq_delta, cfg);
            auto rep = verify_dichotomy(m, g, N, res);
            Json j = to_json(res);
            j["verified"] = rep.pass();
            if (out_path.empty()) {
                emit_json_out(j, "");
            } else {
                emit_json_out(j, out_path + "/certificate.json");
                Table t;
                t.header = {"h", "correlation"};
                for (size_t h = 0; h < res.diagnostics.h_correlations.size(); ++h)
                    t.rows.push_back({std::to_string(h),
                                      format_double(res.diagnostics.h_correlations[h])});
                write_table(t, out_path + "/h_correlations.csv", "csv");
            }
            return rep.pass() || res.branch == DichotomyResult::Branch::SmallN ? 0 : 1;
        }
        if (eq_plant->parsed()) {
            Rng rng(eq_seed);
            PolySeq g = plant_dichotomy(rng, eq_d, BigInt(eq_n));
            Json j;
            j["N"] = std::to_string(eq_n);
            j["g"] = to_json(g);
            emit_json_out(j, out_path);
            return 0;
        }
        if (fexp->parsed()) {
            FourierOptions opt;
            opt.delta = f_delta;
            std::vector<BracketTerm> prods{BracketTerm::frac_prod(
                Rat(f_k), Rat::parse(f_alpha), Rat::parse(f_beta))};
            auto e = expand_frac_product(prods, BigInt(f_n), opt);
            Table t = expansion_table(e);
            emit(t, out_path, format);
            std::fprintf(stderr, "l1_bound=%s measured_error=%s degenerate=%d\n",
                         format_double(e.l1_bound).c_str(),
                         format_double(e.measured_l1_error).c_str(), e.degenerate);
            return 0;
        }
        if (bbuild->parsed() || bregular->parsed()) {
            RatVec freqs = parse_rat_list(b_freqs);
            Rat rho = Rat::parse(b_rho);
            if (bbuild->parsed()) {
                auto b = bohr_build(freqs, rho, BigInt(b_n));
                Table t;
                t.header = {"member"};
                for (long m : b.members) t.rows.push_back({std::to_string(m)});
                emit(t, out_path, format);
                return 0;
            }
            auto rr = find_regular_radius(freqs, rho, BigInt(b_n),
                                          cfg.bohr_regular_grid_points,
                                          cfg.bohr_regular_candidates);
            Json j;
            j["found"] = rr.found;
            j["rho"] = rr.rho.str();
            j["violations"] = rr.violations;
            emit_json_out(j, out_path);
            return rr.found ? 0 : 1;
        }
        if (energy_cmd->parsed()) {
            auto a = parse_long_list(e_a);
            BigInt N(e_n);
            Json j;
            if (!e_a3.empty() && !e_a4.empty()) {
                auto b = e_b.empty() ? a : parse_long_list(e_b);
                j["energy4"] =
                    energy4(a, b, parse_long_list(e_a3), parse_long_list(e_a4), N).str();
            } else if (!e_b.empty()) {
                j["energy"] = energy(a, parse_long_list(e_b), N).str();
            } else {
                j["energy"] = energy(a, N).str();
            }
            emit_json_out(j, out_path);
            return 0;
        }
        if (quad_cmd->parsed()) {
            Rng rng(q_seed);
            BigInt N(q_n);
            auto fam = plant_chi_family(rng, N, q_eta);
            double eta = double(fam.H.size()) / q_n;
            double inner = std::pow(eta, 4) * q_delta * q_delta;
            Table corr;
            corr.header = {"h1", "h2", "h3", "h4", "correlation"};
            std::function<void(long, long, long, long, double)> on_quad;
            if (!q_csv.empty())
                on_quad = [&](long h1, long h2, long h3, long h4, double c) {
                    corr.rows.push_back({std::to_string(h1), std::to_string(h2),
                                         std::to_string(h3), std::to_string(h4),
                                         format_double(c)});
                };
            auto qc = additive_quadruple_count(
                fam.H, [&](long h) -> const FnZN& { return fam.chi[h]; }, q_delta,
                inner, N, &fam.f1, &fam.f2, threads, on_quad);
            if (!q_csv.empty()) write_table(corr, q_csv, "csv");
            Json j;
            j["count"] = qc.count;
            j["additive_total"] = qc.additive_total;
            j["bound"] = qc.bound.str();
            j["threshold_pass"] = qc.threshold_pass;
            j["hypothesis_verified"] = qc.hypothesis_verified;
            emit_json_out(j, out_path);
            return 0;
        }
        if (selftest_cmd->parsed()) {
            std::string dir = out_path.empty() ? "selftest_out" : out_path;
            auto results = run_acceptance(cfg, dir, true);
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }
        std::fprintf(stderr, "no action selected\n");
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
