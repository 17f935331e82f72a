#include "hofa/rbpl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hofa {

namespace {

RatVec frac_vec(const RatVec& alpha, const BigInt& h) {
    RatVec v(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) v[i] = frac(alpha[i] * Rat(h));
    return v;
}

Rat sup_norm(const RatVec& v) {
    Rat m;
    for (const auto& x : v)
        if (x.abs() > m) m = x.abs();
    return m;
}

BigInt sup_norm(const IntVec& v) {
    BigInt m = 0;
    for (const auto& x : v)
        if (cmp(abs(x), m) > 0) m = abs(x);
    return m;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// squared distance from v to the line R.a
Rat line_dist_sq(const IntVec& v, const RatVec& a) {
    Rat aa = dot(a, a);
    if (aa.is_zero()) {
        Rat vv;
        for (const auto& x : v) vv += Rat(x) * Rat(x);
        return vv;
    }
    Rat va = dot(v, a);
    Rat vv;
    for (const auto& x : v) vv += Rat(x) * Rat(x);
    return vv - va * va / aa;
}

}  // namespace

Rat RBPLInstance::m_bound() const {
    Rat m(1);
    Rat s = sup_norm(a);
    return s > m ? s : m;
}

void RBPLInstance::validate() const {
    if (static_cast<int>(a.size()) != d || static_cast<int>(alpha.size()) != d)
        throw std::invalid_argument("RBPLInstance: dimension mismatch");
    if (mpz_probab_prime_p(N.get_mpz_t(), 25) == 0)
        throw std::invalid_argument("RBPLInstance: N must be prime");
    for (const auto& al : alpha)
        if (!(al * Rat(N)).is_integer())
            throw std::invalid_argument("RBPLInstance: alpha denominator must divide N");
    Rat bound = K / Rat(N);
    for (long h : H) {
        Rat v = beta + dot(a, frac_vec(alpha, BigInt(h)));
        if (dist_circle(v) > bound)
            throw std::invalid_argument("RBPLInstance: hypothesis fails at h = " +
                                        std::to_string(h));
    }
}

bool VerifyReport::pass_exact() const {
    if (!structure_ok() || !eta_exact_ok) return false;
    for (const auto& v : w_dist)
        if (!v.is_zero()) return false;
    return true;
}

bool VerifyReport::pass_abs(const Rat& bound) const {
    if (!structure_ok() || !eta_exact_ok) return false;
    for (const auto& v : w_abs)
        if (v > bound) return false;
    return true;
}

VerifyReport verify(const RBPLInstance& inst, const Certificate& cert) {
    VerifyReport rep;
    rep.counts_ok = (cert.r() + static_cast<int>(cert.eta.size()) == inst.d);
    std::vector<IntVec> all = cert.w;
    all.insert(all.end(), cert.eta.begin(), cert.eta.end());
    rep.max_entry = 0;
    for (const auto& v : all)
        if (cmp(sup_norm(v), rep.max_entry) > 0) rep.max_entry = sup_norm(v);
    rep.independent_ok =
        (cert.w.empty() || rank_int(cert.w) == static_cast<int>(cert.w.size())) &&
        (cert.eta.empty() || rank_int(cert.eta) == static_cast<int>(cert.eta.size()));
    rep.orthogonal_ok = true;
    for (const auto& w : cert.w)
        for (const auto& e : cert.eta)
            if (dot(w, e) != 0) rep.orthogonal_ok = false;
    rep.eta_exact_ok = true;
    for (const auto& e : cert.eta) {
        Rat dcirc = dist_circle(dot(e, inst.alpha));
        rep.eta_dist.push_back(dcirc);
        if (!dcirc.is_zero()) rep.eta_exact_ok = false;
    }
    for (const auto& w : cert.w) {
        Rat v = dot(w, inst.a);
        rep.w_abs.push_back(v.abs());
        rep.w_dist.push_back(dist_circle(v));
    }
    return rep;
}

namespace {

// Odometer over [-box, box]^d; returns false after the last tuple.
bool next_in_box(IntVec& v, long box) {
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i] < box) {
            v[i] += 1;
            for (size_t j = i + 1; j < v.size(); ++j) v[j] = -box;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<IntVec> tube_vector(const RatVec& a, const Rat& width, const Rat& length) {
    if (sup_norm(a).is_zero()) throw std::invalid_argument("tube_vector: a must be nonzero");
    size_t d = a.size();
    long box = to_long(floor_int(length));
    Rat w2 = width * width, l2 = length * length;
    // shells of increasing sup-norm; lexicographic within a shell
    for (long s = 1; s <= box; ++s) {
        IntVec v(d, -s);
        do {
            if (sup_norm(v) != s) continue;
            Rat vv;
            for (const auto& x : v) vv += Rat(x) * Rat(x);
            if (vv <= l2 && line_dist_sq(v, a) <= w2) return v;
        } while (next_in_box(v, s));
    }
    // An empty tube with the volume condition satisfied contradicts the
    // first theorem of the geometry of numbers: internal error, not "none".
    // The tube contains the symmetric convex cylinder of half-length L - w
    // and radius w; its volume is 2(L - w) * V_{d-1}(w).
    double L = length.to_double(), w = width.to_double();
    if (L > w && d >= 1) {
        double k = double(d - 1);
        double ball_log = (k / 2) * std::log(M_PI) + k * std::log(w) -
                          std::lgamma(k / 2 + 1);
        double vol = 2 * (L - w) * std::exp(ball_log);
        if (vol > std::pow(2.0, double(d)) * 1.0000001)
            throw std::logic_error(
                "tube_vector: volume condition held but no point found");
    }
    return std::nullopt;
}

namespace {

// Basis of { eta integral : eta . alpha = 0 (mod 1), eta_i = 0 for i used }.
std::vector<IntVec> relation_lattice(const RatVec& alpha, const BigInt& N,
                                     const std::vector<bool>& used) {
    size_t d = alpha.size();
    std::vector<IntVec> rows;
    IntVec row(d + 1);
    for (size_t i = 0; i < d; ++i) {
        Rat s = alpha[i] * Rat(N);
        row[i] = s.num();  // integer by instance invariant
    }
    row[d] = N;
    rows.push_back(row);
    for (size_t i = 0; i < d; ++i) {
        if (!used[i]) continue;
        IntVec e(d + 1, 0);
        e[i] = 1;
        rows.push_back(e);
    }
    auto kern = integer_kernel(rows);
    std::vector<IntVec> out;
    for (auto& v : kern) {
        IntVec p(v.begin(), v.begin() + d);
        if (sup_norm(p) != 0) out.push_back(std::move(p));
    }
    return out;
}

struct IntVecLess {
    bool operator()(const IntVec& a, const IntVec& b) const {
        BigInt sa = sup_norm(a), sb = sup_norm(b);
        if (sa != sb) return sa < sb;
        return lex_less(a, b);
    }
};

}  // namespace

namespace {

struct SolveState {
    RatVec avec;
    Rat beta;
    std::vector<long> H;
    std::vector<bool> used;
    std::vector<IntVec> etas;
    std::map<int, IntVec> ws;
    std::vector<SolveStep> steps;
};

struct SolveSearch {
    const RBPLInstance& inst;
    const Config& cfg;
    long nodes = 0;
    Rat pow3d;
    Rat m_bound;

    SolveSearch(const RBPLInstance& i, const Config& c)
        : inst(i), cfg(c), pow3d(pow(Rat(3), i.d)), m_bound(i.m_bound()) {}

    std::optional<Certificate> run(SolveState& st, std::string& fail_reason) {
        const int d = inst.d;
        if (++nodes > 4 * cfg.rbpl_max_iterations * std::max(1, d)) {
            fail_reason = "search node budget exhausted";
            return std::nullopt;
        }
        if (st.H.empty()) {
            fail_reason = "empty h-set";
            return std::nullopt;
        }

        // Step 1: pigeonhole. With an exact hypothesis (every value integral
        // mod 1) the whole set is kept: the mod-1 relations hold across the
        // levels and only those drive the iteration. Otherwise keep the
        // largest level class and recenter beta.
        std::map<long, Rat> values;
        bool all_exact = true;
        for (long h : st.H) {
            Rat v = st.beta + dot(st.avec, frac_vec(inst.alpha, BigInt(h)));
            values[h] = v;
            if (!dist_circle(v).is_zero()) all_exact = false;
        }
        Rat k_meas;
        if (!all_exact) {
            std::map<BigInt, std::vector<long>> by_level;
            for (long h : st.H) by_level[int_part(values[h])].push_back(h);
            BigInt best_level = by_level.begin()->first;
            for (const auto& [lvl, cls] : by_level)
                if (cls.size() > by_level[best_level].size()) best_level = lvl;
            std::vector<long> cls = by_level[best_level];
            st.beta -= Rat(best_level);
            std::map<Rat, std::vector<long>, std::less<Rat>> by_value;
            for (long h : cls) by_value[values[h] - Rat(best_level)].push_back(h);
            if (by_value.size() > 1 && by_value.size() <= 16) {
                Rat best_v = by_value.begin()->first;
                for (const auto& [v, c] : by_value)
                    if (c.size() > by_value[best_v].size()) best_v = v;
                cls = by_value[best_v];
                st.beta -= best_v;
            }
            st.H = cls;
            for (long h : st.H) {
                Rat dcirc =
                    dist_circle(st.beta + dot(st.avec, frac_vec(inst.alpha, BigInt(h))));
                if (dcirc > k_meas) k_meas = dcirc;
            }
        }
        k_meas *= Rat(inst.N);
        Rat delta_j(static_cast<long>(st.H.size()), to_long(inst.N));
        if (delta_j.to_double() < cfg.rbpl_min_class_density) {
            fail_reason = "class density below the configured floor";
            return std::nullopt;
        }

        // Step 2: terminate when tau_j ||a||_inf <= K_j / N.
        Rat width = delta_j / (pow3d * m_bound * Rat(2 * d));
        Rat tau = pow(width, 4 * static_cast<unsigned long>(d));
        if (tau * sup_norm(st.avec) <= k_meas / Rat(inst.N) ||
            static_cast<int>(st.etas.size()) >= d) {
            Certificate cert;
            cert.d = d;
            for (const auto& [i, w] : st.ws) cert.w.push_back(w);
            cert.eta = st.etas;
            auto rep = verify(inst, cert);
            if (!rep.structure_ok() || !rep.eta_exact_ok)
                throw std::logic_error("rbpl::solve produced an invalid certificate");
            return cert;
        }
        if (st.H.size() < 2) {
            fail_reason = "pigeonhole class too small to continue";
            return std::nullopt;
        }

        // Step 3: candidate relation vectors for the current direction:
        // small elements of the relation lattice restricted to the unused
        // coordinates (basis vectors, sparse combinations, multiples of the
        // primitive a-direction), deterministically ordered.
        std::set<IntVec, IntVecLess> pool;
        auto basis = relation_lattice(inst.alpha, inst.N, st.used);
        auto add_candidate = [&](const IntVec& v) {
            if (sup_norm(v) == 0) return;
            if (cmp(sup_norm(v), BigInt(cfg.rbpl_search_box_limit)) > 0) return;
            pool.insert(v);
            IntVec neg(v.size());
            for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
            pool.insert(neg);
        };
        for (const auto& b : basis) add_candidate(b);
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j)
                for (long ci = -2; ci <= 2; ++ci)
                    for (long cj = -2; cj <= 2; ++cj) {
                        if (ci == 0 && cj == 0) continue;
                        IntVec v(d, 0);
                        for (int t = 0; t < d; ++t)
                            v[t] = ci * basis[i][t] + cj * basis[j][t];
                        add_candidate(v);
                    }
        {
            BigInt l = lcm_of_denominators(st.avec);
            IntVec dir(d);
            for (int i = 0; i < d; ++i)
                dir[i] = BigInt(st.avec[i].num() * (l / st.avec[i].den()));
            dir = primitive(dir);
            if (sup_norm(dir) != 0)
                for (long m = 1; m <= 64; ++m) {
                    IntVec v(d);
                    for (int i = 0; i < d; ++i) v[i] = m * dir[i];
                    add_candidate(v);
                }
        }

        struct Choice {
            IntVec eta;
            int pivot;
            BigInt q;
            bool in_tube;
            bool keeps_exact;
            Rat next_norm;
            RatVec next;
        };
        std::vector<Choice> choices;
        Rat w2 = width * width;
        long nn = to_long(inst.N);
        for (const auto& cand : pool) {
            bool zero_on_used = true;
            for (int i = 0; i < d; ++i)
                if (st.used[i] && cand[i] != 0) zero_on_used = false;
            if (!zero_on_used) continue;
            if (!dist_circle(dot(cand, inst.alpha)).is_zero()) continue;
            int pivot = -1;
            for (int i = 0; i < d; ++i)
                if (cand[i] != 0) {
                    pivot = i;
                    break;
                }
            BigInt q = cand[pivot];
            if (mpz_divisible_p(q.get_mpz_t(), inst.N.get_mpz_t())) continue;
            RatVec next(d);
            for (int i = 0; i < d; ++i)
                next[i] = Rat(q) * st.avec[i] - st.avec[pivot] * Rat(cand[i]);
            // Measured-K control: does this step keep the substituted values
            // constant mod 1? (Exact instances stay exact.)
            bool keeps = true;
            {
                long qm = to_long(((q % inst.N) + inst.N) % inst.N);
                long qinv = 1, base = qm, e = nn - 2;
                while (e) {
                    if (e & 1) qinv = static_cast<long>((__int128)qinv * base % nn);
                    base = static_cast<long>((__int128)base * base % nn);
                    e >>= 1;
                }
                std::optional<Mod1> ref;
                for (long h : st.H) {
                    long k = static_cast<long>((__int128)qinv * h % nn);
                    Mod1 v(st.beta + dot(next, frac_vec(inst.alpha, BigInt(k))));
                    if (!ref) {
                        ref = v;
                    } else if (!(v == *ref)) {
                        keeps = false;
                        break;
                    }
                }
            }
            choices.push_back({cand, pivot, q, line_dist_sq(cand, st.avec) <= w2,
                               keeps, sup_norm(next), next});
        }
        if (choices.empty()) {
            fail_reason = "no relation vector found in the search region";
            return std::nullopt;
        }
        // Exactness-preserving first (the measured K-control), then
        // shell-first as in the Minkowski enumeration, then the resulting
        // direction size, then lexicographic. Dead ends backtrack.
        std::stable_sort(choices.begin(), choices.end(),
                         [](const Choice& x, const Choice& y) {
                             if (x.keeps_exact != y.keeps_exact) return x.keeps_exact;
                             BigInt sx = sup_norm(x.eta), sy = sup_norm(y.eta);
                             if (sx != sy) return sx < sy;
                             if (x.next_norm != y.next_norm)
                                 return x.next_norm < y.next_norm;
                             return lex_less(x.eta, y.eta);
                         });

        std::string deepest_reason = "no relation vector found in the search region";
        for (const auto& choice : choices) {
            SolveState next_st = st;
            int jp = choice.pivot;
            next_st.avec = choice.next;
            IntVec wjp = next_st.ws[jp];
            next_st.ws.erase(jp);
            for (auto& [i, w] : next_st.ws) {
                IntVec nw(d);
                for (int t = 0; t < d; ++t)
                    nw[t] = choice.q * w[t] - choice.eta[i] * wjp[t];
                next_st.ws[i] = nw;
            }
            next_st.used[jp] = true;
            next_st.etas.push_back(choice.eta);
            // induction invariant: the maintained w vectors are annihilated
            // by every eta found so far (exact, every iteration)
            for (const auto& [i, w] : next_st.ws)
                for (const auto& e : next_st.etas)
                    if (dot(w, e) != 0)
                        throw std::logic_error(
                            "rbpl::solve: w/eta annihilation invariant broken");

            std::set<long> in_class(st.H.begin(), st.H.end());
            std::vector<long> next_h;
            long qm = to_long(((choice.q % inst.N) + inst.N) % inst.N);
            for (long k = 0; k < nn; ++k)
                if (in_class.count((k * qm) % nn)) next_h.push_back(k);
            next_st.H = next_h;

            SolveStep step;
            step.eta = choice.eta;
            step.pivot = jp;
            step.q = choice.q;
            step.class_density = delta_j.to_double();
            step.k_measured = k_meas;
            step.in_tube = choice.in_tube;
            next_st.steps.push_back(step);

            auto got = run(next_st, deepest_reason);
            if (got) {
                st = next_st;
                return got;
            }
        }
        fail_reason = deepest_reason;
        return std::nullopt;
    }
};

}  // namespace

SolveResult solve(const RBPLInstance& inst, const Config& cfg) {
    inst.validate();
    SolveResult res;
    if (inst.N <= cfg.rbpl_small_n_cutoff) {
        res.degenerate = true;
        res.reason = "N below the small-N cutoff";
        return res;
    }
    SolveState st;
    st.avec = inst.a;
    st.beta = inst.beta;
    st.H = inst.H;
    st.used.assign(inst.d, false);
    for (int i = 0; i < inst.d; ++i) {
        IntVec e(inst.d, 0);
        e[i] = 1;
        st.ws[i] = e;
    }
    SolveSearch search(inst, cfg);
    std::string reason;
    auto cert = search.run(st, reason);
    if (!cert) {
        res.degenerate = true;
        res.reason = reason;
        return res;
    }
    res.certificate = *cert;
    res.steps = st.steps;
    return res;
}

std::optional<Certificate> brute_force(const RBPLInstance& inst, long height_bound,
                                       const Rat& w_threshold) {
    const int d = inst.d;
    std::vector<IntVec> relations, w_cands;
    IntVec v(d, -height_bound);
    do {
        if (sup_norm(v) == 0) continue;
        if (dist_circle(dot(v, inst.alpha)).is_zero()) relations.push_back(v);
        if (dot(v, inst.a).abs() <= w_threshold) w_cands.push_back(v);
    } while (next_in_box(v, height_bound));
    std::sort(relations.begin(), relations.end(), IntVecLess{});
    std::sort(w_cands.begin(), w_cands.end(), IntVecLess{});

    auto greedy = [&](const std::vector<IntVec>& cands,
                      const std::vector<IntVec>& orth) {
        std::vector<IntVec> out;
        for (const auto& c : cands) {
            bool ok = true;
            for (const auto& o : orth)
                if (dot(c, o) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            out.push_back(c);
            if (rank_int(out) < static_cast<int>(out.size())) out.pop_back();
        }
        return out;
    };

    // eta side first (the scarcer family), then the w side; the swapped
    // order is tried when the counts do not fill the dimension.
    auto efam = greedy(relations, {});
    auto wfam = greedy(w_cands, efam);
    if (static_cast<int>(wfam.size() + efam.size()) != d) {
        wfam = greedy(w_cands, {});
        efam = greedy(relations, wfam);
        if (static_cast<int>(wfam.size() + efam.size()) != d) return std::nullopt;
    }
    Certificate cert;
    cert.d = d;
    cert.w = wfam;
    cert.eta = efam;
    return cert;
}

Certificate extend_affine(const Certificate& cert_d1) {
    const int d1 = cert_d1.d;
    const int d = d1 - 1;
    if (d < 0) throw std::invalid_argument("extend_affine: empty certificate");
    {
        std::vector<IntVec> all = cert_d1.w;
        all.insert(all.end(), cert_d1.eta.begin(), cert_d1.eta.end());
        for (const auto& x : all)
            if (static_cast<int>(x.size()) != d1)
                throw std::invalid_argument("extend_affine: dimension mismatch");
        if (!cert_d1.w.empty() &&
            rank_int(cert_d1.w) != static_cast<int>(cert_d1.w.size()))
            throw std::invalid_argument("extend_affine: w family dependent");
        if (!cert_d1.eta.empty() &&
            rank_int(cert_d1.eta) != static_cast<int>(cert_d1.eta.size()))
            throw std::invalid_argument("extend_affine: eta family dependent");
        for (const auto& w : cert_d1.w)
            for (const auto& e : cert_d1.eta)
                if (dot(w, e) != 0)
                    throw std::invalid_argument("extend_affine: families not orthogonal");
    }

    auto head = [&](const IntVec& x) { return IntVec(x.begin(), x.begin() + d); };

    Certificate out;
    out.d = d;
    int j0 = -1;
    for (size_t j = 0; j < cert_d1.eta.size(); ++j)
        if (cert_d1.eta[j][d] != 0) {
            j0 = static_cast<int>(j);
            break;
        }

    if (j0 >= 0) {
        // eta~_j = nu_j mu_{j0} - nu_{j0} mu_j for j != j0.
        const IntVec& mu0 = cert_d1.eta[j0];
        for (size_t j = 0; j < cert_d1.eta.size(); ++j) {
            if (static_cast<int>(j) == j0) continue;
            const IntVec& mj = cert_d1.eta[j];
            IntVec e(d);
            for (int t = 0; t < d; ++t) e[t] = mj[d] * mu0[t] - mu0[d] * mj[t];
            out.eta.push_back(e);
        }
        for (const auto& w : cert_d1.w) out.w.push_back(head(w));
    } else {
        // all nu_j = 0: the mu_j stay; keep an independent subset of the u_i.
        for (const auto& e : cert_d1.eta) out.eta.push_back(head(e));
        std::vector<IntVec> acc;
        for (const auto& w : cert_d1.w) {
            acc.push_back(head(w));
            if (rank_int(acc) < static_cast<int>(acc.size())) acc.pop_back();
        }
        out.w = acc;
    }

    // exact output checks
    if (static_cast<int>(out.w.size() + out.eta.size()) != d)
        throw std::logic_error("extend_affine: family counts do not fill the dimension");
    if (!out.w.empty() && rank_int(out.w) != static_cast<int>(out.w.size()))
        throw std::logic_error("extend_affine: output w family dependent");
    if (!out.eta.empty() && rank_int(out.eta) != static_cast<int>(out.eta.size()))
        throw std::logic_error("extend_affine: output eta family dependent");
    for (const auto& w : out.w)
        for (const auto& e : out.eta)
            if (dot(w, e) != 0)
                throw std::logic_error("extend_affine: output families not orthogonal");
    return out;
}

bool eta_kernels_equal(int d, const std::vector<IntVec>& a,
                       const std::vector<IntVec>& b) {
    std::vector<IntVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    int ra = a.empty() ? 0 : rank_int(a);
    int rb = b.empty() ? 0 : rank_int(b);
    int rab = both.empty() ? 0 : rank_int(both);
    (void)d;
    return ra == rb && rb == rab;
}

}  // namespace hofa
