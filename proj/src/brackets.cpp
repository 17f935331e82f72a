#include "hofa/brackets.hpp"

#include <stdexcept>

#include "hofa/config.hpp"

namespace hofa {

BracketTerm BracketTerm::poly_term(Poly p) {
    BracketTerm t;
    t.kind = Kind::Poly;
    t.poly = std::move(p);
    return t;
}

BracketTerm BracketTerm::nbracket(const Rat& a, const Rat& alpha, const Rat& beta) {
    BracketTerm t;
    t.kind = Kind::NBracket;
    t.a = a;
    t.alpha = alpha;
    t.beta = beta;
    return t;
}

BracketTerm BracketTerm::frac_prod(const Rat& a, const Rat& alpha, const Rat& beta,
                                   const Rat& off1, const Rat& off2) {
    BracketTerm t;
    t.kind = Kind::FracProd;
    t.a = a;
    t.alpha = alpha;
    t.beta = beta;
    t.off1 = off1;
    t.off2 = off2;
    return t;
}

BracketTerm BracketTerm::frac_lin(const Rat& a, const Rat& alpha, const Rat& off1) {
    BracketTerm t;
    t.kind = Kind::FracLin;
    t.a = a;
    t.alpha = alpha;
    t.off1 = off1;
    return t;
}

BracketTerm BracketTerm::deg3_nff(const Rat& a, const Rat& beta, const Rat& gamma) {
    BracketTerm t;
    t.kind = Kind::Deg3NFF;
    t.a = a;
    t.beta = beta;
    t.gamma = gamma;
    return t;
}

BracketTerm BracketTerm::deg3_n2f(const Rat& a, const Rat& beta) {
    BracketTerm t;
    t.kind = Kind::Deg3N2F;
    t.a = a;
    t.beta = beta;
    return t;
}

Rat BracketTerm::eval_raw(const BigInt& n) const {
    switch (kind) {
        case Kind::Poly:
            return poly.eval(n);
        case Kind::NBracket:
            return a * (alpha * Rat(n)) * Rat(int_part(beta * Rat(n)));
        case Kind::FracProd:
            return a * frac(alpha * Rat(n) + off1) * frac(beta * Rat(n) + off2);
        case Kind::FracLin:
            return a * frac(alpha * Rat(n) + off1);
        case Kind::Deg3NFF:
            return a * Rat(n) * frac(beta * Rat(n)) * frac(gamma * Rat(n));
        case Kind::Deg3N2F:
            return a * Rat(BigInt(n * n)) * frac(beta * Rat(n));
    }
    throw std::logic_error("unreachable");
}

bool BracketTerm::operator==(const BracketTerm& o) const {
    return kind == o.kind && poly == o.poly && a == o.a && alpha == o.alpha &&
           beta == o.beta && gamma == o.gamma && off1 == o.off1 && off2 == o.off2;
}

namespace {

bool divides(const BigInt& d, const BigInt& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

void check_phase(const Rat& phase, const BigInt& n, const char* what) {
    if (!divides(phase.den(), n))
        throw std::invalid_argument(std::string("BracketExpr: ") + what +
                                    " denominator does not divide modulus");
}

}  // namespace

BracketExpr::BracketExpr(std::vector<BracketTerm> terms, std::optional<BigInt> modulus_n)
    : terms_(std::move(terms)), mod_(std::move(modulus_n)) {
    if (!mod_) return;
    for (const auto& t : terms_) {
        switch (t.kind) {
            case BracketTerm::Kind::Poly:
                break;  // constrained jointly by periodicity, not per coefficient
            case BracketTerm::Kind::NBracket:
                check_phase(t.alpha, *mod_, "alpha");
                check_phase(t.beta, *mod_, "beta");
                break;
            case BracketTerm::Kind::FracProd:
                check_phase(t.alpha, *mod_, "alpha");
                check_phase(t.beta, *mod_, "beta");
                check_phase(t.off1, *mod_, "offset");
                check_phase(t.off2, *mod_, "offset");
                break;
            case BracketTerm::Kind::FracLin:
                check_phase(t.alpha, *mod_, "alpha");
                check_phase(t.off1, *mod_, "offset");
                break;
            case BracketTerm::Kind::Deg3NFF:
                check_phase(t.beta, *mod_, "beta");
                check_phase(t.gamma, *mod_, "gamma");
                break;
            case BracketTerm::Kind::Deg3N2F:
                check_phase(t.beta, *mod_, "beta");
                break;
        }
    }
}

BracketExpr BracketExpr::concat(const BracketExpr& o) const {
    std::vector<BracketTerm> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    std::optional<BigInt> m = mod_;
    if (!m) m = o.mod_;
    return BracketExpr(std::move(ts), m);
}

bool BracketExpr::operator==(const BracketExpr& o) const {
    return terms_ == o.terms_ && mod_ == o.mod_;
}

Mod1 eval_mod1(const BracketExpr& e, const BigInt& n) {
    Rat s;
    for (const auto& t : e.terms()) s += t.eval_raw(n);
    return Mod1(s);
}

bool is_periodic_phase(const BracketExpr& e, const BigInt& N) {
    if (N < 1) throw std::invalid_argument("is_periodic_phase: N must be positive");
    for (BigInt n = 0; n < N; ++n)
        if (eval_mod1(e, n) != eval_mod1(e, n + N)) return false;

    // Elementary bracket quadratic shape: phi = -sum alpha_i n [beta_i n] + P.
    std::vector<Rat> alphas, betas;
    Poly p;
    bool elementary = true;
    for (const auto& t : e.terms()) {
        if (t.kind == BracketTerm::Kind::Poly) {
            p = p + t.poly;
        } else if (t.kind == BracketTerm::Kind::NBracket && t.a == Rat(-1)) {
            alphas.push_back(t.alpha);
            betas.push_back(t.beta);
        } else {
            elementary = false;
            break;
        }
    }
    if (!elementary || alphas.empty() || p.degree() > 2) return true;

    // Sequence periodicity g(n+N)Gamma = g(n)Gamma: coordinates N alpha_i,
    // N beta_i integral plus the vertical condition.
    Rat cross;  // sum alpha_i beta_i
    bool seq_periodic = true;
    for (size_t i = 0; i < alphas.size(); ++i) {
        cross += alphas[i] * betas[i];
        if (!(alphas[i] * Rat(N)).is_integer() || !(betas[i] * Rat(N)).is_integer())
            seq_periodic = false;
    }
    Rat a2 = p.coeff(2), a1 = p.coeff(1);
    if (!((Rat(2) * a2 - cross) * Rat(N)).is_integer()) seq_periodic = false;
    if (!(a2 * Rat(BigInt(N * N)) + a1 * Rat(N)).is_integer()) seq_periodic = false;
    if (!seq_periodic) return true;

    // Periodicity lemma conclusions, exact. The quadratic conclusion is for
    // the centered coefficient a2 - cross/2 (the nonlinear vertical part);
    // for a pure polynomial phase it reduces to a2 itself.
    if (mpz_probab_prime_p(N.get_mpz_t(), 25) != 0) {
        for (size_t i = 0; i < alphas.size(); ++i) {
            if (!divides(alphas[i].den(), N) || !divides(betas[i].den(), N))
                throw std::logic_error("periodicity lemma violated: linear phase denominator");
        }
        if (!divides((a2 - cross / Rat(2)).den(), 2 * N))
            throw std::logic_error("periodicity lemma violated: quadratic denominator");
    }
    return true;
}

VdcExpansion vdc_expand(const Rat& alpha, const Rat& beta, const BigInt& h) {
    VdcExpansion out;
    if (h == 0) {
        out.top = BracketExpr();
        return out;
    }
    Rat bh = beta * Rat(h);
    Rat fb = frac(bh);           // {beta h}
    Rat fa = frac(alpha * Rat(h));  // {alpha h}
    // Exact identity, all n:
    //   a(n+h)[b(n+h)] - an[bn]
    //     = n (a[bh] + {ah} b)
    //     + {an}{bn} + {bh}{an} - {an}{bn + bh} - {ah}{bn + bh}
    //     + ah[bh] + {ah}{bh}                      (mod 1)
    Rat top_coeff = alpha * Rat(int_part(bh)) + fa * beta;
    std::vector<BracketTerm> top_terms;
    if (!top_coeff.is_zero())
        top_terms.push_back(BracketTerm::poly_term(Poly::monomial(top_coeff, 1)));
    out.top = BracketExpr(std::move(top_terms));

    auto push = [&](BracketTerm t) {
        if (t.a.is_zero()) return;
        // identically-zero fractional factors
        if (t.kind == BracketTerm::Kind::FracProd &&
            ((t.alpha.is_zero() && t.off1.is_zero()) ||
             (t.beta.is_zero() && t.off2.is_zero())))
            return;
        if (t.kind == BracketTerm::Kind::FracLin && t.alpha.is_zero() && t.off1.is_zero())
            return;
        out.lower.push_back(std::move(t));
    };
    push(BracketTerm::frac_prod(Rat(1), alpha, beta));
    push(BracketTerm::frac_lin(fb, alpha));
    push(BracketTerm::frac_prod(Rat(-1), alpha, beta, Rat(), bh));
    push(BracketTerm::frac_lin(-fa, beta, bh));
    Rat c = alpha * Rat(h) * Rat(int_part(bh)) + fa * fb;
    if (!frac(c).is_zero())
        out.lower.push_back(BracketTerm::poly_term(Poly::constant(c)));
    return out;
}

Mod1 eval_T(const TrilinearT& t, const BigInt& x, const BigInt& y, const BigInt& z) {
    Rat s;
    for (int j = 0; j < t.d; ++j) {
        Rat ax = frac(t.alpha[j] * Rat(x));
        Rat b6 = t.beta[j] / Rat(6);
        s += ax * b6 * Rat(y) * frac(t.gamma[j] * Rat(z));
        s += ax * b6 * Rat(z) * frac(t.gamma[j] * Rat(y));
        s += (t.alpha_p[j] / Rat(3)) * frac(t.beta_p[j] * Rat(x)) * Rat(y) * Rat(z);
    }
    return Mod1(s);
}

TrilinearityReport local_trilinearity_check(const TrilinearT& t,
                                            const std::vector<long>& bohr_members,
                                            const BigInt& N, long sample_cap,
                                            std::uint64_t seed) {
    TrilinearityReport rep;
    std::vector<long> b;
    long n = to_long(N);
    for (long m : bohr_members) b.push_back(m > n / 2 ? m - n : m);
    std::set<long> bset(b.begin(), b.end());

    auto value = [&](long x, long y, long z) {
        return eval_T(t, BigInt(x), BigInt(y), BigInt(z));
    };
    auto check_triple = [&](int slot, long u, long v, long y, long z) -> bool {
        Mod1 lhs, rhs;
        switch (slot) {
            case 0:
                lhs = value(u + v, y, z);
                rhs = value(u, y, z) + value(v, y, z);
                break;
            case 1:
                lhs = value(y, u + v, z);
                rhs = value(y, u, z) + value(y, v, z);
                break;
            default:
                lhs = value(y, z, u + v);
                rhs = value(y, z, u) + value(y, z, v);
                break;
        }
        if (lhs == rhs) return true;
        rep.ok = false;
        rep.slot = slot;
        rep.x = u;
        rep.y = v;
        rep.z = y;
        rep.step = z;
        return false;
    };

    long m = static_cast<long>(b.size());
    long exhaustive_cost = m * m * m;
    if (exhaustive_cost <= sample_cap) {
        for (long u : b)
            for (long v : b) {
                if (!bset.count(u + v)) continue;
                for (long y : b)
                    for (long z : b)
                        for (int slot = 0; slot < 3; ++slot)
                            if (!check_triple(slot, u, v, y, z)) return rep;
            }
        return rep;
    }
    Rng rng(seed);
    for (long it = 0; it < sample_cap; ++it) {
        long u = b[rng.below(m)], v = b[rng.below(m)];
        if (!bset.count(u + v)) continue;
        long y = b[rng.below(m)], z = b[rng.below(m)];
        int slot = static_cast<int>(rng.below(3));
        if (!check_triple(slot, u, v, y, z)) return rep;
    }
    return rep;
}

}  // namespace hofa
