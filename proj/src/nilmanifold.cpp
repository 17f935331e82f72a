#include "hofa/nilmanifold.hpp"

#include <stdexcept>

namespace hofa {

ElemNilmanifold ElemNilmanifold::standard(int d, const BigInt& frequency) {
    ElemNilmanifold m;
    m.d = d;
    m.frequency = frequency;
    m.structure_constants.assign(2 * d, IntVec(2 * d, 0));
    for (int i = 0; i < d; ++i) m.structure_constants[i][d + i] = 1;
    return m;
}

bool ElemNilmanifold::is_standard() const {
    ElemNilmanifold s = standard(d, frequency);
    return structure_constants == s.structure_constants;
}

BigInt ElemNilmanifold::complexity() const {
    BigInt q = 0;
    for (const auto& row : structure_constants)
        for (const auto& v : row)
            if (cmp(abs(v), q) > 0) q = abs(v);
    return q;
}

GroupElement GroupElement::identity(int d) {
    GroupElement g;
    g.x.assign(d, Rat());
    g.y.assign(d, Rat());
    return g;
}

bool GroupElement::is_lattice() const {
    for (const auto& v : x)
        if (!v.is_integer()) return false;
    for (const auto& v : y)
        if (!v.is_integer()) return false;
    return z.is_integer();
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    if (g.d() != h.d()) throw std::invalid_argument("mul: dimension mismatch");
    GroupElement r;
    r.x.resize(g.d());
    r.y.resize(g.d());
    Rat cross;
    for (int i = 0; i < g.d(); ++i) {
        r.x[i] = g.x[i] + h.x[i];
        r.y[i] = g.y[i] + h.y[i];
        cross += g.x[i] * h.y[i];
    }
    r.z = g.z + h.z + cross;
    return r;
}

GroupElement inverse(const GroupElement& g) {
    GroupElement r;
    r.x.resize(g.d());
    r.y.resize(g.d());
    Rat cross;
    for (int i = 0; i < g.d(); ++i) {
        r.x[i] = -g.x[i];
        r.y[i] = -g.y[i];
        cross += g.x[i] * g.y[i];
    }
    r.z = -g.z + cross;
    return r;
}

GroupElement power(const GroupElement& g, const BigInt& e) {
    GroupElement r;
    r.x.resize(g.d());
    r.y.resize(g.d());
    Rat cross;
    for (int i = 0; i < g.d(); ++i) {
        r.x[i] = g.x[i] * Rat(e);
        r.y[i] = g.y[i] * Rat(e);
        cross += g.x[i] * g.y[i];
    }
    r.z = g.z * Rat(e) + Rat(e * (e - 1), 2) * cross;
    return r;
}

GroupElement power_binary(const GroupElement& g, const BigInt& e) {
    if (e < 0) return inverse(power_binary(g, -e));
    GroupElement acc = GroupElement::identity(g.d());
    GroupElement base = g;
    BigInt k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

GroupElement commutator(const GroupElement& u, const GroupElement& v) {
    return mul(mul(u, v), mul(inverse(u), inverse(v)));
}

GroupElement project_fundamental(const GroupElement& g) {
    GroupElement r;
    r.x.resize(g.d());
    r.y.resize(g.d());
    Rat xdotyint;
    for (int i = 0; i < g.d(); ++i) {
        r.x[i] = frac(g.x[i]);
        r.y[i] = frac(g.y[i]);
        xdotyint += g.x[i] * Rat(int_part(g.y[i]));
    }
    r.z = frac(g.z - xdotyint);
    return r;
}

RatVec PolySeq::horiz() const {
    RatVec v = alpha;
    v.insert(v.end(), beta.begin(), beta.end());
    return v;
}

GroupElement PolySeq::at(const BigInt& n) const {
    GroupElement g;
    g.x.resize(d());
    g.y.resize(d());
    for (int i = 0; i < d(); ++i) {
        g.x[i] = alpha[i] * Rat(n);
        g.y[i] = beta[i] * Rat(n);
    }
    g.z = vertical.eval(n);
    return g;
}

GroupElement PolySeq::at_group_route(const BigInt& n) const {
    if (vertical.degree() > 2)
        throw std::invalid_argument("group route needs vertical degree <= 2");
    // g(n) = g1^n g2^C(n,2) g0 with the central corrections chosen so the
    // vertical coordinate reproduces the polynomial.
    Rat cross;
    for (int i = 0; i < d(); ++i) cross += alpha[i] * beta[i];
    Rat a2 = vertical.coeff(2), a1 = vertical.coeff(1), a0 = vertical.coeff(0);
    GroupElement g1;
    g1.x = alpha;
    g1.y = beta;
    g1.z = a1 + a2;
    GroupElement g2 = GroupElement::identity(d());
    g2.z = Rat(2) * a2 - cross;
    GroupElement g0 = GroupElement::identity(d());
    g0.z = a0;
    BigInt binom = n * (n - 1) / 2;
    return mul(mul(power_binary(g1, n), power_binary(g2, binom)), g0);
}

bool PolySeq::is_periodic(const BigInt& N) const {
    for (BigInt n = 0; n < N; ++n) {
        GroupElement step = mul(inverse(at(n)), at(n + N));
        if (!step.is_lattice()) return false;
    }
    return true;
}

Mod1 nilseq_phase(const ElemNilmanifold& m, const PolySeq& g, const BigInt& n) {
    if (m.d != g.d()) throw std::invalid_argument("nilseq_phase: dimension mismatch");
    GroupElement el =
        g.vertical.degree() <= 2 ? g.at_group_route(n) : g.at(n);
    GroupElement rep = project_fundamental(el);
    Rat s = rep.z;
    for (int i = 0; i < m.d; ++i) s -= rep.x[i] * Rat(int_part(rep.y[i]));
    return Mod1(s);
}

std::complex<double> eval_nilsequence(const ElemNilmanifold& m, const PolySeq& g,
                                      const BigInt& n) {
    return nilseq_phase(m, g, n).unit();
}

Mod1 nilchar_phase(const ElemNilmanifold& m, const PolySeq& g, const BigInt& n) {
    RatVec h = g.horiz();
    Rat s;
    for (int i = 0; i < m.horiz_dim(); ++i)
        for (int j = i + 1; j < m.horiz_dim(); ++j) {
            const BigInt& c = m.structure_constants[i][j];
            if (c != 0)
                s -= Rat(c) * (h[i] * Rat(n)) * Rat(int_part(h[j] * Rat(n)));
        }
    s += g.vertical.eval(n);
    return Mod1(s * Rat(m.frequency));
}

BracketExpr nilchar_bracket_expr(const ElemNilmanifold& m, const PolySeq& g) {
    RatVec h = g.horiz();
    std::vector<BracketTerm> terms;
    Rat k(m.frequency);
    for (int i = 0; i < m.horiz_dim(); ++i)
        for (int j = i + 1; j < m.horiz_dim(); ++j) {
            const BigInt& c = m.structure_constants[i][j];
            if (c != 0 && !h[i].is_zero())
                terms.push_back(BracketTerm::nbracket(-k * Rat(c), h[i], h[j]));
        }
    if (!g.vertical.is_zero())
        terms.push_back(BracketTerm::poly_term(g.vertical.scaled(k)));
    return BracketExpr(std::move(terms));
}

namespace {

Rat omega_impl(int d, const RatVec& u1, const RatVec& u2) {
    if (static_cast<int>(u1.size()) != 2 * d || static_cast<int>(u2.size()) != 2 * d)
        throw std::invalid_argument("omega: tuples must have length 2d");
    Rat s;
    for (int i = 0; i < d; ++i) s += u1[i] * u2[d + i] - u1[d + i] * u2[i];
    return s;
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace

Rat omega(const ElemNilmanifold& m, const RatVec& u1, const RatVec& u2) {
    return omega_impl(m.d, u1, u2);
}
Rat omega(const ElemNilmanifold& m, const IntVec& u1, const RatVec& u2) {
    return omega_impl(m.d, to_rat(u1), u2);
}
Rat omega(const ElemNilmanifold& m, const IntVec& u1, const IntVec& u2) {
    return omega_impl(m.d, to_rat(u1), to_rat(u2));
}

Factorization factorize_I(const PolySeq& g, const std::vector<IntVec>& etas,
                          const BigInt& N) {
    int hd = 2 * g.d();
    RatVec psi = g.horiz();
    if (static_cast<int>(etas.size()) > 0 &&
        rank_int(etas) != static_cast<int>(etas.size()))
        throw std::invalid_argument("factorize_I: characters not linearly independent");
    for (const auto& eta : etas) {
        Rat v = dot(eta, psi);
        if (!frac(v).is_zero())
            throw std::invalid_argument(
                "factorize_I: character does not annihilate g (C^infty value " +
                (dist_circle(v) * Rat(N)).str() + ")");
    }

    // Rational v with eta_i . v = eta_i . psi for all i; v = 0 when no etas.
    RatVec v(hd, Rat());
    if (!etas.empty()) {
        RatMat a;
        RatVec b;
        for (const auto& eta : etas) {
            RatVec row(hd);
            for (int j = 0; j < hd; ++j) row[j] = Rat(eta[j]);
            a.push_back(std::move(row));
            b.push_back(dot(eta, psi));
        }
        auto sol = solve(std::move(a), std::move(b));
        if (!sol) throw std::logic_error("factorize_I: inconsistent system");
        v = *sol;
    }

    Factorization out;
    out.epsilon = g.at(0);
    out.gamma.alpha.assign(v.begin(), v.begin() + g.d());
    out.gamma.beta.assign(v.begin() + g.d(), v.end());
    out.gamma.vertical = Poly();
    out.q = lcm_of_denominators(v);

    // g1(n) = eps^{-1} g(n) gamma(n)^{-1}, an elementary sequence again.
    Rat cross_vv, cross_av;
    for (int i = 0; i < g.d(); ++i) {
        cross_vv += out.gamma.alpha[i] * out.gamma.beta[i];
        cross_av += g.alpha[i] * out.gamma.beta[i];
    }
    out.g1.alpha.resize(g.d());
    out.g1.beta.resize(g.d());
    for (int i = 0; i < g.d(); ++i) {
        out.g1.alpha[i] = g.alpha[i] - out.gamma.alpha[i];
        out.g1.beta[i] = g.beta[i] - out.gamma.beta[i];
    }
    out.g1.vertical = g.vertical - Poly::constant(g.vertical.coeff(0)) +
                      Poly::monomial(cross_vv - cross_av, 2);

    for (const auto& eta : etas)
        if (!dot(eta, out.g1.horiz()).is_zero())
            throw std::logic_error("factorize_I: g1 escaped the kernel");
    for (BigInt n = 0; n < N; ++n)
        if (!(mul(out.epsilon, mul(out.g1.at(n), out.gamma.at(n))) == g.at(n)))
            throw std::logic_error("factorize_I: recomposition failed");
    return out;
}

BasisChange change_basis(const ElemNilmanifold& m, const PolySeq& g,
                         const std::vector<IntVec>& a, const BigInt& N) {
    int hd = m.horiz_dim();
    if (static_cast<int>(a.size()) != hd)
        throw std::invalid_argument("change_basis: A must be 2d x 2d");
    RatVec gamma = g.horiz();
    const Rat k(m.frequency);

    // gamma_tilde' = 2 (A^T)^{-1} gamma.
    RatMat at(hd, RatVec(hd));
    for (int i = 0; i < hd; ++i)
        for (int j = 0; j < hd; ++j) at[i][j] = Rat(a[j][i]);
    auto sol = solve(at, gamma);
    if (!sol || rank_int(a) != hd)
        throw std::invalid_argument("change_basis: A singular");
    RatVec gt(hd);
    for (int i = 0; i < hd; ++i) gt[i] = Rat(2) * (*sol)[i];

    // G = A C A^T; C_tilde = strict upper part of G - G^T.
    const auto& c = m.structure_constants;
    std::vector<IntVec> gmat(hd, IntVec(hd, 0));
    for (int p = 0; p < hd; ++p)
        for (int q = 0; q < hd; ++q) {
            BigInt s = 0;
            for (int i = 0; i < hd; ++i)
                for (int j = i + 1; j < hd; ++j) s += a[p][i] * c[i][j] * a[q][j];
            gmat[p][q] = s;
        }
    ElemNilmanifold mt;
    mt.d = m.d;
    mt.frequency = m.frequency;
    mt.structure_constants.assign(hd, IntVec(hd, 0));
    for (int p = 0; p < hd; ++p)
        for (int q = p + 1; q < hd; ++q)
            mt.structure_constants[p][q] = gmat[p][q] - gmat[q][p];

    std::vector<BracketTerm> lower;
    Poly poly_res;  // polynomial residue, including the k factor
    auto emit_prod = [&](const Rat& coeff, const Rat& ph1, const Rat& ph2) {
        if (coeff.is_zero() || ph1.is_zero() || ph2.is_zero()) return;
        lower.push_back(BracketTerm::frac_prod(coeff, ph1, ph2));
    };

    // Substitution correction: -k sum_j {c_j n} (sum_q A_qj {gt_q n} - {2 gamma_j n})
    // with c_j = 2 (C^T gamma)_j.
    for (int j = 0; j < hd; ++j) {
        Rat cj;
        for (int i = 0; i < j; ++i)
            if (c[i][j] != 0) cj += Rat(c[i][j]) * gamma[i];
        cj *= Rat(2);
        if (cj.is_zero()) continue;
        for (int q = 0; q < hd; ++q)
            if (a[q][j] != 0) emit_prod(-k * Rat(a[q][j]), cj, gt[q]);
        emit_prod(k, cj, Rat(2) * gamma[j]);
    }

    // Off-diagonal residue: -k G_pq (x_p x_q - {x_p}{x_q}) for q < p
    // (the [x][x] part is an integer multiple of k and drops).
    for (int p = 0; p < hd; ++p)
        for (int q = 0; q < p; ++q) {
            if (gmat[p][q] == 0) continue;
            Rat co = -k * Rat(gmat[p][q]);
            poly_res = poly_res + Poly::monomial(co * gt[p] * gt[q], 2);
            emit_prod(-co, gt[p], gt[q]);
        }
    // Diagonal residue: -k G_pp (x_p^2 + [x_p]^2 - {x_p}^2)/2.
    for (int p = 0; p < hd; ++p) {
        if (gmat[p][p] == 0) continue;
        Rat half = Rat(m.frequency * gmat[p][p], 2);
        poly_res = poly_res + Poly::monomial(-half * gt[p] * gt[p], 2);
        emit_prod(half, gt[p], gt[p]);
        if (mpz_odd_p(BigInt(m.frequency * gmat[p][p]).get_mpz_t())) {
            // -(1/2)[x]^2 = -(1/2)[x] (mod 1) = -(x - {x})/2
            poly_res = poly_res + Poly::monomial(-gt[p] / Rat(2), 1);
            lower.push_back(BracketTerm::frac_lin(Rat(1, 2), gt[p]));
        }
    }

    // merge equal fractional products and drop cancelled ones
    std::vector<BracketTerm> merged;
    for (const auto& t : lower) {
        bool found = false;
        for (auto& u : merged) {
            if (u.kind == t.kind && u.alpha == t.alpha && u.beta == t.beta &&
                u.off1 == t.off1 && u.off2 == t.off2) {
                u.a += t.a;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(t);
    }
    std::erase_if(merged, [](const BracketTerm& t) { return t.a.is_zero(); });

    BasisChange out;
    out.manifold = mt;
    out.seq.alpha.assign(gt.begin(), gt.begin() + m.d);
    out.seq.beta.assign(gt.begin() + m.d, gt.end());
    out.seq.vertical = g.vertical.dilated(Rat(2)) + poly_res.scaled(Rat(1) / k);
    out.lower = std::move(merged);

    for (BigInt n = 0; n < N; ++n) {
        Rat low;
        for (const auto& t : out.lower) low += t.eval_raw(n);
        Mod1 lhs = nilchar_phase(m, g, 2 * n);
        Mod1 rhs = nilchar_phase(mt, out.seq, n) + Mod1(low);
        if (!(lhs == rhs)) throw std::logic_error("change_basis: identity failed");
    }
    return out;
}

}  // namespace hofa
