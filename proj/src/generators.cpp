#include "hofa/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hofa {

std::vector<IntVec> modp_kernel(const std::vector<IntVec>& rows, const BigInt& p) {
    if (rows.empty()) return {};
    size_t cols = rows[0].size();
    long pl = to_long(p);
    auto norm = [&](const BigInt& x) {
        BigInt r = x % p;
        if (r < 0) r += p;
        return to_long(r);
    };
    std::vector<std::vector<long>> m;
    for (const auto& r : rows) {
        std::vector<long> v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = norm(r[i]);
        m.push_back(std::move(v));
    }
    auto inv_mod = [&](long a) {
        long r = 1, base = ((a % pl) + pl) % pl, e = pl - 2;
        while (e) {
            if (e & 1) r = static_cast<long>((__int128)r * base % pl);
            base = static_cast<long>((__int128)base * base % pl);
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        long inv = inv_mod(m[row][col]);
        for (size_t j = col; j < cols; ++j)
            m[row][j] = static_cast<long>((__int128)m[row][j] * inv % pl);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            long f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = ((m[i][j] - (__int128)f * m[row][j]) % pl + pl) % pl;
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<IntVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        IntVec v(cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = ((pl - m[r][free]) % pl);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat random_rational(Rng& rng, const BigInt& den) {
    long d = to_long(den);
    return Rat(rng.range(0, d - 1), d);
}

PolySeq random_periodic_quadratic(Rng& rng, int d, const BigInt& N) {
    long n = to_long(N);
    PolySeq g;
    g.alpha.resize(d);
    g.beta.resize(d);
    Rat cross;
    for (int i = 0; i < d; ++i) {
        g.alpha[i] = random_rational(rng, N);
        g.beta[i] = random_rational(rng, N);
        cross += g.alpha[i] * g.beta[i];
    }
    // a2 = cross/2 + k/(2N), b = j/N - a2 N, c = l/N keep g(n+N) Gamma = g(n) Gamma.
    Rat a2 = cross / Rat(2) + Rat(rng.range(0, n - 1), 2 * n);
    Rat b = Rat(rng.range(0, n - 1), n) - a2 * Rat(N);
    Rat c = Rat(rng.range(0, n - 1), n);
    g.vertical = Poly(std::vector<Rat>{c, b, a2});
    return g;
}

PolySeq random_nonconforming_quadratic(Rng& rng, int d, const BigInt& N) {
    // Spoil one horizontal frequency with a denominator prime to N. The
    // spoiled coordinate needs a nondegenerate partner, or the bracket term
    // hides the change; the phase shift under n -> n + N is then visible.
    long q = (to_long(N) % 3 == 0) ? 5 : 3;
    for (int attempt = 0; attempt < 64; ++attempt) {
        PolySeq g = random_periodic_quadratic(rng, d, N);
        int i = static_cast<int>(rng.below(d));
        if (frac(g.alpha[i]).is_zero() || frac(g.beta[i]).is_zero()) continue;
        if (rng.below(2) == 0)
            g.alpha[i] = g.alpha[i] + Rat(1, q);
        else
            g.beta[i] = g.beta[i] + Rat(1, q);
        bool periodic = true;
        for (BigInt n = 0; n < N && periodic; ++n) {
            Rat a = g.vertical.eval(n), b = g.vertical.eval(n + N);
            Rat pa, pb;
            for (int j = 0; j < d; ++j) {
                pa += -g.alpha[j] * Rat(n) * Rat(int_part(g.beta[j] * Rat(n)));
                pb += -g.alpha[j] * Rat(n + N) * Rat(int_part(g.beta[j] * Rat(n + N)));
            }
            if (!(Mod1(a + pa) == Mod1(b + pb))) periodic = false;
        }
        if (!periodic) return g;
    }
    throw std::runtime_error("random_nonconforming_quadratic: sampling failed");
}

namespace {

bool next_box_tuple(std::vector<long>& v, long box) {
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

namespace {

// All relations v with |v|_inf <= box and v . alpha = 0 (mod 1) lie in the
// expected span (word-size arithmetic: v . (N alpha) = 0 mod N).
bool relations_confined(const RatVec& alpha, const BigInt& N, long box,
                        const std::vector<IntVec>& expected) {
    int d = static_cast<int>(alpha.size());
    long n = to_long(N);
    std::vector<long> x(d);
    for (int i = 0; i < d; ++i) {
        long t = to_long((alpha[i] * Rat(N)).num()) % n;
        x[i] = (t + n) % n;
    }
    int expected_rank = expected.empty() ? 0 : rank_int(expected);
    std::vector<long> v(d, -box);
    do {
        long s = 0;
        bool zero = true;
        for (int i = 0; i < d; ++i) {
            if (v[i] != 0) zero = false;
            s = (s + v[i] % n * x[i]) % n;
        }
        if (zero || ((s % n) + n) % n != 0) continue;
        std::vector<IntVec> test = expected;
        IntVec vi(d);
        for (int i = 0; i < d; ++i) vi[i] = v[i];
        test.push_back(vi);
        if (rank_int(test) > expected_rank) return false;
    } while (next_box_tuple(v, box));
    return true;
}

}  // namespace

PlantedRBPL plant_rbpl(Rng& rng, int d, const BigInt& N) {
    long n = to_long(N);
    // Span-uniqueness validation is required wherever the brute-force oracle
    // is cross-checked (d <= 3, N <= 53); accidental small relations are
    // statistically unavoidable beyond that and harmless there.
    bool compare_grade = (d <= 3 && N <= 53);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Rng local = rng.fork();
        int family = (d == 1) ? 0 : static_cast<int>(local.below(d >= 3 ? 3 : 2));

        RBPLInstance inst;
        inst.N = N;
        inst.d = d;
        inst.a.assign(d, Rat());
        inst.alpha.assign(d, Rat());
        inst.H.resize(n);
        for (long h = 0; h < n; ++h) inst.H[h] = h;
        std::vector<IntVec> expected;
        long box = 2;

        if (family == 0) {
            // relation-free: a = 0, alpha generic
            for (int i = 0; i < d; ++i) inst.alpha[i] = Rat(local.range(1, n - 1), n);
            if (compare_grade && !relations_confined(inst.alpha, N, box, {})) continue;
        } else if (family == 1) {
            // a single planted relation u across all coordinates; a = c u
            IntVec u(d, 0);
            bool nz = false;
            for (int i = 0; i < d; ++i) {
                u[i] = local.range(-2, 2);
                nz |= (u[i] != 0);
            }
            if (!nz) continue;
            u = primitive(u);
            auto basis = modp_kernel({u}, N);
            if (basis.empty()) continue;
            std::vector<long> x(d, 0);
            for (const auto& b : basis) {
                long c = local.range(1, n - 1);
                for (int i = 0; i < d; ++i) x[i] = (x[i] + c * to_long(b[i])) % n;
            }
            bool all_zero = true;
            for (long xi : x) all_zero &= (xi == 0);
            if (all_zero) continue;
            long cu = local.range(1, 4);
            for (int i = 0; i < d; ++i) {
                inst.alpha[i] = Rat(x[i], n);
                inst.a[i] = Rat(BigInt(cu * u[i]));
            }
            expected.push_back(u);
            box = 4;
            if (compare_grade && !relations_confined(inst.alpha, N, box, expected))
                continue;
        } else {
            // singleton coordinates (alpha integral, relation e_j) plus one
            // final block carrying a planted relation; coefficients chosen so
            // no stage of the walk has a parallel shortcut below the
            // per-block relation sizes
            int s = 1 + static_cast<int>(local.below(d - 2));  // singletons
            int rest = d - s;
            IntVec u(rest, 0);
            bool has2 = false;
            for (int i = 0; i < rest; ++i) {
                u[i] = local.range(-2, 2);
                has2 |= (std::abs(to_long(u[i])) == 2);
            }
            if (!has2) u[0] = 2;
            u = primitive(u);
            if (rank_int({u}) == 0) continue;
            auto basis = modp_kernel({u}, N);
            if (basis.empty()) continue;
            std::vector<long> x(rest, 0);
            for (const auto& b : basis) {
                long c = local.range(1, n - 1);
                for (int i = 0; i < rest; ++i) x[i] = (x[i] + c * to_long(b[i])) % n;
            }
            bool all_zero = true;
            for (long xi : x) all_zero &= (xi == 0);
            if (all_zero) continue;
            static const long coeffs[4] = {2, 3, 5, 7};
            for (int j = 0; j < s; ++j) {
                inst.alpha[j] = Rat();
                inst.a[j] = Rat(coeffs[j % 4] * (local.below(2) ? 1 : -1));
                IntVec e(d, 0);
                e[j] = 1;
                expected.push_back(e);
            }
            long cu = coeffs[(s + static_cast<int>(local.below(2))) % 4];
            for (int i = 0; i < rest; ++i) {
                inst.alpha[s + i] = Rat(x[i], n);
                inst.a[s + i] = Rat(BigInt(cu * u[i]));
            }
            IntVec ue(d, 0);
            for (int i = 0; i < rest; ++i) ue[s + i] = u[i];
            expected.push_back(ue);
            box = 4;
            if (compare_grade && !relations_confined(inst.alpha, N, box, expected))
                continue;
            // no stage may admit a parallel shortcut at sup-norm 1
            IntVec pa(d);
            for (int i = 0; i < d; ++i) pa[i] = inst.a[i].num();
            bool shortcut = false;
            IntVec pp = primitive(pa);
            BigInt sup = 0;
            for (const auto& t : pp)
                if (cmp(abs(t), sup) > 0) sup = abs(t);
            if (sup <= 1) shortcut = true;
            if (shortcut) continue;
        }

        inst.validate();
        PlantedRBPL out;
        out.instance = inst;
        out.planted_relations = expected;
        out.validation_box = box;
        return out;
    }
    throw std::runtime_error("plant_rbpl: could not plant a validated instance");
}

PlantedAffine plant_affine_certificate(Rng& rng, int d, const BigInt& N,
                                       bool force_nu_zero) {
    const int D = d + 1;
    long n = to_long(N);
    for (int attempt = 0; attempt < 256; ++attempt) {
        Rng local = rng.fork();
        int e = 1 + static_cast<int>(local.below(d));  // number of eta vectors
        std::vector<IntVec> etas;
        for (int j = 0; j < e; ++j) {
            IntVec v(D, 0);
            for (int t = 0; t < D; ++t) v[t] = local.range(-3, 3);
            if (force_nu_zero) v[D - 1] = 0;
            etas.push_back(v);
        }
        if (rank_int(etas) != e) continue;
        if (!force_nu_zero) {
            bool has_nu = false;
            for (const auto& v : etas)
                if (v[D - 1] != 0) has_nu = true;
            if (!has_nu) continue;
        }
        // w family: saturated integer basis of the kernel
        RatMat emat;
        for (const auto& v : etas) {
            RatVec row(D);
            for (int t = 0; t < D; ++t) row[t] = Rat(v[t]);
            emat.push_back(row);
        }
        auto wfam = saturated_basis(nullspace(emat));
        if (static_cast<int>(wfam.size()) + e != D) continue;
        // alpha~: random mod-N kernel element of the eta matrix
        auto basis = modp_kernel(etas, N);
        if (basis.empty()) continue;
        IntVec x(D, 0);
        for (const auto& b : basis) {
            long c = local.range(0, n - 1);
            for (int t = 0; t < D; ++t) x[t] = (x[t] + c * b[t]) % n;
        }
        PlantedAffine out;
        out.cert.d = D;
        out.cert.w = wfam;
        out.cert.eta = etas;
        out.alpha_tilde.resize(D);
        for (int t = 0; t < D; ++t) out.alpha_tilde[t] = Rat(x[t], n);
        out.alpha.assign(out.alpha_tilde.begin(), out.alpha_tilde.end() - 1);
        return out;
    }
    throw std::runtime_error("plant_affine_certificate: sampling failed");
}

PolySeq plant_dichotomy(Rng& rng, int d, const BigInt& N) {
    long n = to_long(N);
    PolySeq g;
    g.alpha.assign(d, Rat());
    g.beta.assign(d, Rat());
    int i = 0;
    while (i < d) {
        int kind = static_cast<int>(rng.below(3));
        if (kind == 0 && i + 1 < d) {
            // cancelling pair
            Rat a = Rat(rng.range(1, n - 1), n);
            Rat b = Rat(rng.range(1, n - 1), n);
            g.alpha[i] = a;
            g.beta[i] = b;
            g.alpha[i + 1] = frac(-a);
            g.beta[i + 1] = b;
            i += 2;
        } else if (kind == 1) {
            g.alpha[i] = Rat();  // zero-alpha coordinate
            g.beta[i] = Rat(rng.range(0, n - 1), n);
            ++i;
        } else {
            g.alpha[i] = Rat(rng.range(0, n - 1), n);  // zero-beta coordinate
            g.beta[i] = Rat();
            ++i;
        }
    }
    long k = rng.range(0, 2);
    Rat c = Rat(rng.range(0, n - 1), n);
    g.vertical = Poly(std::vector<Rat>{c, Rat(), Rat(k)});
    return g;
}

PolySeq random_generic_quadratic(Rng& rng, int d, const BigInt& N) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        PolySeq g = random_periodic_quadratic(rng, d, N);
        bool degenerate = true;
        for (int i = 0; i < d; ++i)
            if (!g.alpha[i].is_zero() && !g.beta[i].is_zero()) degenerate = false;
        if (!degenerate) return g;
    }
    throw std::runtime_error("random_generic_quadratic: sampling failed");
}

PlantedChiFamily plant_chi_family(Rng& rng, const BigInt& N, double eta_density) {
    long n = to_long(N);
    PlantedChiFamily out;
    out.a = rng.range(1, n - 1);
    for (long h = 0; h < n; ++h)
        if (rng.uniform01() < eta_density) out.H.push_back(h);
    if (out.H.empty()) out.H.push_back(0);
    // c = a / 2 mod N; f1(n) = e(c n^2 / N), f2(m) = e(-c m^2 / N)
    long inv2 = (n + 1) / 2;
    long c = static_cast<long>((__int128)out.a * inv2 % n);
    out.f1 = FnZN::constant(n);
    out.f2 = FnZN::constant(n);
    for (long x = 0; x < n; ++x) {
        long q = static_cast<long>((__int128)x * x % n);
        out.f1.values[x] = Mod1(Rat(static_cast<long>((__int128)c * q % n), n)).unit();
        out.f2.values[x] = Mod1(Rat((n - static_cast<long>((__int128)c * q % n)) % n, n)).unit();
    }
    out.chi.resize(n);
    for (long h = 0; h < n; ++h) {
        out.chi[h] = FnZN::constant(n);
        for (long x = 0; x < n; ++x) {
            long ph = static_cast<long>((__int128)out.a * h % n * x % n);
            out.chi[h].values[x] = Mod1(Rat(ph, n)).unit();
        }
    }
    return out;
}

FnZN random_phase_function(Rng& rng, long n) {
    FnZN f = FnZN::constant(n);
    for (long x = 0; x < n; ++x) {
        double t = 2 * 3.14159265358979323846 * rng.uniform01();
        f.values[x] = {std::cos(t), std::sin(t)};
    }
    return f;
}

std::vector<long> random_subset(Rng& rng, long n) {
    std::vector<long> out;
    for (long x = 0; x < n; ++x)
        if (rng.below(2) == 0) out.push_back(x);
    return out;
}

}  // namespace hofa
