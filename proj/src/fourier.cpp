#include "hofa/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

namespace hofa {

namespace {

Cplx unit_phase(const Rat& x) {
    double t = 2.0 * std::numbers::pi * frac(x).to_double();
    return {std::cos(t), std::sin(t)};
}

// C^3 plateau bump: 1 on [-1/2+eps, 1/2-eps], 0 outside (-1/2, 1/2).
double bump(double t, double eps, int order) {
    t = std::fabs(t);
    if (t >= 0.5) return 0.0;
    if (t <= 0.5 - eps) return 1.0;
    double s = (0.5 - t) / eps;  // in (0, 1)
    if (order <= 1) return s;
    double s2 = s * s;
    return s2 * s2 * (35 - 84 * s + 70 * s2 - 20 * s2 * s);
}

// In-place radix-2 FFT, size a power of two.
void fft(std::vector<Cplx>& a, bool invert) {
    size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = 2 * std::numbers::pi / len * (invert ? 1 : -1);
        Cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            Cplx w(1);
            for (size_t j = 0; j < len / 2; ++j) {
                Cplx u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (invert)
        for (auto& x : a) x /= static_cast<double>(n);
}

double window_rep(long j, long g) {
    double t = static_cast<double>(j) / g;
    return t > 0.5 ? t - 1.0 : t;
}

// One expansion factor: either a function of a single torus coordinate or of
// a coordinate pair. Each mode carries integer multipliers of the phases.
struct FactorModes {
    bool pair = false;
    bool first_in_h = false;   // slot 1 drives the h frequency instead of n
    bool second_in_h = false;  // pair factor: slot 2 drives the h frequency
    Rat phase1, off1;          // frequency contribution m1 * phase1
    Rat phase2, off2;
    struct Mode {
        int m1 = 0, m2 = 0;
        Cplx coef;
    };
    std::vector<Mode> modes;
};

// Modes of bump(u) e(c u) on the torus (1-dim factor).
std::vector<FactorModes::Mode> modes_1d(double c, double eps, int grid, int order) {
    std::vector<Cplx> samples(grid);
    for (long j = 0; j < grid; ++j) {
        double u = window_rep(j, grid);
        double ph = 2 * std::numbers::pi * c * u;
        samples[j] = bump(u, eps, order) * Cplx(std::cos(ph), std::sin(ph));
    }
    fft(samples, false);
    std::vector<FactorModes::Mode> out;
    for (long j = 0; j < grid; ++j) {
        Cplx coef = samples[j] / static_cast<double>(grid);
        if (std::abs(coef) < 1e-14) continue;
        out.push_back({static_cast<int>(j < grid / 2 ? j : j - grid), 0, coef});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::abs(a.coef) > std::abs(b.coef);
    });
    return out;
}

// Modes of bump(u) bump(v) e(k u v) on the torus square (2-dim factor).
std::vector<FactorModes::Mode> modes_2d(long k, double eps1, double eps2, int grid,
                                        int order) {
    std::vector<std::vector<Cplx>> rows(grid, std::vector<Cplx>(grid));
    for (int j = 0; j < grid; ++j) {
        double u = window_rep(j, grid);
        double bu = bump(u, eps1, order);
        for (int l = 0; l < grid; ++l) {
            double v = window_rep(l, grid);
            double ph = 2 * std::numbers::pi * k * u * v;
            rows[j][l] = bu * bump(v, eps2, order) * Cplx(std::cos(ph), std::sin(ph));
        }
    }
    for (auto& row : rows) fft(row, false);
    std::vector<FactorModes::Mode> out;
    std::vector<Cplx> col(grid);
    for (int l = 0; l < grid; ++l) {
        for (int j = 0; j < grid; ++j) col[j] = rows[j][l];
        fft(col, false);
        for (int j = 0; j < grid; ++j) {
            Cplx coef = col[j] / static_cast<double>(grid) / static_cast<double>(grid);
            if (std::abs(coef) < 1e-14) continue;
            out.push_back({j < grid / 2 ? j : j - grid, l < grid / 2 ? l : l - grid,
                           coef});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::abs(a.coef) > std::abs(b.coef);
    });
    return out;
}

struct RatPairLess {
    bool operator()(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

// Values of the expansion on [0, count): per-term phase rotation, one exact
// phase evaluation per term.
std::vector<Cplx> eval_on_range(const FourierExpansion& e, long count) {
    std::vector<Cplx> out(count, Cplx(0.0));
    for (const auto& t : e.terms) {
        Cplx rot = t.coef;
        Cplx step = unit_phase(t.freq_n);
        for (long n = 0; n < count; ++n) {
            out[n] += rot;
            rot *= step;
        }
    }
    return out;
}

std::vector<std::vector<Cplx>> eval_on_grid(const FourierExpansion& e, long nc,
                                            long hc) {
    std::vector<std::vector<Cplx>> out(nc, std::vector<Cplx>(hc, Cplx(0.0)));
    std::vector<Cplx> row(hc);
    for (const auto& t : e.terms) {
        Cplx step_n = unit_phase(t.freq_n), step_h = unit_phase(t.freq_h);
        Cplx rh = 1.0;
        for (long h = 0; h < hc; ++h) {
            row[h] = rh;
            rh *= step_h;
        }
        Cplx rn = t.coef;
        for (long n = 0; n < nc; ++n) {
            for (long h = 0; h < hc; ++h) out[n][h] += rn * row[h];
            rn *= step_n;
        }
    }
    return out;
}

double smallest_boundary_gap(const Rat& phase, const Rat& off, const BigInt& N) {
    Rat best(1, 2);
    for (BigInt n = 0; n < N; ++n) {
        Rat gap = Rat(1, 2) - dist_circle(phase * Rat(n) + off);
        if (gap < best) best = gap;
    }
    return best.to_double();
}

// Composes factor modes into merged (freq_n, freq_h) terms with exact
// constant offsets folded into the coefficients, growing the per-factor
// budget until the measured L^1 error meets delta. In periodic mode (every
// phase and offset a multiple of 1/N resp. 1/H) the merge runs on integer
// residue indices with a dense accumulator.
FourierExpansion compose_and_measure(
    const std::vector<FactorModes>& factors, const Rat& const_phase,
    const Rat& linear_freq_n, long n_mod, long h_mod, const FourierOptions& opt,
    const std::function<double(const FourierExpansion&)>& measure) {
    FourierExpansion out;

    // fast path preconditions: all data on the (1/N, 1/H) grid
    auto residue = [](const Rat& x, long m) -> long {
        Rat s = x * Rat(m);
        if (!s.is_integer()) return -1;
        BigInt r = s.num() % m;
        if (r < 0) r += m;
        return to_long(r);
    };
    bool fast = n_mod > 0 && h_mod > 0;
    struct FastFactor {
        bool pair, first_in_h, second_in_h;
        long p1, o1, p2, o2;  // residues; o-offsets measured against n_mod
        std::vector<FactorModes::Mode> const* modes;
    };
    std::vector<FastFactor> ff;
    long c0 = fast ? residue(const_phase, n_mod) : -1;
    long l0 = fast ? residue(linear_freq_n, n_mod) : -1;
    if (c0 < 0 || l0 < 0) fast = false;
    for (const auto& f : factors) {
        if (!fast) break;
        FastFactor g{f.pair, f.first_in_h, f.second_in_h, 0, 0, 0, 0, &f.modes};
        g.p1 = residue(f.phase1, f.first_in_h ? h_mod : n_mod);
        g.o1 = residue(f.off1, n_mod);
        if (f.pair) {
            g.p2 = residue(f.phase2, f.second_in_h ? h_mod : n_mod);
            g.o2 = residue(f.off2, n_mod);
        }
        if (g.p1 < 0 || g.o1 < 0 || g.p2 < 0 || g.o2 < 0) {
            fast = false;
            break;
        }
        ff.push_back(g);
    }

    for (int budget = opt.start_modes; budget <= opt.max_modes; budget *= 2) {
        out.terms.clear();
        out.l1_bound = 0;
        if (fast) {
            std::vector<Cplx> roots(n_mod);
            for (long k = 0; k < n_mod; ++k) {
                double t = 2 * std::numbers::pi * k / double(n_mod);
                roots[k] = {std::cos(t), std::sin(t)};
            }
            std::vector<Cplx> acc(n_mod * h_mod, Cplx(0.0));
            std::function<void(size_t, long, long, long, Cplx)> compose =
                [&](size_t i, long fn, long fh, long off, Cplx coef) {
                    if (std::abs(coef) < 1e-13) return;
                    if (i == ff.size()) {
                        acc[fn * h_mod + fh] += coef * roots[off];
                        return;
                    }
                    const auto& f = ff[i];
                    size_t take = std::min<size_t>(f.modes->size(),
                                                   static_cast<size_t>(budget));
                    auto wrap = [](long x, long m) { return ((x % m) + m) % m; };
                    for (size_t j = 0; j < take; ++j) {
                        const auto& m = (*f.modes)[j];
                        long fn2 = fn, fh2 = fh;
                        long off2 = wrap(off + m.m1 * f.o1, n_mod);
                        if (f.first_in_h)
                            fh2 = wrap(fh2 + m.m1 * f.p1, h_mod);
                        else
                            fn2 = wrap(fn2 + m.m1 * f.p1, n_mod);
                        if (f.pair) {
                            off2 = wrap(off2 + m.m2 * f.o2, n_mod);
                            if (f.second_in_h)
                                fh2 = wrap(fh2 + m.m2 * f.p2, h_mod);
                            else
                                fn2 = wrap(fn2 + m.m2 * f.p2, n_mod);
                        }
                        compose(i + 1, fn2, fh2, off2, coef * m.coef);
                    }
                };
            compose(0, l0, 0, c0, Cplx(1.0));
            for (long fn = 0; fn < n_mod; ++fn)
                for (long fh = 0; fh < h_mod; ++fh) {
                    Cplx c = acc[fn * h_mod + fh];
                    if (std::abs(c) < 1e-14) continue;
                    out.terms.push_back(
                        {c, frac(Rat(fn, n_mod)), frac(Rat(fh, h_mod))});
                    out.l1_bound += std::abs(c);
                }
        } else {
            std::map<std::pair<Rat, Rat>, Cplx, RatPairLess> acc;
            std::function<void(size_t, Rat, Rat, Rat, Cplx)> compose =
                [&](size_t i, Rat fn, Rat fh, Rat off, Cplx coef) {
                    if (std::abs(coef) < 1e-13) return;
                    if (i == factors.size()) {
                        acc[{frac(fn), frac(fh)}] += coef * unit_phase(off);
                        return;
                    }
                    const auto& f = factors[i];
                    size_t take = std::min<size_t>(f.modes.size(),
                                                   static_cast<size_t>(budget));
                    for (size_t j = 0; j < take; ++j) {
                        const auto& m = f.modes[j];
                        Rat fn2 = fn, fh2 = fh;
                        Rat off2 = off + Rat(m.m1) * f.off1;
                        if (f.first_in_h)
                            fh2 += Rat(m.m1) * f.phase1;
                        else
                            fn2 += Rat(m.m1) * f.phase1;
                        if (f.pair) {
                            off2 += Rat(m.m2) * f.off2;
                            if (f.second_in_h)
                                fh2 += Rat(m.m2) * f.phase2;
                            else
                                fn2 += Rat(m.m2) * f.phase2;
                        }
                        compose(i + 1, fn2, fh2, off2, coef * m.coef);
                    }
                };
            compose(0, linear_freq_n, Rat(), const_phase, Cplx(1.0));
            for (const auto& [key, coef] : acc) {
                if (std::abs(coef) < 1e-14) continue;
                out.terms.push_back({coef, key.first, key.second});
                out.l1_bound += std::abs(coef);
            }
        }
        out.measured_l1_error = measure(out);
        if (out.measured_l1_error <= opt.delta) return out;
        if (factors.empty()) break;  // nothing to refine
    }
    out.degenerate = true;
    return out;
}

}  // namespace

Cplx FourierExpansion::eval(const BigInt& n, const BigInt& h) const {
    Cplx s = 0;
    for (const auto& t : terms)
        s += t.coef * unit_phase(t.freq_n * Rat(n) + t.freq_h * Rat(h));
    return s;
}

FourierExpansion expand_frac_product(const std::vector<BracketTerm>& prods,
                                     const BigInt& N, const FourierOptions& opt) {
    long n_long = to_long(N);
    std::vector<FactorModes> factors;
    Rat const_phase;
    for (const auto& t : prods) {
        if (t.kind != BracketTerm::Kind::FracProd || !t.a.is_integer())
            throw std::invalid_argument(
                "expand_frac_product: terms must be fractional products with integer "
                "coefficients");
        if (t.a.is_zero()) continue;
        bool c1 = frac(t.alpha).is_zero();  // first factor constant
        bool c2 = frac(t.beta).is_zero();
        if (c1 && c2) {
            const_phase += t.a * frac(t.off1) * frac(t.off2);
            continue;
        }
        double k_abs = std::fabs(t.a.to_double());
        double eps_target =
            opt.delta / (std::pow(2.0, double(prods.size())) * std::max(1.0, k_abs));
        if (c1 || c2) {
            // a * c * {phase n + off}: a one-dimensional torus factor
            Rat cval = c1 ? frac(t.off1) : frac(t.off2);
            Rat phase = c1 ? t.beta : t.alpha;
            Rat off = c1 ? t.off2 : t.off1;
            if ((t.a * cval).is_zero()) continue;
            FactorModes f;
            f.phase1 = phase;
            f.off1 = off;
            double gap = smallest_boundary_gap(phase, off, N);
            double eps = std::max(std::min(eps_target, gap / 2), 1e-4);
            f.modes = modes_1d((t.a * cval).to_double(), eps, opt.grid * 4,
                               opt.cutoff_order);
            factors.push_back(std::move(f));
            continue;
        }
        FactorModes f;
        f.pair = true;
        f.phase1 = t.alpha;
        f.off1 = t.off1;
        f.phase2 = t.beta;
        f.off2 = t.off2;
        double eps1 = std::max(
            std::min(eps_target, smallest_boundary_gap(t.alpha, t.off1, N) / 2), 1e-4);
        double eps2 = std::max(
            std::min(eps_target, smallest_boundary_gap(t.beta, t.off2, N) / 2), 1e-4);
        f.modes = modes_2d(to_long(t.a.num()), eps1, eps2, opt.grid, opt.cutoff_order);
        factors.push_back(std::move(f));
    }

    std::vector<Cplx> target(n_long);
    for (long n = 0; n < n_long; ++n) {
        Rat ph;
        for (const auto& t : prods) ph += t.eval_raw(BigInt(n));
        target[n] = unit_phase(ph);
    }
    auto measure = [&](const FourierExpansion& e) {
        auto vals = eval_on_range(e, n_long);
        double err = 0;
        for (long n = 0; n < n_long; ++n) err += std::abs(target[n] - vals[n]);
        return err / n_long;
    };
    FourierExpansion out =
        compose_and_measure(factors, const_phase, Rat(), n_long, 1, opt, measure);
    if (n_long <= opt.small_n_cutoff) out.degenerate = true;
    return out;
}

FourierExpansion expand_bilinear(const std::vector<BilinearProd>& prods,
                                 const BigInt& N, const BigInt& H,
                                 const FourierOptions& opt) {
    long n_long = to_long(N), h_long = to_long(H);
    std::vector<FactorModes> factors;
    Rat const_phase;
    for (const auto& t : prods) {
        if (t.k == 0) continue;
        Rat a(t.k);
        bool ch = frac(t.alpha_h).is_zero();  // h-factor constant
        bool cn = frac(t.beta_n).is_zero();
        double k_abs = std::fabs(a.to_double());
        double eps_target =
            opt.delta / (std::pow(3.0, double(prods.size())) * std::max(1.0, k_abs));
        if (ch && cn) {
            const_phase += a * frac(t.off_h) * frac(t.off_n);
            continue;
        }
        if (ch || cn) {
            // one side frozen to a constant: a 1-dim factor in the live
            // variable (n when the h side froze, h otherwise)
            Rat cval = ch ? frac(t.off_h) : frac(t.off_n);
            Rat phase = ch ? t.beta_n : t.alpha_h;
            Rat off = ch ? t.off_n : t.off_h;
            if ((a * cval).is_zero()) continue;
            FactorModes f;
            f.first_in_h = !ch;
            f.phase1 = phase;
            f.off1 = off;
            double gap = smallest_boundary_gap(phase, off, ch ? N : H);
            double eps = std::max(std::min(eps_target, gap / 2), 1e-4);
            f.modes = modes_1d((a * cval).to_double(), eps, opt.grid * 4,
                               opt.cutoff_order);
            factors.push_back(std::move(f));
            continue;
        }
        FactorModes f;
        f.pair = true;
        f.second_in_h = true;
        f.phase1 = t.beta_n;  // m1 acts on the n side
        f.off1 = t.off_n;
        f.phase2 = t.alpha_h;  // m2 acts on the h side
        f.off2 = t.off_h;
        double eps_n = std::max(
            std::min(eps_target, smallest_boundary_gap(t.beta_n, t.off_n, N) / 2), 1e-4);
        double eps_h = std::max(
            std::min(eps_target, smallest_boundary_gap(t.alpha_h, t.off_h, H) / 2), 1e-4);
        // modes_2d couples (u, v) = (n-factor, h-factor)
        f.modes = modes_2d(to_long(t.k), eps_n, eps_h, opt.grid, opt.cutoff_order);
        factors.push_back(std::move(f));
    }

    std::vector<std::vector<Cplx>> target(n_long, std::vector<Cplx>(h_long));
    for (long n = 0; n < n_long; ++n)
        for (long h = 0; h < h_long; ++h) {
            Rat ph;
            for (const auto& t : prods)
                ph += Rat(t.k) * frac(t.alpha_h * Rat(h) + t.off_h) *
                      frac(t.beta_n * Rat(n) + t.off_n);
            target[n][h] = unit_phase(ph);
        }
    auto measure = [&](const FourierExpansion& e) {
        auto vals = eval_on_grid(e, n_long, h_long);
        double err = 0;
        for (long n = 0; n < n_long; ++n)
            for (long h = 0; h < h_long; ++h)
                err += std::abs(target[n][h] - vals[n][h]);
        return err / (double(n_long) * h_long);
    };
    FourierExpansion out = compose_and_measure(factors, const_phase, Rat(), n_long,
                                                h_long, opt, measure);
    if (n_long <= opt.small_n_cutoff || h_long <= opt.small_n_cutoff)
        out.degenerate = true;
    return out;
}

FourierExpansion expand_trivial(const RatVec& a, const RatVec& alpha,
                                const BigInt& N, const FourierOptions& opt) {
    if (a.size() != alpha.size())
        throw std::invalid_argument("expand_trivial: length mismatch");
    long n_long = to_long(N);

    // a = [a] + {a}: the integer part is the exact linear phase ([a].alpha) n;
    // coordinates with integral a contribute nothing else.
    Rat int_freq;
    std::vector<FactorModes> factors;
    for (size_t i = 0; i < a.size(); ++i) {
        int_freq += Rat(int_part(a[i])) * alpha[i];
        Rat af = frac(a[i]);
        if (af.is_zero()) continue;
        if (frac(alpha[i]).is_zero()) {
            // constant fractional argument would be {0} = 0: nothing
            continue;
        }
        FactorModes f;
        f.phase1 = alpha[i];
        double gap = smallest_boundary_gap(alpha[i], Rat(), N);
        double eps_target = opt.delta / (4.0 * double(a.size()));
        double eps = std::max(std::min(eps_target, gap / 2), 1e-4);
        f.modes = modes_1d(af.to_double(), eps, opt.grid * 4, opt.cutoff_order);
        factors.push_back(std::move(f));
    }

    std::vector<Cplx> target(n_long);
    for (long n = 0; n < n_long; ++n) {
        Rat ph;
        for (size_t i = 0; i < a.size(); ++i) ph += a[i] * frac(alpha[i] * Rat(n));
        target[n] = unit_phase(ph);
    }
    auto measure = [&](const FourierExpansion& e) {
        auto vals = eval_on_range(e, n_long);
        double err = 0;
        for (long n = 0; n < n_long; ++n) err += std::abs(target[n] - vals[n]);
        return err / n_long;
    };
    FourierExpansion out =
        compose_and_measure(factors, Rat(), int_freq, n_long, 1, opt, measure);
    if (n_long <= opt.small_n_cutoff) out.degenerate = true;
    return out;
}

Cplx BoxExpansion::eval(const RatVec& u, const RatVec& v) const {
    Cplx s = 0;
    for (const auto& t : terms) {
        Rat ph;
        for (size_t i = 0; i < u.size(); ++i) ph += t.freq_u[i] * u[i];
        for (size_t i = 0; i < v.size(); ++i) ph += t.freq_v[i] * v[i];
        s += t.coef * unit_phase(ph);
    }
    return s;
}

BoxExpansion expand_box_product(const std::vector<std::vector<Rat>>& u_vals,
                                const std::vector<std::vector<Rat>>& v_vals,
                                const FourierOptions& opt) {
    if (u_vals.size() != v_vals.size())
        throw std::invalid_argument("expand_box_product: index sets must match");
    size_t d = u_vals.size();
    BoxExpansion out;
    if (d == 0) {
        out.terms.push_back({Cplx(1.0), {}, {}});
        out.l1_bound = 1;
        return out;
    }
    size_t dn = u_vals[0].size(), dm = v_vals[0].size();

    // Period-2 modes of w(u) w(v) e(uv) on [-1, 1]^2; frequencies j/2.
    struct Mode2h {
        int j, k;
        Cplx coef;
    };
    int g = opt.grid;
    std::vector<std::vector<Cplx>> rows(g, std::vector<Cplx>(g));
    auto w = [&](double t) {
        t = std::fabs(t);
        if (t <= 0.5) return 1.0;
        if (t >= 1.0) return 0.0;
        double s = 2.0 * (1.0 - t);
        double s2 = s * s;
        return s2 * s2 * (35 - 84 * s + 70 * s2 - 20 * s2 * s);
    };
    for (int jj = 0; jj < g; ++jj) {
        double u = -1.0 + 2.0 * jj / g;
        for (int ll = 0; ll < g; ++ll) {
            double v = -1.0 + 2.0 * ll / g;
            double ph = 2 * std::numbers::pi * u * v;
            rows[jj][ll] = w(u) * w(v) * Cplx(std::cos(ph), std::sin(ph));
        }
    }
    for (auto& row : rows) fft(row, false);
    std::vector<Cplx> col(g);
    std::vector<Mode2h> modes;
    for (int l = 0; l < g; ++l) {
        for (int j = 0; j < g; ++j) col[j] = rows[j][l];
        fft(col, false);
        for (int j = 0; j < g; ++j) {
            Cplx c = col[j] / static_cast<double>(g) / static_cast<double>(g);
            if (std::abs(c) < 1e-14) continue;
            int mj = j < g / 2 ? j : j - g;
            int ml = l < g / 2 ? l : l - g;
            if ((mj + ml) & 1) c = -c;  // sampling started at -1, not 0
            if (std::abs(c) > 1.0) c /= std::abs(c);
            modes.push_back({mj, ml, c});
        }
    }
    std::sort(modes.begin(), modes.end(), [](const Mode2h& a, const Mode2h& b) {
        return std::abs(a.coef) > std::abs(b.coef);
    });

    std::vector<std::vector<Cplx>> target(dn, std::vector<Cplx>(dm));
    for (size_t n = 0; n < dn; ++n)
        for (size_t m = 0; m < dm; ++m) {
            Rat ph;
            for (size_t i = 0; i < d; ++i) ph += u_vals[i][n] * v_vals[i][m];
            target[n][m] = unit_phase(ph);
        }

    for (int budget = opt.start_modes; budget <= opt.max_modes; budget *= 2) {
        std::vector<BoxTerm> terms;
        std::function<void(size_t, RatVec, RatVec, Cplx)> compose =
            [&](size_t i, RatVec fu, RatVec fv, Cplx coef) {
                if (std::abs(coef) < 1e-12) return;
                if (i == d) {
                    terms.push_back({coef, fu, fv});
                    return;
                }
                size_t take = std::min<size_t>(modes.size(), budget);
                for (size_t j = 0; j < take; ++j) {
                    RatVec fu2 = fu, fv2 = fv;
                    fu2[i] = Rat(modes[j].j, 2);
                    fv2[i] = Rat(modes[j].k, 2);
                    compose(i + 1, fu2, fv2, coef * modes[j].coef);
                }
            };
        compose(0, RatVec(d), RatVec(d), Cplx(1.0));
        out.terms = std::move(terms);
        out.l1_bound = 0;
        for (const auto& t : out.terms) out.l1_bound += std::abs(t.coef);
        double err = 0;
        for (size_t n = 0; n < dn; ++n) {
            RatVec u(d);
            for (size_t i = 0; i < d; ++i) u[i] = u_vals[i][n];
            for (size_t m = 0; m < dm; ++m) {
                RatVec v(d);
                for (size_t i = 0; i < d; ++i) v[i] = v_vals[i][m];
                err += std::abs(target[n][m] - out.eval(u, v));
            }
        }
        out.measured_l1_error = err / (double(dn) * dm);
        if (out.measured_l1_error <= opt.delta) return out;
    }
    out.degenerate = true;
    return out;
}

}  // namespace hofa
