#include "hofa/additive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hofa/config.hpp"

namespace hofa {

bool BohrSet::contains(long x) const {
    long n = to_long(N);
    long c = ((x % n) + n) % n;
    return std::binary_search(members.begin(), members.end(), c);
}

BohrSet bohr_build(const RatVec& freqs, const Rat& rho, const BigInt& N) {
    for (const auto& f : freqs)
        if (!(f * Rat(N)).is_integer())
            throw std::invalid_argument("bohr_build: frequency denominator must divide N");
    BohrSet b;
    b.N = N;
    b.freqs = freqs;
    b.rho = rho;
    long n = to_long(N);
    // Exact membership with word-size arithmetic: for f = p/N the condition
    // ||f x|| < rho is min(px mod N, N - px mod N) * den(rho) < num(rho) * N.
    std::vector<long> p(freqs.size());
    for (size_t i = 0; i < freqs.size(); ++i) {
        Rat scaled = freqs[i] * Rat(N);
        p[i] = to_long(scaled.num()) % n;
        if (p[i] < 0) p[i] += n;
    }
    bool word_ok = rho.num().fits_slong_p() && rho.den().fits_slong_p();
    if (word_ok) {
        long rnum = to_long(rho.num()), rden = to_long(rho.den());
        for (long x = 0; x < n; ++x) {
            bool in = true;
            for (long pi : p) {
                long t = static_cast<long>((__int128)pi * x % n);
                long dist = std::min(t, n - t);
                if (!((__int128)dist * rden < (__int128)rnum * n)) {
                    in = false;
                    break;
                }
            }
            if (in) b.members.push_back(x);
        }
        return b;
    }
    for (long x = 0; x < n; ++x) {
        bool in = true;
        for (const auto& f : freqs)
            if (!(dist_circle(f * Rat(x)) < rho)) {
                in = false;
                break;
            }
        if (in) b.members.push_back(x);
    }
    return b;
}

RegularRadiusResult find_regular_radius(const RatVec& freqs, const Rat& rho,
                                        const BigInt& N, int grid_points,
                                        int candidates) {
    RegularRadiusResult best;
    if (freqs.empty()) {
        best.found = true;
        best.rho = rho;
        return best;
    }
    long s = static_cast<long>(freqs.size());
    Rat eps_max(1, 100 * s);
    std::vector<Rat> eps_grid;
    Rat e = eps_max;
    for (int i = 0; i < grid_points; ++i) {
        eps_grid.push_back(e);
        e /= Rat(2);
    }
    auto card = [&](const Rat& r) {
        return static_cast<long>(bohr_build(freqs, r, N).members.size());
    };
    best.violations = grid_points + 1;
    for (int c = 0; c <= candidates; ++c) {
        // descending grid from rho to rho/2
        Rat cand = rho * (Rat(2 * candidates - c, 2 * candidates));
        long base = card(cand);
        long violations = 0;
        for (const auto& ep : eps_grid) {
            long wide = card(cand * (Rat(1) + ep));
            // |B|(1 - 100 s eps) <= |B'| <= |B|(1 + 100 s eps), exact in Q
            Rat lo = Rat(base) * (Rat(1) - Rat(100 * s) * ep);
            Rat hi = Rat(base) * (Rat(1) + Rat(100 * s) * ep);
            if (!(Rat(wide) >= lo && Rat(wide) <= hi)) ++violations;
        }
        if (violations == 0) {
            best.found = true;
            best.rho = cand;
            best.violations = 0;
            return best;
        }
        if (violations < best.violations) {
            best.violations = violations;
            best.rho = cand;
        }
    }
    return best;
}

namespace {

std::vector<long long> counts_of(const std::vector<long>& a, long n) {
    std::vector<long long> c(n, 0);
    for (long x : a) c[((x % n) + n) % n] += 1;
    return c;
}

}  // namespace

Rat energy(const std::vector<long>& a, const std::vector<long>& b, const BigInt& N) {
    long n = to_long(N);
    auto ca = counts_of(a, n), cb = counts_of(b, n);
    // r(t) = #{(x, y) in A x B : x + y = t}; E = sum r(t)^2 / N^3.
    // Counts fit comfortably in 64 bits at laboratory sizes.
    std::vector<long long> r(n, 0);
    for (long x = 0; x < n; ++x) {
        if (!ca[x]) continue;
        for (long y = 0; y < n; ++y)
            if (cb[y]) r[(x + y) % n] += ca[x] * cb[y];
    }
    BigInt total = 0;
    for (const auto& v : r) total += BigInt(static_cast<long>(v)) * BigInt(static_cast<long>(v));
    return Rat(total, BigInt(N * N * N));
}

Rat energy(const std::vector<long>& a, const BigInt& N) { return energy(a, a, N); }

Rat energy_naive(const std::vector<long>& a, const std::vector<long>& b, const BigInt& N) {
    long n = to_long(N);
    BigInt total = 0;
    for (long x : a)
        for (long xp : a)
            for (long y : b)
                for (long yp : b)
                    if (((x + y) % n + n) % n == ((xp + yp) % n + n) % n) total += 1;
    return Rat(total, BigInt(N * N * N));
}

Rat energy4(const std::vector<long>& a1, const std::vector<long>& a2,
            const std::vector<long>& a3, const std::vector<long>& a4, const BigInt& N) {
    long n = to_long(N);
    auto c1 = counts_of(a1, n), c2 = counts_of(a2, n), c3 = counts_of(a3, n),
         c4 = counts_of(a4, n);
    BigInt total = 0;
    for (long z = 0; z < n; ++z) {
        long long m13 = 0, m24 = 0;
        for (long x = 0; x < n; ++x) {
            m13 += c1[x] * c3[((x - z) % n + n) % n];
            m24 += c2[x] * c4[((x + z) % n + n) % n];
        }
        total += BigInt(static_cast<long>(m13)) * BigInt(static_cast<long>(m24));
    }
    return Rat(total, BigInt(N * N * N));
}

QuadrupleCount additive_quadruple_count(
    const std::vector<long>& H, const std::function<const FnZN&(long)>& chi,
    double delta, double inner_threshold, const BigInt& N, const FnZN* f1,
    const FnZN* f2, int threads,
    const std::function<void(long, long, long, long, double)>& on_quadruple) {
    if (on_quadruple) threads = 1;  // the report callback needs a stable order
    long n = to_long(N);
    QuadrupleCount out;
    Rat eta(static_cast<long>(H.size()), n);
    // eta^8 delta^4 N^3 / 2; delta enters as the exact rational it was given as
    Rat dr(static_cast<long>(std::llround(delta * 1e9)), 1000000000L);
    out.bound = pow(eta, 8) * pow(dr, 4) * Rat(BigInt(N * N * N)) / Rat(2);
    if (H.empty()) return out;

    if (f1 && f2) {
        out.hypothesis_verified = true;
        for (long h : H) {
            const FnZN& ch = chi(h);
            Cplx s = 0;
            for (long x = 0; x < n; ++x)
                s += f1->at(x) * f2->at(x + h) * ch.at(x);
            if (std::abs(s) / n < delta - 1e-12) {
                out.hypothesis_verified = false;
                break;
            }
        }
    }

    std::vector<bool> in_h(n, false);
    for (long h : H) in_h[((h % n) + n) % n] = true;

    std::vector<long long> counted(64, 0), totals(64, 0);
    std::vector<long> hs(H);
    parallel_for_chunks(static_cast<long>(hs.size()), threads,
                        [&](long lo, long hi, int chunk) {
        for (long i = lo; i < hi; ++i) {
            long h1 = hs[i];
            for (long h2 : hs)
                for (long h3 : hs) {
                    long h4 = ((h1 + h2 - h3) % n + n) % n;
                    if (!in_h[h4]) continue;
                    ++totals[chunk];
                    const FnZN &c1 = chi(h1), &c2 = chi(h2), &c3 = chi(h3), &c4 = chi(h4);
                    long shift = h1 - h4;
                    Cplx s = 0;
                    for (long x = 0; x < n; ++x)
                        s += c1.at(x) * c2.at(x + shift) *
                             std::conj(c3.at(x) * c4.at(x + shift));
                    double corr = std::abs(s) / n;
                    if (on_quadruple) on_quadruple(h1, h2, h3, h4, corr);
                    if (corr >= inner_threshold - 1e-12) ++counted[chunk];
                }
        }
    });
    for (int i = 0; i < 64; ++i) {
        out.count += counted[i];
        out.additive_total += totals[i];
    }
    out.threshold_pass = Rat(static_cast<long>(out.count)) >= out.bound;
    return out;
}

FreimanReport freiman_check(const std::vector<long>& a,
                            const std::function<Mod1(long)>& f, int k,
                            const BigInt& N, long cap) {
    long n = to_long(N);
    // Enumerate k-multisets of A; group by sum mod N; compare f-sums.
    long m = static_cast<long>(a.size());
    double tuples = 1;
    for (int i = 0; i < k; ++i) tuples = tuples * (m + i) / (i + 1);
    if (tuples > static_cast<double>(cap))
        throw std::runtime_error("freiman_check: enumeration cap exceeded");

    std::vector<Mod1> fv;
    fv.reserve(m);
    for (long x : a) fv.push_back(f(x));

    struct Entry {
        Mod1 fsum;
        std::vector<long> tuple;
    };
    std::vector<std::vector<Entry>> by_sum(n);
    std::vector<int> idx(k, 0);
    FreimanReport rep;
    while (true) {
        long sum = 0;
        Mod1 fsum;
        std::vector<long> tuple(k);
        for (int i = 0; i < k; ++i) {
            sum += a[idx[i]];
            fsum = fsum + fv[idx[i]];
            tuple[i] = a[idx[i]];
        }
        long s = ((sum % n) + n) % n;
        for (const auto& e : by_sum[s]) {
            if (!(e.fsum == fsum)) {
                rep.ok = false;
                rep.lhs = e.tuple;
                rep.rhs = tuple;
                return rep;
            }
        }
        by_sum[s].push_back({fsum, tuple});
        // next nondecreasing index tuple
        int i = k - 1;
        while (i >= 0 && idx[i] == m - 1) --i;
        if (i < 0) break;
        int v = idx[i] + 1;
        for (int j = i; j < k; ++j) idx[j] = v;
    }
    return rep;
}

double fit_bracket_linear(const std::vector<long>& bohr_members,
                          const std::function<double(long)>& f,
                          const RatVec& candidate_freqs, const BigInt& N,
                          std::vector<double>* coeffs_out) {
    (void)N;  // frequencies already carry the modulus
    // Normal equations for f(x) ~ c0 + sum_i c_i {alpha_i x} over the set.
    size_t k = candidate_freqs.size() + 1;
    std::vector<std::vector<double>> ata(k, std::vector<double>(k, 0.0));
    std::vector<double> atb(k, 0.0);
    auto row_of = [&](long x) {
        std::vector<double> row(k);
        row[0] = 1.0;
        for (size_t i = 1; i < k; ++i)
            row[i] = frac(candidate_freqs[i - 1] * Rat(x)).to_double();
        return row;
    };
    for (long x : bohr_members) {
        auto row = row_of(x);
        double y = f(x);
        for (size_t i = 0; i < k; ++i) {
            atb[i] += row[i] * y;
            for (size_t j = 0; j < k; ++j) ata[i][j] += row[i] * row[j];
        }
    }
    // Gaussian elimination with small ridge for degenerate candidate sets.
    for (size_t i = 0; i < k; ++i) ata[i][i] += 1e-12;
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < k; ++r)
            if (std::fabs(ata[r][col]) > std::fabs(ata[piv][col])) piv = r;
        std::swap(ata[piv], ata[col]);
        std::swap(atb[piv], atb[col]);
        double d = ata[col][col];
        for (size_t r = 0; r < k; ++r) {
            if (r == col || ata[r][col] == 0.0) continue;
            double fct = ata[r][col] / d;
            for (size_t cc = 0; cc < k; ++cc) ata[r][cc] -= fct * ata[col][cc];
            atb[r] -= fct * atb[col];
        }
    }
    std::vector<double> coef(k);
    for (size_t i = 0; i < k; ++i) coef[i] = atb[i] / ata[i][i];
    double ss = 0;
    for (long x : bohr_members) {
        auto row = row_of(x);
        double pred = 0;
        for (size_t i = 0; i < k; ++i) pred += coef[i] * row[i];
        double r = f(x) - pred;
        ss += r * r;
    }
    if (coeffs_out) *coeffs_out = coef;
    return bohr_members.empty() ? 0.0 : std::sqrt(ss / bohr_members.size());
}

}  // namespace hofa
