#include "hofa/gowers.hpp"

#include <cmath>
#include <stdexcept>

#include "hofa/config.hpp"

namespace hofa {

FnZN mult_derivative(const FnZN& f, long h) {
    FnZN out;
    out.n = f.n;
    out.values.resize(f.n);
    for (long x = 0; x < f.n; ++x)
        out.values[x] = f.at(x + h) * std::conj(f.values[x]);
    return out;
}

namespace {

double u2_fourth(const FnZN& f) {
    FnZN fh = dft(f);
    double s = 0;
    for (const auto& c : fh.values) {
        double a = std::norm(c);
        s += a * a;
    }
    return s;
}

double u3_eighth(const FnZN& f) {
    double s = 0;
    for (long h = 0; h < f.n; ++h) s += u2_fourth(mult_derivative(f, h));
    return s / static_cast<double>(f.n);
}

}  // namespace

double gowers_norm(const FnZN& f, int s, int threads) {
    switch (s) {
        case 1:
            return std::abs(f.mean());
        case 2:
            return std::pow(u2_fourth(f), 0.25);
        case 3:
            return std::pow(u3_eighth(f), 1.0 / 8);
        case 4: {
            std::vector<double> partial(64, 0.0);
            parallel_for_chunks(f.n, threads, [&](long lo, long hi, int chunk) {
                double acc = 0;
                for (long h = lo; h < hi; ++h) acc += u3_eighth(mult_derivative(f, h));
                partial[chunk] = acc;
            });
            double s16 = 0;
            for (double p : partial) s16 += p;
            return std::pow(s16 / static_cast<double>(f.n), 1.0 / 16);
        }
        default:
            throw std::invalid_argument("gowers_norm: s must be 1..4");
    }
}

double gowers_norm_naive(const FnZN& f, int s) {
    if (s < 1 || s > 4) throw std::invalid_argument("gowers_norm_naive: s must be 1..4");
    long n = f.n;
    // E_{x, h_1..h_s} prod_{w in {0,1}^s} conj^{|w|} f(x + w . h)
    std::vector<long> h(s, 0);
    double total = 0;
    // odometer over h
    while (true) {
        for (long x = 0; x < n; ++x) {
            Cplx prod = 1.0;
            for (int mask = 0; mask < (1 << s); ++mask) {
                long arg = x;
                int bits = 0;
                for (int b = 0; b < s; ++b)
                    if (mask & (1 << b)) {
                        arg += h[b];
                        ++bits;
                    }
                Cplx v = f.at(arg);
                prod *= (bits % 2) ? std::conj(v) : v;
            }
            total += prod.real();  // the box sum is real
        }
        int i = 0;
        while (i < s && ++h[i] == n) h[i++] = 0;
        if (i == s) break;
    }
    double count = std::pow(static_cast<double>(n), s + 1);
    return std::pow(std::max(0.0, total / count), 1.0 / (1 << s));
}

Cplx lambda(const FnZN& f, const FnZN& g, const FnZN& k, const FnZN& p,
            const IntPoly& P, const IntPoly& Q) {
    long n = f.n;
    if (g.n != n || k.n != n || p.n != n)
        throw std::invalid_argument("lambda: modulus mismatch");
    if (P.at0() != 0 || Q.at0() != 0)
        throw std::invalid_argument("lambda: P(0) and Q(0) must vanish");
    Cplx total = 0;
    for (long y = 0; y < n; ++y) {
        long py = f.mod(P.eval(y)), qy = f.mod(Q.eval(y));
        for (long x = 0; x < n; ++x)
            total += f.values[x] * g.at(x + py) * k.at(x + qy) * p.at(x + py + qy);
    }
    return total / static_cast<double>(n * n);
}

Cplx lambda1(const FnZN& f, const FnZN& g, const FnZN& k, const FnZN& p) {
    long n = f.n;
    if (g.n != n || k.n != n || p.n != n)
        throw std::invalid_argument("lambda1: modulus mismatch");
    Cplx total = 0;
    for (long y = 0; y < n; ++y)
        for (long z = 0; z < n; ++z)
            for (long x = 0; x < n; ++x)
                total += f.values[x] * g.at(x + y) * k.at(x + z) * p.at(x + y + z);
    double nn = static_cast<double>(n);
    return total / (nn * nn * nn);
}

FnZN dual_D(const FnZN& f, const FnZN& g, const FnZN& k, const IntPoly& P,
            const IntPoly& Q) {
    long n = f.n;
    if (g.n != n || k.n != n)
        throw std::invalid_argument("dual_D: modulus mismatch");
    if (P.at0() != 0 || Q.at0() != 0)
        throw std::invalid_argument("dual_D: P(0) and Q(0) must vanish");
    FnZN out = FnZN::constant(n, 0.0);
    for (long y = 0; y < n; ++y) {
        long py = f.mod(P.eval(y)), qy = f.mod(Q.eval(y));
        for (long x = 0; x < n; ++x)
            out.values[x] += f.at(x - py - qy) * g.at(x - qy) * k.at(x - py);
    }
    for (auto& v : out.values) v /= static_cast<double>(n);
    return out;
}

}  // namespace hofa
