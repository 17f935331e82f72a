#include "hofa/fn_zn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hofa {

FnZN FnZN::constant(long n, Cplx c) {
    FnZN f;
    f.n = n;
    f.values.assign(n, c);
    return f;
}

FnZN FnZN::indicator(long n, const std::vector<long>& support) {
    FnZN f = constant(n, 0.0);
    for (long s : support) f.values[f.mod(s)] = 1.0;
    return f;
}

FnZN FnZN::character(long n, long freq) {
    FnZN f;
    f.n = n;
    f.values.resize(n);
    for (long x = 0; x < n; ++x) {
        double t = 2.0 * std::numbers::pi * freq * x / static_cast<double>(n);
        f.values[x] = {std::cos(t), std::sin(t)};
    }
    return f;
}

double FnZN::sup_norm() const {
    double m = 0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

Cplx FnZN::mean() const {
    Cplx s = 0;
    for (const auto& v : values) s += v;
    return s / static_cast<double>(n);
}

namespace {

// Precomputed-twiddle O(N^2) transform; exact enough at laboratory sizes.
FnZN transform(const FnZN& f, int sign, bool normalize) {
    long n = f.n;
    if (n <= 0) throw std::invalid_argument("dft: empty function");
    std::vector<Cplx> tw(n);
    for (long k = 0; k < n; ++k) {
        double t = sign * 2.0 * std::numbers::pi * k / static_cast<double>(n);
        tw[k] = {std::cos(t), std::sin(t)};
    }
    FnZN out;
    out.n = n;
    out.values.assign(n, 0.0);
    for (long xi = 0; xi < n; ++xi) {
        Cplx s = 0;
        for (long x = 0; x < n; ++x) s += f.values[x] * tw[(xi * x) % n];
        out.values[xi] = normalize ? s / static_cast<double>(n) : s;
    }
    return out;
}

}  // namespace

FnZN dft(const FnZN& f) { return transform(f, -1, true); }

FnZN idft(const FnZN& fhat) { return transform(fhat, +1, false); }

}  // namespace hofa
