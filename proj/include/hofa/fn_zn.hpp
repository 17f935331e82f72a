#pragma once

#include <complex>
#include <vector>

#include "hofa/rational.hpp"

namespace hofa {

using Cplx = std::complex<double>;

/// A complex-valued function on Z/NZ.
struct FnZN {
    long n = 0;
    std::vector<Cplx> values;

    static FnZN constant(long n, Cplx c = 1.0);
    static FnZN indicator(long n, const std::vector<long>& support);
    /// e(2 pi i freq * x / n).
    static FnZN character(long n, long freq);

    Cplx at(long x) const { return values[mod(x)]; }
    long mod(long x) const { return ((x % n) + n) % n; }
    double sup_norm() const;
    bool one_bounded(double tol = 1e-12) const { return sup_norm() <= 1.0 + tol; }
    Cplx mean() const;
};

/// fhat(xi) = E_x f(x) e(-2 pi i xi x / N).
FnZN dft(const FnZN& f);
/// Inverse of dft: f(x) = sum_xi fhat(xi) e(2 pi i xi x / N).
FnZN idft(const FnZN& fhat);

}  // namespace hofa
