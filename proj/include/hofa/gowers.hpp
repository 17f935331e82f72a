#pragma once

#include <vector>

#include "hofa/fn_zn.hpp"
#include "hofa/rational.hpp"

namespace hofa {

/// (Delta_h f)(x) = f(x + h) conj(f(x)).
FnZN mult_derivative(const FnZN& f, long h);

/// ||f||_{U^s}, s in {1,..,4}. U^2 goes through the DFT identity
/// ||f||_{U^2}^4 = sum |fhat|^4; U^3/U^4 by the derivative recursion.
double gowers_norm(const FnZN& f, int s, int threads = 1);

/// Direct 2^s-fold box average, O(N^{s+1}); the oracle route.
double gowers_norm_naive(const FnZN& f, int s);

/// Integer polynomial y -> sum c_i y^i with c_0 = 0 enforced by callers that
/// need P(0) = 0.
struct IntPoly {
    std::vector<long> coeffs;  // coeffs[i] multiplies y^i

    long eval(long y) const {
        long acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
        return acc;
    }
    long at0() const { return coeffs.empty() ? 0 : coeffs[0]; }
};

/// Lambda(f, g, k, p) = E_{x,y} f(x) g(x+P(y)) k(x+Q(y)) p(x+P(y)+Q(y)).
Cplx lambda(const FnZN& f, const FnZN& g, const FnZN& k, const FnZN& p,
            const IntPoly& P, const IntPoly& Q);

/// Lambda^1(f, g, k, p) = E_{x,y,z} f(x) g(x+y) k(x+z) p(x+y+z).
Cplx lambda1(const FnZN& f, const FnZN& g, const FnZN& k, const FnZN& p);

/// D(f,g,k)(x) = E_y f(x-P(y)-Q(y)) g(x-Q(y)) k(x-P(y)).
FnZN dual_D(const FnZN& f, const FnZN& g, const FnZN& k, const IntPoly& P,
            const IntPoly& Q);

}  // namespace hofa
