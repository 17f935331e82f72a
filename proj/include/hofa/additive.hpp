#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hofa/fn_zn.hpp"
#include "hofa/linalg.hpp"
#include "hofa/rational.hpp"

namespace hofa {

/// B(S, rho) = { x in Z/NZ : ||alpha x|| < rho for all alpha in S }.
struct BohrSet {
    BigInt N;
    RatVec freqs;          // denominators dividing N
    Rat rho;
    std::vector<long> members;  // sorted canonical representatives in [0, N)

    bool contains(long x) const;
};

BohrSet bohr_build(const RatVec& freqs, const Rat& rho, const BigInt& N);

struct RegularRadiusResult {
    bool found = false;
    Rat rho;              // the regular radius when found, else best candidate
    long violations = 0;  // for the best candidate
};

/// Searches rho' in [rho/2, rho] (descending grid of `candidates` points)
/// such that |B(rho')| (1 - 100|S|eps) <= |B(rho'(1+eps))| <= |B(rho')|
/// (1 + 100|S|eps) for every eps in a geometric grid of `grid_points` values
/// below 1/(100|S|). All comparisons exact.
RegularRadiusResult find_regular_radius(const RatVec& freqs, const Rat& rho,
                                        const BigInt& N, int grid_points = 32,
                                        int candidates = 64);

/// E(A, B) = #{(a, a', b, b') : a + b = a' + b'} / N^3 (pairs from A x B),
/// via convolution counts.
Rat energy(const std::vector<long>& a, const std::vector<long>& b, const BigInt& N);
Rat energy(const std::vector<long>& a, const BigInt& N);
/// Direct quadruple loop; oracle for small sets.
Rat energy_naive(const std::vector<long>& a, const std::vector<long>& b, const BigInt& N);

/// E(A1, A2, A3, A4) = (1/N^3) sum_z |A1 ∩ (A3 + z)| |A2 ∩ (A4 + z)|,
/// counting quadruples a1 + a2 = a3 + a4.
Rat energy4(const std::vector<long>& a1, const std::vector<long>& a2,
            const std::vector<long>& a3, const std::vector<long>& a4, const BigInt& N);

struct QuadrupleCount {
    long long count = 0;           // quadruples above the inner threshold
    long long additive_total = 0;  // all additive quadruples in H^4
    Rat bound;                     // eta^8 delta^4 N^3 / 2
    bool threshold_pass = false;
    bool hypothesis_verified = false;
};

/// Counts additive quadruples (h1, h2, h3, h4) in H^4 with h1+h2 = h3+h4 and
/// |E_n chi_{h1}(n) chi_{h2}(n+h1-h4) conj(chi_{h3}(n) chi_{h4}(n+h1-h4))|
/// >= inner_threshold. When witnesses (f1, f2) are given, the per-h
/// hypothesis |E_n f1(n) f2(n+h) chi_h(n)| >= delta is verified first and
/// count is compared against eta^8 delta^4 N^3/2.
QuadrupleCount additive_quadruple_count(
    const std::vector<long>& H, const std::function<const FnZN&(long)>& chi,
    double delta, double inner_threshold, const BigInt& N,
    const FnZN* f1 = nullptr, const FnZN* f2 = nullptr, int threads = 1,
    const std::function<void(long, long, long, long, double)>& on_quadruple = {});

struct FreimanReport {
    bool ok = true;
    // witness tuples with equal sums but unequal f-sums
    std::vector<long> lhs, rhs;
};

/// True iff f is a k-Freiman homomorphism on A: any two k-element multisets
/// of A with equal sums (mod N) have equal f-sums (mod 1). Exhaustive over
/// multisets; throws when the enumeration exceeds cap.
FreimanReport freiman_check(const std::vector<long>& a,
                            const std::function<Mod1(long)>& f, int k,
                            const BigInt& N, long cap = 2000000);

/// Least-squares fit of f ~ c + sum_i coef_i {alpha_i x} over x in B
/// (experiment; no completeness claim). Returns the residual rms.
double fit_bracket_linear(const std::vector<long>& bohr_members,
                          const std::function<double(long)>& f,
                          const RatVec& candidate_freqs, const BigInt& N,
                          std::vector<double>* coeffs_out = nullptr);

}  // namespace hofa
