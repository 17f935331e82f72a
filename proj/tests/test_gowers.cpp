#include <doctest.h>

#include <cmath>

#include "hofa/config.hpp"
#include "hofa/generators.hpp"
#include "hofa/gowers.hpp"

using namespace hofa;

TEST_CASE("multiplicative derivative") {
    Rng rng(51);
    long n = 13;
    FnZN f = random_phase_function(rng, n);
    SUBCASE("h = 0 gives |f|^2") {
        FnZN d = mult_derivative(f, 0);
        for (long x = 0; x < n; ++x)
            CHECK(std::abs(d.values[x] - Cplx(std::norm(f.values[x]))) < 1e-12);
    }
    SUBCASE("constants give |c|^2") {
        FnZN c = FnZN::constant(n, Cplx(0.3, 0.4));
        FnZN d = mult_derivative(c, 5);
        for (long x = 0; x < n; ++x) CHECK(std::abs(d.values[x] - Cplx(0.25)) < 1e-12);
    }
    SUBCASE("quadratic phase differences") {
        // f(x) = e(x^2 / n): Delta_h f(x) = e((2xh + h^2)/n)
        FnZN q = FnZN::constant(n);
        for (long x = 0; x < n; ++x) q.values[x] = Mod1(Rat(x * x, n)).unit();
        for (long h = 0; h < n; ++h) {
            FnZN d = mult_derivative(q, h);
            for (long x = 0; x < n; ++x) {
                Cplx expect = Mod1(Rat(2 * x * h + h * h, n)).unit();
                CHECK(std::abs(d.values[x] - expect) < 1e-12);
            }
        }
    }
}

TEST_CASE("gowers norms") {
    SUBCASE("constants have unit norm") {
        FnZN f = FnZN::constant(11);
        for (int s = 1; s <= 4; ++s)
            CHECK(std::fabs(gowers_norm(f, s) - 1.0) < 1e-9);
    }
    SUBCASE("characters have unit U^2 norm") {
        FnZN f = FnZN::character(13, 1);
        CHECK(std::fabs(gowers_norm(f, 2) - 1.0) < 1e-9);
        CHECK(gowers_norm(f, 1) < 1e-9);
    }
    SUBCASE("dual route vs naive route") {
        Rng rng(52);
        for (int trial = 0; trial < 20; ++trial) {
            long n = 6 + static_cast<long>(rng.below(19));  // <= 24 for the oracle
            FnZN f = random_phase_function(rng, n);
            for (int s = 1; s <= 3; ++s)
                CHECK(std::fabs(gowers_norm(f, s) - gowers_norm_naive(f, s)) < 1e-9);
        }
    }
    SUBCASE("monotone in s and phase invariant") {
        Rng rng(53);
        for (int trial = 0; trial < 5; ++trial) {
            long n = 16;
            FnZN f = random_phase_function(rng, n);
            double u1 = gowers_norm(f, 1), u2 = gowers_norm(f, 2);
            double u3 = gowers_norm(f, 3), u4 = gowers_norm(f, 4);
            CHECK(u1 <= u2 + 1e-9);
            CHECK(u2 <= u3 + 1e-9);
            CHECK(u3 <= u4 + 1e-9);
            FnZN g = f;
            for (long x = 0; x < n; ++x) g.values[x] *= Mod1(Rat(3 * x, n)).unit();
            CHECK(std::fabs(gowers_norm(g, 2) - u2) < 1e-9);
            CHECK(std::fabs(gowers_norm(g, 3) - u3) < 1e-9);
        }
    }
}

TEST_CASE("counting operators") {
    long n = 5;
    IntPoly P{{0, 1}};   // y
    IntPoly Q{{0, 2}};   // 2y
    SUBCASE("all-ones input averages to one") {
        FnZN one = FnZN::constant(n);
        CHECK(std::abs(lambda(one, one, one, one, P, Q) - Cplx(1.0)) < 1e-12);
        CHECK(std::abs(lambda1(one, one, one, one) - Cplx(1.0)) < 1e-12);
        FnZN d = dual_D(one, one, one, P, Q);
        for (const auto& v : d.values) CHECK(std::abs(v - Cplx(1.0)) < 1e-12);
    }
    SUBCASE("zero slot annihilates") {
        FnZN one = FnZN::constant(n), zero = FnZN::constant(n, 0.0);
        CHECK(std::abs(lambda(one, one, one, zero, P, Q)) < 1e-12);
        FnZN d = dual_D(one, one, zero, P, Q);
        for (const auto& v : d.values) CHECK(std::abs(v) < 1e-12);
    }
    SUBCASE("brute force double loop oracle") {
        FnZN ind = FnZN::indicator(n, {0, 1});
        Cplx got = lambda(ind, ind, ind, ind, P, Q);
        Cplx expect = 0;
        for (long y = 0; y < n; ++y)
            for (long x = 0; x < n; ++x)
                expect += ind.at(x) * ind.at(x + y) * ind.at(x + 2 * y) *
                          ind.at(x + 3 * y);
        expect /= static_cast<double>(n * n);
        CHECK(std::abs(got - expect) < 1e-12);
    }
    SUBCASE("lambda1 equals the U^2 fourth power on indicators") {
        Rng rng(54);
        long m = 31;
        for (int trial = 0; trial < 10; ++trial) {
            FnZN ind = FnZN::indicator(m, random_subset(rng, m));
            Cplx l1 = lambda1(ind, ind, ind, ind);
            CHECK(std::fabs(l1.real() - std::pow(gowers_norm(ind, 2), 4)) < 1e-10);
            CHECK(std::fabs(l1.imag()) < 1e-10);
        }
    }
    SUBCASE("lambda1 via the Fourier route") {
        Rng rng(55);
        long m = 17;
        FnZN f = random_phase_function(rng, m);
        // E_{x,y,z} f(x) f(x+y) f(x+z) f(x+y+z) = sum_xi fhat(xi)^2 fhat(-xi)^2
        FnZN fh = dft(f);
        Cplx expect = 0;
        for (long xi = 0; xi < m; ++xi) {
            Cplx neg = fh.values[(m - xi) % m];
            expect += fh.values[xi] * fh.values[xi] * neg * neg;
        }
        Cplx got = lambda1(f, f, f, f);
        CHECK(std::abs(got - expect) < 1e-10);
    }
    SUBCASE("degenerate progression agrees with a direct loop") {
        // P(y) = y, Q(y) = c y averages over a one-parameter subgroup
        Rng rng(56);
        long m = 19;
        IntPoly P1{{0, 1}}, Q1{{0, 3}};
        FnZN f = random_phase_function(rng, m), g = random_phase_function(rng, m);
        FnZN k = random_phase_function(rng, m), p = random_phase_function(rng, m);
        Cplx got = lambda(f, g, k, p, P1, Q1);
        Cplx expect = 0;
        for (long y = 0; y < m; ++y)
            for (long x = 0; x < m; ++x)
                expect += f.at(x) * g.at(x + y) * k.at(x + 3 * y) * p.at(x + 4 * y);
        expect /= static_cast<double>(m * m);
        CHECK(std::abs(got - expect) < 1e-12);
    }
    SUBCASE("precondition P(0) = Q(0) = 0") {
        FnZN one = FnZN::constant(n);
        IntPoly bad{{1, 1}};
        CHECK_THROWS(lambda(one, one, one, one, bad, Q));
    }
    SUBCASE("modulus mismatch") {
        FnZN one = FnZN::constant(n), other = FnZN::constant(n + 1);
        CHECK_THROWS(lambda1(one, one, one, other));
    }
}

TEST_CASE("dual function identity") {
    Rng rng(57);
    long n = 31;
    for (auto pq : {std::pair<IntPoly, IntPoly>{{{0, 1}}, {{0, 2}}},
                    std::pair<IntPoly, IntPoly>{{{0, 0, 1}}, {{0, 1}}}}) {
        for (int trial = 0; trial < 10; ++trial) {
            FnZN f = random_phase_function(rng, n);
            FnZN g = random_phase_function(rng, n);
            FnZN k = random_phase_function(rng, n);
            FnZN D = dual_D(f, g, k, pq.first, pq.second);
            double lhs = 0;
            for (const auto& v : D.values) lhs += std::norm(v);
            lhs /= n;
            FnZN fc = f, gc = g, kc = k;
            for (auto& v : fc.values) v = std::conj(v);
            for (auto& v : gc.values) v = std::conj(v);
            for (auto& v : kc.values) v = std::conj(v);
            Cplx rhs = lambda(fc, gc, kc, D, pq.first, pq.second);
            CHECK(std::fabs(lhs - rhs.real()) < 1e-10);
            CHECK(std::fabs(rhs.imag()) < 1e-10);
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    Rng rng(58);
    FnZN f = random_phase_function(rng, 24);
    double u4_serial = gowers_norm(f, 4, 1);
    double u4_parallel = gowers_norm(f, 4, 4);
    CHECK(u4_serial == u4_parallel);  // bitwise: fixed chunking, ordered sums
}
