#include <doctest.h>

#include "hofa/additive.hpp"
#include "hofa/config.hpp"
#include "hofa/generators.hpp"

using namespace hofa;

TEST_CASE("bohr sets") {
    BigInt N(7);
    SUBCASE("empty frequency set gives everything") {
        auto b = bohr_build({}, Rat(1, 10), N);
        CHECK(b.members.size() == 7);
    }
    SUBCASE("radius above 1/2 gives everything") {
        auto b = bohr_build({Rat(1, 7)}, Rat(3, 5), N);
        CHECK(b.members.size() == 7);
    }
    SUBCASE("fixed membership") {
        auto b = bohr_build({Rat(1, 7)}, Rat(1, 7) + Rat(1, 100), N);
        CHECK(b.members == std::vector<long>{0, 1, 6});
        CHECK(b.contains(6));
        CHECK(!b.contains(2));
    }
    SUBCASE("zero always belongs") {
        Rng rng(61);
        for (int i = 0; i < 20; ++i) {
            RatVec freqs{Rat(rng.range(0, 100), 101)};
            auto b = bohr_build(freqs, Rat(rng.range(1, 200), 500), BigInt(101));
            REQUIRE(!b.members.empty());
            CHECK(b.members[0] == 0);
        }
    }
    SUBCASE("frequency denominators must divide N") {
        CHECK_THROWS(bohr_build({Rat(1, 3)}, Rat(1, 10), N));
    }
}

TEST_CASE("regular radius search") {
    SUBCASE("empty set returns rho") {
        auto r = find_regular_radius({}, Rat(1, 5), BigInt(101));
        CHECK(r.found);
        CHECK(r.rho == Rat(1, 5));
    }
    SUBCASE("single frequency at N = 101") {
        auto r = find_regular_radius({Rat(1, 101)}, Rat(1, 5), BigInt(101));
        CHECK(r.found);
        CHECK(r.rho >= Rat(1, 10));
        CHECK(r.rho <= Rat(1, 5));
    }
    SUBCASE("returned radius satisfies the inequality on the grid") {
        Rng rng(62);
        BigInt N(101);
        for (int trial = 0; trial < 5; ++trial) {
            RatVec freqs{Rat(rng.range(1, 100), 101), Rat(rng.range(1, 100), 101)};
            Rat rho(rng.range(10, 200), 500);
            auto r = find_regular_radius(freqs, rho, N);
            REQUIRE(r.found);
            long s = 2;
            Rat eps(1, 100 * s);
            long base = static_cast<long>(bohr_build(freqs, r.rho, N).members.size());
            for (int i = 0; i < 32; ++i) {
                long wide = static_cast<long>(
                    bohr_build(freqs, r.rho * (Rat(1) + eps), N).members.size());
                CHECK(Rat(wide) >= Rat(base) * (Rat(1) - Rat(100 * s) * eps));
                CHECK(Rat(wide) <= Rat(base) * (Rat(1) + Rat(100 * s) * eps));
                eps /= Rat(2);
            }
        }
    }
}

TEST_CASE("additive energy") {
    BigInt N(11);
    SUBCASE("full set has energy 1... times the normalization") {
        std::vector<long> all;
        for (long x = 0; x < 11; ++x) all.push_back(x);
        CHECK(energy(all, N) == Rat(1));
    }
    SUBCASE("singletons") {
        CHECK(energy({3}, N) == Rat(1, 11 * 11 * 11));
    }
    SUBCASE("convolution route equals the quadruple loop") {
        Rng rng(63);
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_subset(rng, 11);
            auto b = random_subset(rng, 11);
            CHECK(energy(a, b, N) == energy_naive(a, b, N));
        }
    }
    SUBCASE("four-set energy Cauchy-Schwarz, exact") {
        Rng rng(64);
        BigInt M(31);
        for (int trial = 0; trial < 100; ++trial) {
            auto a1 = random_subset(rng, 31), a2 = random_subset(rng, 31);
            auto a3 = random_subset(rng, 31), a4 = random_subset(rng, 31);
            Rat e4 = energy4(a1, a2, a3, a4, M);
            Rat prod = energy(a1, M) * energy(a2, M) * energy(a3, M) * energy(a4, M);
            CHECK(pow(e4, 4) <= prod);
        }
    }
    SUBCASE("energy4 diagonal matches energy") {
        Rng rng(65);
        auto a = random_subset(rng, 11);
        auto b = random_subset(rng, 11);
        CHECK(energy4(a, b, a, b, N) == energy(a, b, N));
    }
}

TEST_CASE("additive quadruple counting") {
    SUBCASE("all-one family counts every quadruple") {
        BigInt N(13);
        std::vector<long> H;
        for (long h = 0; h < 13; ++h) H.push_back(h);
        FnZN one = FnZN::constant(13);
        auto qc = additive_quadruple_count(
            H, [&](long) -> const FnZN& { return one; }, 0.5, 0.5, N);
        CHECK(qc.additive_total == 13 * 13 * 13);
        CHECK(qc.count == qc.additive_total);
        CHECK(qc.threshold_pass);
    }
    SUBCASE("empty H counts nothing") {
        BigInt N(13);
        FnZN one = FnZN::constant(13);
        auto qc = additive_quadruple_count(
            {}, [&](long) -> const FnZN& { return one; }, 0.5, 0.5, N);
        CHECK(qc.count == 0);
    }
    SUBCASE("planted family with witnesses") {
        Rng rng(66);
        BigInt N(31);
        auto fam = plant_chi_family(rng, N, 0.5);
        double eta = double(fam.H.size()) / 31;
        auto qc = additive_quadruple_count(
            fam.H, [&](long h) -> const FnZN& { return fam.chi[h]; }, 0.5,
            std::pow(eta, 4) * 0.25, N, &fam.f1, &fam.f2);
        CHECK(qc.hypothesis_verified);
        CHECK(qc.threshold_pass);
    }
}

TEST_CASE("freiman homomorphism checking") {
    BigInt N(101);
    SUBCASE("linear maps pass every order") {
        std::vector<long> a{1, 4, 9, 12, 20};
        for (int k = 2; k <= 4; ++k) {
            auto rep = freiman_check(
                a, [&](long x) { return Mod1(Rat(3 * x, 101)); }, k, N);
            CHECK(rep.ok);
        }
    }
    SUBCASE("squares fail with a witness") {
        std::vector<long> a{0, 1, 2, 3};
        auto rep = freiman_check(
            a, [&](long x) { return Mod1(Rat(x * x, 101)); }, 2, N);
        CHECK(!rep.ok);
        REQUIRE(rep.lhs.size() == 2);
        long s1 = rep.lhs[0] + rep.lhs[1], s2 = rep.rhs[0] + rep.rhs[1];
        CHECK((s1 - s2) % 101 == 0);
    }
    SUBCASE("bracket-linear maps on a small Bohr set pass order 8") {
        BigInt M(31);
        RatVec freqs{Rat(3, 31), Rat(1, 31)};
        auto b = bohr_build(freqs, Rat(1, 8), M);
        auto rep = freiman_check(
            b.members,
            [&](long x) {
                return Mod1(Rat(2) * frac(Rat(3, 31) * Rat(x)) +
                            Rat(5) * frac(Rat(1, 31) * Rat(x)));
            },
            8, M);
        CHECK(rep.ok);
    }
    SUBCASE("cap is enforced") {
        std::vector<long> a(60);
        for (int i = 0; i < 60; ++i) a[i] = i;
        CHECK_THROWS(freiman_check(
            a, [&](long x) { return Mod1(Rat(x, 101)); }, 8, N, 1000));
    }
}

TEST_CASE("bracket linear least squares experiment") {
    BigInt N(101);
    RatVec freqs{Rat(7, 101), Rat(19, 101)};
    auto b = bohr_build(freqs, Rat(1, 6), N);
    // a function that is exactly of the fitted form
    auto f = [&](long x) {
        return 0.25 + 1.5 * frac(Rat(7, 101) * Rat(x)).to_double() -
               0.75 * frac(Rat(19, 101) * Rat(x)).to_double();
    };
    double rms = fit_bracket_linear(b.members, f, freqs, N);
    CHECK(rms < 1e-9);
}
