#include <doctest.h>

#include <cmath>

#include "hofa/config.hpp"
#include "hofa/fourier.hpp"

using namespace hofa;

TEST_CASE("dft basics") {
    SUBCASE("constant transforms to a point mass at zero") {
        FnZN f = FnZN::constant(16);
        FnZN fh = dft(f);
        CHECK(std::abs(fh.values[0] - Cplx(1.0)) < 1e-12);
        for (long x = 1; x < 16; ++x) CHECK(std::abs(fh.values[x]) < 1e-12);
    }
    SUBCASE("character concentrates at its frequency") {
        FnZN f = FnZN::character(17, 1);
        FnZN fh = dft(f);
        CHECK(std::abs(fh.values[1] - Cplx(1.0)) < 1e-12);
        for (long x = 0; x < 17; ++x)
            if (x != 1) CHECK(std::abs(fh.values[x]) < 1e-12);
    }
    SUBCASE("inversion and Parseval") {
        Rng rng(41);
        for (int trial = 0; trial < 10; ++trial) {
            long n = 8 + static_cast<long>(rng.below(40));
            FnZN f = FnZN::constant(n);
            for (auto& v : f.values)
                v = {rng.uniform01() * 2 - 1, rng.uniform01() * 2 - 1};
            FnZN fh = dft(f);
            FnZN back = idft(fh);
            double t1 = 0, t2 = 0;
            for (long x = 0; x < n; ++x) {
                CHECK(std::abs(back.values[x] - f.values[x]) < 1e-12);
                t1 += std::norm(f.values[x]) / n;
                t2 += std::norm(fh.values[x]);
            }
            CHECK(std::fabs(t1 - t2) < 1e-12 * std::max(1.0, t1));
        }
    }
}

TEST_CASE("fractional product expansion") {
    BigInt N(31);
    FourierOptions opt;
    opt.delta = 0.05;
    SUBCASE("zero phases collapse to the constant term") {
        std::vector<BracketTerm> prods{
            BracketTerm::frac_prod(Rat(1), Rat(0), Rat(0))};
        auto e = expand_frac_product(prods, N, opt);
        CHECK(e.measured_l1_error <= 1e-9);
        double mass_at_zero = 0;
        for (const auto& t : e.terms)
            if (frac(t.freq_n).is_zero()) mass_at_zero += std::abs(t.coef);
        CHECK(std::fabs(mass_at_zero - 1.0) < 1e-9);
    }
    SUBCASE("zero coefficient means the constant expansion") {
        std::vector<BracketTerm> prods{
            BracketTerm::frac_prod(Rat(0), Rat(1, 31), Rat(2, 31))};
        auto e = expand_frac_product(prods, N, opt);
        CHECK(e.measured_l1_error <= 1e-9);
    }
    SUBCASE("measured certificate at the spec instance") {
        std::vector<BracketTerm> prods{
            BracketTerm::frac_prod(Rat(1), Rat(1, 31), Rat(2, 31))};
        auto e = expand_frac_product(prods, N, opt);
        CHECK(!e.degenerate);
        CHECK(e.measured_l1_error <= 0.05);
        for (const auto& t : e.terms) {
            CHECK((t.freq_n * Rat(31)).is_integer());
            CHECK(t.freq_h.is_zero());
        }
        CHECK(e.l1_bound >= 0.99);  // unit mass cannot shrink
    }
    SUBCASE("integer coefficients are required") {
        std::vector<BracketTerm> prods{
            BracketTerm::frac_prod(Rat(1, 2), Rat(1, 31), Rat(2, 31))};
        CHECK_THROWS(expand_frac_product(prods, N, opt));
    }
}

TEST_CASE("bilinear expansion") {
    BigInt N(31), H(31);
    FourierOptions opt;
    opt.delta = 0.05;
    SUBCASE("zero phases") {
        std::vector<BilinearProd> prods{{BigInt(1), Rat(0), Rat(0), Rat(0), Rat(0)}};
        auto e = expand_bilinear(prods, N, H, opt);
        CHECK(e.measured_l1_error <= 1e-9);
    }
    SUBCASE("separable case reduces to one variable") {
        // {alpha h}{0 n} vanishes identically, so the target is 1
        std::vector<BilinearProd> prods{{BigInt(2), Rat(3, 31), Rat(0), Rat(0), Rat(0)}};
        auto e = expand_bilinear(prods, N, H, opt);
        CHECK(e.measured_l1_error <= opt.delta);
    }
    SUBCASE("random denominator-31 instance") {
        std::vector<BilinearProd> prods{
            {BigInt(1), Rat(4, 31), Rat(0), Rat(9, 31), Rat(0)}};
        auto e = expand_bilinear(prods, N, H, opt);
        CHECK(!e.degenerate);
        CHECK(e.measured_l1_error <= 0.05);
        for (const auto& t : e.terms) {
            CHECK((t.freq_n * Rat(31)).is_integer());
            CHECK((t.freq_h * Rat(31)).is_integer());
        }
    }
}

TEST_CASE("trivial expansion") {
    BigInt N(31);
    FourierOptions opt;
    opt.delta = 0.05;
    SUBCASE("integer vector gives the exact single phase") {
        RatVec a{Rat(2), Rat(-1)};
        RatVec alpha{Rat(3, 31), Rat(5, 31)};
        auto e = expand_trivial(a, alpha, N, opt);
        CHECK(e.measured_l1_error <= 1e-9);
        // dominant mass at [a] . alpha = 1/31
        Rat expect = frac(Rat(2) * Rat(3, 31) - Rat(5, 31));
        double mass = 0;
        for (const auto& t : e.terms)
            if (frac(t.freq_n) == expect) mass += std::abs(t.coef);
        CHECK(mass > 0.99);
    }
    SUBCASE("zero vector gives the constant") {
        auto e = expand_trivial({Rat(0)}, {Rat(3, 31)}, N, opt);
        CHECK(e.measured_l1_error <= 1e-9);
    }
    SUBCASE("random instance meets the budget") {
        RatVec a{Rat(1) + Rat(4, 31), Rat(-1) + Rat(9, 31)};
        RatVec alpha{Rat(7, 31), Rat(11, 31)};
        auto e = expand_trivial(a, alpha, N, opt);
        CHECK(!e.degenerate);
        CHECK(e.measured_l1_error <= 0.05);
        for (const auto& t : e.terms) CHECK((t.freq_n * Rat(31)).is_integer());
    }
}

TEST_CASE("box product expansion") {
    FourierOptions opt;
    opt.delta = 0.05;
    SUBCASE("empty sum is the constant") {
        auto e = expand_box_product({}, {}, opt);
        REQUIRE(e.terms.size() == 1);
        CHECK(std::abs(e.terms[0].coef - Cplx(1.0)) < 1e-12);
    }
    SUBCASE("half-integer frequencies and measured error") {
        std::vector<std::vector<Rat>> u(1), v(1);
        for (long t = 0; t < 10; ++t) {
            u[0].push_back(frac(Rat(3 * t, 31)));
            v[0].push_back(frac(Rat(5 * t, 31)));
        }
        auto e = expand_box_product(u, v, opt);
        CHECK(!e.degenerate);
        CHECK(e.measured_l1_error <= 0.05);
        for (const auto& t : e.terms) {
            CHECK(std::abs(t.coef) <= 1.0 + 1e-9);
            for (const auto& f : t.freq_u) CHECK((f * Rat(2)).is_integer());
            for (const auto& f : t.freq_v) CHECK((f * Rat(2)).is_integer());
        }
    }
    SUBCASE("frozen second argument matches the trivial expansion") {
        // one factor with v frozen at a single value c: e({u(n)} c)
        BigInt N(31);
        Rat au(4, 31);
        Rat c = frac(Rat(7, 31) * Rat(5));
        std::vector<std::vector<Rat>> u(1), v(1);
        for (long t = 0; t < 31; ++t) u[0].push_back(frac(au * Rat(t)));
        v[0].push_back(c);
        auto box = expand_box_product(u, v, opt);
        auto triv = expand_trivial({c}, {au}, N, opt);
        REQUIRE(!box.degenerate);
        REQUIRE(!triv.degenerate);
        // both expansions are within delta of the same target in L^1, so
        // their average deviation is at most 2 delta
        double err = 0;
        for (long t = 0; t < 31; ++t)
            err += std::abs(box.eval({u[0][t]}, {c}) - triv.eval(BigInt(t)));
        CHECK(err / 31 < 2 * 0.05 + 1e-9);
    }
}
