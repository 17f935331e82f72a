#include <doctest.h>

#include "hofa/config.hpp"
#include "hofa/rational.hpp"

using namespace hofa;

TEST_CASE("fractional part lands in the signed window") {
    CHECK(frac(Rat(3, 4)) == Rat(-1, 4));
    CHECK(frac(Rat(1, 2)) == Rat(1, 2));  // boundary point included
    // -7/3 + 2 is the unique representative in the window (the integer
    // part must be an integer, so the shift is 2, not 8/3)
    CHECK(frac(Rat(-7, 3)) == Rat(-1, 3));
    CHECK(frac(Rat(0)) == Rat(0));
    CHECK(frac(Rat(17)) == Rat(0));
}

TEST_CASE("integer part complements frac exactly") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        Rat x(rng.range(-4000, 4000), rng.range(1, 97));
        Rat f = frac(x);
        CHECK(Rat(int_part(x)) + f == x);
        CHECK(f > Rat(-1, 2));
        CHECK(f <= Rat(1, 2));
    }
}

TEST_CASE("frac is additive mod 1") {
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
        Rat x(rng.range(-500, 500), rng.range(1, 61));
        Rat y(rng.range(-500, 500), rng.range(1, 61));
        CHECK(frac(frac(x) + frac(y)) == frac(x + y));
    }
}

TEST_CASE("circle distance") {
    CHECK(dist_circle(Rat(2, 3)) == Rat(1, 3));
    CHECK(dist_circle(Rat(5)) == Rat(0));
    CHECK(dist_circle(Rat(1, 2)) == Rat(1, 2));
    Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        Rat x(rng.range(-500, 500), rng.range(1, 61));
        long k = rng.range(-5, 5);
        CHECK(dist_circle(x) == dist_circle(-x));
        CHECK(dist_circle(x) == dist_circle(x + Rat(k)));
        CHECK(dist_circle(x) >= Rat(0));
        CHECK(dist_circle(x) <= Rat(1, 2));
    }
}

TEST_CASE("unsigned frac variant") {
    CHECK(frac_unsigned(Rat(3, 4)) == Rat(3, 4));
    CHECK(frac_unsigned(Rat(-1, 4)) == Rat(3, 4));
}

TEST_CASE("smoothness norm") {
    // independent one-line oracle for the defining sup
    auto oracle = [](const Poly& p, long n) {
        Rat best;
        for (int i = 1; i <= p.degree(); ++i) {
            Rat v = pow(Rat(n), i) * dist_circle(p.coeff(i));
            if (v > best) best = v;
        }
        return best;
    };
    for (long n : {2L, 5L, 31L}) {
        Poly p(std::vector<Rat>{Rat(0), Rat(1, n)});  // n^{-1} x
        CHECK(c_infty_norm(p, BigInt(n)) == Rat(1));
    }
    Poly q(std::vector<Rat>{Rat(7), Rat(3), Rat(5)});
    CHECK(c_infty_norm(q, BigInt(11)) == Rat(0));
    Poly r(std::vector<Rat>{Rat(0), Rat(0), Rat(1, 10)});  // x^2 / (2*5)
    CHECK(c_infty_norm(r, BigInt(5)) == Rat(5, 2));
    CHECK(c_infty_norm(r, BigInt(5)) == oracle(r, 5));

    Rng rng(10);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> c(3);
        for (auto& x : c) x = Rat(rng.range(-40, 40), rng.range(1, 23));
        Poly p(c);
        CHECK(c_infty_norm(p, BigInt(7)) == oracle(p, 7));
    }

    // zero norm iff every nonconstant coefficient is integral
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> c(1 + rng.below(3));
        for (auto& x : c) x = Rat(rng.range(-40, 40), rng.range(1, 23));
        Poly p(c);
        bool zero = c_infty_norm(p, BigInt(7)).is_zero();
        bool all_integral = true;
        for (int j = 1; j <= p.degree(); ++j)
            if (!dist_circle(p.coeff(j)).is_zero()) all_integral = false;
        CHECK(zero == all_integral);
    }
}

TEST_CASE("polynomial algebra") {
    Poly p(std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
    CHECK(p.eval(BigInt(2)) == Rat(1 + 4 + 12));
    CHECK(p.shifted(BigInt(1)).eval(BigInt(1)) == p.eval(BigInt(2)));
    CHECK(p.dilated(Rat(2)).eval(BigInt(3)) == p.eval(BigInt(6)));
    CHECK((p * p).eval(BigInt(3)) == p.eval(BigInt(3)) * p.eval(BigInt(3)));
}

TEST_CASE("binomial basis conversion round-trips") {
    Rng rng(11);
    // C(n, 2) = (n^2 - n) / 2
    CHECK(binomial_poly(2) == Poly(std::vector<Rat>{Rat(0), Rat(-1, 2), Rat(1, 2)}));
    for (int i = 0; i < 100; ++i) {
        std::vector<Rat> c(1 + rng.below(4));
        for (auto& x : c) x = Rat(rng.range(-30, 30), rng.range(1, 12));
        Poly p = binomial_to_monomial(c);
        auto back = monomial_to_binomial(p);
        back.resize(c.size(), Rat());
        CHECK(back == c);
    }
}

TEST_CASE("rational parse and print round-trip") {
    for (const char* s : {"0", "5", "-7", "3/4", "-22/7"}) {
        Rat x = Rat::parse(s);
        CHECK(x.str() == s);
    }
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK_THROWS(Rat::parse("abc"));
}
