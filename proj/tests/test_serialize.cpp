#include <doctest.h>

#include "hofa/config.hpp"
#include "hofa/generators.hpp"
#include "hofa/serialize.hpp"

using namespace hofa;

TEST_CASE("bracket expression round-trip is bit-exact") {
    Rng rng(91);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BracketTerm> terms;
        terms.push_back(BracketTerm::nbracket(Rat(rng.range(-9, 9), rng.range(1, 31)),
                                              Rat(rng.range(0, 30), 31),
                                              Rat(rng.range(0, 30), 31)));
        terms.push_back(BracketTerm::frac_prod(Rat(rng.range(-9, 9)),
                                               Rat(rng.range(0, 30), 31),
                                               Rat(rng.range(0, 30), 31),
                                               Rat(rng.range(0, 30), 31), Rat()));
        terms.push_back(BracketTerm::frac_lin(Rat(1, 2), Rat(rng.range(0, 30), 31)));
        terms.push_back(BracketTerm::deg3_nff(Rat(rng.range(-3, 3)),
                                              Rat(rng.range(0, 30), 31),
                                              Rat(rng.range(0, 30), 31)));
        terms.push_back(BracketTerm::deg3_n2f(Rat(rng.range(-3, 3)),
                                              Rat(rng.range(0, 30), 31)));
        terms.push_back(BracketTerm::poly_term(
            Poly(std::vector<Rat>{Rat(rng.range(-9, 9), 7), Rat(rng.range(-9, 9), 7)})));
        BracketExpr e(terms, BigInt(31));
        Json j = to_json(e);
        BracketExpr back = bracket_expr_from_json(j);
        CHECK(back == e);
        CHECK(to_json(back).dump() == j.dump());  // byte-identical re-emission
    }
}

TEST_CASE("manifold and sequence round-trip") {
    Rng rng(92);
    ElemNilmanifold m = ElemNilmanifold::standard(2, BigInt(4));
    m.structure_constants[0][3] = -2;
    CHECK(nilmanifold_from_json(to_json(m)).structure_constants == m.structure_constants);
    PolySeq g = random_periodic_quadratic(rng, 2, BigInt(31));
    PolySeq back = polyseq_from_json(to_json(g));
    CHECK(back.alpha == g.alpha);
    CHECK(back.beta == g.beta);
    CHECK(back.vertical == g.vertical);
}

TEST_CASE("instance and certificate round-trip") {
    Rng rng(93);
    PlantedRBPL plant = plant_rbpl(rng, 3, BigInt(31));
    Json j = to_json(plant.instance);
    RBPLInstance back = rbpl_instance_from_json(j);
    CHECK(back.a == plant.instance.a);
    CHECK(back.alpha == plant.instance.alpha);
    CHECK(back.H == plant.instance.H);
    CHECK_NOTHROW(back.validate());

    Certificate c;
    c.d = 3;
    c.w = {IntVec{1, 0, -2}};
    c.eta = {IntVec{0, 1, 0}, IntVec{2, 0, 1}};
    Certificate cb = certificate_from_json(to_json(c));
    CHECK(cb.w == c.w);
    CHECK(cb.eta == c.eta);
}

TEST_CASE("function round-trip") {
    Rng rng(94);
    FnZN f = random_phase_function(rng, 17);
    FnZN back = fnzn_from_json(to_json(f));
    REQUIRE(back.n == f.n);
    for (long x = 0; x < f.n; ++x)
        CHECK(std::abs(back.values[x] - f.values[x]) < 1e-11);
}

TEST_CASE("tables") {
    Table t;
    t.header = {"a", "b"};
    SUBCASE("empty rows emit the header only") {
        CHECK(emit_csv(t) == "a,b\n");
        CHECK(emit_json(t) == "[]\n");
    }
    SUBCASE("deterministic emission") {
        t.rows = {{"1/3", "x"}, {"7", "y"}};
        CHECK(emit_csv(t) == "a,b\n1/3,x\n7,y\n");
        std::string j = emit_json(t);
        CHECK(j.find("\"a\": \"1/3\"") != std::string::npos);
    }
}

TEST_CASE("doubles print with 12 significant digits") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
}
