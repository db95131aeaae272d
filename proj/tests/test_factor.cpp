#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cykummer/factor.hpp"
#include "cykummer/rng.hpp"

using namespace cykummer;

namespace {

UPoly up(const Field& f, std::vector<std::int64_t> cs) {
    return UPoly::from_int_coeffs(f, cs);
}

} // namespace

TEST_CASE("factorization over GF(13): unit times irreducibles") {
    Field F = FieldDescriptor::prime(13);
    DetRng rng(1);
    // 3x^4 + 12x = 3 * x * (x^3 + 4), and x^3 + 4 has no root mod 13
    UPoly f = up(F, {0, 12, 0, 0, 3});
    FactorResult r = factor_univariate(f, rng);
    CHECK(r.complete);
    CHECK(r.unit == FieldElement::from_integer(F, 3));
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].first == up(F, {0, 1}));       // x
    CHECK(r.factors[0].second == 1);
    CHECK(r.factors[1].first == up(F, {4, 0, 0, 1})); // x^3 + 4
    CHECK(r.factors[1].second == 1);
    CHECK(r.recompose() == f);
}

TEST_CASE("multiplicities from the squarefree split") {
    Field F = FieldDescriptor::prime(5);
    DetRng rng(2);
    UPoly f = up(F, {1, 1}) * up(F, {1, 1}) * up(F, {2, 1}); // (x+1)^2 (x+2)
    FactorResult r = factor_univariate(f, rng);
    REQUIRE(r.factors.size() == 2);
    bool saw_sq = false, saw_lin = false;
    for (const auto& [g, m] : r.factors) {
        if (g == up(F, {1, 1})) {
            CHECK(m == 2);
            saw_sq = true;
        }
        if (g == up(F, {2, 1})) {
            CHECK(m == 1);
            saw_lin = true;
        }
    }
    CHECK(saw_sq);
    CHECK(saw_lin);
}

TEST_CASE("p-th power collapse in characteristic p") {
    Field F = FieldDescriptor::prime(5);
    DetRng rng(3);
    UPoly f = up(F, {1, 1});
    UPoly f5 = f * f * f * f * f; // derivative vanishes identically
    CHECK(f5.derivative().is_zero());
    FactorResult r = factor_univariate(f5, rng);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].first == f);
    CHECK(r.factors[0].second == 5);
}

TEST_CASE("random products refactor correctly (property)") {
    Field F = FieldDescriptor::prime(13);
    DetRng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        UPoly a = up(F, {rng.uniform(0, 12), rng.uniform(1, 12)});
        UPoly b = up(F, {rng.uniform(0, 12), rng.uniform(0, 12), rng.uniform(1, 12)});
        UPoly f = a * b;
        FactorResult r = factor_univariate(f, rng);
        CHECK(r.complete);
        CHECK(r.recompose() == f);
        for (const auto& [g, m] : r.factors) {
            (void)m;
            CHECK(is_irreducible(g));
        }
    }
}

TEST_CASE("rational factorization extracts rational roots") {
    Field Q = FieldDescriptor::rationals();
    DetRng rng(4);

    UPoly f = up(Q, {-1, 0, 1}); // x^2 - 1
    FactorResult r = factor_univariate(f, rng);
    CHECK(r.complete);
    REQUIRE(r.factors.size() == 2);

    // 6x^2 - x - 1 = 6 (x - 1/2)(x + 1/3)
    UPoly g = up(Q, {-1, -1, 6});
    FactorResult rg = factor_univariate(g, rng);
    CHECK(rg.unit == FieldElement::from_integer(Q, 6));
    CHECK(rg.complete);
    REQUIRE(rg.factors.size() == 2);
    CHECK(rg.recompose() == g);

    // x^2 + 1: no rational roots, certified irreducible at degree 2
    FactorResult ri = factor_univariate(up(Q, {1, 0, 1}), rng);
    CHECK(ri.complete);
    REQUIRE(ri.factors.size() == 1);
    CHECK(ri.factors[0].first.degree() == 2);

    // x^4 + 1 is left unsplit and flagged incomplete
    FactorResult ru = factor_univariate(up(Q, {1, 0, 0, 0, 1}), rng);
    CHECK(!ru.complete);
    REQUIRE(ru.factors.size() == 1);
    CHECK(ru.factors[0].first.degree() == 4);
}

TEST_CASE("rational squarefree split by multiplicity") {
    Field Q = FieldDescriptor::rationals();
    DetRng rng(5);
    UPoly f = up(Q, {-1, 1}) * up(Q, {-1, 1}) * up(Q, {1, 0, 1}); // (x-1)^2 (x^2+1)
    FactorResult r = factor_univariate(f, rng);
    CHECK(r.complete);
    REQUIRE(r.factors.size() == 2);
    CHECK(r.recompose() == f);
}

TEST_CASE("roots in the coefficient field") {
    Field F = FieldDescriptor::prime(13);
    DetRng rng(6);
    UPoly f = up(F, {-3, 1}) * up(F, {-7, 1}) * up(F, {4, 0, 0, 1});
    auto roots = roots_in_field(f, rng);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == FieldElement::from_integer(F, 3));
    CHECK(roots[1] == FieldElement::from_integer(F, 7));
}

TEST_CASE("irreducibility test oracles") {
    Field F13 = FieldDescriptor::prime(13);
    CHECK(is_irreducible(up(F13, {4, 0, 0, 1})));    // x^3 + 4
    CHECK(!is_irreducible(up(F13, {12, 0, 0, 1})));  // x^3 - 1
    CHECK(!is_irreducible(up(F13, {1, 0, 1})));      // x^2 + 1 = (x-5)(x+5) mod 13
    Field F7 = FieldDescriptor::prime(7);
    CHECK(is_irreducible(up(F7, {1, 0, 1})));        // -1 is not a square mod 7
    CHECK(is_irreducible(up(F7, {3, 1})));           // linear
    CHECK(!is_irreducible(up(F7, {2})));             // constant
}

TEST_CASE("find_irreducible returns certified moduli") {
    DetRng rng(8);
    for (int d : {2, 3, 4, 6}) {
        UPoly m = find_irreducible(13, d, rng);
        CHECK(m.degree() == d);
        CHECK(m.lc().is_one());
        CHECK(is_irreducible(m));
    }
}

TEST_CASE("factorization is deterministic for a fixed seed") {
    Field F = FieldDescriptor::prime(101);
    UPoly f = up(F, {1, 1}) * up(F, {3, 1}) * up(F, {7, 1}) * up(F, {1, 1, 1});
    DetRng r1(99), r2(99);
    FactorResult a = factor_univariate(f, r1);
    FactorResult b = factor_univariate(f, r2);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
}

TEST_CASE("splitting tower: cubic splits in GF(13^3)") {
    Field F = FieldDescriptor::prime(13);
    DetRng rng(11);
    SplittingContext ctx(F);
    UPoly f = up(F, {4, 0, 0, 1}); // x^3 + 4, irreducible over GF(13)
    auto roots = ctx.split_fully(f, rng);
    CHECK(ctx.degree_over_prime() == 3);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) {
        CHECK(r.pow(BigInt(3)) == FieldElement::from_integer(ctx.current(), -4));
    }
}

TEST_CASE("splitting tower: lift is a field homomorphism") {
    Field F = FieldDescriptor::prime(13);
    DetRng rng(12);
    SplittingContext ctx(F);
    ctx.split_fully(up(F, {4, 0, 0, 1}), rng); // grow to GF(13^3)
    DetRng rng2(13);
    for (int i = 0; i < 20; ++i) {
        FieldElement a = FieldElement::random(F, rng2);
        FieldElement b = FieldElement::random(F, rng2);
        CHECK(ctx.lift(a + b) == ctx.lift(a) + ctx.lift(b));
        CHECK(ctx.lift(a * b) == ctx.lift(a) * ctx.lift(b));
    }
}

TEST_CASE("splitting tower: square roots by extension") {
    Field F = FieldDescriptor::prime(13);
    DetRng rng(14);
    SplittingContext ctx(F);
    // 2 is not a square mod 13, so this forces a quadratic extension
    auto roots = ctx.sqrt_extending(FieldElement::from_integer(F, 2), rng);
    CHECK(ctx.degree_over_prime() == 2);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots)
        CHECK(r * r == ctx.lift(FieldElement::from_integer(F, 2)));
}

TEST_CASE("splitting tower respects the degree cap") {
    Field F = FieldDescriptor::prime(13);
    DetRng rng(15);
    SplittingContext ctx(F, 2);
    CHECK_THROWS_AS(ctx.split_fully(up(F, {4, 0, 0, 1}), rng), ExtensionCapExceeded);
}

TEST_CASE("equal-degree splitting in characteristic 2") {
    Field F2 = FieldDescriptor::prime(2);
    DetRng rng(16);
    // x^2 + x + 1 is the unique irreducible quadratic over GF(2)
    CHECK(is_irreducible(up(F2, {1, 1, 1})));
    UPoly f = up(F2, {1, 1, 1}) * up(F2, {1, 1}) * up(F2, {0, 1});
    FactorResult r = factor_univariate(f, rng);
    CHECK(r.complete);
    CHECK(r.factors.size() == 3);
    CHECK(r.recompose() == f);

    SplittingContext ctx(F2);
    auto roots = ctx.split_fully(up(F2, {1, 1, 1}), rng);
    CHECK(ctx.degree_over_prime() == 2);
    CHECK(roots.size() == 2);
}
