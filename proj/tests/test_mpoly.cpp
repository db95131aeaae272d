#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cykummer/mpoly.hpp"
#include "cykummer/rng.hpp"

using namespace cykummer;

namespace {

Field Q = FieldDescriptor::rationals();

MPoly parse_q(int nvars, const std::string& s) { return MPoly::parse(Q, nvars, s); }

MPoly random_poly(const Field& f, int nvars, int max_deg, int terms, DetRng& rng) {
    MPoly p = MPoly::zero(f, nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (int i = 0; i < nvars; ++i)
            e[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform(0, max_deg));
        p = p + MPoly::monomial(f, e, FieldElement::random(f, rng));
    }
    return p;
}

} // namespace

TEST_CASE("graded ordering puts the leading term first") {
    MPoly p = parse_q(2, "1*x0 + 1*x1^2");
    CHECK(p.str() == "1*x1^2 + 1*x0");
    CHECK(p.leading_monomial() == Exponents({0, 2}));
    CHECK(p.total_deg() == 2);
}

TEST_CASE("text round trip is byte exact") {
    const std::string fixtures[] = {
        "3*x0^2*x1 - 1*x0 + 2/3",
        "1*x0^6 - 2*x0^3*x2^3 + 1*x2^6",
        "-5/2*x0*x1*x2 + 1*x1 - 1",
        "0",
        "7",
        "-1/3*x1",
    };
    for (const auto& s : fixtures) {
        MPoly p = MPoly::parse(Q, 3, s);
        CHECK(p.str() == s);
    }
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS_AS(MPoly::parse(Q, 2, "x0 +"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::parse(Q, 2, "1*x5"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::parse(Q, 2, "1*y"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::parse(Q, 2, "2**x0"), std::invalid_argument);
}

TEST_CASE("ring arithmetic identities") {
    MPoly x = MPoly::variable(Q, 2, 0);
    MPoly y = MPoly::variable(Q, 2, 1);
    MPoly one = MPoly::constant(Q, 2, FieldElement::one(Q));

    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + x * y * FieldElement::from_integer(Q, 2) + y * y);
    CHECK((x + one).pow(3).coeff(Exponents{1, 0}) == FieldElement::from_integer(Q, 3));
    CHECK((x * y).derivative(0) == y);
    CHECK((x.pow(3)).derivative(0) ==
          x.pow(2) * FieldElement::from_integer(Q, 3));
}

TEST_CASE("derivative drops characteristic-killed terms") {
    Field F5 = FieldDescriptor::prime(5);
    MPoly x = MPoly::variable(F5, 1, 0);
    CHECK(x.pow(5).derivative(0).is_zero());
}

TEST_CASE("evaluation and substitution agree") {
    MPoly p = parse_q(2, "1*x0^2 - 1*x1");
    auto at = [&](std::int64_t a, std::int64_t b) {
        return p.eval({FieldElement::from_integer(Q, a), FieldElement::from_integer(Q, b)});
    };
    CHECK(at(3, 9).is_zero());
    CHECK(at(2, 3) == FieldElement::one(Q));

    // substitute x0 -> x1 + 1 into x0^2 - 1 gives x1^2 + 2 x1
    MPoly q = parse_q(2, "1*x0^2 - 1");
    MPoly img = parse_q(2, "1*x1 + 1");
    CHECK(q.substitute(0, img) == parse_q(2, "1*x1^2 + 2*x1"));
}

TEST_CASE("exact division succeeds exactly when it should") {
    MPoly a = parse_q(2, "1*x0^2 - 1*x1^2");
    MPoly b = parse_q(2, "1*x0 - 1*x1");
    auto q = MPoly::divide_exact(a, b);
    REQUIRE(q.has_value());
    CHECK(*q == parse_q(2, "1*x0 + 1*x1"));
    CHECK(!MPoly::divide_exact(parse_q(2, "1*x0"), parse_q(2, "1*x1")).has_value());
    CHECK(!MPoly::divide_exact(parse_q(2, "1*x0^2 + 1"), parse_q(2, "1*x0 + 1")).has_value());
}

TEST_CASE("divide_exact inverts multiplication (property)") {
    DetRng rng(2026);
    Field F = FieldDescriptor::prime(101);
    for (int i = 0; i < 40; ++i) {
        MPoly a = random_poly(F, 3, 3, 4, rng);
        MPoly b = random_poly(F, 3, 3, 4, rng);
        if (a.is_zero() || b.is_zero()) continue;
        auto q = MPoly::divide_exact(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("normalization over the rationals clears denominators") {
    MPoly p = parse_q(2, "2/3*x0 - 4/3*x1");
    CHECK(p.normalized() == parse_q(2, "1*x0 - 2*x1"));
    MPoly m = parse_q(2, "-1/2*x0^2");
    CHECK(m.normalized() == parse_q(2, "1*x0^2"));
}

TEST_CASE("normalization over a finite field is monic") {
    Field F = FieldDescriptor::prime(7);
    MPoly p = MPoly::parse(F, 2, "3*x0^2 + 6*x1");
    CHECK(p.normalized() == MPoly::parse(F, 2, "1*x0^2 + 2*x1"));
}

TEST_CASE("coefficient extraction round trips") {
    DetRng rng(99);
    for (int i = 0; i < 30; ++i) {
        MPoly p = random_poly(Q, 3, 4, 5, rng);
        for (int v = 0; v < 3; ++v) {
            auto cs = p.coeffs_in(v);
            CHECK(MPoly::from_coeffs_in(v, cs) == p);
        }
    }
}

TEST_CASE("homogeneity detection") {
    CHECK(parse_q(3, "1*x0^3 + 1*x1^2*x2").is_homogeneous());
    CHECK(!parse_q(3, "1*x0^3 + 1*x1^2").is_homogeneous());
    CHECK(parse_q(3, "0").is_homogeneous());
}

TEST_CASE("variable renaming is additive on exponents") {
    MPoly p = parse_q(2, "1*x0^2*x1");
    MPoly r = p.rename_vars(3, {2, 0});
    CHECK(r == parse_q(3, "1*x0*x2^2"));
}

TEST_CASE("monomial content extraction") {
    MPoly p = parse_q(2, "1*x0^3*x1 + 2*x0^2*x1^2");
    CHECK(p.monomial_content() == Exponents({2, 1}));
    CHECK(p.divide_by_monomial(p.monomial_content()) == parse_q(2, "1*x0 + 2*x1"));
}
