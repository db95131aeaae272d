#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cykummer/field.hpp"
#include "cykummer/rng.hpp"

using namespace cykummer;

TEST_CASE("rational arithmetic is exact") {
    Field Q = FieldDescriptor::rationals();
    auto q = [&](std::int64_t n, std::int64_t d) {
        return FieldElement::from_rational(Q, Rational(n, d));
    };
    CHECK(q(2, 3) + q(1, 6) == q(5, 6));
    CHECK(q(2, 3) * q(3, 2) == FieldElement::one(Q));
    CHECK(q(1, 2) - q(1, 2) == FieldElement::zero(Q));
    CHECK(q(-4, 6).str() == "-2/3");
    CHECK(q(7, 1).str() == "7");
    CHECK(q(3, 5).inverse() == q(5, 3));
    CHECK(q(2, 1).pow(BigInt(-3)) == q(1, 8));
}

TEST_CASE("prime field residues are canonical") {
    Field F = FieldDescriptor::prime(13);
    auto e = [&](std::int64_t n) { return FieldElement::from_integer(F, n); };
    CHECK(e(7) * e(2) == e(1));
    CHECK(e(7).inverse() == e(2));
    CHECK(e(-1) == e(12));
    CHECK((e(5) + e(9)).residue() == 1);
    CHECK(e(6).pow(BigInt(12)) == e(1)); // Fermat
    CHECK(e(2).pow(BigInt(-1)) == e(7));
    CHECK(FieldElement::from_rational(F, Rational(1, 2)) == e(7));
    CHECK(F->order() == 13);
    CHECK(F->name() == "GF(13)");
}

TEST_CASE("non-prime modulus is rejected") {
    CHECK_THROWS_AS(FieldDescriptor::prime(12), std::invalid_argument);
    CHECK_THROWS_AS(FieldDescriptor::prime(1), std::invalid_argument);
}

TEST_CASE("cubic extension of GF(13)") {
    // t^3 + 2 has no root mod 13 (the nonzero cubes are 1, 5, 8, 12), so it
    // is irreducible and defines GF(13^3).
    Field F = FieldDescriptor::extension(13, {2, 0, 0, 1});
    CHECK(F->degree() == 3);
    CHECK(F->order() == 2197);
    CHECK(F->name() == "GF(13^3)");

    FieldElement t = FieldElement::generator(F);
    CHECK(t * t * t == FieldElement::from_integer(F, -2));
    CHECK(t.pow(BigInt(3)) == FieldElement::from_integer(F, 11));

    FieldElement a = FieldElement::from_coeffs(F, {1, 1, 0}); // 1 + t
    CHECK(a * a == FieldElement::from_coeffs(F, {1, 2, 1}));
    CHECK(a * a.inverse() == FieldElement::one(F));
}

TEST_CASE("reducible modulus is rejected") {
    // t^3 - 1 has the root 1
    CHECK_THROWS_AS(FieldDescriptor::extension(13, {12, 0, 0, 1}),
                    std::invalid_argument);
    // non-monic
    CHECK_THROWS_AS(FieldDescriptor::extension(13, {1, 0, 0, 2}),
                    std::invalid_argument);
}

TEST_CASE("Frobenius is additive on GF(13^3)") {
    Field F = FieldDescriptor::extension(13, {2, 0, 0, 1});
    DetRng rng(42);
    for (int i = 0; i < 25; ++i) {
        FieldElement a = FieldElement::random(F, rng);
        FieldElement b = FieldElement::random(F, rng);
        CHECK((a + b).pow(BigInt(13)) == a.pow(BigInt(13)) + b.pow(BigInt(13)));
    }
}

TEST_CASE("unit group order of GF(13^3)") {
    Field F = FieldDescriptor::extension(13, {2, 0, 0, 1});
    DetRng rng(7);
    for (int i = 0; i < 25; ++i) {
        FieldElement a = FieldElement::random(F, rng);
        if (a.is_zero()) continue;
        CHECK(a.pow(BigInt(2196)) == FieldElement::one(F));
    }
}

TEST_CASE("from_index enumerates the field bijectively") {
    Field F = FieldDescriptor::extension(5, {2, 1, 1}); // t^2 + t + 2 over GF(5)
    CHECK(F->order() == 25);
    std::vector<FieldElement> all;
    for (int i = 0; i < 25; ++i) all.push_back(FieldElement::from_index(F, BigInt(i)));
    for (int i = 0; i < 25; ++i)
        for (int j = i + 1; j < 25; ++j) CHECK(all[i] != all[j]);
    CHECK(all[0] == FieldElement::zero(F));
}

TEST_CASE("field identity comparisons") {
    Field a = FieldDescriptor::prime(13);
    Field b = FieldDescriptor::prime(13);
    Field c = FieldDescriptor::prime(7);
    CHECK(same_field(a, b));
    CHECK(!same_field(a, c));
    CHECK(same_field(FieldDescriptor::rationals(), FieldDescriptor::rationals()));
}
