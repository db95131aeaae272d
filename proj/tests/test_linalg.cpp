#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cykummer/linalg.hpp"
#include "cykummer/rng.hpp"

using namespace cykummer;

namespace {

ExactMatrix from_ints(const Field& f, int rows, int cols,
                      std::vector<std::int64_t> v) {
    std::vector<std::vector<FieldElement>> data;
    std::size_t k = 0;
    for (int r = 0; r < rows; ++r) {
        std::vector<FieldElement> row;
        for (int c = 0; c < cols; ++c)
            row.push_back(FieldElement::from_integer(f, v[k++]));
        data.push_back(std::move(row));
    }
    return ExactMatrix::from_rows(f, data);
}

} // namespace

TEST_CASE("determinant and rank over the rationals") {
    Field Q = FieldDescriptor::rationals();
    ExactMatrix m = from_ints(Q, 2, 2, {1, 2, 3, 4});
    CHECK(m.det() == FieldElement::from_integer(Q, -2));
    CHECK(m.rank() == 2);

    ExactMatrix s = from_ints(Q, 3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
    CHECK(s.det().is_zero());
    CHECK(s.rank() == 2);
}

TEST_CASE("nullspace has the canonical unit-at-free-column form") {
    Field F3 = FieldDescriptor::prime(3);
    ExactMatrix m = from_ints(F3, 2, 2, {1, 2, 1, 2});
    auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == FieldElement::from_integer(F3, 1));
    CHECK(ns[0][1] == FieldElement::from_integer(F3, 1));

    Field F5 = FieldDescriptor::prime(5);
    ExactMatrix n = from_ints(F5, 2, 2, {1, 2, 2, 4});
    auto ns5 = n.nullspace();
    REQUIRE(ns5.size() == 1);
    CHECK(ns5[0][0] == FieldElement::from_integer(F5, 3)); // -2 mod 5
    CHECK(ns5[0][1] == FieldElement::from_integer(F5, 1));
}

TEST_CASE("nullspace vectors are killed by the matrix (property)") {
    DetRng rng(5);
    Field F = FieldDescriptor::prime(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::int64_t> v;
        for (int i = 0; i < 12; ++i) v.push_back(rng.uniform(0, 12));
        ExactMatrix m = from_ints(F, 3, 4, v);
        auto ns = m.nullspace();
        CHECK(static_cast<int>(ns.size()) == 4 - m.rank());
        for (const auto& vec : ns) {
            auto img = m.apply(vec);
            for (const auto& c : img) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("determinant is multiplicative (property)") {
    DetRng rng(17);
    Field F = FieldDescriptor::prime(101);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::int64_t> va, vb;
        for (int i = 0; i < 9; ++i) va.push_back(rng.uniform(0, 100));
        for (int i = 0; i < 9; ++i) vb.push_back(rng.uniform(0, 100));
        ExactMatrix a = from_ints(F, 3, 3, va);
        ExactMatrix b = from_ints(F, 3, 3, vb);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("solve returns a particular solution or nothing") {
    Field Q = FieldDescriptor::rationals();
    ExactMatrix m = from_ints(Q, 2, 2, {1, 1, 1, -1});
    auto sol = m.solve({FieldElement::from_integer(Q, 4), FieldElement::from_integer(Q, 0)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == FieldElement::from_integer(Q, 2));
    CHECK((*sol)[1] == FieldElement::from_integer(Q, 2));

    ExactMatrix bad = from_ints(Q, 2, 2, {1, 1, 2, 2});
    CHECK(!bad.solve({FieldElement::from_integer(Q, 1), FieldElement::from_integer(Q, 3)})
               .has_value());
}

TEST_CASE("identity and multiplication behave") {
    Field F = FieldDescriptor::prime(7);
    ExactMatrix id = ExactMatrix::identity(F, 3);
    ExactMatrix m = from_ints(F, 3, 3, {1, 2, 3, 4, 5, 6, 0, 1, 0});
    CHECK(m * id == m);
    CHECK(id * m == m);
    CHECK(id.det() == FieldElement::one(F));
}

TEST_CASE("minor determinants select rows and columns") {
    Field Q = FieldDescriptor::rationals();
    ExactMatrix m = from_ints(Q, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10});
    CHECK(m.minor_det({0, 1}, {0, 1}) == FieldElement::from_integer(Q, -3));
    CHECK(m.minor_det({0, 2}, {1, 2}) == FieldElement::from_integer(Q, -4));
    CHECK(m.det() == FieldElement::from_integer(Q, -3));
}

TEST_CASE("stacking rows") {
    Field Q = FieldDescriptor::rationals();
    ExactMatrix a = from_ints(Q, 1, 2, {1, 2});
    ExactMatrix b = from_ints(Q, 2, 2, {3, 4, 5, 6});
    ExactMatrix s = a.stacked(b);
    CHECK(s.rows() == 3);
    CHECK(s.at(2, 1) == FieldElement::from_integer(Q, 6));
}
