#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cykummer/reptheory.hpp"
#include "cykummer/rng.hpp"

#include <numeric>

using namespace cykummer;

namespace {

Field Q = FieldDescriptor::rationals();

Perm random_even(int letters, const std::vector<Perm>& group, DetRng& rng) {
    (void)letters;
    auto idx = rng.uniform(0, static_cast<std::int64_t>(group.size()) - 1);
    return group[static_cast<std::size_t>(idx)];
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

FieldElement trace(const ExactMatrix& m) {
    FieldElement t = FieldElement::zero(m.field());
    for (int i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
    return t;
}

} // namespace

TEST_CASE("permutation basics") {
    Perm c = Perm::from_cycles(4, {{1, 2, 3}});
    CHECK(c.apply(0) == 1);
    CHECK(c.apply(1) == 2);
    CHECK(c.apply(2) == 0);
    CHECK(c.apply(3) == 3);
    CHECK(c.is_even());
    CHECK(c.str() == "(1 2 3)");
    CHECK(c.power(3).is_identity());
    CHECK((c.compose(c.inverse())).is_identity());

    Perm d = Perm::from_cycles(4, {{1, 2}, {3, 4}});
    CHECK(d.is_even());
    CHECK(d.cycle_type() == std::vector<int>{2, 2});
    CHECK(Perm::from_cycles(4, {{1, 2}}).is_even() == false);

    // composition convention: compose(o) applies o first
    Perm e = c.compose(d); // letter 1 -> 2 (by d) -> 3 (by c)
    CHECK(e.apply(0) == 2);
}

TEST_CASE("alternating group enumeration and census") {
    CHECK(alternating_group(3).size() == 3);
    CHECK(alternating_group(5).size() == 60);

    auto a4 = alternating_group(4);
    CHECK(a4.size() == 12);
    auto census = cycle_type_census(a4);
    CHECK(census.at({1, 1, 1, 1}) == 1);
    CHECK(census.at({2, 2}) == 3);
    CHECK(census.at({3, 1}) == 8);
    CHECK(census.size() == 3);

    // generators actually generate: closure of the documented pair
    for (int letters = 3; letters <= 6; ++letters) {
        auto gens = alternating_generators(letters);
        std::vector<Perm> closure{Perm::identity(letters)};
        std::size_t last = 0;
        while (last != closure.size()) {
            last = closure.size();
            for (std::size_t i = 0; i < closure.size(); ++i)
                for (const Perm& g : gens) {
                    Perm h = g.compose(closure[i]);
                    bool seen = false;
                    for (const Perm& k : closure)
                        if (k == h) { seen = true; break; }
                    if (!seen) closure.push_back(h);
                }
        }
        CHECK(closure.size() == alternating_group(letters).size());
    }
}

TEST_CASE("cycle type of powers") {
    CHECK(cycle_type_power({3, 1}, 2) == std::vector<int>{3, 1});
    CHECK(cycle_type_power({2, 2}, 2) == std::vector<int>{1, 1, 1, 1});
    CHECK(cycle_type_power({4}, 2) == std::vector<int>{2, 2});
    CHECK(cycle_type_power({5}, 5) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(cycle_type_power({3, 2}, 6) == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("standard representation pinned matrix") {
    StandardRep rep(2, Q);
    ExactMatrix m = rep.matrix(Perm::from_cycles(3, {{1, 2, 3}}));
    CHECK(m.at(0, 0) == FieldElement::from_integer(Q, -1));
    CHECK(m.at(0, 1) == FieldElement::from_integer(Q, -1));
    CHECK(m.at(1, 0) == FieldElement::from_integer(Q, 1));
    CHECK(m.at(1, 1) == FieldElement::from_integer(Q, 0));

    // trace of (1 2)(3 4) in the 3-dimensional representation
    StandardRep rep3(3, Q);
    ExactMatrix t = rep3.matrix(Perm::from_cycles(4, {{1, 2}, {3, 4}}));
    CHECK(trace(t) == FieldElement::from_integer(Q, -1));

    CHECK_THROWS_AS(rep.matrix(Perm::from_cycles(3, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("representation is a homomorphism") {
    DetRng rng(7);
    for (int n = 2; n <= 5; ++n) {
        StandardRep rep(n, Q);
        auto group = alternating_group(n + 1);
        for (int trial = 0; trial < 20; ++trial) {
            Perm g = random_even(n + 1, group, rng);
            Perm h = random_even(n + 1, group, rng);
            CHECK(rep.matrix(g.compose(h)) == rep.matrix(g) * rep.matrix(h));
        }
        // identity and inverses
        CHECK(rep.matrix(Perm::identity(n + 1)) == ExactMatrix::identity(Q, n));
        Perm g = random_even(n + 1, group, rng);
        CHECK(rep.matrix(g) * rep.matrix(g.inverse()) == ExactMatrix::identity(Q, n));
    }
}

TEST_CASE("exterior power matrices") {
    CHECK(index_subsets(4, 2) == std::vector<std::vector<int>>{
              {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

    DetRng rng(11);
    StandardRep rep(4, Q);
    auto group = alternating_group(5);
    for (int m = 0; m <= 4; ++m) {
        // trace on the identity is the binomial dimension
        ExactMatrix id = rep.exterior_matrix(Perm::identity(5), m);
        CHECK(id.rows() == binom(4, m));
        CHECK(trace(id) == FieldElement::from_integer(Q, binom(4, m)));
        // compound matrices respect composition
        for (int trial = 0; trial < 6; ++trial) {
            Perm g = random_even(5, group, rng);
            Perm h = random_even(5, group, rng);
            CHECK(rep.exterior_matrix(g.compose(h), m) ==
                  rep.exterior_matrix(g, m) * rep.exterior_matrix(h, m));
        }
    }
}

TEST_CASE("exterior characters match matrix traces") {
    DetRng rng(13);
    for (int n = 2; n <= 4; ++n) {
        StandardRep rep(n, Q);
        CharacterData chars(n);
        auto group = alternating_group(n + 1);
        for (int m = 0; m <= n; ++m)
            for (int trial = 0; trial < 8; ++trial) {
                Perm g = random_even(n + 1, group, rng);
                Rational expect = chars.exterior_value(g.cycle_type(), m);
                CHECK(trace(rep.exterior_matrix(g, m)) ==
                      FieldElement::from_rational(Q, expect));
            }
    }
}

TEST_CASE("exterior character worked example") {
    CharacterData chars(3);
    CHECK(chars.group_order() == 12);
    CHECK(chars.standard_value({1, 1, 1, 1}) == Rational(3));
    CHECK(chars.standard_value({2, 2}) == Rational(-1));
    CHECK(chars.standard_value({3, 1}) == Rational(0));
    CHECK(chars.exterior_value({2, 2}, 2) == Rational(-1));
    CHECK(chars.exterior_value({3, 1}, 3) == Rational(1));
}

TEST_CASE("invariant dimensions over the rationals") {
    for (int n = 2; n <= 6; ++n) {
        auto dims = invariant_dims(n);
        REQUIRE(static_cast<int>(dims.size()) == n + 1);
        CHECK(dims.front() == 1);
        CHECK(dims.back() == 1);
        for (int m = 1; m < n; ++m) CHECK(dims[static_cast<std::size_t>(m)] == 0);
    }
}

TEST_CASE("invariant dimension equals averaging operator rank") {
    for (int n = 2; n <= 4; ++n) {
        StandardRep rep(n, Q);
        CharacterData chars(n);
        auto group = alternating_group(n + 1);
        for (int m = 0; m <= n; ++m) {
            int d = static_cast<int>(binom(n, m));
            ExactMatrix sum(Q, d, d);
            for (const Perm& g : group) sum = sum + rep.exterior_matrix(g, m);
            // char 0: rank of the group sum is the invariant dimension
            CHECK(sum.rank() == chars.invariant_dimension(m));
        }
    }
}

TEST_CASE("fixed subspace dimensions modulo small primes") {
    CHECK(fixed_subspace_modp(2, 1, 5) == 0);
    CHECK(fixed_subspace_modp(2, 1, 3) == 1);
    CHECK(fixed_subspace_modp(3, 1, 7) == 0);
    CHECK(fixed_subspace_modp(4, 1, 5) == 1); // all-ones vector is fixed mod 5
    CHECK_THROWS_AS(fixed_subspace_modp(3, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(fixed_subspace_modp(3, 3, 5), std::invalid_argument);
}

TEST_CASE("irreducibility certificate for n in 3..6") {
    for (int n = 3; n <= 6; ++n) {
        LemmaReport rep = certify_lemma(n);
        CHECK(rep.n == n);
        CHECK(rep.chi_norm == Rational(1));
        CHECK(rep.irreducible);
        CHECK(rep.double_cosets == 2);
        CHECK(rep.letter_rank == 2);
        CHECK(rep.duality_ok);
        CHECK(rep.flagged_small_case == false);
    }
}

TEST_CASE("small case n = 2 is reported, not adjudicated") {
    LemmaReport rep = certify_lemma(2);
    CHECK(rep.chi_norm == Rational(2));
    CHECK(rep.irreducible == false);
    CHECK(rep.double_cosets == 3);
    CHECK(rep.letter_rank == 3);
    CHECK(rep.duality_ok);
    CHECK(rep.flagged_small_case);
}

TEST_CASE("restriction decomposition bookkeeping") {
    for (int n = 3; n <= 5; ++n) {
        DecompositionReport rep = decomposition_check(n);
        CHECK(rep.primed_stable);
        CHECK(rep.line_trivial);
        CHECK(rep.dims_ok);
        CHECK(rep.passed());
        CHECK(rep.offending.empty());
    }
}
