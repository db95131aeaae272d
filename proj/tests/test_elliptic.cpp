#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cykummer/elliptic.hpp"

#include <set>

using namespace cykummer;

namespace {

WeierstrassCurve curve(std::int64_t p, std::int64_t a, std::int64_t b) {
    Field F = FieldDescriptor::prime(p);
    return WeierstrassCurve(F, FieldElement::from_integer(F, a), FieldElement::from_integer(F, b));
}

CurvePoint pt(const WeierstrassCurve& E, std::int64_t x, std::int64_t y) {
    return E.point(FieldElement::from_integer(E.field(), x),
                   FieldElement::from_integer(E.field(), y));
}

} // namespace

TEST_CASE("curve construction guards") {
    CHECK_THROWS_AS(curve(5, 0, 0), std::invalid_argument);  // singular
    CHECK_THROWS_AS(curve(7, 0, 7), std::invalid_argument);  // b = 0 mod 7
    CHECK_THROWS_AS(curve(3, 1, 1), std::invalid_argument);  // characteristic 3
    CHECK_THROWS_AS(pt(curve(5, 0, 1), 1, 1), std::invalid_argument); // not on curve
}

TEST_CASE("six point group over F_5") {
    WeierstrassCurve E = curve(5, 0, 1);
    auto pts = enumerate_points(E);
    REQUIRE(pts.size() == 6);

    // doubling (0,1) + (0,1) = (0,-1), pinned against the full group table
    CHECK(pt(E, 0, 1) + pt(E, 0, 1) == pt(E, 0, 4));

    // exhaustive group-table checks: closure, associativity, commutativity
    for (const CurvePoint& P : pts)
        for (const CurvePoint& Q : pts) {
            CurvePoint S = P + Q;
            CHECK(std::count(pts.begin(), pts.end(), S) == 1);
            CHECK(S == Q + P);
            for (const CurvePoint& R : pts) CHECK((P + Q) + R == P + (Q + R));
        }
    for (const CurvePoint& P : pts) {
        CHECK((P + (-P)).is_infinity());
        CHECK(P + E.infinity() == P);
        CHECK(P.times(6).is_infinity()); // Lagrange
    }
}

TEST_CASE("point counts and the Hasse bound") {
    CHECK(enumerate_points(curve(7, 0, 2)).size() == 9);
    for (std::int64_t p : {5, 7, 13, 101})
        for (std::int64_t b : {1, 0}) {
            std::int64_t a = (b == 0) ? 1 : 0;
            auto pts = enumerate_points(curve(p, a, b));
            long long diff = static_cast<long long>(pts.size()) - (p + 1);
            CHECK(diff * diff <= 4 * p);
        }
    Field big = FieldDescriptor::prime(1000003);
    WeierstrassCurve E(big, FieldElement::from_integer(big, 0), FieldElement::from_integer(big, 1));
    CHECK_THROWS_AS(enumerate_points(E), std::invalid_argument);
}

TEST_CASE("associativity on random triples") {
    DetRng rng(3);
    WeierstrassCurve E = curve(101, 0, 1);
    auto pts = enumerate_points(E);
    for (int trial = 0; trial < 500; ++trial) {
        const CurvePoint& P = pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
        const CurvePoint& Q = pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
        const CurvePoint& R = pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
        CHECK((P + Q) + R == P + (Q + R));
    }
}

TEST_CASE("torsion over the base field") {
    DetRng rng(5);
    WeierstrassCurve E13 = curve(13, 0, 1);
    CHECK(torsion_points(E13, 1, false, rng).points.size() == 1);
    // x^3 + 1 splits over F_13, so the full 2-torsion is rational
    auto t2 = torsion_points(E13, 2, false, rng);
    CHECK(t2.points.size() == 4);
    for (const CurvePoint& P : t2.points)
        CHECK((P.is_infinity() || P.y().is_zero()));

    // rational torsion of y^2 = x^3 + 1 over Q
    Field Q = FieldDescriptor::rationals();
    WeierstrassCurve EQ(Q, FieldElement::from_integer(Q, 0), FieldElement::from_integer(Q, 1));
    CHECK(torsion_points(EQ, 2, false, rng).points.size() == 2); // O, (-1, 0)
    CHECK(torsion_points(EQ, 3, false, rng).points.size() == 3); // O, (0, +-1)
    CHECK_THROWS_AS(torsion_points(EQ, 3, true, rng), std::invalid_argument);
}

TEST_CASE("full torsion over splitting extensions") {
    DetRng rng(9);
    WeierstrassCurve E5 = curve(5, 0, 1);
    auto t2 = torsion_points(E5, 2, true, rng);
    CHECK(t2.points.size() == 4);
    CHECK(t2.field_used->degree() == 2);

    WeierstrassCurve E13 = curve(13, 0, 1);
    auto t3 = torsion_points(E13, 3, true, rng);
    CHECK(t3.points.size() == 9);
    CHECK(t3.field_used->degree() == 3);
    // x-coordinates are roots of 3x^4 + 12x; four distinct values
    std::set<FieldElement> xs;
    const Field& F3 = t3.field_used;
    for (const CurvePoint& P : t3.points) {
        if (P.is_infinity()) continue;
        xs.insert(P.x());
        FieldElement v = FieldElement::from_integer(F3, 3) * P.x().pow(BigInt(4)) +
                         FieldElement::from_integer(F3, 12) * P.x();
        CHECK(v.is_zero());
    }
    CHECK(xs.size() == 4);

    auto t4 = torsion_points(E13, 4, true, rng);
    CHECK(t4.points.size() == 16);
    CHECK(t4.field_used->degree() == 2);
    int exact_order_4 = 0;
    for (const CurvePoint& P : t4.points)
        if (!P.times(2).is_infinity()) ++exact_order_4;
    CHECK(exact_order_4 == 12);

    CHECK_THROWS_AS(torsion_points(E5, 5, true, rng), std::invalid_argument);
}

TEST_CASE("kernel tuples and the coordinate action") {
    DetRng rng(17);
    WeierstrassCurve E = curve(5, 0, 1);
    auto pts = enumerate_points(E);
    auto rand_pt = [&]() {
        return pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
    };

    CHECK_THROWS_AS(TildeYPoint({pt(E, 0, 1), pt(E, 0, 1), pt(E, 2, 2)}), std::invalid_argument);

    Perm c3 = Perm::from_cycles(3, {{1, 2, 3}});
    for (int trial = 0; trial < 100; ++trial) {
        CurvePoint P = rand_pt(), Q = rand_pt();
        TildeYPoint y = TildeYPoint::from_phi(E, {P, Q});
        CHECK(TildeYPoint(y.coords()) == y);
        CHECK(TildeYPoint::from_phi(E, y.phi()) == y);
        // the 3-cycle acts through phi as (P, Q) -> (-P - Q, P)
        TildeYPoint z = act(c3, y);
        CHECK(z.phi() == std::vector<CurvePoint>{-(P + Q), P});
        CHECK(act(c3.inverse(), z) == y);
    }

    // action is a homomorphism on tuples of length 4
    auto group = alternating_group(4);
    for (int trial = 0; trial < 50; ++trial) {
        TildeYPoint y = TildeYPoint::from_phi(E, {rand_pt(), rand_pt(), rand_pt()});
        const Perm& g = group[static_cast<std::size_t>(rng.uniform(0, 11))];
        const Perm& h = group[static_cast<std::size_t>(rng.uniform(0, 11))];
        CHECK(act(g, act(h, y)) == act(g.compose(h), y));
    }
}

TEST_CASE("three-cycle fixed locus over the 3-torsion field") {
    DetRng rng(23);
    WeierstrassCurve E13 = curve(13, 0, 1);
    Perm c3 = Perm::from_cycles(3, {{1, 2, 3}});
    auto locus = fixed_locus(E13, 2, c3, true, rng);
    CHECK(locus.field_used->degree() == 3);
    REQUIRE(locus.points.size() == 9);
    for (const TildeYPoint& y : locus.points) {
        CHECK(y.coords()[0] == y.coords()[1]);
        CHECK(y.coords()[1] == y.coords()[2]);
        CHECK(y.coords()[0].times(3).is_infinity());
    }
}

TEST_CASE("identity fixed locus is the whole tuple space") {
    DetRng rng(29);
    WeierstrassCurve E = curve(5, 0, 1);
    auto locus = fixed_locus(E, 2, Perm::identity(3), false, rng);
    CHECK(locus.points.size() == 36);
    CHECK(fixed_tuple_count(E, 2, Perm::identity(3)) == 36);
}

TEST_CASE("double transposition fixed locus splits into four torsion classes") {
    DetRng rng(31);
    WeierstrassCurve E5 = curve(5, 0, 1);
    Perm dt = Perm::from_cycles(4, {{1, 2}, {3, 4}});
    auto locus = fixed_locus(E5, 3, dt, true, rng);
    CHECK(locus.field_used->degree() == 2);
    long long ne = static_cast<long long>(enumerate_points(locus.curve).size());
    CHECK(static_cast<long long>(locus.points.size()) == 4 * ne);
    std::map<CurvePoint, long long> per_class;
    for (const TildeYPoint& y : locus.points) {
        CHECK(y.coords()[0] == y.coords()[1]);
        CHECK(y.coords()[2] == y.coords()[3]);
        CurvePoint t = y.coords()[0] + y.coords()[2];
        CHECK(t.times(2).is_infinity());
        ++per_class[t];
    }
    CHECK(per_class.size() == 4);
    for (const auto& [t, count] : per_class) CHECK(count == ne);
}

TEST_CASE("fixed loci transport under conjugation") {
    DetRng rng(37);
    WeierstrassCurve E = curve(5, 0, 1);
    Perm g = Perm::from_cycles(4, {{1, 2}, {3, 4}});
    Perm h = Perm::from_cycles(4, {{1, 2, 3}});
    Perm conj = h.compose(g).compose(h.inverse());
    auto base = fixed_locus(E, 3, g, false, rng);
    auto moved = fixed_locus(E, 3, conj, false, rng);
    std::set<TildeYPoint> transported;
    for (const TildeYPoint& y : base.points) transported.insert(act(h, y));
    CHECK(transported == std::set<TildeYPoint>(moved.points.begin(), moved.points.end()));
}

TEST_CASE("stabilizer census over the 3-torsion field, n = 2") {
    DetRng rng(41);
    WeierstrassCurve E5 = curve(5, 0, 1);
    auto tor = torsion_points(E5, 3, true, rng);
    CHECK(tor.field_used->degree() == 2);
    StabilizerCensus census = stabilizer_census(tor.curve, 2);
    CHECK(census.curve_points == 36);
    CHECK(census.total == 36 * 36);
    CHECK(census.entries.at("A3") == 9);
    CHECK(census.entries.at("trivial") == 36 * 36 - 9);
    long long sum = 0;
    for (const auto& [tag, count] : census.entries) sum += count;
    CHECK(sum == census.total);
}

TEST_CASE("stabilizer census over F_5, n = 3") {
    WeierstrassCurve E = curve(5, 0, 1);
    StabilizerCensus census = stabilizer_census(E, 3);
    CHECK(census.total == 216);
    CHECK(census.entries.at("trivial") == 168);
    CHECK(census.entries.at("C2") == 30);
    CHECK(census.entries.at("C3") == 16);
    CHECK(census.entries.at("A4") == 2);
    CHECK(census.entries.count("V4") == 0);
}

TEST_CASE("census dimension estimates across a field extension") {
    WeierstrassCurve E7 = curve(7, 0, 1);
    StabilizerCensus small = stabilizer_census(E7, 3);

    DetRng rng(43);
    SplittingContext ctx(E7.field(), 24);
    UPoly quad = find_irreducible(7, 2, rng);
    ctx.split_fully(quad, rng); // grow the tower to F_49
    WeierstrassCurve E49 = E7.lifted(ctx);
    StabilizerCensus large = stabilizer_census(E49, 3);

    auto tags = estimate_census_dimensions(small, large);
    CHECK(tags.at("trivial") == "curve-dimensional");
    CHECK(tags.at("C2") == "curve-dimensional");
    CHECK(tags.at("C3") == "curve-dimensional");
    CHECK(tags.at("A4") == "torsion-bounded (0-dimensional)");
}

TEST_CASE("Burnside averages equal direct orbit counts") {
    WeierstrassCurve E5 = curve(5, 0, 1);
    WeierstrassCurve E7 = curve(7, 0, 1);

    CHECK(burnside_orbit_count(E5, 2) == 14);
    CHECK(direct_orbit_count(E5, 2) == 14);

    CHECK(burnside_orbit_count(E7, 2) == 50);
    CHECK(direct_orbit_count(E7, 2) == 50);

    CHECK(burnside_orbit_count(E5, 3) == 25);
    CHECK(direct_orbit_count(E5, 3) == 25);

    // identity-only "group": every tuple is its own orbit
    CHECK(fixed_tuple_count(E5, 2, Perm::identity(3)) == 36);
}
