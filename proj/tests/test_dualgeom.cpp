#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cykummer/dualgeom.hpp"
#include "cykummer/factor.hpp"

#include <fstream>
#include <map>
#include <set>
#include <string>

using namespace cykummer;

namespace {

WeierstrassCurve curve(std::int64_t p, std::int64_t a, std::int64_t b) {
    const Field f = FieldDescriptor::prime(p);
    return WeierstrassCurve(f, FieldElement::from_integer(f, a), FieldElement::from_integer(f, b));
}

WeierstrassCurve qcurve(std::int64_t a, std::int64_t b) {
    const Field f = FieldDescriptor::rationals();
    return WeierstrassCurve(f, FieldElement::from_integer(f, a), FieldElement::from_integer(f, b));
}

std::string golden_sextic_text() {
    std::ifstream in(std::string(CYK_SOURCE_DIR) + "/tests/golden/dual_sextic_q.txt");
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    return line;
}

} // namespace

TEST_CASE("plane cubic form, charts, and base point") {
    const PlaneCubic c(curve(101, 0, 1));
    CHECK(c.form().is_homogeneous());
    CHECK(c.form().total_deg() == 3);
    CHECK(c.affine_form() == MPoly::parse(c.field(), 2, "x1^2 - x0^3 - 1"));

    const FieldElement z = FieldElement::zero(c.field()), o = FieldElement::one(c.field());
    CHECK(c.form().eval({z, o, z}).is_zero());
    CHECK(c.hessian().eval({z, o, z}).is_zero());
    const std::vector<MPoly> g = c.gradient();
    CHECK(g[0].eval({z, o, z}).is_zero());
    CHECK(g[1].eval({z, o, z}).is_zero());
    CHECK(g[2].eval({z, o, z}) == o);

    const PlaneCubic cq(qcurve(-2, 3));
    CHECK(cq.affine_form() == MPoly::parse(cq.field(), 2, "x1^2 - x0^3 + 2*x0 - 3"));
}

TEST_CASE("plane cubic smoothness certificates") {
    DetRng rng(11);
    CHECK(PlaneCubic(curve(101, 0, 1)).certify_smooth(rng));
    CHECK(PlaneCubic(curve(13, 2, 0)).certify_smooth(rng));
    CHECK(PlaneCubic(qcurve(0, 1)).certify_smooth(rng));
}

TEST_CASE("golden dual sextic over the rationals") {
    const PlaneCubic c(qcurve(0, 1));
    const DualCurve d = dual_curve(c);
    CHECK(d.form.is_homogeneous());
    CHECK(d.form.total_deg() == 6);
    CHECK(d.form.str() == golden_sextic_text());

    // elimination-order independence: the other chart gives the same form
    CHECK(dual_curve_via_chart(c, 0).form == d.form);
    CHECK(dual_curve_via_chart(c, 1).form == d.form);

    DetRng rng(5);
    CHECK(certify_squarefree_by_line(d.form, rng));
    CHECK(certify_tangents_on_dual(c, d));

    // hand-checked tangent lines satisfy the sextic, a non-tangent does not
    const Field& f = c.field();
    auto at = [&](std::int64_t u, std::int64_t v, std::int64_t w) {
        return d.form.eval({FieldElement::from_integer(f, u), FieldElement::from_integer(f, v),
                            FieldElement::from_integer(f, w)});
    };
    CHECK(at(0, 0, 1).is_zero());  // tangent at the base point
    CHECK(at(1, 0, 1).is_zero());  // vertical tangent at (-1, 0)
    CHECK(at(0, 1, -1).is_zero()); // tangent at (0, 1)
    CHECK(at(2, -1, -1).is_zero()); // tangent at (2, 3)
    CHECK(!at(1, 0, 0).is_zero());
}

TEST_CASE("dual sextic over a prime field matches the reduced golden form") {
    const PlaneCubic c(curve(101, 0, 1));
    const DualCurve d = dual_curve(c);
    CHECK(d.form.total_deg() == 6);
    CHECK(d.form == MPoly::parse(c.field(), 3, golden_sextic_text()).normalized());
    CHECK(dual_curve_via_chart(c, 1).form == d.form);

    DetRng rng(5);
    CHECK(certify_squarefree_by_line(d.form, rng));
    CHECK(certify_tangents_on_dual(c, d));

    // biduality smoke test: tangent images of curve points satisfy the sextic
    const WeierstrassCurve& e = c.curve();
    const std::vector<MPoly> g = c.gradient();
    int checked = 0;
    for (const CurvePoint& p : enumerate_points(e)) {
        if (p.is_infinity()) continue;
        const std::vector<FieldElement> p3 = {p.x(), p.y(), FieldElement::one(c.field())};
        CHECK(d.form.eval({g[0].eval(p3), g[1].eval(p3), g[2].eval(p3)}).is_zero());
        if (++checked == 3) break;
    }
    CHECK(checked == 3);
}

TEST_CASE("dual curve of a cubic with a nonzero linear coefficient") {
    const PlaneCubic c(curve(101, 1, 1));
    const DualCurve d0 = dual_curve_via_chart(c, 0);
    const DualCurve d1 = dual_curve_via_chart(c, 1);
    CHECK(d0.form == d1.form);
    CHECK(d0.form.total_deg() == 6);
    DetRng rng(17);
    CHECK(certify_squarefree_by_line(d0.form, rng));
    CHECK(certify_tangents_on_dual(c, d0));
}

TEST_CASE("dual singularity census: nine cusps and nothing else") {
    DetRng rng(23);
    for (const bool rational : {false, true}) {
        const PlaneCubic c(rational ? qcurve(0, 1) : curve(101, 0, 1));
        const DualSingularityReport r = classify_dual_singularities(dual_curve(c), rng);
        CHECK(r.count_over_closure == 9);
        CHECK(r.cusps == 9);
        CHECK(r.nodes == 0);
        CHECK(r.other == 0);
        CHECK(r.boundary_points == 0);
        for (const ClassifiedBranch& cb : r.affine_branches)
            CHECK(cb.type == SingularityType::Cusp);
    }

    const PlaneCubic c2(curve(101, 1, 1));
    const DualSingularityReport r2 = classify_dual_singularities(dual_curve(c2), rng);
    CHECK(r2.cusps == 9);
    CHECK(r2.nodes == 0);
    CHECK(r2.other == 0);
}

TEST_CASE("pointwise germ classifier on seeded normal forms") {
    for (const std::int64_t p : {0, 101}) {
        const Field f = (p == 0) ? FieldDescriptor::rationals() : FieldDescriptor::prime(p);
        const FieldElement z = FieldElement::zero(f);
        auto classify = [&](const std::string& text) {
            return classify_at_point(MPoly::parse(f, 2, text), z, z);
        };
        CHECK(classify("x1 - x0^2") == SingularityType::Smooth);
        CHECK(classify("x0*x1") == SingularityType::Node);
        CHECK(classify("x1^2 - x0^2 - x0^3") == SingularityType::Node);
        CHECK(classify("x1^2 - x0^3") == SingularityType::Cusp);
        CHECK(classify("x1^2 - x0^4") == SingularityType::Other);
        CHECK(classify("x1^3 - x0^4") == SingularityType::Other);
        CHECK_THROWS_AS(classify("x0*x1 + 1"), std::invalid_argument);
    }
}

TEST_CASE("branch classifier splits a mixed branch by type") {
    for (const std::int64_t p : {0, 101}) {
        const Field f = (p == 0) ? FieldDescriptor::rationals() : FieldDescriptor::prime(p);
        // cusp at (0,0) from the first factor, node at (1,0) from the second
        const MPoly g = MPoly::parse(f, 2, "x1^2 - x0^3") *
                        MPoly::parse(f, 2, "x1^2 - x0^3 + x0^2 + x0 - 1");
        // one branch whose two points are (0,0) and (1,0)
        const RurBranch mixed{UPoly::from_int_coeffs(f, {0, -1, 1}), UPoly::from_int_coeffs(f, {0, 1}),
                              UPoly::zero(f)};
        std::map<std::string, SingularityType> seen;
        for (const ClassifiedBranch& cb : classify_branches(g, {mixed})) {
            REQUIRE(cb.branch.h.degree() == 1);
            seen[(-cb.branch.h.coeff(0)).str()] = cb.type;
        }
        REQUIRE(seen.size() == 2);
        CHECK(seen.at("0") == SingularityType::Cusp);
        CHECK(seen.at("1") == SingularityType::Node);
    }
}

TEST_CASE("inflection points over a small prime field") {
    const PlaneCubic c(curve(13, 0, 1));
    DetRng rng(31);
    CHECK(inflection_count_over_closure(c, rng) == 9);

    const InflectionPoints inf = inflection_points(c, rng);
    CHECK(inf.field_used->degree() == 3);
    CHECK(inf.points.size() == 9);

    const Field& fx = inf.field_used;
    const WeierstrassCurve lifted(fx, FieldElement::from_integer(fx, 0),
                                  FieldElement::from_integer(fx, 1));
    const MPoly form = PlaneCubic(lifted).form();
    const MPoly hess = PlaneCubic(lifted).hessian();
    const UPoly psi3 = UPoly::from_int_coeffs(fx, {0, 12, 0, 0, 3}); // 3x^4 + 12x for a=0, b=1
    std::set<std::string> xs;
    int at_infinity = 0;
    for (const auto& pt : inf.points) {
        CHECK(form.eval(pt).is_zero());
        CHECK(hess.eval(pt).is_zero());
        if (pt[2].is_zero())
            ++at_infinity;
        else
            xs.insert(pt[0].str());
    }
    CHECK(at_infinity == 1);
    CHECK(xs.size() == 4);
    for (const auto& pt : inf.points)
        if (!pt[2].is_zero()) CHECK(psi3.eval(pt[0]).is_zero());
}

TEST_CASE("inflection count over other base fields") {
    DetRng rng(37);
    CHECK(inflection_count_over_closure(PlaneCubic(curve(101, 0, 1)), rng) == 9);
    CHECK(inflection_count_over_closure(PlaneCubic(curve(101, 1, 1)), rng) == 9);
    CHECK(inflection_count_over_closure(PlaneCubic(qcurve(0, 1)), rng) == 9);
    CHECK(inflection_points(PlaneCubic(curve(101, 0, 1)), rng).points.size() == 9);
}

TEST_CASE("cusps correspond to inflections pointwise over a prime field") {
    DetRng rng(41);
    const PlaneCubic c(curve(101, 0, 1));
    const CuspMatchReport r = match_cusps_to_inflections(c, dual_curve(c), rng);
    CHECK(r.inflections == 9);
    CHECK(r.dual_singularities == 9);
    CHECK(r.images_singular);
    CHECK(r.images_distinct);
    CHECK(r.matched);
}

TEST_CASE("cusps correspond to inflections symbolically") {
    DetRng rng(43);
    const PlaneCubic cq(qcurve(0, 1));
    const CuspMatchReport rq = match_cusps_to_inflections_symbolic(cq, dual_curve(cq), rng);
    CHECK(rq.inflections == 9);
    CHECK(rq.dual_singularities == 9);
    CHECK(rq.images_singular);
    CHECK(rq.images_distinct);
    CHECK(rq.matched);

    const PlaneCubic cp(curve(13, 0, 1));
    CHECK(match_cusps_to_inflections_symbolic(cp, dual_curve(cp), rng).matched);
}

TEST_CASE("tangent count from outside points") {
    const PlaneCubic c(curve(101, 0, 1));
    const Field& f = c.field();
    auto triple = [&](std::int64_t a, std::int64_t b, std::int64_t w) {
        return std::vector<FieldElement>{FieldElement::from_integer(f, a),
                                         FieldElement::from_integer(f, b),
                                         FieldElement::from_integer(f, w)};
    };

    // a point of the curve is rejected
    CHECK_THROWS_AS(tangents_from_point(c, triple(2, 3, 1)), std::invalid_argument);

    // twenty generic samples each see six distinct tangent lines
    DetRng rng(47);
    int generic = 0, draws = 0;
    while (generic < 20 && draws < 60) {
        ++draws;
        const std::vector<FieldElement> q = {FieldElement::random(f, rng),
                                             FieldElement::random(f, rng),
                                             FieldElement::random(f, rng)};
        if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero()) continue;
        if (c.form().eval(q).is_zero()) continue;
        const TangentCount t = tangents_from_point(c, q);
        if (t.eliminant_degree == 6 && t.squarefree) ++generic;
    }
    CHECK(generic == 20);

    // a point on an inflection tangent sees a multiplicity drop
    const TangentCount special = tangents_from_point(c, triple(1, 1, 1));
    CHECK(special.eliminant_degree == 6);
    CHECK(!special.squarefree);

    const PlaneCubic cq(qcurve(0, 1));
    const FieldElement oneq = FieldElement::one(cq.field());
    const TangentCount special_q = tangents_from_point(cq, {oneq, oneq, oneq});
    CHECK(!special_q.squarefree);
}

TEST_CASE("quadric pencil model contains the embedded curve and is smooth") {
    const WeierstrassCurve e = curve(101, 0, 1);
    const QuadricPencilCurve q(e);
    const Field& f = q.field();

    // the embedding identities hold symbolically
    const MPoly x = MPoly::variable(f, 2, 0), y = MPoly::variable(f, 2, 1);
    const MPoly one2 = MPoly::constant(f, 2, FieldElement::one(f));
    const std::vector<MPoly> par = {one2, x, y, x * x};
    CHECK(q.q1().substitute_all(par).is_zero());
    CHECK(q.q2().substitute_all(par) == MPoly::parse(f, 2, "x1^2 - x0^3 - 1"));

    DetRng rng(53);
    CHECK(q.certify_smooth(rng));

    // rank-two Jacobian at twenty random curve points
    const std::vector<CurvePoint> pts = enumerate_points(e);
    int checked = 0;
    for (int i = 0; checked < 20 && i < 200; ++i) {
        const CurvePoint& p = pts[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
        if (p.is_infinity()) continue;
        CHECK(q.contains_embedded(p.x(), p.y()));
        const std::vector<FieldElement> z = {FieldElement::one(f), p.x(), p.y(), p.x() * p.x()};
        bool rank2 = false;
        for (int r = 0; r < 4 && !rank2; ++r)
            for (int s = r + 1; s < 4 && !rank2; ++s)
                rank2 = !(q.q1().derivative(r).eval(z) * q.q2().derivative(s).eval(z) -
                          q.q1().derivative(s).eval(z) * q.q2().derivative(r).eval(z))
                             .is_zero();
        CHECK(rank2);
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("dual surface eliminant has degree eight for generic lines") {
    const QuadricPencilCurve q(curve(101, 0, 1));
    DetRng rng(59);
    for (int i = 0; i < 20; ++i) {
        const SurfaceDegreeProbe probe = dual_surface_probe(q, rng);
        CHECK(probe.degree == 8);
        CHECK(probe.squarefree);
        CHECK(probe.retries <= 8);
    }

    // a degenerate configuration (a repeated spanning point) collapses
    const Field& f = q.field();
    std::vector<FieldElement> a;
    for (std::int64_t i = 1; i <= 4; ++i) a.push_back(FieldElement::from_integer(f, i));
    CHECK(dual_surface_degree(q, a, a).degree == -1);

    const QuadricPencilCurve q13(curve(13, 2, 0));
    const SurfaceDegreeProbe probe13 = dual_surface_probe(q13, rng);
    CHECK(probe13.degree == 8);
    CHECK(probe13.squarefree);
}

TEST_CASE("special divisor sections over the 4-torsion field") {
    DetRng rng(61);
    const SpecialDivisorReport r = special_divisor_curves(curve(13, 0, 1), rng);
    CHECK(r.field_used->degree() == 2);
    CHECK(r.curve_points == 192);
    CHECK(r.curve_count == 4);
    CHECK(r.disjoint);
    CHECK(r.involution_ok);
    CHECK(r.coincidence_iff_halving);
    CHECK(r.coincidences == 16);
    CHECK(r.exact_order_four == 12);

    const SpecialDivisorReport r5 = special_divisor_curves(curve(5, 0, 1), rng);
    CHECK(r5.curve_count == 4);
    CHECK(r5.disjoint);
    CHECK(r5.involution_ok);
    CHECK(r5.coincidence_iff_halving);
    CHECK(r5.coincidences == 16);
    CHECK(r5.exact_order_four == 12);
}
