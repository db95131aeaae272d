/*
   Copyright 2026 The cykummer authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cykummer/dualgeom.hpp"

#include "cykummer/factor.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace cykummer {

namespace {

FieldElement fe(const Field& f, std::int64_t n) { return FieldElement::from_integer(f, n); }

UPoly upoly_one(const Field& f) { return UPoly::from_int_coeffs(f, {1}); }

UPoly upmod(const UPoly& a, const UPoly& h) { return UPoly::divmod(a, h).second; }

UPoly upmulmod(const UPoly& a, const UPoly& b, const UPoly& h) { return upmod(a * b, h); }

/// Substitute 1 for `chart_var` and renumber the remaining variables in order.
MPoly restrict_chart(const MPoly& form, int chart_var) {
    const Field& f = form.field();
    const int n = form.nvars();
    MPoly g = form.substitute(chart_var, MPoly::constant(f, n, FieldElement::one(f)));
    std::vector<int> perm(n);
    int next = 0;
    for (int i = 0; i < n; ++i) perm[i] = (i == chart_var) ? 0 : next++;
    return g.rename_vars(n - 1, perm);
}

/// The homogeneous part of the given total degree.
MPoly graded_part(const MPoly& f, int d) {
    MPoly out = MPoly::zero(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms())
        if (total_degree(e) == d) out.set_coeff(e, c);
    return out;
}

FieldElement coeff_of(const MPoly& f, const Exponents& e) {
    auto it = f.terms().find(e);
    return it == f.terms().end() ? FieldElement::zero(f.field()) : it->second;
}

} // namespace

// ---------------------------------------------------------------------------
// PlaneCubic
// ---------------------------------------------------------------------------

PlaneCubic::PlaneCubic(const WeierstrassCurve& E) : curve_(E) {
    const Field& f = E.field();
    const MPoly X = MPoly::variable(f, 3, 0);
    const MPoly Y = MPoly::variable(f, 3, 1);
    const MPoly Z = MPoly::variable(f, 3, 2);
    form_ = Y * Y * Z - X.pow(3) - X * Z * Z * E.a() - Z.pow(3) * E.b();
}

MPoly PlaneCubic::affine_form() const { return restrict_chart(form_, 2); }

std::vector<MPoly> PlaneCubic::gradient() const {
    return {form_.derivative(0), form_.derivative(1), form_.derivative(2)};
}

MPoly PlaneCubic::hessian() const {
    std::vector<std::vector<MPoly>> m(3, std::vector<MPoly>());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i].push_back(form_.derivative(i).derivative(j));
    return bareiss_det(std::move(m));
}

bool PlaneCubic::certify_smooth(DetRng& rng) const {
    const std::vector<MPoly> grad = gradient();
    for (int chart = 0; chart < 3; ++chart) {
        std::vector<MPoly> gens;
        gens.reserve(3);
        for (const MPoly& g : grad) gens.push_back(restrict_chart(g, chart));
        if (!certify_empty(gens, rng)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Dual curve
// ---------------------------------------------------------------------------

namespace {

/**
 * Restrict the cubic to the pencil of points of the line u X + v Y + w Z = 0
 * in one chart, clear denominators, and take the discriminant in the pencil
 * parameter.  Chart 0 uses points (x : 1 : -(u x + v) / w), chart 1 uses
 * (x : -(u x + w) / v : 1); either way the cleared restriction is a cubic in
 * x whose coefficients are degree-3 forms in (u, v, w), so its discriminant
 * is a degree-12 form divisible by the sixth power of the cleared chart
 * variable.  The quotient is the dual sextic.
 */
std::optional<MPoly> dual_form_via_chart(const MPoly& cubic, int chart) {
    const Field& f = cubic.field();
    const MPoly x = MPoly::variable(f, 4, 0);
    const MPoly u = MPoly::variable(f, 4, 1);
    const MPoly v = MPoly::variable(f, 4, 2);
    const MPoly w = MPoly::variable(f, 4, 3);

    MPoly g = MPoly::zero(f, 4);
    for (const auto& [e, c] : cubic.terms()) {
        const int i = e[0], j = e[1], k = e[2];
        MPoly t = MPoly::monomial(f, {i, 0, 0, 0}, c);
        if (chart == 0) {
            t = t * (u * x + v).pow(k) * w.pow(3 - k);
            if (k % 2) t = -t;
        } else {
            t = t * (u * x + w).pow(j) * v.pow(3 - j);
            if (j % 2) t = -t;
        }
        g = g + t;
    }
    if (g.degree_in(0) != 3) return std::nullopt;

    MPoly disc = mpoly_discriminant(g, 0);
    if (disc.is_zero()) return std::nullopt;

    const int strip_var = (chart == 0) ? 3 : 2;
    int strip = -1;
    for (const auto& [e, c] : disc.terms())
        strip = (strip < 0) ? e[strip_var] : std::min(strip, e[strip_var]);
    if (strip > 0) {
        Exponents mono(4, 0);
        mono[strip_var] = strip;
        disc = disc.divide_by_monomial(mono);
    }

    MPoly out = disc.rename_vars(3, {0, 0, 1, 2});
    if (!out.is_homogeneous() || out.total_deg() != 6) return std::nullopt;
    return out.normalized();
}

} // namespace

DualCurve dual_curve_via_chart(const PlaneCubic& C, int chart) {
    if (chart != 0 && chart != 1) throw std::invalid_argument("dual_curve_via_chart: chart must be 0 or 1");
    auto out = dual_form_via_chart(C.form(), chart);
    if (!out) throw std::runtime_error("dual_curve_via_chart: parametrization degenerated");
    return DualCurve{C.field(), *out, chart};
}

DualCurve dual_curve(const PlaneCubic& C) {
    for (int chart = 0; chart < 2; ++chart) {
        auto out = dual_form_via_chart(C.form(), chart);
        if (out) return DualCurve{C.field(), *out, chart};
    }
    throw std::runtime_error("dual_curve: both chart parametrizations degenerated");
}

bool certify_squarefree_by_line(const MPoly& form, DetRng& rng, int max_tries) {
    const Field& f = form.field();
    const int n = form.nvars();
    const int d = form.total_deg();
    if (d <= 0) return false;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        // restrict to the affine line p + t q
        const MPoly t = MPoly::variable(f, 1, 0);
        std::vector<MPoly> line;
        line.reserve(n);
        for (int i = 0; i < n; ++i) {
            const FieldElement p = FieldElement::random(f, rng);
            const FieldElement q = FieldElement::random(f, rng);
            line.push_back(MPoly::constant(f, 1, p) + t * q);
        }
        const UPoly r = UPoly::from_mpoly(form.substitute_all(line), 0);
        // a full-degree squarefree restriction leaves no room for a repeated
        // factor of the form itself
        if (r.degree() == d && r.is_squarefree()) return true;
    }
    return false;
}

bool certify_tangents_on_dual(const PlaneCubic& C, const DualCurve& D) {
    const MPoly composed = D.form.substitute_all(C.gradient());
    if (composed.is_zero()) return true;
    return MPoly::divide_exact(composed, C.form()).has_value();
}

// ---------------------------------------------------------------------------
// Planar singularities
// ---------------------------------------------------------------------------

std::string singularity_name(SingularityType t) {
    switch (t) {
        case SingularityType::Smooth: return "smooth";
        case SingularityType::Node: return "node";
        case SingularityType::Cusp: return "cusp";
        case SingularityType::Other: return "other";
    }
    throw std::logic_error("singularity_name: unknown tag");
}

SingularityType classify_at_point(const MPoly& f, const FieldElement& u0, const FieldElement& v0) {
    if (f.nvars() != 2) throw std::invalid_argument("classify_at_point: expected a two-variable polynomial");
    const Field& fld = f.field();
    const MPoly s = MPoly::variable(fld, 2, 0);
    const MPoly t = MPoly::variable(fld, 2, 1);
    const MPoly local =
        f.substitute_all({s + MPoly::constant(fld, 2, u0), t + MPoly::constant(fld, 2, v0)});

    if (!graded_part(local, 0).is_zero())
        throw std::invalid_argument("classify_at_point: point is not on the curve");
    if (!graded_part(local, 1).is_zero()) return SingularityType::Smooth;

    const MPoly quad = graded_part(local, 2);
    const FieldElement a = coeff_of(quad, {2, 0});
    const FieldElement b = coeff_of(quad, {1, 1});
    const FieldElement c = coeff_of(quad, {0, 2});
    const FieldElement disc = b * b - fe(fld, 4) * a * c;
    if (!disc.is_zero()) return SingularityType::Node;
    if (quad.is_zero()) return SingularityType::Other;

    // rank one: the kernel direction of the quadratic part
    FieldElement s0 = FieldElement::one(fld), t0 = FieldElement::zero(fld);
    if (!a.is_zero()) {
        s0 = b;
        t0 = -(a + a);
    }
    const FieldElement along = graded_part(local, 3).eval({s0, t0});
    return along.is_zero() ? SingularityType::Other : SingularityType::Cusp;
}

namespace {

RurBranch reduce_branch(const RurBranch& b, const UPoly& hnew) {
    return RurBranch{hnew.monic(), upmod(b.xrep, hnew), upmod(b.yrep, hnew)};
}

} // namespace

std::vector<ClassifiedBranch> classify_branches(const MPoly& f, const std::vector<RurBranch>& branches) {
    if (f.nvars() != 2) throw std::invalid_argument("classify_branches: expected a two-variable polynomial");
    const MPoly fuu = f.derivative(0).derivative(0);
    const MPoly fuv = f.derivative(0).derivative(1);
    const MPoly fvv = f.derivative(1).derivative(1);
    const MPoly fuuu = fuu.derivative(0);
    const MPoly fuuv = fuu.derivative(1);
    const MPoly fuvv = fvv.derivative(0);
    const MPoly fvvv = fvv.derivative(1);

    std::vector<ClassifiedBranch> out;
    auto emit = [&out](const RurBranch& b, SingularityType t) {
        if (b.h.degree() > 0) out.push_back({b, t});
    };

    // classify the cubic part of the local expansion along the kernel
    // direction (s0, t0) of the rank-one quadratic part; six times the
    // directional value keeps everything fraction-free
    auto cusp_or_other = [&](const RurBranch& b, const UPoly& s0, const UPoly& t0) {
        const UPoly& h = b.h;
        const FieldElement three = fe(h.field(), 3);
        const UPoly s2 = upmulmod(s0, s0, h), s3 = upmulmod(s2, s0, h);
        const UPoly t2 = upmulmod(t0, t0, h), t3 = upmulmod(t2, t0, h);
        UPoly val = upmulmod(eval_along(fuuu, b), s3, h);
        val = val + upmulmod(eval_along(fuuv, b), s2, h) * three * t0;
        val = val + upmulmod(eval_along(fuvv, b), t2, h) * three * s0;
        val = val + upmulmod(eval_along(fvvv, b), t3, h);
        val = upmod(val, h);
        const UPoly g = UPoly::gcd(val, h);
        if (g.degree() < h.degree())
            emit(reduce_branch(b, UPoly::divmod(h, g).first), SingularityType::Cusp);
        if (g.degree() > 0) emit(reduce_branch(b, g), SingularityType::Other);
    };

    for (const RurBranch& start : branches) {
        if (start.h.degree() <= 0) continue;
        RurBranch b = reduce_branch(start, start.h);

        // rank test: split off the points with nondegenerate quadratic part
        const UPoly a = eval_along(fuu, b);
        const UPoly m = eval_along(fuv, b);
        const UPoly c = eval_along(fvv, b);
        const UPoly d2 = upmod(m * m - a * c, b.h);
        const UPoly g = UPoly::gcd(d2, b.h);
        if (g.degree() < b.h.degree())
            emit(reduce_branch(b, UPoly::divmod(b.h, g).first), SingularityType::Node);
        if (g.degree() == 0) continue;
        b = reduce_branch(b, g);

        // split off the points where the quadratic part vanishes entirely
        const UPoly zq = UPoly::gcd(UPoly::gcd(upmod(a, b.h), upmod(m, b.h)),
                                    UPoly::gcd(upmod(c, b.h), b.h));
        if (zq.degree() > 0) emit(reduce_branch(b, zq), SingularityType::Other);
        if (zq.degree() == b.h.degree()) continue;
        if (zq.degree() > 0) b = reduce_branch(b, UPoly::divmod(b.h, zq).first);

        // rank exactly one: kernel direction is (f_uv, -f_uu) where f_uu is
        // a unit, and (1, 0) where f_uu (hence f_uv) vanishes
        const UPoly ga = UPoly::gcd(upmod(a, b.h), b.h);
        if (ga.degree() < b.h.degree()) {
            const RurBranch part = reduce_branch(b, UPoly::divmod(b.h, ga).first);
            cusp_or_other(part, upmod(m, part.h), -upmod(a, part.h));
        }
        if (ga.degree() > 0) {
            const RurBranch part = reduce_branch(b, ga);
            cusp_or_other(part, upoly_one(ga.field()), UPoly(ga.field()));
        }
    }
    return out;
}

namespace {

UPoly boundary_restriction(const MPoly& form3) {
    // the binary form form3(u, 1, 0) as a univariate in u
    const Field& f = form3.field();
    MPoly g = form3.substitute(1, MPoly::constant(f, 3, FieldElement::one(f)));
    g = g.substitute(2, MPoly::zero(f, 3));
    return UPoly::from_mpoly(g, 0);
}

struct BoundaryScan {
    UPoly locus;                       // squarefree h(u): singular points (u : 1 : 0)
    bool corner = false;               // (1 : 0 : 0) is singular
};

BoundaryScan scan_boundary_singularities(const MPoly& form) {
    const Field& f = form.field();
    const MPoly du = form.derivative(0), dv = form.derivative(1), dw = form.derivative(2);
    BoundaryScan scan{UPoly(f), false};
    UPoly g = UPoly::gcd(boundary_restriction(form), boundary_restriction(du));
    g = UPoly::gcd(g, boundary_restriction(dv));
    g = UPoly::gcd(g, boundary_restriction(dw));
    scan.locus = g.squarefree_part();
    const std::vector<FieldElement> corner = {FieldElement::one(f), FieldElement::zero(f),
                                              FieldElement::zero(f)};
    scan.corner = form.eval(corner).is_zero() && du.eval(corner).is_zero() &&
                  dv.eval(corner).is_zero() && dw.eval(corner).is_zero();
    return scan;
}

/// Branches of the affine (w = 1) singular points of a plane curve.
RurResult affine_singular_branches(const MPoly& form, DetRng& rng) {
    RurResult rur = rur_bivariate(restrict_chart(form.derivative(0), 2),
                                  restrict_chart(form.derivative(1), 2), rng);
    rur = filter_branches(rur, restrict_chart(form, 2));
    return filter_branches(rur, restrict_chart(form.derivative(2), 2));
}

} // namespace

DualSingularityReport classify_dual_singularities(const DualCurve& D, DetRng& rng) {
    DualSingularityReport report;
    const RurResult rur = affine_singular_branches(D.form, rng);
    report.affine_branches = classify_branches(restrict_chart(D.form, 2), rur.branches);

    auto tally = [&report](SingularityType t, int n) {
        report.count_over_closure += n;
        switch (t) {
            case SingularityType::Cusp: report.cusps += n; break;
            case SingularityType::Node: report.nodes += n; break;
            default: report.other += n; break;
        }
    };
    for (const ClassifiedBranch& cb : report.affine_branches) tally(cb.type, cb.branch.h.degree());

    // singular points on the w = 0 boundary line live in the v = 1 chart
    const BoundaryScan scan = scan_boundary_singularities(D.form);
    if (scan.locus.degree() > 0) {
        const Field& f = D.form.field();
        RurBranch line{scan.locus.monic(),
                       upmod(UPoly::from_int_coeffs(f, {0, 1}), scan.locus), UPoly(f)};
        for (const ClassifiedBranch& cb : classify_branches(restrict_chart(D.form, 1), {line})) {
            tally(cb.type, cb.branch.h.degree());
            report.boundary_points += cb.branch.h.degree();
        }
    }
    if (scan.corner) {
        const Field& f = D.form.field();
        tally(classify_at_point(restrict_chart(D.form, 0), FieldElement::zero(f),
                                FieldElement::zero(f)),
              1);
        report.boundary_points += 1;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Inflections and the cusp correspondence
// ---------------------------------------------------------------------------

namespace {

RurResult inflection_branches(const PlaneCubic& C, DetRng& rng) {
    return rur_bivariate(C.affine_form(), restrict_chart(C.hessian(), 2), rng);
}

void check_base_point_inflection(const PlaneCubic& C) {
    const Field& f = C.field();
    const std::vector<FieldElement> base = {FieldElement::zero(f), FieldElement::one(f),
                                            FieldElement::zero(f)};
    if (!C.hessian().eval(base).is_zero())
        throw std::logic_error("inflection scan: base point fails the Hessian condition");
}

} // namespace

int inflection_count_over_closure(const PlaneCubic& C, DetRng& rng) {
    check_base_point_inflection(C);
    return 1 + inflection_branches(C, rng).point_count();
}

namespace {

/// Extract the points of RUR branches over one splitting tower.  Splitting a
/// later branch may extend the tower, so roots are re-lifted at the end.
std::vector<std::vector<FieldElement>> split_branch_points(const std::vector<RurBranch>& branches,
                                                           SplittingContext& ctx, DetRng& rng) {
    std::vector<std::pair<const RurBranch*, std::vector<FieldElement>>> staged;
    for (const RurBranch& b : branches) staged.emplace_back(&b, ctx.split_fully(b.h, rng));
    std::vector<std::vector<FieldElement>> points;
    for (const auto& [b, roots] : staged) {
        const UPoly xr = ctx.lift(b->xrep), yr = ctx.lift(b->yrep);
        for (const FieldElement& r : roots) {
            const FieldElement rl = ctx.lift(r);
            points.push_back({xr.eval(rl), yr.eval(rl)});
        }
    }
    return points;
}

std::array<std::string, 3> projective_key(std::vector<FieldElement> p) {
    for (const FieldElement& c : p) {
        if (c.is_zero()) continue;
        const FieldElement inv = c.inverse();
        for (FieldElement& q : p) q = q * inv;
        break;
    }
    return {p[0].str(), p[1].str(), p[2].str()};
}

MPoly lift_mpoly(const MPoly& f, const SplittingContext& ctx) {
    return f.map_coeffs(ctx.current(), [&ctx](const FieldElement& c) { return ctx.lift(c); });
}

} // namespace

InflectionPoints inflection_points(const PlaneCubic& C, DetRng& rng, int ext_cap) {
    if (!C.field()->is_finite())
        throw std::invalid_argument("inflection_points: explicit points need a finite field");
    check_base_point_inflection(C);
    const RurResult rur = inflection_branches(C, rng);
    SplittingContext ctx(C.field(), ext_cap);
    std::vector<std::vector<FieldElement>> affine = split_branch_points(rur.branches, ctx, rng);

    InflectionPoints out;
    out.field_used = ctx.current();
    const FieldElement one = FieldElement::one(out.field_used);
    const FieldElement zero = FieldElement::zero(out.field_used);
    out.points.push_back({zero, one, zero});
    for (auto& p : affine) out.points.push_back({p[0], p[1], one});
    std::sort(out.points.begin(), out.points.end(),
              [](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
              });
    return out;
}

CuspMatchReport match_cusps_to_inflections(const PlaneCubic& C, const DualCurve& D, DetRng& rng,
                                           int ext_cap) {
    if (!C.field()->is_finite())
        throw std::invalid_argument("match_cusps_to_inflections: pointwise matching needs a finite field");
    check_base_point_inflection(C);
    const BoundaryScan scan = scan_boundary_singularities(D.form);
    if (scan.locus.degree() > 0 || scan.corner)
        throw std::runtime_error("match_cusps_to_inflections: boundary singularities unsupported");

    const RurResult inf = inflection_branches(C, rng);
    const RurResult sing = affine_singular_branches(D.form, rng);

    SplittingContext ctx(C.field(), ext_cap);
    const std::vector<std::vector<FieldElement>> inf_pts = split_branch_points(inf.branches, ctx, rng);
    const std::vector<std::vector<FieldElement>> sing_pts = split_branch_points(sing.branches, ctx, rng);

    const Field fx = ctx.current();
    const FieldElement one = FieldElement::one(fx), zero = FieldElement::zero(fx);
    std::vector<MPoly> grad;
    for (const MPoly& g : C.gradient()) grad.push_back(lift_mpoly(g, ctx));

    std::set<std::array<std::string, 3>> images, singular;
    int inf_count = 0;
    auto add_image = [&](const std::vector<FieldElement>& p3) {
        images.insert(projective_key({grad[0].eval(p3), grad[1].eval(p3), grad[2].eval(p3)}));
        ++inf_count;
    };
    add_image({zero, one, zero});
    std::set<std::array<std::string, 3>> inf_keys;
    inf_keys.insert(projective_key({zero, one, zero}));
    for (auto p : inf_pts) {
        const FieldElement x = ctx.lift(p[0]), y = ctx.lift(p[1]);
        add_image({x, y, one});
        inf_keys.insert(projective_key({x, y, one}));
    }
    for (auto p : sing_pts)
        singular.insert(projective_key({ctx.lift(p[0]), ctx.lift(p[1]), one}));

    CuspMatchReport report;
    report.inflections = static_cast<int>(inf_keys.size());
    report.dual_singularities = static_cast<int>(singular.size());
    report.images_distinct = static_cast<int>(images.size()) == inf_count;
    report.images_singular = std::includes(singular.begin(), singular.end(), images.begin(), images.end());
    report.matched = report.images_distinct && images == singular &&
                     report.inflections == report.dual_singularities;
    return report;
}

namespace {

UPoly eval_hom_mod(const MPoly& P, const std::array<UPoly, 3>& args, const UPoly& h) {
    const Field& f = h.field();
    const int d = std::max(P.total_deg(), 0);
    std::array<std::vector<UPoly>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        pows[i].push_back(upoly_one(f));
        for (int k = 1; k <= d; ++k) pows[i].push_back(upmulmod(pows[i].back(), args[i], h));
    }
    UPoly out(f);
    for (const auto& [e, c] : P.terms()) {
        UPoly t = upmulmod(pows[0][e[0]], pows[1][e[1]], h);
        t = upmulmod(t, pows[2][e[2]], h);
        out = out + t * c;
    }
    return upmod(out, h);
}

} // namespace

CuspMatchReport match_cusps_to_inflections_symbolic(const PlaneCubic& C, const DualCurve& D,
                                                    DetRng& rng) {
    check_base_point_inflection(C);
    const Field& f = C.field();
    CuspMatchReport report;

    const RurResult inf = inflection_branches(C, rng);
    const RurResult sing = affine_singular_branches(D.form, rng);
    const BoundaryScan scan = scan_boundary_singularities(D.form);
    report.inflections = 1 + inf.point_count();
    report.dual_singularities =
        sing.point_count() + scan.locus.degree() + (scan.corner ? 1 : 0);

    const std::array<MPoly, 4> duals = {D.form, D.form.derivative(0), D.form.derivative(1),
                                        D.form.derivative(2)};

    // the base point's tangent image is (0 : 0 : 1)
    const std::vector<FieldElement> base_image = {FieldElement::zero(f), FieldElement::zero(f),
                                                  FieldElement::one(f)};
    bool singular_everywhere = true;
    for (const MPoly& P : duals) singular_everywhere = singular_everywhere && P.eval(base_image).is_zero();

    std::vector<MPoly> grad_aff;
    for (const MPoly& g : C.gradient()) grad_aff.push_back(restrict_chart(g, 2));

    struct ImageBranch {
        UPoly h;
        std::array<UPoly, 3> coords;
    };
    std::vector<ImageBranch> image_branches;
    for (const RurBranch& b : inf.branches) {
        if (b.h.degree() <= 0) continue;
        ImageBranch ib{b.h.monic(),
                       {eval_along(grad_aff[0], b), eval_along(grad_aff[1], b),
                        eval_along(grad_aff[2], b)}};
        for (const MPoly& P : duals)
            singular_everywhere = singular_everywhere && eval_hom_mod(P, ib.coords, ib.h).is_zero();
        image_branches.push_back(std::move(ib));
    }
    report.images_singular = singular_everywhere;

    // distinctness: for some shift the affine separating values u + lambda v
    // of all images form a squarefree product of characteristic polynomials
    for (std::int64_t lambda = 1; lambda <= 20 && !report.images_distinct; ++lambda) {
        UPoly prod = UPoly::from_int_coeffs(f, {0, 1}); // the base image contributes u + lambda v = 0
        bool usable = true;
        for (const ImageBranch& ib : image_branches) {
            const auto [g, s, t] = UPoly::xgcd(ib.coords[2], ib.h);
            if (g.degree() != 0) {
                usable = false;
                break;
            }
            const UPoly winv = upmod(s * g.lc().inverse(), ib.h);
            const UPoly value =
                upmulmod(upmod(ib.coords[0] + ib.coords[1] * fe(f, lambda), ib.h), winv, ib.h);
            prod = prod * value_poly(ib.h, value);
        }
        if (usable && prod.is_squarefree()) report.images_distinct = true;
    }

    report.matched = report.images_singular && report.images_distinct &&
                     report.inflections == report.dual_singularities;
    return report;
}

// ---------------------------------------------------------------------------
// Tangency counts
// ---------------------------------------------------------------------------

TangentCount tangents_from_point(const PlaneCubic& C, const std::vector<FieldElement>& q) {
    if (q.size() != 3) throw std::invalid_argument("tangents_from_point: expected a projective triple");
    if (C.form().eval(q).is_zero())
        throw std::invalid_argument("tangents_from_point: the point lies on the curve");
    const std::vector<MPoly> grad = C.gradient();
    const MPoly polar = grad[0] * q[0] + grad[1] * q[1] + grad[2] * q[2];
    const MPoly res = sylvester_resultant(C.affine_form(), restrict_chart(polar, 2), 1);
    const UPoly r = UPoly::from_mpoly(res, 0);
    if (r.is_zero()) throw std::runtime_error("tangents_from_point: tangency eliminant collapsed");
    TangentCount out;
    out.eliminant_degree = r.degree();
    out.squarefree = r.is_squarefree();
    return out;
}

// ---------------------------------------------------------------------------
// The quadric-pencil model and its dual surface
// ---------------------------------------------------------------------------

QuadricPencilCurve::QuadricPencilCurve(const WeierstrassCurve& E) : curve_(E) {
    const Field& f = E.field();
    const MPoly z0 = MPoly::variable(f, 4, 0);
    const MPoly z1 = MPoly::variable(f, 4, 1);
    const MPoly z2 = MPoly::variable(f, 4, 2);
    const MPoly z3 = MPoly::variable(f, 4, 3);
    q1_ = z1 * z1 - z0 * z3;
    q2_ = z2 * z2 - z1 * z3 - z0 * z1 * E.a() - z0 * z0 * E.b();
}

bool QuadricPencilCurve::contains_embedded(const FieldElement& x, const FieldElement& y) const {
    const std::vector<FieldElement> p = {FieldElement::one(field()), x, y, x * x};
    return q1_.eval(p).is_zero() && q2_.eval(p).is_zero();
}

bool QuadricPencilCurve::certify_smooth(DetRng& rng) const {
    std::vector<MPoly> gens = {q1_, q2_};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            gens.push_back(q1_.derivative(i) * q2_.derivative(j) -
                           q1_.derivative(j) * q2_.derivative(i));
    for (int chart = 0; chart < 4; ++chart) {
        std::vector<MPoly> restricted;
        restricted.reserve(gens.size());
        for (const MPoly& g : gens) restricted.push_back(restrict_chart(g, chart));
        if (!certify_empty(restricted, rng)) return false;
    }
    return true;
}

SurfaceDegreeReport dual_surface_degree(const QuadricPencilCurve& Q,
                                        const std::vector<FieldElement>& A,
                                        const std::vector<FieldElement>& B) {
    if (A.size() != 4 || B.size() != 4)
        throw std::invalid_argument("dual_surface_degree: expected projective 4-tuples");
    const Field& f = Q.field();

    // incidence of the tangent line at a curve point with the line (A, B)
    MPoly a1 = MPoly::zero(f, 4), b1 = a1, a2 = a1, b2 = a1;
    for (int i = 0; i < 4; ++i) {
        a1 = a1 + Q.q1().derivative(i) * A[i];
        b1 = b1 + Q.q1().derivative(i) * B[i];
        a2 = a2 + Q.q2().derivative(i) * A[i];
        b2 = b2 + Q.q2().derivative(i) * B[i];
    }
    const MPoly incidence = a1 * b2 - b1 * a2;

    // restrict to the affine curve chart (1 : x : y : x^2) and eliminate y
    const MPoly x = MPoly::variable(f, 2, 0), y = MPoly::variable(f, 2, 1);
    const MPoly one2 = MPoly::constant(f, 2, FieldElement::one(f));
    const MPoly g = incidence.substitute_all({one2, x, y, x * x});
    const MPoly fx = x.pow(3) + x * Q.curve().a() + one2 * Q.curve().b();
    std::vector<MPoly> cs = g.coeffs_in(1);
    cs.resize(3, MPoly::zero(f, 2));
    const MPoly even = cs[0] + cs[2] * fx;
    const MPoly odd = cs[1];
    const MPoly eliminant = even * even - odd * odd * fx;

    SurfaceDegreeReport out;
    if (eliminant.is_zero()) {
        out.degree = -1;
        return out;
    }
    const UPoly e = UPoly::from_mpoly(eliminant, 0);
    out.degree = e.degree();
    out.squarefree = e.is_squarefree();
    return out;
}

SurfaceDegreeProbe dual_surface_probe(const QuadricPencilCurve& Q, DetRng& rng, int max_retries) {
    const Field& f = Q.field();
    SurfaceDegreeProbe probe;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<FieldElement> A, B;
        for (int i = 0; i < 4; ++i) {
            A.push_back(FieldElement::random(f, rng));
            B.push_back(FieldElement::random(f, rng));
        }
        const SurfaceDegreeReport r = dual_surface_degree(Q, A, B);
        probe.degree = r.degree;
        probe.squarefree = r.squarefree;
        probe.retries = attempt;
        if (r.degree == 8 && r.squarefree) break;
    }
    return probe;
}

// ---------------------------------------------------------------------------
// Special divisor sections
// ---------------------------------------------------------------------------

namespace {

std::vector<CurvePoint> section_divisor(const CurvePoint& a, const CurvePoint& p) {
    std::vector<CurvePoint> d = {p, p, a - p, a - p};
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

SpecialDivisorReport special_divisor_curves(const WeierstrassCurve& E, DetRng& rng, int ext_cap) {
    const TorsionResult tor = torsion_points(E, 4, /*allow_extension=*/true, rng, ext_cap);
    const WeierstrassCurve& cur = tor.curve;

    std::vector<CurvePoint> halves; // the 2-torsion, including the base point
    for (const CurvePoint& p : tor.points)
        if (p.times(2).is_infinity()) halves.push_back(p);

    const std::vector<CurvePoint> pts = enumerate_points(cur);

    SpecialDivisorReport report;
    report.field_used = tor.field_used;
    report.curve_points = static_cast<long long>(pts.size());
    report.curve_count = static_cast<int>(halves.size());

    std::vector<std::set<std::vector<CurvePoint>>> sections;
    for (const CurvePoint& a : halves) {
        std::set<std::vector<CurvePoint>> sec;
        for (const CurvePoint& p : pts) sec.insert(section_divisor(a, p));
        sections.push_back(std::move(sec));
    }

    report.disjoint = true;
    for (std::size_t i = 0; i < sections.size() && report.disjoint; ++i)
        for (std::size_t j = i + 1; j < sections.size() && report.disjoint; ++j)
            for (const auto& d : sections[i])
                if (sections[j].count(d)) {
                    report.disjoint = false;
                    break;
                }

    report.involution_ok = true;
    for (int trial = 0; trial < 50 && report.involution_ok; ++trial) {
        const CurvePoint& p = pts[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
        for (const CurvePoint& a : halves)
            if (section_divisor(a, p) != section_divisor(a, a - p)) {
                report.involution_ok = false;
                break;
            }
    }

    report.coincidence_iff_halving = true;
    for (const CurvePoint& b : pts) {
        bool touches = false;
        for (const CurvePoint& a : halves) {
            const bool same = section_divisor(a, b) == std::vector<CurvePoint>{b, b, b, b};
            if (same != (b.times(2) == a)) report.coincidence_iff_halving = false;
            touches = touches || same;
        }
        if (touches) {
            ++report.coincidences;
            if (!b.times(2).is_infinity()) ++report.exact_order_four;
        }
    }
    return report;
}

} // namespace cykummer
