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

#ifndef CYKUMMER_DUALGEOM_HPP
#define CYKUMMER_DUALGEOM_HPP

#include "cykummer/elim.hpp"
#include "cykummer/elliptic.hpp"
#include "cykummer/zerodim.hpp"

#include <string>
#include <vector>

namespace cykummer {

/**
 * The plane model Y^2 Z = X^3 + a X Z^2 + b Z^3 of a Weierstrass curve.
 * Variables of the cubic form are (x0, x1, x2) = (X, Y, Z); the affine chart
 * Z = 1 uses (x0, x1) = (x, y).  The base point maps to (0 : 1 : 0).
 */
class PlaneCubic {
public:
    explicit PlaneCubic(const WeierstrassCurve& E);

    const WeierstrassCurve& curve() const { return curve_; }
    const Field& field() const { return curve_.field(); }
    const MPoly& form() const { return form_; }

    MPoly affine_form() const;                 // F(x, y, 1), two variables
    MPoly hessian() const;                     // 3x3 determinant of second partials
    std::vector<MPoly> gradient() const;       // (F_X, F_Y, F_Z)

    /// Certify that the singular locus is empty over the closure by chart-wise
    /// elimination on the three gradient components.
    bool certify_smooth(DetRng& rng) const;

private:
    WeierstrassCurve curve_;
    MPoly form_;
};

// ---------------------------------------------------------------------------
// Dual curve
// ---------------------------------------------------------------------------

/**
 * Reduced equation of the set of tangent lines of a plane cubic, in dual
 * coordinates (x0, x1, x2) = (u, v, w) for the line u X + v Y + w Z = 0.
 * Computed by restricting the cubic to the pencil parametrization of a chart
 * line, taking the binary-cubic discriminant and stripping the chart factor.
 */
struct DualCurve {
    Field field;
    MPoly form;     // normalized homogeneous sextic
    int chart = 0;  // parametrization used: 0 eliminates Z, 1 eliminates Y
};

/// Dual curve through the default chart, falling back to the other chart if
/// the first parametrization degenerates.  Throws std::runtime_error if both
/// charts collapse.
DualCurve dual_curve(const PlaneCubic& C);

/// Single-chart computation, for the order-independence cross-check.
DualCurve dual_curve_via_chart(const PlaneCubic& C, int chart);

/// Positive squarefreeness certificate: restrict to random affine lines until
/// one restriction is squarefree of the full degree.  Never certifies a
/// non-squarefree form; gives up (returns false) after the given tries.
bool certify_squarefree_by_line(const MPoly& form, DetRng& rng, int max_tries = 32);

/// The degree-12 identity D(grad F) = 0 mod F: every tangent line of the
/// cubic satisfies the dual equation.  Returns true when the composed form is
/// exactly divisible by F.
bool certify_tangents_on_dual(const PlaneCubic& C, const DualCurve& D);

// ---------------------------------------------------------------------------
// Planar singularities
// ---------------------------------------------------------------------------

enum class SingularityType { Smooth, Node, Cusp, Other };

std::string singularity_name(SingularityType t);

/// Classify the germ of the affine curve f = 0 at an explicit point: node
/// iff the quadratic part of the local expansion is nondegenerate, cusp iff
/// it has rank one and the cubic part is nonzero along its kernel direction.
/// Requires characteristic not 2 or 3.
SingularityType classify_at_point(const MPoly& f, const FieldElement& u0, const FieldElement& v0);

/// A set of singular points described by a branch with its classification;
/// every root of h is one point (xrep, yrep), all of the stated type.
struct ClassifiedBranch {
    RurBranch branch;
    SingularityType type = SingularityType::Other;
};

/// Classify all points of the given branches of singular points of f over
/// the closure, splitting branches where the type changes.  Exact: no point
/// extraction, works over the rationals.
std::vector<ClassifiedBranch> classify_branches(const MPoly& f, const std::vector<RurBranch>& branches);

struct DualSingularityReport {
    int count_over_closure = 0;
    int cusps = 0;
    int nodes = 0;
    int other = 0;
    int boundary_points = 0; // singular points on the w = 0 line (chart change)
    std::vector<ClassifiedBranch> affine_branches;
};

/// Singular points of the dual curve over the closure: branch description of
/// the w = 1 chart plus a sweep of the boundary line.
DualSingularityReport classify_dual_singularities(const DualCurve& D, DetRng& rng);

// ---------------------------------------------------------------------------
// Inflections and the cusp correspondence
// ---------------------------------------------------------------------------

/// Number of inflection points over the closure (the base point plus the
/// affine solutions of F = Hessian = 0).
int inflection_count_over_closure(const PlaneCubic& C, DetRng& rng);

struct InflectionPoints {
    Field field_used;
    std::vector<std::vector<FieldElement>> points; // projective triples, first unit coordinate
};

/// Explicit inflection points over a splitting extension (finite fields).
InflectionPoints inflection_points(const PlaneCubic& C, DetRng& rng, int ext_cap = 24);

struct CuspMatchReport {
    int inflections = 0;        // distinct points over the closure
    int dual_singularities = 0; // distinct points over the closure
    bool images_singular = false; // every inflection tangent is singular on D
    bool images_distinct = false; // the 9 tangent images are pairwise distinct
    bool matched = false;         // the two 9-element sets correspond
};

/// Pointwise cusp <-> inflection correspondence over one splitting tower
/// (finite fields): tangent-line evaluation maps the inflection set onto the
/// dual singular set.
CuspMatchReport match_cusps_to_inflections(const PlaneCubic& C, const DualCurve& D,
                                           DetRng& rng, int ext_cap = 24);

/// The same correspondence certified symbolically on branches (any field,
/// including the rationals): inclusion via evaluation along branches,
/// distinctness via a squarefree separating-value certificate.
CuspMatchReport match_cusps_to_inflections_symbolic(const PlaneCubic& C, const DualCurve& D,
                                                    DetRng& rng);

// ---------------------------------------------------------------------------
// Tangency counts
// ---------------------------------------------------------------------------

struct TangentCount {
    int eliminant_degree = 0; // intersections of F with the polar, with multiplicity
    bool squarefree = false;  // false reports a multiplicity drop at special q
};

/// Count the tangent lines through q (projective triple, not on the curve)
/// as the degree of the (x-)eliminant of {F = 0, q . grad F = 0}; 6 for
/// generic q.
TangentCount tangents_from_point(const PlaneCubic& C, const std::vector<FieldElement>& q);

// ---------------------------------------------------------------------------
// The quadric-pencil model and its dual surface
// ---------------------------------------------------------------------------

/**
 * Degree-4 model of a Weierstrass curve in P^3 as the intersection of
 * Q1 = z1^2 - z0 z3 and Q2 = z2^2 - z1 z3 - a z0 z1 - b z0^2; the point
 * (x, y) embeds as (1 : x : y : x^2) and the base point as (0:0:0:1).
 */
class QuadricPencilCurve {
public:
    explicit QuadricPencilCurve(const WeierstrassCurve& E);

    const WeierstrassCurve& curve() const { return curve_; }
    const Field& field() const { return curve_.field(); }
    const MPoly& q1() const { return q1_; }
    const MPoly& q2() const { return q2_; }

    /// Both quadrics vanish on the embedded image of an affine curve point.
    bool contains_embedded(const FieldElement& x, const FieldElement& y) const;

    /// The 2x4 Jacobian of (Q1, Q2) has rank 2 everywhere on the curve over
    /// the closure: all rank-drop minors eliminate to empty, chart by chart.
    bool certify_smooth(DetRng& rng) const;

private:
    WeierstrassCurve curve_;
    MPoly q1_, q2_;
};

struct SurfaceDegreeReport {
    int degree = 0;      // eliminant degree: 8 for a generic line
    bool squarefree = false;
};

/// Degree of the tangent-line incidence condition against the line through A
/// and B (projective 4-tuples): restrict the incidence quadric to the curve
/// through the z3 = z1^2 chart substitution and eliminate y.
SurfaceDegreeReport dual_surface_degree(const QuadricPencilCurve& Q,
                                        const std::vector<FieldElement>& A,
                                        const std::vector<FieldElement>& B);

struct SurfaceDegreeProbe {
    int degree = 0;
    bool squarefree = false;
    int retries = 0; // resampled degenerate lines
};

/// Sample random lines until one certifies as generic (degree 8, squarefree).
SurfaceDegreeProbe dual_surface_probe(const QuadricPencilCurve& Q, DetRng& rng,
                                      int max_retries = 32);

// ---------------------------------------------------------------------------
// Special divisor sections
// ---------------------------------------------------------------------------

struct SpecialDivisorReport {
    Field field_used;
    long long curve_points = 0;        // #E over the torsion field
    int curve_count = 0;               // sections indexed by the 2-torsion
    bool disjoint = false;             // the four section curves are disjoint
    bool involution_ok = false;        // sigma_a(p) = sigma_a(a - p) as divisors
    bool coincidence_iff_halving = false; // tau(b) = sigma_a(b) exactly when 2b = a
    int coincidences = 0;              // parameters b with tau(b) on some section
    int exact_order_four = 0;          // those b of exact order 4
};

/**
 * Realize the section through a 2-torsion point a as p -> the degree-4
 * divisor 2[p] + 2[a-p] (a tangent-plane section of the quadric-pencil
 * model), over a splitting field of the full 4-torsion, and verify the
 * coincidence census against the diagonal section tau(b) = 4[b].
 */
SpecialDivisorReport special_divisor_curves(const WeierstrassCurve& E, DetRng& rng,
                                            int ext_cap = 24);

} // namespace cykummer

#endif
