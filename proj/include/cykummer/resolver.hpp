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

#ifndef CYKUMMER_RESOLVER_HPP
#define CYKUMMER_RESOLVER_HPP

#include "cykummer/dualgeom.hpp"
#include "cykummer/elim.hpp"
#include "cykummer/upoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cykummer {

/**
 * Thrown when a requested local branch-surface model cannot be assembled
 * with the prescribed singular structure.
 */
class ModelGapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * An element of a free abelian group on a fixed, labelled basis of divisor
 * classes.  Arithmetic requires both operands to carry the same basis.
 */
class DivisorClass {
public:
    DivisorClass(std::vector<std::string> basis, std::vector<long long> coeffs);

    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(long long k) const;
    bool operator==(const DivisorClass& o) const;
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }

    /** Exact division by two; throws std::invalid_argument on an odd entry. */
    DivisorClass half() const;

    bool is_zero() const;
    std::string str() const;

private:
    std::vector<std::string> basis_;
    std::vector<long long> coeffs_;
};

/** The canonical adjustment k + branch/2 of a double cover; exact halving. */
DivisorClass crepancy_adjust(const DivisorClass& k, const DivisorClass& branch);

/**
 * Divisor-class bookkeeping for the three-fold double cover after the two
 * curve blow-ups: ambient canonical class, branch class and the resulting
 * canonical class of the cover.
 */
struct CrepancyLedger {
    DivisorClass k_ambient;
    DivisorClass branch;
    DivisorClass k_cover;
    int sign = 0;
};

/** Basis [H, A1, A2, A3, A4, B]: canonical class -4H + A1+A2+A3+A4 + B. */
DivisorClass n3_canonical_class();

/** Basis [H, A1..A4, B]: branch class 8H - 2(A1+..+A4) + sign*B, sign = +-2. */
DivisorClass n3_branch_class(int sign);

/** Assembles the ledger for the given sign; k_cover = k_ambient + branch/2. */
CrepancyLedger crepancy_ledger_n3(int sign);

/**
 * Canonical class of a double cover of n-space branched in degree d
 * (d even; throws std::invalid_argument otherwise), on the basis [H]:
 * (-(n+1) + d/2) * H.  Vanishes exactly when d = 2(n+1).
 */
DivisorClass double_cover_canonical(int n, int branch_degree);

/**
 * One affine chart of a blow-up.  Chart coordinates reuse the ambient
 * variable slots: the chart of center variable v keeps v as the
 * exceptional coordinate and turns every other center variable into the
 * corresponding normal-direction coordinate.
 */
struct AffineChart {
    std::string descriptor;
    int nvars = 0;
    /** Strict transform of the hypersurface in chart coordinates. */
    MPoly strict;
    /** Total transform (pullback) of the hypersurface. */
    MPoly total;
    /** Ambient coordinates expressed as polynomials in chart coordinates. */
    std::vector<MPoly> to_original;
    /** Chart coordinate cutting out the exceptional divisor. */
    int exceptional_var = -1;

    AffineChart(const Field& f)
        : strict(MPoly::zero(f, 1)), total(MPoly::zero(f, 1)) {}
};

/**
 * Blow-up of affine space along a coordinate subspace, together with the
 * transforms of one hypersurface.  The identity
 *     total = (exceptional coordinate)^multiplicity * strict
 * holds exactly in every chart, and the multiplicity agrees across charts.
 */
struct BlowupResult {
    std::vector<int> center_vars;
    int multiplicity = 0;
    std::vector<AffineChart> charts;
};

/**
 * Blows up affine ambient_nvars-space along the subspace cut out by the
 * center generators and transforms the given hypersurface.
 *
 * Every center generator must be a single coordinate variable (blow-ups of
 * non-aligned centers must be brought to this form by an explicit coordinate
 * change first), the generators must be distinct, and the hypersurface must
 * vanish along the center.  Violations throw std::invalid_argument.
 */
BlowupResult blowup(int ambient_nvars, const std::vector<MPoly>& center,
                    const MPoly& hypersurface);

/**
 * Composition of coordinate expressions: outer expresses one coordinate
 * system in an intermediate one, inner expresses the intermediate system in
 * a final one; the result expresses the first in the final.
 */
std::vector<MPoly> compose_coords(const std::vector<MPoly>& outer,
                                  const std::vector<MPoly>& inner);

/**
 * Evaluates each chart of a blow-up at random ambient points (with the
 * needed coordinate inversions) and checks the point-level identities
 *     total(chart point) = f(ambient point)
 *                        = (exceptional value)^multiplicity * strict(chart point)
 * together with the back-substitution of the chart point to the ambient one.
 */
bool chart_backsubstitution_check(const BlowupResult& b, const MPoly& hypersurface,
                                  DetRng& rng, int trials = 8);

enum class SmoothVerdict { Smooth, Singular, Uncertified };

struct SmoothReport {
    SmoothVerdict verdict = SmoothVerdict::Uncertified;
    /** Generators of the singular locus (ideal plus maximal Jacobian minors). */
    std::vector<MPoly> witness_ideal;
    /** True when the witness ideal provably vanishes at the origin. */
    bool witness_at_origin = false;
};

/**
 * Jacobian criterion for the variety cut out by one or two generators of
 * expected codimension equal to the number of generators.  Smooth means the
 * singular system (generators plus maximal Jacobian minors) is certified to
 * have no solution over the algebraic closure; Singular means a definite
 * singular point was exhibited; otherwise Uncertified.
 */
SmoothReport jacobian_smooth_check(const std::vector<MPoly>& gens, DetRng& rng,
                                   int max_retries = 8);

/** The singular system of a hypersurface: the polynomial and its gradient. */
std::vector<MPoly> singular_system(const MPoly& f);

/**
 * Certifies that the given system has no solution over the closure on the
 * subspace where the listed variables vanish.  Substitutes zero for those
 * variables; a nonzero-constant generator certifies emptiness immediately,
 * otherwise the restricted system is passed to the elimination certificate.
 */
bool certify_empty_on_subspace(const std::vector<MPoly>& gens,
                               const std::vector<int>& zero_vars, DetRng& rng,
                               int max_retries = 8);

/**
 * Smoothness of every chart of a blow-up, with chart coverage: a chart whose
 * full certificate is not found is re-checked on the complement of the
 * fully certified charts (where the corresponding normal coordinates vanish).
 * Since the charts overlap exactly where those coordinates are invertible,
 * all_smooth = true certifies every point of every chart smooth.
 */
struct ChartCoverageReport {
    std::vector<SmoothVerdict> full_verdicts;
    std::vector<bool> residual_certified;
    bool all_smooth = false;
};

ChartCoverageReport certify_charts_smooth(const BlowupResult& b, DetRng& rng);

/**
 * A one-variable-restriction view of an exceptional curve: degree, whether
 * the curve is reduced, and its number of irreducible components over the
 * algebraic closure.  Input must be a nonzero homogeneous form in exactly
 * two of the ring variables.
 */
struct ExceptionalCurveReport {
    int degree = 0;
    bool reduced = false;
    int components_over_closure = 0;
    std::string text;
};

ExceptionalCurveReport analyze_exceptional_curve(const MPoly& form, int var_a,
                                                 int var_b);

/**
 * Blow-up of the surface z^2 - y^2 + x^3 = 0 at the coordinate origin:
 * smoothness of all three chart strict transforms, structure of the
 * exceptional curve, the discrepancy ledger of the exceptional divisor, and
 * a negative control (z^2 - y^2 + x^4, whose chart strict transform stays
 * singular).  Characteristic 2 and 3 are rejected.
 */
struct N2Report {
    Field field;
    BlowupResult transform;
    bool charts_smooth = false;
    bool backsubstitution_ok = false;
    ExceptionalCurveReport exceptional;
    int ambient_discrepancy = 0;
    int multiplicity = 0;
    int discrepancy = 0;
    /** Self-intersection of each exceptional component, from adjunction with
        trivial canonical class on a rational curve: 2*0 - 2 - 0 = -2. */
    int component_self_intersection = 0;
    bool control_not_smooth = false;

    N2Report(const Field& f) : field(f) {}
    bool passed() const;
};

N2Report verify_n2_local_resolution(const Field& f, DetRng& rng);

/**
 * The local branch-surface model used by the three-fold verification: the
 * discriminant surface of the family t^4 + u t^2 + v t + w rescaled by
 * u = (2/3)x, v = (8/27)y, w = (4/27)Z + (1/9)x^2 and cleared to a
 * primitive form.  Its singular locus is the union of the node line
 * {y = Z = 0} and the cusp curve {(x, y, Z) = (-9s^2, 27s^3, -81s^4)},
 * which satisfies x^3 + y^2 = 0, Z + x^2 = 0.
 */
MPoly n3_local_model_aligned(const Field& f);

/**
 * The direct product-form candidate
 *     (z+h)(z+h') - y^2 (z+h') - (x^3+y^2)(z+h)
 * for the same singular structure.  Kept for documentation: it fails to be
 * singular along the whole node curve (see n3_candidate_realizes_structure),
 * which is why verify_n3_local_models uses the discriminant model instead.
 */
MPoly n3_assembled_candidate(const Field& f, const UPoly& h, const UPoly& hprime);

/**
 * Checks whether a trivariate candidate is singular along both prescribed
 * curves {y = 0, z + h = 0} and {x^3 + y^2 = 0, z + h' = 0}, by exact
 * substitution of one-parameter parametrizations into the polynomial and
 * its gradient.
 */
bool n3_candidate_realizes_structure(const MPoly& candidate, const UPoly& h,
                                     const UPoly& hprime);

/**
 * Two-stage resolution of the local three-fold branch model with node curve
 * C = {y = 0, z + h = 0} and cusp curve G = {x^3 + y^2 = 0, z + h' = 0}:
 *
 *   stage 1  blow up along C (in coordinates aligned by Z = z + h);
 *   stage 2  blow up the strict transform along the strict transform G' of
 *            G, after the alignment (X, Y) = (x + z1^2, y + z1^3) that makes
 *            G' a coordinate line.
 *
 * The report certifies: the model is singular along both curves, transverse
 * slices classify as node on C and cusp on G and on G', both stages have
 * multiplicity 2, G' is smooth, the final strict transforms are smooth in
 * all charts (with chart coverage), the residual locus of the unblown
 * stage-1 chart is smooth, the composed total-transform identity holds as
 * an exact polynomial identity, and random-point back-substitution passes.
 * Confinement of the singular locus to C u G (and, after stage 1, to G')
 * follows: blow-ups are isomorphisms away from their centers, so a singular
 * point off those curves would persist into a certified-smooth final chart.
 *
 * The pair (h, h') must satisfy h' = h + x^2 with h free of terms of degree
 * below two; otherwise the prescribed structure is not realized by any
 * member of this model family and ModelGapError is thrown.  Characteristic
 * 2 and 3 are rejected.
 */
struct N3Report {
    Field field;
    /** The model in the original coordinates (x, y, z). */
    MPoly model;
    /** The model in the aligned coordinates (x, y, Z = z + h). */
    MPoly model_aligned;
    bool candidate_realizes = false;
    bool singular_along_node_curve = false;
    bool singular_along_cusp_curve = false;
    SingularityType node_slice = SingularityType::Other;
    SingularityType cusp_slice = SingularityType::Other;
    int stage1_multiplicity = 0;
    bool stage1_singular_along_gprime = false;
    bool gprime_smooth = false;
    SingularityType gprime_slice = SingularityType::Other;
    bool stage1_residual_smooth = false;
    int stage2_multiplicity = 0;
    bool stage2_charts_smooth = false;
    bool chain_identity_ok = false;
    bool backsubstitution_ok = false;
    bool singular_locus_confined = false;
    int chart_count = 0;

    N3Report(const Field& f)
        : field(f), model(MPoly::zero(f, 3)), model_aligned(MPoly::zero(f, 3)) {}
    bool passed() const;
};

N3Report verify_n3_local_models(const Field& f, DetRng& rng);
N3Report verify_n3_local_models(const Field& f, const UPoly& h,
                                const UPoly& hprime, DetRng& rng);

}  // namespace cykummer

#endif  // CYKUMMER_RESOLVER_HPP
