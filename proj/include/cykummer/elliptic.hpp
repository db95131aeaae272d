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

#ifndef CYKUMMER_ELLIPTIC_HPP
#define CYKUMMER_ELLIPTIC_HPP

#include "cykummer/factor.hpp"
#include "cykummer/field.hpp"
#include "cykummer/perm.hpp"
#include "cykummer/rng.hpp"

#include <map>
#include <string>
#include <vector>

namespace cykummer {

class CurvePoint;

/**
 * Short Weierstrass curve y^2 = x^3 + a x + b over a field of characteristic
 * not 2 or 3, with 4a^3 + 27b^2 != 0 enforced at construction.
 */
class WeierstrassCurve {
public:
    WeierstrassCurve(Field f, FieldElement a, FieldElement b);

    const Field& field() const { return field_; }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }

    /// x^3 + a x + b
    FieldElement rhs(const FieldElement& x) const;
    bool same_curve(const WeierstrassCurve& o) const;

    CurvePoint infinity() const;
    /// Affine point; throws std::invalid_argument unless y^2 = x^3 + ax + b.
    CurvePoint point(const FieldElement& x, const FieldElement& y) const;

    /// The same curve over the top field of an extension tower.
    WeierstrassCurve lifted(const SplittingContext& ctx) const;

private:
    Field field_;
    FieldElement a_, b_;
};

/**
 * Point of a Weierstrass curve: either the point at infinity (the group
 * identity) or an affine pair on the curve.  Points carry their curve so the
 * chord-tangent operators can check compatibility.
 */
class CurvePoint {
public:
    static CurvePoint at_infinity(const WeierstrassCurve& c);
    static CurvePoint affine(const WeierstrassCurve& c, FieldElement x, FieldElement y);

    bool is_infinity() const { return infinity_; }
    const FieldElement& x() const;
    const FieldElement& y() const;
    const WeierstrassCurve& curve() const { return curve_; }

    CurvePoint operator+(const CurvePoint& o) const;
    CurvePoint operator-() const;
    CurvePoint operator-(const CurvePoint& o) const;
    /// k P for any integer k (double-and-add; negative k via the inverse).
    CurvePoint times(long long k) const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }
    /// Canonical order: infinity first, then lexicographic on (x, y).
    bool operator<(const CurvePoint& o) const;

    std::string str() const;

private:
    CurvePoint(WeierstrassCurve c, bool inf, FieldElement x, FieldElement y);
    WeierstrassCurve curve_;
    bool infinity_;
    FieldElement x_, y_;
};

/// All points over the base field, canonically sorted, identity included.
/// Requires a finite field of order at most 10^6.
std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& E);

struct TorsionResult {
    Field field_used;
    WeierstrassCurve curve;     // base-changed to field_used
    std::vector<CurvePoint> points; // sorted; contains the identity
};

/**
 * All points with mP = identity, m in {1,2,3,4}, gcd(m, char) = 1.  Without
 * the extension flag only base-field points are returned.  With it (finite
 * base fields only) the splitting extension of the m-division conditions is
 * constructed and exactly m^2 points are returned.
 */
TorsionResult torsion_points(const WeierstrassCurve& E, int m, bool allow_extension,
                             DetRng& rng, int ext_cap = 24);

/**
 * Point of the kernel variety: a tuple (y_1, ..., y_{n+1}) of curve points
 * summing to the identity.  The coordinate projection to the first n entries
 * is a bijection onto E^n; `from_phi` inverts it.
 */
class TildeYPoint {
public:
    explicit TildeYPoint(std::vector<CurvePoint> coords); // validates the sum
    static TildeYPoint from_phi(const WeierstrassCurve& E, const std::vector<CurvePoint>& first_n);

    int n() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<CurvePoint>& coords() const { return coords_; }
    std::vector<CurvePoint> phi() const; // first n coordinates

    bool operator==(const TildeYPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const TildeYPoint& o) const { return !(*this == o); }
    bool operator<(const TildeYPoint& o) const { return coords_ < o.coords_; }

private:
    std::vector<CurvePoint> coords_;
};

/// Coordinate permutation action: (g.y)_j = y_{g^{-1}(j)}.  g must be an even
/// permutation of n+1 letters.  Through the projection to E^2, the 3-cycle
/// (1 2 3) acts as (P, Q) -> (-P-Q, P).
TildeYPoint act(const Perm& g, const TildeYPoint& y);

struct FixedLocusResult {
    Field field_used;
    WeierstrassCurve curve;      // base-changed to field_used
    std::vector<TildeYPoint> points; // sorted
};

/**
 * All tuples fixed by g.  Fixed tuples are constant on the cycles of g, so
 * the locus is enumerated with one free point per cycle subject to the
 * weighted sum condition.  With the extension flag the field is first grown
 * so the full ord(g)-torsion is rational (finite fields only).
 */
FixedLocusResult fixed_locus(const WeierstrassCurve& E, int n, const Perm& g,
                             bool allow_extension, DetRng& rng, int ext_cap = 24);

struct StabilizerCensus {
    Field field;
    int n = 0;
    long long curve_points = 0;           // #E(F)
    long long total = 0;                  // #E(F)^n tuples
    std::map<std::string, long long> entries; // stabilizer class -> count
};

/**
 * Partition the tuples by the conjugacy class of their stabilizer inside
 * the alternating group on n+1 letters.  n in {2, 3}; #E(F)^n <= 10^7.
 * Classes are tagged "trivial", "C2", "C3", "V4", "A3", "A4".
 */
StabilizerCensus stabilizer_census(const WeierstrassCurve& E, int n);

/// Heuristic dimension tags from the same census over a field and an
/// extension of it: counts that stay torsion-bounded are 0-dimensional,
/// counts that grow with the field are curve-dimensional.
std::map<std::string, std::string> estimate_census_dimensions(const StabilizerCensus& small_field,
                                                              const StabilizerCensus& large_field);

/// Number of tuples fixed by g, without materializing them.
long long fixed_tuple_count(const WeierstrassCurve& E, int n, const Perm& g);

/// (1/|G|) sum_g #Fix(g); throws std::logic_error if the average is not an
/// integer (it equals the orbit count by Burnside's lemma).
long long burnside_orbit_count(const WeierstrassCurve& E, int n);

/// Orbit count by direct enumeration: tuples that are the canonical minimum
/// of their orbit.
long long direct_orbit_count(const WeierstrassCurve& E, int n);

} // namespace cykummer

#endif
