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

#include "cykummer/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cykummer {

namespace {

constexpr std::int64_t kEnumerationCap = 1000000;
constexpr long long kTupleCap = 10000000;

} // namespace

// ---------------------------------------------------------------------------
// WeierstrassCurve
// ---------------------------------------------------------------------------

WeierstrassCurve::WeierstrassCurve(Field f, FieldElement a, FieldElement b)
    : field_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {
    std::int64_t p = field_->characteristic();
    if (p == 2 || p == 3) throw std::invalid_argument("characteristic 2 and 3 are not supported");
    FieldElement four = FieldElement::from_integer(field_, 4);
    FieldElement twentyseven = FieldElement::from_integer(field_, 27);
    FieldElement disc = four * a_ * a_ * a_ + twentyseven * b_ * b_;
    if (disc.is_zero()) throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
}

FieldElement WeierstrassCurve::rhs(const FieldElement& x) const {
    return (x * x + a_) * x + b_;
}

bool WeierstrassCurve::same_curve(const WeierstrassCurve& o) const {
    return same_field(field_, o.field_) && a_ == o.a_ && b_ == o.b_;
}

CurvePoint WeierstrassCurve::infinity() const { return CurvePoint::at_infinity(*this); }

CurvePoint WeierstrassCurve::point(const FieldElement& x, const FieldElement& y) const {
    return CurvePoint::affine(*this, x, y);
}

WeierstrassCurve WeierstrassCurve::lifted(const SplittingContext& ctx) const {
    return WeierstrassCurve(ctx.current(), ctx.lift(a_), ctx.lift(b_));
}

// ---------------------------------------------------------------------------
// CurvePoint
// ---------------------------------------------------------------------------

CurvePoint::CurvePoint(WeierstrassCurve c, bool inf, FieldElement x, FieldElement y)
    : curve_(std::move(c)), infinity_(inf), x_(std::move(x)), y_(std::move(y)) {}

CurvePoint CurvePoint::at_infinity(const WeierstrassCurve& c) {
    return CurvePoint(c, true, FieldElement::zero(c.field()), FieldElement::zero(c.field()));
}

CurvePoint CurvePoint::affine(const WeierstrassCurve& c, FieldElement x, FieldElement y) {
    if (y * y != c.rhs(x)) throw std::invalid_argument("point is not on the curve");
    return CurvePoint(c, false, std::move(x), std::move(y));
}

const FieldElement& CurvePoint::x() const {
    if (infinity_) throw std::logic_error("the identity has no affine coordinates");
    return x_;
}

const FieldElement& CurvePoint::y() const {
    if (infinity_) throw std::logic_error("the identity has no affine coordinates");
    return y_;
}

CurvePoint CurvePoint::operator+(const CurvePoint& o) const {
    if (!curve_.same_curve(o.curve_)) throw std::invalid_argument("points on different curves");
    if (infinity_) return o;
    if (o.infinity_) return *this;
    if (x_ == o.x_) {
        if (y_ != o.y_ || y_.is_zero()) return at_infinity(curve_); // P + (-P)
        // doubling
        FieldElement three = FieldElement::from_integer(curve_.field(), 3);
        FieldElement two = FieldElement::from_integer(curve_.field(), 2);
        FieldElement lambda = (three * x_ * x_ + curve_.a()) / (two * y_);
        FieldElement x3 = lambda * lambda - x_ - o.x_;
        FieldElement y3 = lambda * (x_ - x3) - y_;
        return CurvePoint(curve_, false, std::move(x3), std::move(y3));
    }
    FieldElement lambda = (o.y_ - y_) / (o.x_ - x_);
    FieldElement x3 = lambda * lambda - x_ - o.x_;
    FieldElement y3 = lambda * (x_ - x3) - y_;
    return CurvePoint(curve_, false, std::move(x3), std::move(y3));
}

CurvePoint CurvePoint::operator-() const {
    if (infinity_) return *this;
    return CurvePoint(curve_, false, x_, -y_);
}

CurvePoint CurvePoint::operator-(const CurvePoint& o) const { return *this + (-o); }

CurvePoint CurvePoint::times(long long k) const {
    if (k < 0) return (-*this).times(-k);
    CurvePoint acc = at_infinity(curve_);
    CurvePoint base = *this;
    while (k > 0) {
        if (k & 1) acc = acc + base;
        k >>= 1;
        if (k > 0) base = base + base;
    }
    return acc;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (infinity_ != o.infinity_) return false;
    if (infinity_) return true;
    return x_ == o.x_ && y_ == o.y_;
}

bool CurvePoint::operator<(const CurvePoint& o) const {
    if (infinity_ != o.infinity_) return infinity_; // identity sorts first
    if (infinity_) return false;
    if (x_ != o.x_) return x_ < o.x_;
    if (y_ != o.y_) return y_ < o.y_;
    return false;
}

std::string CurvePoint::str() const {
    if (infinity_) return "O";
    std::ostringstream os;
    os << "(" << x_.str() << ", " << y_.str() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Point enumeration
// ---------------------------------------------------------------------------

std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& E) {
    const Field& F = E.field();
    if (!F->is_finite()) throw std::invalid_argument("point enumeration needs a finite field");
    BigInt q = F->order();
    if (q > kEnumerationCap) throw std::invalid_argument("field too large to enumerate");
    std::int64_t qn = q.convert_to<std::int64_t>();

    // y^2 -> {y} table, then one lookup per x
    std::map<FieldElement, std::vector<FieldElement>> roots_of;
    for (std::int64_t i = 0; i < qn; ++i) {
        FieldElement y = FieldElement::from_index(F, BigInt(i));
        roots_of[y * y].push_back(y);
    }
    std::vector<CurvePoint> pts;
    pts.push_back(E.infinity());
    for (std::int64_t i = 0; i < qn; ++i) {
        FieldElement x = FieldElement::from_index(F, BigInt(i));
        auto it = roots_of.find(E.rhs(x));
        if (it == roots_of.end()) continue;
        for (const FieldElement& y : it->second)
            pts.push_back(CurvePoint::affine(E, x, y));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

// ---------------------------------------------------------------------------
// Torsion
// ---------------------------------------------------------------------------

namespace {

// x-coordinate conditions for the points with mP = O, m <= 4: roots of the
// division cubic pick up the 2-torsion layer, the quartic and sextic the
// order-3 and order-4 layers.
std::vector<UPoly> torsion_x_conditions(const Field& F, const FieldElement& a,
                                        const FieldElement& b, int m) {
    auto el = [&](std::int64_t k) { return FieldElement::from_integer(F, k); };
    std::vector<UPoly> out;
    if (m % 2 == 0)
        out.push_back(UPoly(F, {b, a, FieldElement::zero(F), el(1)}));
    if (m == 3)
        out.push_back(UPoly(F, {-(a * a), el(12) * b, el(6) * a, FieldElement::zero(F), el(3)}));
    if (m == 4)
        out.push_back(UPoly(F, {-(a * a * a) - el(8) * b * b, el(-4) * a * b, el(-5) * a * a,
                                el(20) * b, el(5) * a, FieldElement::zero(F), el(1)}));
    return out;
}

std::vector<CurvePoint> assemble_torsion(const WeierstrassCurve& E,
                                         const std::vector<FieldElement>& xs,
                                         const std::vector<std::vector<FieldElement>>& ys) {
    std::set<CurvePoint> pts;
    pts.insert(E.infinity());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (const FieldElement& y : ys[i]) pts.insert(CurvePoint::affine(E, xs[i], y));
    return std::vector<CurvePoint>(pts.begin(), pts.end());
}

} // namespace

TorsionResult torsion_points(const WeierstrassCurve& E, int m, bool allow_extension,
                             DetRng& rng, int ext_cap) {
    if (m < 1 || m > 4) throw std::invalid_argument("torsion supported for m in {1,2,3,4}");
    std::int64_t p = E.field()->characteristic();
    if (p != 0 && m % p == 0) throw std::invalid_argument("m must be coprime to the characteristic");

    if (m == 1 || !allow_extension) {
        auto conditions = torsion_x_conditions(E.field(), E.a(), E.b(), m);
        std::vector<FieldElement> xs;
        std::vector<std::vector<FieldElement>> ys;
        for (const UPoly& c : conditions)
            for (const FieldElement& x : roots_in_field(c, rng)) {
                xs.push_back(x);
                UPoly sq(E.field(), {-E.rhs(x), FieldElement::zero(E.field()),
                                     FieldElement::one(E.field())});
                ys.push_back(roots_in_field(sq, rng));
            }
        TorsionResult res{E.field(), E, assemble_torsion(E, xs, ys)};
        for (const CurvePoint& P : res.points)
            if (!P.times(m).is_infinity()) throw std::logic_error("torsion point fails its order");
        return res;
    }

    if (!E.field()->is_finite())
        throw std::invalid_argument("torsion extensions are only built over finite fields");

    SplittingContext ctx(E.field(), ext_cap);
    auto conditions = torsion_x_conditions(E.field(), E.a(), E.b(), m);
    // The rhs of a root found at an earlier tower stage must be re-lifted
    // whenever a later square root grows the tower, so everything is lifted
    // fresh at each use.
    auto rhs_current = [&](const FieldElement& x) {
        FieldElement xl = ctx.lift(x);
        return (xl * xl + ctx.lift(E.a())) * xl + ctx.lift(E.b());
    };
    // Alternate splitting the x-conditions and adjoining the matching y's
    // until one full pass leaves the tower unchanged.
    for (;;) {
        Field before = ctx.current();
        for (const UPoly& c : conditions)
            for (const FieldElement& x : ctx.split_fully(c, rng)) {
                FieldElement r = rhs_current(x);
                if (!r.is_zero()) ctx.sqrt_extending(r, rng);
            }
        if (same_field(before, ctx.current())) break;
    }

    std::vector<FieldElement> xs;
    std::vector<std::vector<FieldElement>> ys;
    for (const UPoly& c : conditions)
        for (const FieldElement& x : ctx.split_fully(c, rng)) {
            xs.push_back(x);
            FieldElement r = rhs_current(x);
            if (r.is_zero())
                ys.push_back({FieldElement::zero(ctx.current())});
            else
                ys.push_back(ctx.sqrt_extending(r, rng));
        }
    WeierstrassCurve cur = E.lifted(ctx);
    for (FieldElement& x : xs) x = ctx.lift(x);
    for (auto& yy : ys)
        for (FieldElement& y : yy) y = ctx.lift(y);
    TorsionResult res{ctx.current(), cur, assemble_torsion(cur, xs, ys)};
    for (const CurvePoint& P : res.points)
        if (!P.times(m).is_infinity()) throw std::logic_error("torsion point fails its order");
    if (static_cast<long long>(res.points.size()) != static_cast<long long>(m) * m)
        throw std::logic_error("full torsion does not have m^2 points");
    return res;
}

// ---------------------------------------------------------------------------
// Kernel-variety tuples
// ---------------------------------------------------------------------------

TildeYPoint::TildeYPoint(std::vector<CurvePoint> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw std::invalid_argument("tuple needs at least two coordinates");
    CurvePoint s = coords_[0];
    for (std::size_t i = 1; i < coords_.size(); ++i) s = s + coords_[i];
    if (!s.is_infinity()) throw std::invalid_argument("tuple coordinates must sum to the identity");
}

TildeYPoint TildeYPoint::from_phi(const WeierstrassCurve& E,
                                  const std::vector<CurvePoint>& first_n) {
    if (first_n.empty()) throw std::invalid_argument("empty projection");
    std::vector<CurvePoint> coords = first_n;
    CurvePoint s = E.infinity();
    for (const CurvePoint& P : first_n) s = s + P;
    coords.push_back(-s);
    return TildeYPoint(std::move(coords));
}

std::vector<CurvePoint> TildeYPoint::phi() const {
    return std::vector<CurvePoint>(coords_.begin(), coords_.end() - 1);
}

TildeYPoint act(const Perm& g, const TildeYPoint& y) {
    if (!g.is_even()) throw std::invalid_argument("only even permutations act");
    if (g.letters() != static_cast<int>(y.coords().size()))
        throw std::invalid_argument("permutation length does not match the tuple");
    Perm ginv = g.inverse();
    std::vector<CurvePoint> out;
    out.reserve(y.coords().size());
    for (int j = 0; j < g.letters(); ++j)
        out.push_back(y.coords()[static_cast<std::size_t>(ginv.apply(j))]);
    return TildeYPoint(std::move(out));
}

// ---------------------------------------------------------------------------
// Fixed loci
// ---------------------------------------------------------------------------

namespace {

struct CycleShape {
    std::vector<std::vector<int>> cycles; // position classes, each sorted, reps ascending
    std::vector<int> lengths;
};

CycleShape cycle_shape(const Perm& g) {
    CycleShape s;
    std::vector<bool> seen(static_cast<std::size_t>(g.letters()), false);
    for (int i = 0; i < g.letters(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> c;
        int j = i;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            c.push_back(j);
            j = g.apply(j);
        } while (j != i);
        std::sort(c.begin(), c.end());
        s.cycles.push_back(c);
        s.lengths.push_back(static_cast<int>(c.size()));
    }
    return s;
}

/// Enumerate tuples fixed by g over E(F): one free point per cycle of g,
/// the last cycle resolved through the preimage table of multiplication by
/// its length.  `emit` receives the per-cycle choices.
template <typename Emit>
void scan_fixed(const WeierstrassCurve& E, const CycleShape& shape, Emit&& emit) {
    std::vector<CurvePoint> pts = enumerate_points(E);
    std::size_t k = shape.cycles.size();
    // preimages of multiplication by the last cycle length
    int last_len = shape.lengths[k - 1];
    std::map<CurvePoint, std::vector<CurvePoint>> preimage;
    for (const CurvePoint& P : pts) preimage[P.times(last_len)].push_back(P);

    long long outer = 1;
    for (std::size_t c = 0; c + 1 < k; ++c) {
        outer *= static_cast<long long>(pts.size());
        if (outer > kTupleCap) throw std::invalid_argument("fixed-locus enumeration too large");
    }

    std::vector<std::size_t> idx(k > 1 ? k - 1 : 0, 0);
    std::vector<CurvePoint> choice;
    for (;;) {
        choice.clear();
        CurvePoint s = E.infinity();
        for (std::size_t c = 0; c + 1 < k; ++c) {
            const CurvePoint& P = pts[idx[c]];
            choice.push_back(P);
            s = s + P.times(shape.lengths[c]);
        }
        auto it = preimage.find(-s);
        if (it != preimage.end())
            for (const CurvePoint& Q : it->second) {
                choice.push_back(Q);
                emit(choice);
                choice.pop_back();
            }
        // odometer
        std::size_t c = 0;
        for (; c < idx.size(); ++c) {
            if (++idx[c] < pts.size()) break;
            idx[c] = 0;
        }
        if (c == idx.size()) break;
    }
}

TildeYPoint tuple_from_choices(const WeierstrassCurve& E, const CycleShape& shape,
                               const std::vector<CurvePoint>& choice) {
    int letters = 0;
    for (int len : shape.lengths) letters += len;
    std::vector<CurvePoint> coords(static_cast<std::size_t>(letters), E.infinity());
    for (std::size_t c = 0; c < shape.cycles.size(); ++c)
        for (int pos : shape.cycles[c]) coords[static_cast<std::size_t>(pos)] = choice[c];
    return TildeYPoint(std::move(coords));
}

} // namespace

FixedLocusResult fixed_locus(const WeierstrassCurve& E, int n, const Perm& g,
                             bool allow_extension, DetRng& rng, int ext_cap) {
    if (g.letters() != n + 1) throw std::invalid_argument("permutation must act on n+1 letters");
    if (!g.is_even()) throw std::invalid_argument("only even permutations act");

    int ord = 1;
    for (int len : g.cycle_type()) ord = std::lcm(ord, len);

    WeierstrassCurve work = E;
    Field field_used = E.field();
    if (allow_extension && ord > 1) {
        TorsionResult tor = torsion_points(E, ord, true, rng, ext_cap);
        work = tor.curve;
        field_used = tor.field_used;
    }

    CycleShape shape = cycle_shape(g);
    std::vector<TildeYPoint> out;
    scan_fixed(work, shape, [&](const std::vector<CurvePoint>& choice) {
        out.push_back(tuple_from_choices(work, shape, choice));
    });
    std::sort(out.begin(), out.end());
    return FixedLocusResult{field_used, work, std::move(out)};
}

long long fixed_tuple_count(const WeierstrassCurve& E, int n, const Perm& g) {
    if (g.letters() != n + 1) throw std::invalid_argument("permutation must act on n+1 letters");
    if (!g.is_even()) throw std::invalid_argument("only even permutations act");
    CycleShape shape = cycle_shape(g);
    long long count = 0;
    scan_fixed(E, shape, [&](const std::vector<CurvePoint>&) { ++count; });
    return count;
}

// ---------------------------------------------------------------------------
// Census, Burnside and direct orbit counts
// ---------------------------------------------------------------------------

namespace {

std::string stabilizer_tag(int n, std::size_t order) {
    switch (order) {
        case 1: return "trivial";
        case 2: return "C2";
        case 3: return n == 2 ? "A3" : "C3";
        case 4: return "V4";
        case 12: return "A4";
        default: return "order" + std::to_string(order);
    }
}

/// Visit every tuple of the kernel variety as a vector of point indices plus
/// the dependent last coordinate.
template <typename Visit>
void scan_tuples(const WeierstrassCurve& E, int n, Visit&& visit) {
    std::vector<CurvePoint> pts = enumerate_points(E);
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<long long>(pts.size());
        if (total > kTupleCap) throw std::invalid_argument("tuple space exceeds the census cap");
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<CurvePoint> tuple;
    for (;;) {
        tuple.clear();
        CurvePoint s = E.infinity();
        for (std::size_t c = 0; c < idx.size(); ++c) {
            tuple.push_back(pts[idx[c]]);
            s = s + pts[idx[c]];
        }
        tuple.push_back(-s);
        visit(tuple);
        std::size_t c = 0;
        for (; c < idx.size(); ++c) {
            if (++idx[c] < pts.size()) break;
            idx[c] = 0;
        }
        if (c == idx.size()) break;
    }
}

bool tuple_fixed_by(const std::vector<CurvePoint>& tuple, const Perm& ginv) {
    for (int j = 0; j < ginv.letters(); ++j) {
        std::size_t src = static_cast<std::size_t>(ginv.apply(j));
        if (!(tuple[static_cast<std::size_t>(j)] == tuple[src])) return false;
    }
    return true;
}

} // namespace

StabilizerCensus stabilizer_census(const WeierstrassCurve& E, int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("census supports n in {2, 3}");
    std::vector<Perm> group = alternating_group(n + 1);
    std::vector<Perm> inverses;
    for (const Perm& g : group) inverses.push_back(g.inverse());

    StabilizerCensus census;
    census.field = E.field();
    census.n = n;
    census.curve_points = static_cast<long long>(enumerate_points(E).size());
    scan_tuples(E, n, [&](const std::vector<CurvePoint>& tuple) {
        std::size_t stab = 0;
        for (const Perm& ginv : inverses)
            if (tuple_fixed_by(tuple, ginv)) ++stab;
        ++census.entries[stabilizer_tag(n, stab)];
        ++census.total;
    });
    return census;
}

std::map<std::string, std::string> estimate_census_dimensions(const StabilizerCensus& small_field,
                                                              const StabilizerCensus& large_field) {
    std::map<std::string, std::string> tags;
    for (const auto& [tag, small_count] : small_field.entries) {
        auto it = large_field.entries.find(tag);
        long long large_count = it == large_field.entries.end() ? 0 : it->second;
        if (small_count <= 16 && large_count <= 16)
            tags[tag] = "torsion-bounded (0-dimensional)";
        else if (large_count >= 2 * small_count)
            tags[tag] = "curve-dimensional";
        else
            tags[tag] = "unknown";
    }
    return tags;
}

long long burnside_orbit_count(const WeierstrassCurve& E, int n) {
    std::vector<Perm> group = alternating_group(n + 1);
    long long sum = 0;
    for (const Perm& g : group) sum += fixed_tuple_count(E, n, g);
    if (sum % static_cast<long long>(group.size()) != 0)
        throw std::logic_error("Burnside average is not an integer");
    return sum / static_cast<long long>(group.size());
}

long long direct_orbit_count(const WeierstrassCurve& E, int n) {
    std::vector<Perm> group = alternating_group(n + 1);
    std::vector<Perm> inverses;
    for (const Perm& g : group) inverses.push_back(g.inverse());
    long long orbits = 0;
    std::vector<CurvePoint> image;
    scan_tuples(E, n, [&](const std::vector<CurvePoint>& tuple) {
        // count tuples that are the lexicographic minimum of their orbit
        for (const Perm& ginv : inverses) {
            image.clear();
            for (int j = 0; j < ginv.letters(); ++j)
                image.push_back(tuple[static_cast<std::size_t>(ginv.apply(j))]);
            if (image < tuple) return;
        }
        ++orbits;
    });
    return orbits;
}

} // namespace cykummer
