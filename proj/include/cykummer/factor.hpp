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

#ifndef CYKUMMER_FACTOR_HPP
#define CYKUMMER_FACTOR_HPP

#include "cykummer/field.hpp"
#include "cykummer/rng.hpp"
#include "cykummer/upoly.hpp"

#include <stdexcept>
#include <vector>

namespace cykummer {

struct FactorResult {
    FieldElement unit;                          // scalar with unit * prod = input
    std::vector<std::pair<UPoly, int>> factors; // monic factor, multiplicity
    /// True when every listed factor is certified irreducible.  Finite fields
    /// always set it; over the rationals a residual factor of degree > 3 is
    /// returned unsplit with complete == false.
    bool complete = true;

    UPoly recompose() const;
};

/// Full factorization over a finite field (squarefree split, distinct degree,
/// then seeded equal-degree splitting).  Over the rationals this performs
/// squarefree decomposition plus rational-root extraction only; leftover
/// factors of degree <= 3 are certified irreducible by the root test.
FactorResult factor_univariate(const UPoly& f, DetRng& rng);

/// Roots of f lying in its own coefficient field.
std::vector<FieldElement> roots_in_field(const UPoly& f, DetRng& rng);

bool is_irreducible(const UPoly& f);

/// Seeded search for a monic irreducible of the requested degree over F_p.
UPoly find_irreducible(std::int64_t p, int degree, DetRng& rng);

struct ExtensionCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Incrementally built splitting tower over a fixed prime field, flattened to
 * a single extension F_p[t]/(m) at every step.  Each growth step records the
 * image of the previous generator so elements can be carried upward.
 *
 * The total extension degree is capped (default 24); exceeding it throws
 * ExtensionCapExceeded rather than grinding on a huge tower.
 */
class SplittingContext {
public:
    explicit SplittingContext(Field start, int degree_cap = 24);

    const Field& current() const { return stages_.back(); }
    int degree_over_prime() const { return current()->degree(); }

    /// Carry an element of any earlier stage (or the prime field / an integer
    /// image) into the current field.
    FieldElement lift(const FieldElement& e) const;
    UPoly lift(const UPoly& f) const;

    /// Extend the tower until f (over any stage) splits into linear factors;
    /// returns the distinct roots in the current field, canonically sorted.
    std::vector<FieldElement> split_fully(const UPoly& f, DetRng& rng);

    /// Square roots of a in the current field (0, 1 or 2 values), extending
    /// the tower when needed.
    std::vector<FieldElement> sqrt_extending(const FieldElement& a, DetRng& rng);

private:
    std::vector<Field> stages_;
    // gen_image_[i] = image of stage i's generator inside stage i+1
    std::vector<FieldElement> gen_image_;
    int cap_;

    int stage_of(const Field& f) const; // -1 if not in tower
    void grow(int new_total_degree, DetRng& rng);
};

} // namespace cykummer

#endif
