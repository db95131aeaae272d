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

#ifndef CYKUMMER_ELIM_HPP
#define CYKUMMER_ELIM_HPP

#include "cykummer/mpoly.hpp"
#include "cykummer/rng.hpp"
#include "cykummer/upoly.hpp"

#include <optional>
#include <vector>

namespace cykummer {

/// Fraction-free determinant of a square matrix of polynomials (Bareiss).
/// All intermediate divisions are exact, so coefficient growth stays tame.
MPoly bareiss_det(std::vector<std::vector<MPoly>> m);

/// Resultant of f and g with respect to `var`, computed as the Sylvester
/// determinant over the remaining variables.  Conventions: if exactly one
/// argument has degree zero in var, the result is that argument raised to the
/// other's degree; if both do, the result is 1.  Res(f, g) always lies in the
/// ideal generated by f and g.
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, int var);

/// Res(f, df/dvar) divided exactly by the leading coefficient of f in var
/// (sign convention (-1)^(d(d-1)/2) included).
MPoly mpoly_discriminant(const MPoly& f, int var);

struct ElimResult {
    UPoly eliminant;     // univariate in the kept variable; may be constant
    int retries_used = 0;
    bool sheared = false;
    /// shear coefficients actually applied: var i was replaced by
    /// x_i + shear[i] * x_keep (shear[keep] == 0)
    std::vector<std::int64_t> shear;
};

/**
 * Project the affine zero set of `gens` onto the coordinate `keep_var` by an
 * iterated-resultant chain.  Roots of the returned eliminant contain every
 * keep_var coordinate of a common zero (the set can be larger; callers that
 * extract points must re-verify candidates against the generators).
 *
 * A zero resultant along the way (shared factor, collapsed projection) is
 * retried with random shears that fix the kept coordinate; exhausting
 * max_retries throws std::runtime_error.
 */
ElimResult eliminate_to_univariate(const std::vector<MPoly>& gens, int keep_var,
                                   DetRng& rng, int max_retries = 8);

/**
 * Certificate that the affine zero set of `gens` is empty over the algebraic
 * closure: some elimination chain reaches a nonzero constant in the ideal.
 * Returns true only with a valid certificate; false means "not certified"
 * (the set may or may not be empty).  Sound but one-sided.
 */
bool certify_empty(const std::vector<MPoly>& gens, DetRng& rng, int max_retries = 8);

} // namespace cykummer

#endif
