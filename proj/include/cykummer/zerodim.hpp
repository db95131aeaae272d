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

#ifndef CYKUMMER_ZERODIM_HPP
#define CYKUMMER_ZERODIM_HPP

#include "cykummer/mpoly.hpp"
#include "cykummer/rng.hpp"
#include "cykummer/upoly.hpp"

#include <vector>

namespace cykummer {

/**
 * One branch of a rational-univariate description of a zero-dimensional
 * bivariate system: for every root r of the squarefree polynomial h, the pair
 * (xrep(r), yrep(r)) is one solution, each solution exactly once across
 * branches.  Branch moduli are pairwise coprime.
 */
struct RurBranch {
    UPoly h;
    UPoly xrep;
    UPoly yrep;
};

struct RurResult {
    std::vector<RurBranch> branches;
    std::int64_t shear_lambda = 0; // separating form was x + lambda*y
    int retries = 0;

    int point_count() const; // sum of branch degrees
};

/**
 * Describe all common zeros (over the algebraic closure) of a bivariate
 * system {f, g} in variables (x0, x1).  Works over any coefficient field
 * without factoring: zero divisors encountered while inverting modulo h
 * split the branch (dynamic evaluation).  Points sharing an x-coordinate are
 * separated by re-running with x0 + lambda*x1; a system with a common curve
 * component exhausts its retries and throws std::runtime_error.
 */
RurResult rur_bivariate(const MPoly& f, const MPoly& g, DetRng& rng,
                        int max_retries = 8);

/// D(xrep, yrep) reduced mod h: the values of D at the branch's points are
/// the evaluations of the result at the roots of h.
UPoly eval_along(const MPoly& D, const RurBranch& b);

/// Characteristic polynomial (monic, in T) of multiplication by psi modulo h;
/// its roots are psi's values at the roots of h, with multiplicity.
UPoly value_poly(const UPoly& h, const UPoly& psi);

/// Restrict a solution description to the points where D also vanishes
/// (branches shrink along gcd(h, D(xrep, yrep)) and empty ones disappear).
RurResult filter_branches(const RurResult& r, const MPoly& D);

} // namespace cykummer

#endif
