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

#ifndef CYKUMMER_REPTHEORY_HPP
#define CYKUMMER_REPTHEORY_HPP

#include "cykummer/linalg.hpp"
#include "cykummer/perm.hpp"

#include <string>
#include <vector>

namespace cykummer {

/**
 * The n-dimensional representation of the alternating group on n+1 letters
 * acting on the sum-zero subspace of the permutation module, expressed in the
 * basis e_1 - e_{n+1}, ..., e_n - e_{n+1}.  Works over any coefficient field;
 * bad characteristic is allowed on purpose (the modular kernel questions live
 * there).
 */
class StandardRep {
public:
    StandardRep(int n, Field f);

    int n() const { return n_; }
    const Field& field() const { return field_; }

    /// rho(g); throws std::invalid_argument on an odd permutation.
    ExactMatrix matrix(const Perm& g) const;

    /// Compound matrix of rho(g) on the m-th exterior power, rows/columns
    /// indexed by lexicographically ordered m-subsets of the basis.
    ExactMatrix exterior_matrix(const Perm& g, int m) const;

private:
    int n_;
    Field field_;
};

/// Lexicographically ordered m-element subsets of {0..n-1}.
std::vector<std::vector<int>> index_subsets(int n, int m);

/**
 * Character arithmetic for the exterior powers of the standard
 * representation, organized by cycle type (these characters are restrictions
 * of symmetric-group characters, hence constant on cycle types even where
 * alternating-group classes split).
 */
class CharacterData {
public:
    explicit CharacterData(int n); // group = alternating on n+1 letters

    int n() const { return n_; }
    long long group_order() const { return order_; }
    const std::vector<std::vector<int>>& types() const { return types_; }
    long long type_size(const std::vector<int>& type) const;

    /// Fixed points on the letters minus one.
    Rational standard_value(const std::vector<int>& type) const;
    /// Value of the m-th exterior power character, via Newton's identities
    /// over the power maps on cycle types.
    Rational exterior_value(const std::vector<int>& type, int m) const;

    /// <chi_m, chi_m> over the group, exact.
    Rational exterior_norm(int m) const;

    /// Group-average of the m-th exterior character; throws std::logic_error
    /// if the average is not an integer.
    long long invariant_dimension(int m) const;

private:
    int n_;
    long long order_ = 0;
    std::vector<std::vector<int>> types_;
    std::vector<long long> sizes_;
};

/// Invariant dimensions (m = 0..n) over the rationals.
std::vector<long long> invariant_dims(int n);

/// Dimension over F_p of the simultaneous kernel of Lambda^m rho(g) - I for
/// the documented generating set.
int fixed_subspace_modp(int n, int m, std::int64_t p);

struct LemmaReport {
    int n = 0;
    Rational chi_norm;            // <chi, chi>
    bool irreducible = false;     // chi_norm == 1
    int double_cosets = 0;        // |G' \ G / G'| by direct sweep
    int letter_rank = 0;          // orbits of G' on the letters (must agree)
    bool duality_ok = false;      // chi_{n-1} == chi * chi_n on every type
    bool flagged_small_case = false; // n == 2: rational vs absolute splitting
};

LemmaReport certify_lemma(int n);

struct DecompositionReport {
    int n = 0;
    bool primed_stable = false; // {w : first coordinate 0} stable under G'
    bool line_trivial = false;  // G' fixes the (n, -1, ..., -1) vector
    bool dims_ok = false;       // binomial splitting of subset bases
    std::string offending;      // first failing group element, if any
    bool passed() const { return primed_stable && line_trivial && dims_ok; }
};

DecompositionReport decomposition_check(int n);

/// Number of G'-double cosets in the alternating group, G' = stabilizer of
/// the first letter.
int double_coset_count(int n);

} // namespace cykummer

#endif
