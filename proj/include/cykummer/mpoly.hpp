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

#ifndef CYKUMMER_MPOLY_HPP
#define CYKUMMER_MPOLY_HPP

#include "cykummer/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cykummer {

/// Exponent vector of a monomial; length is the ambient variable count.
using Exponents = std::vector<int>;

/// Graded lexicographic order, descending (leading monomial compares largest,
/// stored first).  This is the one monomial order used everywhere, including
/// serialization, so equal polynomials print identically byte for byte.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

/**
 * Sparse multivariate polynomial over a runtime field.  Variables are
 * positional and named x0..x{n-1} in the text format.  The zero polynomial
 * has an empty term map.
 */
class MPoly {
public:
    MPoly() = default;
    MPoly(Field f, int nvars);

    static MPoly zero(const Field& f, int nvars);
    static MPoly constant(const Field& f, int nvars, const FieldElement& c);
    static MPoly variable(const Field& f, int nvars, int i);
    static MPoly monomial(const Field& f, Exponents e, const FieldElement& c);

    const Field& field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    const std::map<Exponents, FieldElement, GrlexGreater>& terms() const { return terms_; }

    void set_coeff(const Exponents& e, const FieldElement& c); // erases on zero
    FieldElement coeff(const Exponents& e) const;
    FieldElement constant_term() const;

    int total_deg() const;       // -1 for zero
    int degree_in(int var) const; // -1 for zero
    bool uses_var(int var) const;

    /// Leading term under the global order; throws on zero.
    const Exponents& leading_monomial() const;
    const FieldElement& leading_coeff() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const FieldElement& c) const;
    MPoly pow(int e) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(int var) const;
    FieldElement eval(const std::vector<FieldElement>& point) const;
    /// Substitute polynomial g for variable var (g must share field/nvars).
    MPoly substitute(int var, const MPoly& g) const;
    /// Substitute for every variable simultaneously.
    MPoly substitute_all(const std::vector<MPoly>& gs) const;

    /// Coefficients of this polynomial viewed as univariate in `var`;
    /// result[k] is the coefficient of var^k (an MPoly not using `var`).
    std::vector<MPoly> coeffs_in(int var) const;
    static MPoly from_coeffs_in(int var, const std::vector<MPoly>& cs);

    /// Largest monomial dividing every term (all-zero vector for zero poly).
    Exponents monomial_content() const;
    /// Divide by a single monomial (must divide every term).
    MPoly divide_by_monomial(const Exponents& m) const;

    /// Exact division; nullopt if g does not divide exactly.
    static std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);

    /// Map coefficients into another field through hom (used for Q -> F_p
    /// reduction and base-field embeddings).
    template <typename Hom>
    MPoly map_coeffs(const Field& target, Hom hom) const {
        MPoly out(target, nvars_);
        for (const auto& [e, c] : terms_) {
            FieldElement v = hom(c);
            if (!v.is_zero()) out.terms_.emplace(e, v);
        }
        return out;
    }

    /// Extend/reorder the ambient variable list: entry i of perm gives the
    /// new index of old variable i.
    MPoly rename_vars(int new_nvars, const std::vector<int>& perm) const;

    bool is_homogeneous() const;

    /// Canonical scaling: content 1 over Q (and positive leading coefficient),
    /// monic leading coefficient over finite fields.
    MPoly normalized() const;

    /// External text format: "3*x0^2*x1 - 1*x0 + 2/3" (grlex descending,
    /// explicit '*' and '^', integer or a/b coefficients).
    std::string str() const;
    static MPoly parse(const Field& f, int nvars, const std::string& text);

private:
    Field field_;
    int nvars_ = 0;
    std::map<Exponents, FieldElement, GrlexGreater> terms_;

    void add_term(const Exponents& e, const FieldElement& c);
    void check_compatible(const MPoly& o) const;
    friend struct MPolyTestAccess;
};

} // namespace cykummer

#endif
