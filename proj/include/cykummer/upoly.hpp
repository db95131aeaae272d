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

#ifndef CYKUMMER_UPOLY_HPP
#define CYKUMMER_UPOLY_HPP

#include "cykummer/field.hpp"
#include "cykummer/mpoly.hpp"

#include <utility>
#include <vector>

namespace cykummer {

/**
 * Dense univariate polynomial over a runtime field.  Used for all the
 * one-variable machinery: gcds, squarefree decomposition, factorization,
 * and arithmetic modulo a fixed polynomial.  Coefficient vector is trimmed
 * (no trailing zeros); zero polynomial has an empty vector.
 */
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Field f) : field_(std::move(f)) {}
    UPoly(Field f, std::vector<FieldElement> coeffs);

    static UPoly zero(const Field& f) { return UPoly(f); }
    static UPoly constant(const Field& f, const FieldElement& c);
    static UPoly x(const Field& f);
    static UPoly from_int_coeffs(const Field& f, const std::vector<std::int64_t>& cs);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const FieldElement& lc() const;
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const FieldElement& k) const;
    bool operator==(const UPoly& o) const;
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly shifted(int k) const; // multiply by x^k
    UPoly monic() const;
    UPoly derivative() const;
    FieldElement eval(const FieldElement& at) const;
    UPoly compose(const UPoly& inner) const;

    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    static UPoly gcd(UPoly a, UPoly b); // monic
    /// g = gcd(a,b) monic together with u, v with u*a + v*b = g.
    static std::array<UPoly, 3> xgcd(const UPoly& a, const UPoly& b);

    static UPoly pow_mod(const UPoly& base, BigInt e, const UPoly& mod);
    static UPoly mul_mod(const UPoly& a, const UPoly& b, const UPoly& mod);

    /// Largest squarefree divisor with the same root set (any characteristic;
    /// in char p handles p-th power parts).
    UPoly squarefree_part() const;
    bool is_squarefree() const;

    /// Resultant of two univariates over the field (Euclidean algorithm).
    static FieldElement resultant(const UPoly& a, const UPoly& b);
    FieldElement discriminant() const;

    /// Conversions to/from a chosen variable of an MPoly whose other
    /// variables do not occur.
    static UPoly from_mpoly(const MPoly& p, int var);
    MPoly to_mpoly(int nvars, int var) const;

    template <typename Hom>
    UPoly map_coeffs(const Field& target, Hom hom) const {
        std::vector<FieldElement> cs;
        cs.reserve(c_.size());
        for (const auto& c : c_) cs.push_back(hom(c));
        return UPoly(target, std::move(cs));
    }

    std::string str() const; // via MPoly text format with variable x0

private:
    Field field_;
    std::vector<FieldElement> c_;

    void trim();
    void check_compatible(const UPoly& o) const;
};

} // namespace cykummer

#endif
