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

#ifndef CYKUMMER_FIELD_HPP
#define CYKUMMER_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cykummer {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class DetRng;

enum class FieldKind { Rationals, Prime, Extension };

class FieldDescriptor;

/// Fields are passed around as shared immutable descriptors.
using Field = std::shared_ptr<const FieldDescriptor>;

/**
 * Runtime description of a coefficient field: the rationals, a prime field
 * F_p, or an extension F_p[t]/(m) given by a monic irreducible modulus m over
 * the prime field.  Extensions are always expressed over the prime field
 * (towers are flattened before they reach this class).
 */
class FieldDescriptor {
public:
    static Field rationals();
    static Field prime(std::int64_t p);

    /// modulus: monic coefficient vector c0..ck (ck == 1), entries reduced
    /// mod p.  Irreducibility over F_p is verified here; a reducible modulus
    /// throws std::invalid_argument.
    static Field extension(std::int64_t p, const std::vector<std::int64_t>& modulus);

    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const { return p_; } // 0 for the rationals
    int degree() const { return degree_; }             // 1 for F_p and Q
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    bool is_finite() const { return kind_ != FieldKind::Rationals; }
    BigInt order() const; // p^degree; throws for the rationals

    std::string name() const; // "QQ", "GF(13)", "GF(13^3)"

    bool same_as(const FieldDescriptor& other) const;

private:
    FieldDescriptor() = default;
    FieldKind kind_ = FieldKind::Rationals;
    std::int64_t p_ = 0;
    int degree_ = 1;
    std::vector<std::int64_t> modulus_; // empty unless extension
};

bool same_field(const Field& a, const Field& b);

/**
 * An element of a FieldDescriptor field.  Canonical representations:
 *   - rationals: boost cpp_rational (always normalized),
 *   - F_p: residue in [0, p),
 *   - F_{p^k}: coefficient vector of length exactly k, entries in [0, p).
 * Equality is representation equality, so == is well defined.
 */
class FieldElement {
public:
    FieldElement() = default; // invalid until assigned

    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    static FieldElement from_integer(const Field& f, const BigInt& n);
    static FieldElement from_integer(const Field& f, std::int64_t n);
    static FieldElement from_rational(const Field& f, const Rational& q); // Q only
    /// Extension element from coefficients c0..c_{k-1} (reduced mod p here).
    static FieldElement from_coeffs(const Field& f, std::vector<std::int64_t> coeffs);
    /// The class of t in F_p[t]/(m); degree must be > 1.
    static FieldElement generator(const Field& f);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(const BigInt& e) const; // e >= 0, or any e for units

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Total order used only for canonical sorting/serialization.
    bool operator<(const FieldElement& o) const;

    const Rational& rational() const { return q_; }                    // Q only
    std::int64_t residue() const { return r_; }                        // F_p only
    const std::vector<std::int64_t>& coeffs() const { return c_; }     // extension only

    std::string str() const;

    /// Index-based enumeration of finite fields: i in [0, order).
    static FieldElement from_index(const Field& f, const BigInt& i);

    /// Seeded random element (finite fields: uniform; Q: small numerator and
    /// denominator, used only for probe points).
    static FieldElement random(const Field& f, DetRng& rng);

private:
    Field field_;
    Rational q_;                    // Rationals
    std::int64_t r_ = 0;            // Prime
    std::vector<std::int64_t> c_;   // Extension, length == degree

    void check_same(const FieldElement& o) const;
};

} // namespace cykummer

#endif
