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

#include "cykummer/upoly.hpp"

#include <array>
#include <stdexcept>

namespace cykummer {

UPoly::UPoly(Field f, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UPoly::check_compatible(const UPoly& o) const {
    if (!same_field(field_, o.field_)) throw std::invalid_argument("field mismatch");
}

UPoly UPoly::constant(const Field& f, const FieldElement& c) {
    UPoly p(f);
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

UPoly UPoly::x(const Field& f) {
    UPoly p(f);
    p.c_ = {FieldElement::zero(f), FieldElement::one(f)};
    return p;
}

UPoly UPoly::from_int_coeffs(const Field& f, const std::vector<std::int64_t>& cs) {
    std::vector<FieldElement> v;
    v.reserve(cs.size());
    for (auto n : cs) v.push_back(FieldElement::from_integer(f, n));
    return UPoly(f, std::move(v));
}

const FieldElement& UPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

FieldElement UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement::zero(field_);
    return c_[i];
}

UPoly UPoly::operator-() const {
    UPoly out(field_);
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(-c);
    return out;
}

UPoly UPoly::operator+(const UPoly& o) const {
    check_compatible(o);
    UPoly out(field_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), FieldElement::zero(field_));
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        FieldElement s = FieldElement::zero(field_);
        if (i < c_.size()) s = s + c_[i];
        if (i < o.c_.size()) s = s + o.c_[i];
        out.c_[i] = s;
    }
    out.trim();
    return out;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return UPoly(field_);
    UPoly out(field_);
    out.c_.assign(c_.size() + o.c_.size() - 1, FieldElement::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
    }
    out.trim();
    return out;
}

UPoly UPoly::operator*(const FieldElement& k) const {
    UPoly out(field_);
    if (k.is_zero()) return out;
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(c * k);
    out.trim();
    return out;
}

bool UPoly::operator==(const UPoly& o) const {
    return same_field(field_, o.field_) && c_ == o.c_;
}

UPoly UPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return *this;
    UPoly out(field_);
    out.c_.assign(c_.size() + k, FieldElement::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i + k] = c_[i];
    return out;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

UPoly UPoly::derivative() const {
    UPoly out(field_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        FieldElement v = c_[i] * FieldElement::from_integer(field_, static_cast<std::int64_t>(i));
        out.c_.push_back(v);
    }
    out.trim();
    return out;
}

FieldElement UPoly::eval(const FieldElement& at) const {
    FieldElement acc = FieldElement::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc = UPoly::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + UPoly::constant(field_, *it);
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    a.check_compatible(b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    UPoly rem = a;
    UPoly quot(a.field_);
    const int db = b.degree();
    if (rem.degree() >= db) quot.c_.assign(rem.degree() - db + 1, FieldElement::zero(a.field_));
    FieldElement lb_inv = b.lc().inverse();
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        FieldElement q = rem.lc() * lb_inv;
        quot.c_[shift] = q;
        for (int i = 0; i <= db; ++i)
            rem.c_[shift + i] = rem.c_[shift + i] - q * b.c_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    a.check_compatible(b);
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::array<UPoly, 3> UPoly::xgcd(const UPoly& a, const UPoly& b) {
    a.check_compatible(b);
    const Field& f = a.field_;
    UPoly r0 = a, r1 = b;
    UPoly s0 = constant(f, FieldElement::one(f)), s1 = zero(f);
    UPoly t0 = zero(f), t1 = constant(f, FieldElement::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1; r1 = r;
        UPoly s2 = s0 - q * s1; s0 = s1; s1 = s2;
        UPoly t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    FieldElement inv = r0.lc().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly UPoly::mul_mod(const UPoly& a, const UPoly& b, const UPoly& mod) {
    return divmod(a * b, mod).second;
}

UPoly UPoly::pow_mod(const UPoly& base_in, BigInt e, const UPoly& mod) {
    UPoly base = divmod(base_in, mod).second;
    UPoly acc = constant(base_in.field_, FieldElement::one(base_in.field_));
    while (e > 0) {
        if ((e & 1) != 0) acc = mul_mod(acc, base, mod);
        base = mul_mod(base, base, mod);
        e >>= 1;
    }
    return acc;
}

namespace {

// p-th root of a polynomial of the form g(x^p) over a finite field:
// coefficient c at exponent p*i maps to c^(p^(k-1)) at exponent i.
UPoly pth_root(const UPoly& f) {
    const Field& F = f.field();
    const std::int64_t p = F->characteristic();
    BigInt e = 1;
    for (int i = 0; i < F->degree() - 1; ++i) e *= p;
    std::vector<FieldElement> out;
    out.reserve(f.degree() / p + 1);
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        out.push_back(F->degree() == 1 ? f.coeff(i) : f.coeff(i).pow(e));
    return UPoly(F, std::move(out));
}

} // namespace

UPoly UPoly::squarefree_part() const {
    if (is_zero() || degree() <= 0) return monic();
    const UPoly f = monic();
    UPoly df = f.derivative();
    if (field_->characteristic() == 0) {
        UPoly g = gcd(f, df);
        return divmod(f, g).first.monic();
    }
    if (df.is_zero()) {
        // f = g(x^p); roots of f = roots of the p-th root
        return pth_root(f).squarefree_part();
    }
    UPoly g = gcd(f, df);
    UPoly w = divmod(f, g).first; // product of factors not killed by d/dx, each once
    // g may still contain p-th power parts sharing roots with w; strip w's roots
    // from g and recurse on what is left.
    UPoly rest = g;
    UPoly common = gcd(rest, w);
    while (common.degree() > 0) {
        rest = divmod(rest, common).first;
        common = gcd(rest, w);
    }
    if (rest.degree() <= 0) return w.monic();
    return (w * rest.squarefree_part()).squarefree_part();
}

bool UPoly::is_squarefree() const {
    if (degree() <= 0) return !is_zero(); // nonzero constants vacuously so
    return squarefree_part().degree() == degree();
}

FieldElement UPoly::resultant(const UPoly& a_in, const UPoly& b_in) {
    a_in.check_compatible(b_in);
    const Field& F = a_in.field_;
    UPoly a = a_in, b = b_in;
    if (a.is_zero() || b.is_zero()) return FieldElement::zero(F);
    FieldElement acc = FieldElement::one(F);
    bool negate = false;
    while (b.degree() > 0) {
        UPoly r = divmod(a, b).second;
        int da = a.degree(), db = b.degree(), dr = r.degree();
        if ((static_cast<long>(da) * db) % 2 == 1) negate = !negate;
        // res(a,b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
        acc = acc * b.lc().pow(da - (dr < 0 ? 0 : dr));
        if (r.is_zero()) {
            // common factor unless b is degree 0 (handled above)
            return FieldElement::zero(F);
        }
        a = b;
        b = r;
    }
    // b is a nonzero constant
    acc = acc * b.coeff(0).pow(a.degree());
    if (negate) acc = -acc;
    return acc;
}

FieldElement UPoly::discriminant() const {
    if (degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
    FieldElement r = resultant(*this, derivative());
    FieldElement lead_inv = lc().inverse();
    long d = degree();
    FieldElement sign = ((d * (d - 1) / 2) % 2 == 0)
        ? FieldElement::one(field_) : -FieldElement::one(field_);
    return sign * r * lead_inv;
}

UPoly UPoly::from_mpoly(const MPoly& p, int var) {
    for (int i = 0; i < p.nvars(); ++i)
        if (i != var && p.uses_var(i))
            throw std::invalid_argument("polynomial is not univariate in the requested variable");
    std::vector<FieldElement> cs(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1,
                                 FieldElement::zero(p.field()));
    for (const auto& [e, c] : p.terms()) cs[e[var]] = c;
    return UPoly(p.field(), std::move(cs));
}

MPoly UPoly::to_mpoly(int nvars, int var) const {
    MPoly out(field_, nvars);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Exponents e(nvars, 0);
        e[var] = static_cast<int>(i);
        out.set_coeff(e, c_[i]);
    }
    return out;
}

std::string UPoly::str() const { return to_mpoly(1, 0).str(); }

} // namespace cykummer
