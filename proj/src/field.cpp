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

#include "cykummer/field.hpp"
#include "cykummer/rng.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cykummer {

namespace {

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, newt = 1, r = p, newr = mod_pos(a, p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("inverse of a non-unit residue");
    return mod_pos(t, p);
}

// dense residue polynomial helpers (coefficient vectors over F_p)
using RVec = std::vector<std::int64_t>;

void rv_trim(RVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RVec rv_mul(const RVec& a, const RVec& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    RVec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    rv_trim(out);
    return out;
}

// reduce a mod monic m, in place
void rv_mod_monic(RVec& a, const RVec& m, std::int64_t p) {
    const std::size_t dm = m.size() - 1;
    rv_trim(a);
    while (a.size() > dm) {
        std::int64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i < dm; ++i)
                a[shift + i] = mod_pos(a[shift + i] - lead * m[i] % p, p);
        }
        a.pop_back();
        rv_trim(a);
    }
}

// extended Euclid in F_p[t]: returns g (monic) with u*a + v*m = g; only u needed
RVec rv_invert_mod(const RVec& a_in, const RVec& m, std::int64_t p) {
    RVec r0 = m, r1 = a_in;
    rv_trim(r1);
    if (r1.empty()) throw std::domain_error("inverse of zero in extension field");
    RVec t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // divmod r0 by r1
        RVec q;
        RVec rem = r0;
        rv_trim(rem);
        std::size_t d1 = r1.size() - 1;
        std::int64_t lc_inv = inv_mod(r1.back(), p);
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - d1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                std::int64_t c = rem.back() * lc_inv % p;
                std::size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (std::size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] = mod_pos(rem[shift + i] - c * r1[i] % p, p);
                rv_trim(rem);
            }
        }
        rv_trim(q);
        // (r0, r1) = (r1, rem); (t0, t1) = (t1, t0 - q*t1)
        RVec qt = rv_mul(q, t1, p);
        RVec t2 = t0;
        if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = mod_pos(t2[i] - qt[i], p);
        rv_trim(t2);
        r0 = r1; r1 = rem;
        t0 = t1; t1 = t2;
    }
    if (r0.size() != 1) throw std::domain_error("inverse of a zero divisor (modulus not irreducible?)");
    std::int64_t s = inv_mod(r0[0], p);
    for (auto& c : t0) c = c * s % p;
    rv_trim(t0);
    return t0;
}

// x^(p^d) == x mod f  and gcd checks: irreducibility of monic f over F_p
RVec rv_powmod_x(BigInt e, const RVec& m, std::int64_t p) {
    // computes t^e mod m
    RVec base = {0, 1};
    rv_mod_monic(base, m, p);
    RVec acc = {1};
    while (e > 0) {
        if ((e & 1) != 0) {
            acc = rv_mul(acc, base, p);
            rv_mod_monic(acc, m, p);
        }
        base = rv_mul(base, base, p);
        rv_mod_monic(base, m, p);
        e >>= 1;
    }
    return acc;
}

RVec rv_gcd(RVec a, RVec b, std::int64_t p) {
    rv_trim(a); rv_trim(b);
    while (!b.empty()) {
        // a mod b
        std::int64_t lc_inv = inv_mod(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            std::int64_t c = a.back() * lc_inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = mod_pos(a[shift + i] - c * b[i] % p, p);
            rv_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool rv_irreducible(const RVec& m, std::int64_t p) {
    const int d = static_cast<int>(m.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    // x^(p^d) == x mod m
    BigInt pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    RVec xq = rv_powmod_x(pd, m, p);
    RVec x = {0, 1};
    rv_mod_monic(x, m, p);
    RVec diff = xq;
    if (diff.size() < x.size()) diff.resize(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = mod_pos(diff[i] - x[i], p);
    rv_trim(diff);
    if (!diff.empty()) return false;
    // for each prime divisor l of d: gcd(x^(p^(d/l)) - x, m) == 1
    int dd = d;
    std::vector<int> prime_divs;
    for (int l = 2; l * l <= dd; ++l)
        if (dd % l == 0) { prime_divs.push_back(l); while (dd % l == 0) dd /= l; }
    if (dd > 1) prime_divs.push_back(dd);
    for (int l : prime_divs) {
        BigInt e = 1;
        for (int i = 0; i < d / l; ++i) e *= p;
        RVec xe = rv_powmod_x(e, m, p);
        RVec g = xe;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = mod_pos(g[1] - 1, p);
        rv_trim(g);
        RVec gg = rv_gcd(g, m, p);
        if (gg.size() != 1) return false;
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------- descriptor

Field FieldDescriptor::rationals() {
    static Field q = [] {
        auto* d = new FieldDescriptor();
        d->kind_ = FieldKind::Rationals;
        d->p_ = 0;
        d->degree_ = 1;
        return Field(d);
    }();
    return q;
}

Field FieldDescriptor::prime(std::int64_t p) {
    if (!is_prime_i64(p)) throw std::invalid_argument("prime field characteristic must be prime");
    auto* d = new FieldDescriptor();
    d->kind_ = FieldKind::Prime;
    d->p_ = p;
    d->degree_ = 1;
    return Field(d);
}

Field FieldDescriptor::extension(std::int64_t p, const std::vector<std::int64_t>& modulus_in) {
    if (!is_prime_i64(p)) throw std::invalid_argument("extension characteristic must be prime");
    if (modulus_in.size() < 3) throw std::invalid_argument("extension modulus must have degree >= 2");
    RVec m(modulus_in.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = mod_pos(modulus_in[i], p);
    if (m.back() != 1) throw std::invalid_argument("extension modulus must be monic");
    if (!rv_irreducible(m, p)) throw std::invalid_argument("extension modulus is reducible over the prime field");
    auto* d = new FieldDescriptor();
    d->kind_ = FieldKind::Extension;
    d->p_ = p;
    d->degree_ = static_cast<int>(m.size()) - 1;
    d->modulus_ = std::move(m);
    return Field(d);
}

BigInt FieldDescriptor::order() const {
    if (kind_ == FieldKind::Rationals) throw std::domain_error("the rationals are infinite");
    BigInt o = 1;
    for (int i = 0; i < degree_; ++i) o *= p_;
    return o;
}

std::string FieldDescriptor::name() const {
    if (kind_ == FieldKind::Rationals) return "QQ";
    std::ostringstream os;
    if (degree_ == 1) os << "GF(" << p_ << ")";
    else os << "GF(" << p_ << "^" << degree_ << ")";
    return os.str();
}

bool FieldDescriptor::same_as(const FieldDescriptor& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && degree_ == o.degree_ && modulus_ == o.modulus_;
}

bool same_field(const Field& a, const Field& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

// ------------------------------------------------------------------ element

void FieldElement::check_same(const FieldElement& o) const {
    if (!same_field(field_, o.field_))
        throw std::invalid_argument("field mismatch between operands");
}

FieldElement FieldElement::zero(const Field& f) {
    FieldElement e;
    e.field_ = f;
    switch (f->kind()) {
        case FieldKind::Rationals: e.q_ = 0; break;
        case FieldKind::Prime: e.r_ = 0; break;
        case FieldKind::Extension: e.c_.assign(f->degree(), 0); break;
    }
    return e;
}

FieldElement FieldElement::one(const Field& f) { return from_integer(f, 1); }

FieldElement FieldElement::from_integer(const Field& f, const BigInt& n) {
    FieldElement e = zero(f);
    switch (f->kind()) {
        case FieldKind::Rationals: e.q_ = Rational(n); break;
        case FieldKind::Prime: {
            BigInt r = n % f->characteristic();
            if (r < 0) r += f->characteristic();
            e.r_ = r.convert_to<std::int64_t>();
            break;
        }
        case FieldKind::Extension: {
            BigInt r = n % f->characteristic();
            if (r < 0) r += f->characteristic();
            e.c_[0] = r.convert_to<std::int64_t>();
            break;
        }
    }
    return e;
}

FieldElement FieldElement::from_integer(const Field& f, std::int64_t n) {
    return from_integer(f, BigInt(n));
}

FieldElement FieldElement::from_rational(const Field& f, const Rational& q) {
    if (f->kind() == FieldKind::Rationals) {
        FieldElement e = zero(f);
        e.q_ = q;
        return e;
    }
    // map a/b into a finite field when b is invertible
    FieldElement num = from_integer(f, numerator(q));
    FieldElement den = from_integer(f, denominator(q));
    return num / den;
}

FieldElement FieldElement::from_coeffs(const Field& f, std::vector<std::int64_t> coeffs) {
    if (f->kind() != FieldKind::Extension)
        throw std::invalid_argument("from_coeffs requires an extension field");
    const std::int64_t p = f->characteristic();
    RVec v(std::move(coeffs));
    for (auto& c : v) c = mod_pos(c, p);
    rv_mod_monic(v, f->modulus(), p);
    v.resize(f->degree(), 0);
    FieldElement e;
    e.field_ = f;
    e.c_ = std::move(v);
    return e;
}

FieldElement FieldElement::generator(const Field& f) {
    if (f->kind() != FieldKind::Extension)
        throw std::invalid_argument("generator requires an extension field");
    return from_coeffs(f, {0, 1});
}

bool FieldElement::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return q_ == 0;
        case FieldKind::Prime: return r_ == 0;
        case FieldKind::Extension:
            return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return q_ == 1;
        case FieldKind::Prime: return r_ == 1;
        case FieldKind::Extension: {
            if (c_[0] != 1) return false;
            for (std::size_t i = 1; i < c_.size(); ++i)
                if (c_[i] != 0) return false;
            return true;
        }
    }
    return false;
}

FieldElement FieldElement::operator-() const {
    FieldElement e = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals: e.q_ = -q_; break;
        case FieldKind::Prime: e.r_ = r_ == 0 ? 0 : field_->characteristic() - r_; break;
        case FieldKind::Extension: {
            const std::int64_t p = field_->characteristic();
            for (auto& c : e.c_) c = c == 0 ? 0 : p - c;
            break;
        }
    }
    return e;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement e = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals: e.q_ += o.q_; break;
        case FieldKind::Prime: {
            e.r_ = r_ + o.r_;
            if (e.r_ >= field_->characteristic()) e.r_ -= field_->characteristic();
            break;
        }
        case FieldKind::Extension: {
            const std::int64_t p = field_->characteristic();
            for (std::size_t i = 0; i < c_.size(); ++i) {
                e.c_[i] = c_[i] + o.c_[i];
                if (e.c_[i] >= p) e.c_[i] -= p;
            }
            break;
        }
    }
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement e = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals: e.q_ -= o.q_; break;
        case FieldKind::Prime: {
            e.r_ = r_ - o.r_;
            if (e.r_ < 0) e.r_ += field_->characteristic();
            break;
        }
        case FieldKind::Extension: {
            const std::int64_t p = field_->characteristic();
            for (std::size_t i = 0; i < c_.size(); ++i) {
                e.c_[i] = c_[i] - o.c_[i];
                if (e.c_[i] < 0) e.c_[i] += p;
            }
            break;
        }
    }
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement e = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals: e.q_ *= o.q_; break;
        case FieldKind::Prime: e.r_ = r_ * o.r_ % field_->characteristic(); break;
        case FieldKind::Extension: {
            const std::int64_t p = field_->characteristic();
            RVec prod = rv_mul(c_, o.c_, p);
            rv_mod_monic(prod, field_->modulus(), p);
            prod.resize(field_->degree(), 0);
            e.c_ = std::move(prod);
            break;
        }
    }
    return e;
}

FieldElement FieldElement::inverse() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: {
            if (q_ == 0) throw std::domain_error("division by zero");
            FieldElement e = *this;
            e.q_ = 1 / q_;
            return e;
        }
        case FieldKind::Prime: {
            if (r_ == 0) throw std::domain_error("division by zero");
            FieldElement e = *this;
            e.r_ = inv_mod(r_, field_->characteristic());
            return e;
        }
        case FieldKind::Extension: {
            if (is_zero()) throw std::domain_error("division by zero");
            FieldElement e = *this;
            RVec inv = rv_invert_mod(c_, field_->modulus(), field_->characteristic());
            inv.resize(field_->degree(), 0);
            e.c_ = std::move(inv);
            return e;
        }
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::pow(const BigInt& e_in) const {
    BigInt e = e_in;
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = one(field_);
    while (e > 0) {
        if ((e & 1) != 0) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!same_field(field_, o.field_)) return false;
    switch (field_->kind()) {
        case FieldKind::Rationals: return q_ == o.q_;
        case FieldKind::Prime: return r_ == o.r_;
        case FieldKind::Extension: return c_ == o.c_;
    }
    return false;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same(o);
    switch (field_->kind()) {
        case FieldKind::Rationals: return q_ < o.q_;
        case FieldKind::Prime: return r_ < o.r_;
        case FieldKind::Extension:
            return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
    }
    return false;
}

std::string FieldElement::str() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: {
            std::ostringstream os;
            os << numerator(q_);
            if (denominator(q_) != 1) os << "/" << denominator(q_);
            return os.str();
        }
        case FieldKind::Prime: return std::to_string(r_);
        case FieldKind::Extension: {
            // c0 + c1*t + ... , highest power first; "0" if zero
            std::ostringstream os;
            bool first = true;
            for (int i = field_->degree() - 1; i >= 0; --i) {
                if (c_[i] == 0) continue;
                if (!first) os << " + ";
                first = false;
                if (i == 0) { os << c_[i]; continue; }
                os << c_[i] << "*t";
                if (i > 1) os << "^" << i;
            }
            if (first) os << "0";
            return os.str();
        }
    }
    return "?";
}

FieldElement FieldElement::from_index(const Field& f, const BigInt& i) {
    switch (f->kind()) {
        case FieldKind::Rationals: throw std::domain_error("cannot enumerate the rationals");
        case FieldKind::Prime: return from_integer(f, i);
        case FieldKind::Extension: {
            const std::int64_t p = f->characteristic();
            BigInt v = i;
            std::vector<std::int64_t> coeffs(f->degree());
            for (int d = 0; d < f->degree(); ++d) {
                coeffs[d] = (v % p).convert_to<std::int64_t>();
                v /= p;
            }
            return from_coeffs(f, std::move(coeffs));
        }
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::random(const Field& f, DetRng& rng) {
    switch (f->kind()) {
        case FieldKind::Rationals: {
            FieldElement e = zero(f);
            std::int64_t num = rng.uniform(-20, 20);
            std::int64_t den = rng.uniform(1, 6);
            e.q_ = Rational(num, den);
            return e;
        }
        case FieldKind::Prime:
            return from_integer(f, rng.uniform(0, f->characteristic() - 1));
        case FieldKind::Extension: {
            std::vector<std::int64_t> coeffs(f->degree());
            for (auto& c : coeffs) c = rng.uniform(0, f->characteristic() - 1);
            return from_coeffs(f, std::move(coeffs));
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace cykummer
