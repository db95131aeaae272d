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

#include "cykummer/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cykummer {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly::MPoly(Field f, int nvars) : field_(std::move(f)), nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MPoly MPoly::zero(const Field& f, int nvars) { return MPoly(f, nvars); }

MPoly MPoly::constant(const Field& f, int nvars, const FieldElement& c) {
    MPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(const Field& f, int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    MPoly p(f, nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), FieldElement::one(f));
    return p;
}

MPoly MPoly::monomial(const Field& f, Exponents e, const FieldElement& c) {
    MPoly p(f, static_cast<int>(e.size()));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

void MPoly::set_coeff(const Exponents& e, const FieldElement& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c.is_zero()) terms_.erase(e);
    else terms_[e] = c;
}

FieldElement MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

FieldElement MPoly::constant_term() const { return coeff(Exponents(nvars_, 0)); }

int MPoly::total_deg() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first); // leading term has max degree
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool MPoly::uses_var(int var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

const Exponents& MPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const FieldElement& MPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

void MPoly::add_term(const Exponents& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::check_compatible(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    if (!same_field(field_, o.field_)) throw std::invalid_argument("field mismatch");
}

MPoly MPoly::operator-() const {
    MPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_compatible(o);
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_compatible(o);
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_compatible(o);
    MPoly out(field_, nvars_);
    Exponents sum(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::operator*(const FieldElement& c) const {
    MPoly out(field_, nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) {
        FieldElement w = v * c;
        if (!w.is_zero()) out.terms_.emplace(e, w);
    }
    return out;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MPoly acc = constant(field_, nvars_, FieldElement::one(field_));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool MPoly::operator==(const MPoly& o) const {
    if (nvars_ != o.nvars_ || !same_field(field_, o.field_)) return false;
    return terms_ == o.terms_;
}

MPoly MPoly::derivative(int var) const {
    MPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        FieldElement nc = c * FieldElement::from_integer(field_, e[var]);
        if (nc.is_zero()) continue; // characteristic kills the term
        Exponents ne = e;
        ne[var] -= 1;
        out.add_term(ne, nc);
    }
    return out;
}

FieldElement MPoly::eval(const std::vector<FieldElement>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point arity mismatch");
    FieldElement acc = FieldElement::zero(field_);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            t = t * point[i].pow(e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

MPoly MPoly::substitute(int var, const MPoly& g) const {
    check_compatible(g);
    // group by exponent of var to reuse powers
    int dmax = degree_in(var);
    if (dmax <= 0 && !uses_var(var)) return *this;
    std::vector<MPoly> by_pow(static_cast<std::size_t>(dmax) + 1, MPoly(field_, nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        int k = ne[var];
        ne[var] = 0;
        by_pow[k].add_term(ne, c);
    }
    MPoly out = by_pow[dmax];
    for (int k = dmax - 1; k >= 0; --k) out = out * g + by_pow[k]; // Horner
    return out;
}

MPoly MPoly::substitute_all(const std::vector<MPoly>& gs) const {
    if (static_cast<int>(gs.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    MPoly out = MPoly::zero(field_, gs.empty() ? 0 : gs[0].nvars());
    const Field& f = field_;
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(f, out.nvars(), c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * gs[i].pow(e[i]);
        out = out + t;
    }
    return out;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
    int d = degree_in(var);
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(d, 0)) + 1, MPoly(field_, nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        int k = ne[var];
        ne[var] = 0;
        out[k].add_term(ne, c);
    }
    return out;
}

MPoly MPoly::from_coeffs_in(int var, const std::vector<MPoly>& cs) {
    if (cs.empty()) throw std::invalid_argument("empty coefficient list");
    MPoly out(cs[0].field(), cs[0].nvars());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms_) {
            Exponents ne = e;
            ne[var] += static_cast<int>(k);
            out.add_term(ne, c);
        }
    }
    return out;
}

Exponents MPoly::monomial_content() const {
    Exponents m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) { m = e; first = false; continue; }
        for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

MPoly MPoly::divide_by_monomial(const Exponents& m) const {
    MPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        for (int i = 0; i < nvars_; ++i) {
            ne[i] -= m[i];
            if (ne[i] < 0) throw std::invalid_argument("monomial does not divide every term");
        }
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& f, const MPoly& g) {
    f.check_compatible(g);
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    MPoly rem = f;
    MPoly quot(f.field_, f.nvars_);
    const Exponents& lg = g.leading_monomial();
    const FieldElement& cg = g.leading_coeff();
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_monomial();
        Exponents q(f.nvars_);
        bool divides = true;
        for (int i = 0; i < f.nvars_; ++i) {
            q[i] = lr[i] - lg[i];
            if (q[i] < 0) { divides = false; break; }
        }
        if (!divides) return std::nullopt;
        FieldElement c = rem.leading_coeff() / cg;
        MPoly term = MPoly::monomial(f.field_, q, c);
        quot = quot + term;
        rem = rem - term * g;
    }
    return quot;
}

MPoly MPoly::rename_vars(int new_nvars, const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_) throw std::invalid_argument("rename arity mismatch");
    MPoly out(field_, new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (perm[i] < 0 || perm[i] >= new_nvars)
                throw std::invalid_argument("rename target out of range");
            ne[perm[i]] += e[i];
        }
        out.add_term(ne, c);
    }
    return out;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

MPoly MPoly::normalized() const {
    if (is_zero()) return *this;
    if (field_->kind() == FieldKind::Rationals) {
        // scale so coefficients are coprime integers and the leading one is positive
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            num_gcd = gcd(num_gcd, BigInt(numerator(c.rational())));
            den_lcm = lcm(den_lcm, BigInt(denominator(c.rational())));
        }
        Rational scale(den_lcm, num_gcd == 0 ? 1 : num_gcd);
        if (leading_coeff().rational() < 0) scale = -scale;
        return *this * FieldElement::from_rational(field_, scale);
    }
    return *this * leading_coeff().inverse();
}

// ------------------------------------------------------------ serialization

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        os << cs;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const Field& f;
    int nvars;

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    BigInt parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("polynomial parse error: expected integer at offset " + std::to_string(pos));
        return BigInt(s.substr(start, pos - start));
    }

    int parse_var_index() {
        // after 'x'
        BigInt i = parse_uint();
        if (i >= nvars) throw std::invalid_argument("polynomial parse error: variable index out of range");
        return i.convert_to<int>();
    }

    // one product of coefficient and powers
    MPoly parse_term() {
        FieldElement c = FieldElement::one(f);
        Exponents e(nvars, 0);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (peek() == 'x') {
                ++pos;
                int vi = parse_var_index();
                int ex = 1;
                if (eat('^')) ex = parse_uint().convert_to<int>();
                e[vi] += ex;
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                BigInt num = parse_uint();
                if (eat('/')) {
                    BigInt den = parse_uint();
                    if (den == 0) throw std::invalid_argument("polynomial parse error: zero denominator");
                    c = c * FieldElement::from_rational(f, Rational(num, den));
                } else {
                    c = c * FieldElement::from_integer(f, num);
                }
                saw_factor = true;
            } else {
                throw std::invalid_argument("polynomial parse error: expected coefficient or variable at offset " + std::to_string(pos));
            }
            expect_factor = eat('*');
        }
        if (!saw_factor) throw std::invalid_argument("polynomial parse error: empty term");
        return MPoly::monomial(f, e, c);
    }

    MPoly parse_poly() {
        MPoly acc = MPoly::zero(f, nvars);
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        while (true) {
            MPoly t = parse_term();
            acc = neg ? acc - t : acc + t;
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else throw std::invalid_argument("polynomial parse error: expected '+' or '-' at offset " + std::to_string(pos));
        }
        return acc;
    }
};

} // namespace

MPoly MPoly::parse(const Field& f, int nvars, const std::string& text) {
    // "0" parses to the zero polynomial
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
    if (trimmed == "0") return MPoly::zero(f, nvars);
    Parser p{text, 0, f, nvars};
    MPoly out = p.parse_poly();
    return out;
}

} // namespace cykummer
