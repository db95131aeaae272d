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

#include "cykummer/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cykummer {

namespace {

bool is_trivial(const UPoly& f) { return f.degree() <= 0; }

UPoly exact_quot(const UPoly& a, const UPoly& b) {
    auto [q, r] = UPoly::divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("factor: non-exact division");
    return q;
}

/// p-th root of f, valid when every exponent in f is divisible by p.
/// Coefficients are mapped through the inverse Frobenius c -> c^(p^(k-1)).
UPoly pth_root(const UPoly& f) {
    const Field& F = f.field();
    const std::int64_t p = F->characteristic();
    const int k = F->degree();
    BigInt ce = 1; // p^(k-1)
    for (int i = 0; i + 1 < k; ++i) ce *= p;
    std::vector<FieldElement> out;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
        FieldElement c = f.coeff(i);
        out.push_back(k == 1 ? c : c.pow(ce));
    }
    return UPoly(F, std::move(out));
}

/// Monic squarefree decomposition in characteristic p.
void sff_char_p(const UPoly& f, int scale, std::vector<std::pair<UPoly, int>>& out) {
    if (is_trivial(f)) return;
    const std::int64_t p = f.field()->characteristic();
    UPoly fp = f.derivative();
    if (fp.is_zero()) {
        sff_char_p(pth_root(f), scale * static_cast<int>(p), out);
        return;
    }
    UPoly c = UPoly::gcd(f, fp);
    UPoly w = exact_quot(f, c);
    int i = 1;
    while (!is_trivial(w)) {
        UPoly y = UPoly::gcd(w, c);
        UPoly z = exact_quot(w, y);
        if (!is_trivial(z)) out.emplace_back(z, i * scale);
        w = y;
        c = exact_quot(c, y);
        ++i;
    }
    if (!is_trivial(c)) sff_char_p(pth_root(c), scale * static_cast<int>(p), out);
}

/// Yun's squarefree decomposition, characteristic zero, monic input.
void sff_char_0(const UPoly& f, std::vector<std::pair<UPoly, int>>& out) {
    if (is_trivial(f)) return;
    UPoly g = UPoly::gcd(f, f.derivative());
    if (is_trivial(g)) {
        out.emplace_back(f, 1);
        return;
    }
    UPoly c = exact_quot(f, g);
    UPoly d = exact_quot(f.derivative(), g) - c.derivative();
    int i = 1;
    while (!is_trivial(c)) {
        UPoly pi = UPoly::gcd(c, d);
        if (!is_trivial(pi)) out.emplace_back(pi, i);
        c = exact_quot(c, pi);
        d = exact_quot(d, pi) - c.derivative();
        ++i;
    }
}

/// Distinct-degree split of a monic squarefree g: (product, factor degree).
std::vector<std::pair<UPoly, int>> ddf(UPoly g) {
    const Field& F = g.field();
    const BigInt q = F->order();
    std::vector<std::pair<UPoly, int>> out;
    UPoly h = UPoly::x(F);
    {
        auto [quo, rem] = UPoly::divmod(h, g);
        (void)quo;
        h = rem;
    }
    int d = 0;
    while (g.degree() >= 2 * (d + 1)) {
        ++d;
        h = UPoly::pow_mod(h, q, g);
        UPoly part = UPoly::gcd(h - UPoly::x(F), g);
        if (part.degree() > 0) {
            out.emplace_back(part, d);
            g = exact_quot(g, part);
            h = UPoly::divmod(h, g).second;
        }
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

UPoly random_probe(const Field& F, int max_deg, DetRng& rng) {
    std::vector<FieldElement> cs;
    int deg = static_cast<int>(rng.uniform(1, std::max(1, max_deg)));
    for (int i = 0; i <= deg; ++i) cs.push_back(FieldElement::random(F, rng));
    UPoly a(F, std::move(cs));
    return a;
}

/// Equal-degree splitting of a monic product of irreducibles of degree d.
void edf(const UPoly& g, int d, DetRng& rng, std::vector<UPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const Field& F = g.field();
    const BigInt q = F->order();
    for (;;) {
        UPoly a = random_probe(F, g.degree() - 1, rng);
        UPoly g0 = UPoly::gcd(a, g);
        if (g0.degree() > 0 && g0.degree() < g.degree()) {
            edf(g0, d, rng, out);
            edf(exact_quot(g, g0), d, rng, out);
            return;
        }
        UPoly b;
        if (F->characteristic() == 2) {
            // absolute trace map to F_2
            int bits = F->degree() * d;
            UPoly t = UPoly::divmod(a, g).second;
            b = t;
            for (int i = 1; i < bits; ++i) {
                t = UPoly::mul_mod(t, t, g);
                b = b + t;
            }
        } else {
            BigInt e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            e = (e - 1) / 2;
            b = UPoly::pow_mod(a, e, g) - UPoly::constant(F, FieldElement::one(F));
        }
        UPoly h = UPoly::gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            edf(h, d, rng, out);
            edf(exact_quot(g, h), d, rng, out);
            return;
        }
    }
}

// --- rationals support ------------------------------------------------

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, int>> primes;
    for (BigInt p = 2; p * p <= n && p <= 1000000; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            primes.emplace_back(p, e);
        }
    }
    if (n > 1) primes.emplace_back(n, 1); // prime for n up to 1e12
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : primes) {
        std::size_t before = divs.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < before; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Rational roots of a monic squarefree polynomial over Q.
std::vector<Rational> rational_roots(const UPoly& f) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    // clear denominators to a primitive integer polynomial
    BigInt den_lcm = 1;
    for (int i = 0; i <= f.degree(); ++i) {
        BigInt d = denominator(f.coeff(i).rational());
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    std::vector<BigInt> ic;
    BigInt content = 0;
    for (int i = 0; i <= f.degree(); ++i) {
        Rational scaled = f.coeff(i).rational() * den_lcm;
        BigInt v = numerator(scaled);
        ic.push_back(v);
        content = boost::multiprecision::gcd(content, v);
    }
    if (content > 1)
        for (auto& v : ic) v /= content;
    // candidates p/q, p | ic[0], q | ic[deg]
    std::vector<Rational> roots;
    if (ic.front() == 0) {
        roots.emplace_back(0);
        return roots; // caller strips and re-runs on the quotient
    }
    auto ps = positive_divisors(ic.front());
    auto qs = positive_divisors(ic.back());
    for (const BigInt& p : ps)
        for (const BigInt& q : qs)
            for (int sign : {1, -1}) {
                Rational cand(p * sign, q);
                FieldElement v = f.eval(
                    FieldElement::from_rational(f.field(), cand));
                if (v.is_zero()) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

void factor_squarefree_q(const UPoly& sf, int mult, FactorResult& res) {
    const Field& F = sf.field();
    UPoly rest = sf;
    for (;;) {
        if (is_trivial(rest)) return;
        auto roots = rational_roots(rest);
        if (roots.empty()) break;
        for (const Rational& r : roots) {
            UPoly lin(F, {FieldElement::from_rational(F, -r), FieldElement::one(F)});
            res.factors.emplace_back(lin, mult);
            rest = exact_quot(rest, lin);
        }
        if (roots.size() == 1 && roots.front() == 0) continue; // retry quotient
        break;
    }
    if (is_trivial(rest)) return;
    res.factors.emplace_back(rest, mult);
    if (rest.degree() > 3) res.complete = false; // not certified irreducible
}

} // namespace

UPoly FactorResult::recompose() const {
    if (factors.empty()) return UPoly::constant(unit.field(), unit);
    UPoly acc = UPoly::constant(unit.field(), unit);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) acc = acc * f;
    return acc;
}

FactorResult factor_univariate(const UPoly& f, DetRng& rng) {
    if (f.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
    FactorResult res;
    res.unit = f.lc();
    if (is_trivial(f)) {
        res.unit = f.coeff(0);
        return res;
    }
    UPoly m = f.monic();
    if (f.field()->kind() == FieldKind::Rationals) {
        std::vector<std::pair<UPoly, int>> parts;
        sff_char_0(m, parts);
        for (const auto& [sf, mult] : parts) factor_squarefree_q(sf, mult, res);
    } else {
        std::vector<std::pair<UPoly, int>> parts;
        sff_char_p(m, 1, parts);
        for (const auto& [sf, mult] : parts)
            for (const auto& [prod, d] : ddf(sf)) {
                std::vector<UPoly> irr;
                edf(prod, d, rng, irr);
                for (auto& g : irr) res.factors.emplace_back(std::move(g), mult);
            }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  for (int i = a.first.degree(); i >= 0; --i) {
                      if (a.first.coeff(i) == b.first.coeff(i)) continue;
                      return a.first.coeff(i) < b.first.coeff(i);
                  }
                  return a.second < b.second;
              });
    return res;
}

std::vector<FieldElement> roots_in_field(const UPoly& f, DetRng& rng) {
    FactorResult fr = factor_univariate(f, rng);
    std::vector<FieldElement> roots;
    for (const auto& [g, m] : fr.factors) {
        (void)m;
        if (g.degree() == 1) roots.push_back(-(g.coeff(0)));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool is_irreducible(const UPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const Field& F = f.field();
    if (!F->is_finite())
        throw std::invalid_argument("is_irreducible: finite fields only");
    const BigInt q = F->order();
    const int n = f.degree();
    UPoly m = f.monic();
    // Frobenius ladder: frob[i] = x^(q^i) mod m, up to i = n.
    std::vector<UPoly> frob(n + 1);
    frob[0] = UPoly::divmod(UPoly::x(F), m).second;
    for (int i = 1; i <= n; ++i) frob[i] = UPoly::pow_mod(frob[i - 1], q, m);
    if (!(frob[n] == frob[0])) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) prime = false;
        if (!prime) continue;
        UPoly g = UPoly::gcd(frob[n / l] - frob[0], m);
        if (g.degree() != 0) return false;
    }
    return true;
}

UPoly find_irreducible(std::int64_t p, int degree, DetRng& rng) {
    if (degree < 1) throw std::invalid_argument("find_irreducible: degree < 1");
    Field F = FieldDescriptor::prime(p);
    if (degree == 1) return UPoly::x(F);
    for (;;) {
        std::vector<FieldElement> cs;
        for (int i = 0; i < degree; ++i)
            cs.push_back(FieldElement::from_integer(
                F, static_cast<std::int64_t>(rng.uniform(0, p - 1))));
        cs.push_back(FieldElement::one(F));
        UPoly cand(F, std::move(cs));
        if (is_irreducible(cand)) return cand;
    }
}

// --- SplittingContext --------------------------------------------------

SplittingContext::SplittingContext(Field start, int degree_cap) : cap_(degree_cap) {
    if (!start || !start->is_finite())
        throw std::invalid_argument("SplittingContext: finite base field required");
    if (start->degree() > cap_)
        throw ExtensionCapExceeded("SplittingContext: base field above degree cap");
    stages_.push_back(std::move(start));
}

int SplittingContext::stage_of(const Field& f) const {
    for (std::size_t i = 0; i < stages_.size(); ++i)
        if (same_field(stages_[i], f)) return static_cast<int>(i);
    return -1;
}

FieldElement SplittingContext::lift(const FieldElement& e) const {
    const Field& src = e.field();
    int idx = stage_of(src);
    if (idx < 0) {
        // the prime subfield embeds into any stage
        if (src->kind() == FieldKind::Prime &&
            src->characteristic() == current()->characteristic())
            return FieldElement::from_integer(current(), e.residue());
        throw std::invalid_argument("SplittingContext::lift: field not in tower");
    }
    FieldElement v = e;
    for (std::size_t j = static_cast<std::size_t>(idx); j + 1 < stages_.size(); ++j) {
        const Field& up = stages_[j + 1];
        const FieldElement& gen = gen_image_[j];
        std::vector<std::int64_t> cs = (stages_[j]->kind() == FieldKind::Prime)
                                           ? std::vector<std::int64_t>{v.residue()}
                                           : v.coeffs();
        FieldElement acc = FieldElement::zero(up);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it)
            acc = acc * gen + FieldElement::from_integer(up, *it);
        v = acc;
    }
    return v;
}

UPoly SplittingContext::lift(const UPoly& f) const {
    return f.map_coeffs(current(), [this](const FieldElement& c) { return lift(c); });
}

void SplittingContext::grow(int new_total_degree, DetRng& rng) {
    const std::int64_t p = current()->characteristic();
    UPoly mod = find_irreducible(p, new_total_degree, rng);
    std::vector<std::int64_t> mc;
    for (int i = 0; i <= mod.degree(); ++i) mc.push_back(mod.coeff(i).residue());
    Field up = FieldDescriptor::extension(p, mc);

    // image of the current generator: canonical root of the old modulus
    FieldElement gen;
    if (current()->kind() == FieldKind::Prime) {
        gen = FieldElement::one(up);
    } else {
        std::vector<FieldElement> oc;
        for (std::int64_t c : current()->modulus())
            oc.push_back(FieldElement::from_integer(up, c));
        UPoly old_mod(up, std::move(oc));
        auto roots = roots_in_field(old_mod, rng);
        if (roots.empty())
            throw std::logic_error("SplittingContext: modulus failed to split upstairs");
        gen = roots.front();
    }
    gen_image_.push_back(gen);
    stages_.push_back(up);
}

std::vector<FieldElement> SplittingContext::split_fully(const UPoly& f, DetRng& rng) {
    if (f.is_zero())
        throw std::invalid_argument("split_fully: zero polynomial");
    for (;;) {
        UPoly fl = lift(f);
        FactorResult fr = factor_univariate(fl, rng);
        int grow_deg = 0;
        for (const auto& [g, m] : fr.factors) {
            (void)m;
            if (g.degree() > 1) {
                grow_deg = g.degree();
                break; // factors are sorted by degree: smallest growth first
            }
        }
        if (grow_deg == 0) {
            std::vector<FieldElement> roots;
            for (const auto& [g, m] : fr.factors) {
                (void)m;
                if (g.degree() == 1) roots.push_back(-(g.coeff(0)));
            }
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            return roots;
        }
        int target = degree_over_prime() * grow_deg;
        if (target > cap_)
            throw ExtensionCapExceeded(
                "splitting tower would need degree " + std::to_string(target) +
                " over the prime field (cap " + std::to_string(cap_) + ")");
        grow(target, rng);
    }
}

std::vector<FieldElement> SplittingContext::sqrt_extending(const FieldElement& a,
                                                           DetRng& rng) {
    const Field& F = current();
    FieldElement al = lift(a);
    UPoly f(F, {-al, FieldElement::zero(F), FieldElement::one(F)});
    return split_fully(f, rng);
}

} // namespace cykummer
