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

#include "cykummer/reptheory.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cykummer {

StandardRep::StandardRep(int n, Field f) : n_(n), field_(std::move(f)) {
    if (n < 2 || n > 7) throw std::invalid_argument("StandardRep: n must be in [2, 7]");
}

ExactMatrix StandardRep::matrix(const Perm& g) const {
    if (g.letters() != n_ + 1)
        throw std::invalid_argument("StandardRep::matrix: wrong letter count");
    if (!g.is_even())
        throw std::invalid_argument("StandardRep::matrix: odd permutation");
    ExactMatrix m(field_, n_, n_);
    const FieldElement one = FieldElement::one(field_);
    // basis vector j maps to e_{g(j)} - e_{g(n)}, and e_a - e_b = b_a - b_b
    // with b_n understood as zero
    const int gn = g.apply(n_);
    for (int j = 0; j < n_; ++j) {
        int gj = g.apply(j);
        if (gj != n_) m.at(gj, j) = m.at(gj, j) + one;
        if (gn != n_) m.at(gn, j) = m.at(gn, j) - one;
    }
    return m;
}

std::vector<std::vector<int>> index_subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

ExactMatrix StandardRep::exterior_matrix(const Perm& g, int m) const {
    if (m < 0 || m > n_)
        throw std::invalid_argument("StandardRep::exterior_matrix: m out of range");
    ExactMatrix rho = matrix(g);
    auto subs = index_subsets(n_, m);
    const int k = static_cast<int>(subs.size());
    ExactMatrix out(field_, k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            out.at(r, c) = rho.minor_det(subs[static_cast<std::size_t>(r)],
                                         subs[static_cast<std::size_t>(c)]);
    return out;
}

CharacterData::CharacterData(int n) : n_(n) {
    if (n < 2 || n > 7) throw std::invalid_argument("CharacterData: n must be in [2, 7]");
    auto group = alternating_group(n + 1);
    order_ = static_cast<long long>(group.size());
    auto census = cycle_type_census(group);
    for (const auto& [type, count] : census) {
        types_.push_back(type);
        sizes_.push_back(count);
    }
}

long long CharacterData::type_size(const std::vector<int>& type) const {
    for (std::size_t i = 0; i < types_.size(); ++i)
        if (types_[i] == type) return sizes_[i];
    throw std::invalid_argument("CharacterData: unknown cycle type");
}

Rational CharacterData::standard_value(const std::vector<int>& type) const {
    long long fixed = static_cast<long long>(
        std::count(type.begin(), type.end(), 1));
    return Rational(fixed - 1);
}

Rational CharacterData::exterior_value(const std::vector<int>& type, int m) const {
    if (m < 0 || m > n_)
        throw std::invalid_argument("CharacterData: exterior power out of range");
    // Newton's identities: e_m = (1/m) sum_{k=1..m} (-1)^{k-1} e_{m-k} p_k,
    // with p_k the standard character at the k-th power's cycle type.
    std::vector<Rational> e{Rational(1)};
    for (int mm = 1; mm <= m; ++mm) {
        Rational acc(0);
        int sign = 1;
        for (int k = 1; k <= mm; ++k) {
            Rational pk = standard_value(cycle_type_power(type, k));
            acc += Rational(sign) * e[static_cast<std::size_t>(mm - k)] * pk;
            sign = -sign;
        }
        e.push_back(acc / mm);
    }
    return e.back();
}

Rational CharacterData::exterior_norm(int m) const {
    Rational acc(0);
    for (std::size_t i = 0; i < types_.size(); ++i) {
        Rational v = exterior_value(types_[i], m);
        acc += Rational(sizes_[i]) * v * v;
    }
    return acc / order_;
}

long long CharacterData::invariant_dimension(int m) const {
    Rational acc(0);
    for (std::size_t i = 0; i < types_.size(); ++i)
        acc += Rational(sizes_[i]) * exterior_value(types_[i], m);
    Rational avg = acc / order_;
    if (boost::multiprecision::denominator(avg) != 1)
        throw std::logic_error("invariant_dimension: non-integer group average");
    return boost::multiprecision::numerator(avg).convert_to<long long>();
}

std::vector<long long> invariant_dims(int n) {
    CharacterData cd(n);
    std::vector<long long> out;
    for (int m = 0; m <= n; ++m) out.push_back(cd.invariant_dimension(m));
    return out;
}

int fixed_subspace_modp(int n, int m, std::int64_t p) {
    if (m <= 0 || m >= n)
        throw std::invalid_argument("fixed_subspace_modp: need 0 < m < n");
    if (n > 5) throw std::invalid_argument("fixed_subspace_modp: n capped at 5");
    Field F = FieldDescriptor::prime(p);
    StandardRep rep(n, F);
    auto gens = alternating_generators(n + 1);
    ExactMatrix stacked(F, 0, 0);
    bool first = true;
    for (const auto& g : gens) {
        ExactMatrix lam = rep.exterior_matrix(g, m);
        ExactMatrix diff = lam - ExactMatrix::identity(F, lam.rows());
        stacked = first ? diff : stacked.stacked(diff);
        first = false;
    }
    return static_cast<int>(stacked.nullspace().size());
}

int double_coset_count(int n) {
    auto group = alternating_group(n + 1);
    std::vector<Perm> stab;
    for (const auto& g : group)
        if (g.apply(0) == 0) stab.push_back(g);
    std::set<Perm> visited;
    int count = 0;
    for (const auto& g : group) {
        if (visited.count(g)) continue;
        ++count;
        for (const auto& a : stab)
            for (const auto& b : stab) visited.insert(a.compose(g).compose(b));
    }
    return count;
}

namespace {

int letter_orbits_of_stabilizer(int n) {
    auto group = alternating_group(n + 1);
    std::vector<Perm> stab;
    for (const auto& g : group)
        if (g.apply(0) == 0) stab.push_back(g);
    std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
    int orbits = 0;
    for (int i = 0; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++orbits;
        // orbit sweep
        std::vector<int> frontier{i};
        seen[static_cast<std::size_t>(i)] = 1;
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (const auto& g : stab) {
                int y = g.apply(x);
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    frontier.push_back(y);
                }
            }
        }
    }
    return orbits;
}

} // namespace

LemmaReport certify_lemma(int n) {
    CharacterData cd(n);
    LemmaReport rep;
    rep.n = n;
    rep.chi_norm = cd.exterior_norm(1);
    rep.irreducible = rep.chi_norm == 1;
    rep.double_cosets = double_coset_count(n);
    rep.letter_rank = letter_orbits_of_stabilizer(n);
    rep.duality_ok = true;
    for (const auto& t : cd.types()) {
        // chi(g^{-1}) = chi(g): inverses share a cycle type and the values
        // are rational, so the dual character is chi itself
        Rational lhs = cd.exterior_value(t, n - 1);
        Rational rhs = cd.standard_value(t) * cd.exterior_value(t, n);
        if (lhs != rhs) rep.duality_ok = false;
    }
    rep.flagged_small_case = (n == 2);
    return rep;
}

DecompositionReport decomposition_check(int n) {
    if (n < 3 || n > 7)
        throw std::invalid_argument("decomposition_check: n must be in [3, 7]");
    DecompositionReport out;
    out.n = n;
    Field Q = FieldDescriptor::rationals();
    StandardRep rep(n, Q);
    auto group = alternating_group(n + 1);

    // the distinguished vector (n, -1, ..., -1) in the chosen basis
    std::vector<FieldElement> line;
    line.push_back(FieldElement::from_integer(Q, n));
    for (int i = 1; i < n; ++i) line.push_back(FieldElement::from_integer(Q, -1));

    out.primed_stable = true;
    out.line_trivial = true;
    for (const auto& g : group) {
        if (g.apply(0) != 0) continue; // only the first-letter stabilizer acts
        ExactMatrix m = rep.matrix(g);
        // complement {first coordinate = 0}: columns 1..n-1 must have zero
        // first coordinate
        for (int j = 1; j < n; ++j)
            if (!m.at(0, j).is_zero()) {
                out.primed_stable = false;
                if (out.offending.empty()) out.offending = g.str();
            }
        auto img = m.apply(line);
        if (img != line) {
            out.line_trivial = false;
            if (out.offending.empty()) out.offending = g.str();
        }
    }

    // subset bookkeeping: m-subsets of n indices split by membership of
    // index 0 into (m)-subsets and (m-1)-subsets of the remaining n-1
    out.dims_ok = true;
    for (int m = 0; m <= n; ++m) {
        std::size_t with = 0, without = 0;
        for (const auto& s : index_subsets(n, m)) {
            if (!s.empty() && s.front() == 0) ++with;
            else ++without;
        }
        std::size_t lower_m = index_subsets(n - 1, m).size();
        std::size_t lower_m1 = (m >= 1) ? index_subsets(n - 1, m - 1).size() : 0;
        if (without != lower_m || with != lower_m1) out.dims_ok = false;
    }
    return out;
}

} // namespace cykummer
