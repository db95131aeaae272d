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

#include "cykummer/elim.hpp"

#include <algorithm>
#include <stdexcept>

namespace cykummer {

namespace {

MPoly exact_div(const MPoly& a, const MPoly& b) {
    auto q = MPoly::divide_exact(a, b);
    if (!q) throw std::logic_error("elim: expected exact polynomial division");
    return *q;
}

bool nonzero_constant(const MPoly& p) { return !p.is_zero() && p.is_constant(); }

/// One elimination pass: remove `var` from the working set via resultants
/// against a minimal-degree pivot.  Dropping a sole user of `var` is sound
/// for emptiness certificates (it only weakens the system) and point
/// extraction re-verifies candidates, so no content computation is needed.
std::vector<MPoly> eliminate_var(const std::vector<MPoly>& gens, int var,
                                 bool& hit_zero_resultant) {
    std::vector<MPoly> users, rest;
    for (const auto& g : gens)
        (g.degree_in(var) > 0 ? users : rest).push_back(g);
    if (users.empty()) return rest;
    auto pivot_it = std::min_element(
        users.begin(), users.end(), [var](const MPoly& a, const MPoly& b) {
            return a.degree_in(var) < b.degree_in(var);
        });
    MPoly pivot = *pivot_it;
    for (const auto& f : users) {
        if (&f == &*pivot_it) continue;
        MPoly r = sylvester_resultant(pivot, f, var);
        if (r.is_zero()) {
            hit_zero_resultant = true;
            continue;
        }
        rest.push_back(r.normalized());
    }
    return rest;
}

struct ChainOutcome {
    bool constant_certificate = false; // nonzero constant reached
    bool zero_resultant = false;
    std::optional<UPoly> eliminant;    // set when a univariate gcd survived
};

ChainOutcome run_chain(std::vector<MPoly> work, int keep_var) {
    ChainOutcome out;
    const int n = work.empty() ? 0 : work.front().nvars();
    auto scan_constants = [&]() {
        for (const auto& g : work)
            if (nonzero_constant(g)) out.constant_certificate = true;
    };
    scan_constants();
    for (int v = n - 1; v >= 0 && !out.constant_certificate; --v) {
        if (v == keep_var) continue;
        work = eliminate_var(work, v, out.zero_resultant);
        scan_constants();
    }
    if (out.constant_certificate) return out;
    UPoly acc;
    for (const auto& g : work) {
        if (g.is_zero()) continue;
        UPoly u = UPoly::from_mpoly(g, keep_var);
        acc = acc.is_zero() ? u : UPoly::gcd(acc, u);
    }
    if (!acc.is_zero()) {
        if (acc.degree() == 0) out.constant_certificate = true;
        else out.eliminant = acc.monic();
    }
    return out;
}

std::vector<MPoly> apply_keep_fixing_shear(const std::vector<MPoly>& gens,
                                           int keep_var,
                                           const std::vector<std::int64_t>& c) {
    if (gens.empty()) return gens;
    const Field& F = gens.front().field();
    const int n = gens.front().nvars();
    std::vector<MPoly> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        MPoly img = MPoly::variable(F, n, i);
        if (i != keep_var && c[i] != 0)
            img = img + MPoly::variable(F, n, keep_var) *
                            FieldElement::from_integer(F, c[i]);
        images.push_back(img);
    }
    std::vector<MPoly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.substitute_all(images));
    return out;
}

std::vector<MPoly> apply_general_shear(const std::vector<MPoly>& gens, DetRng& rng) {
    if (gens.empty()) return gens;
    const Field& F = gens.front().field();
    const int n = gens.front().nvars();
    // unit lower- or upper-triangular mixing: always invertible
    bool lower = rng.uniform(0, 1) == 1;
    std::vector<MPoly> images;
    for (int i = 0; i < n; ++i) {
        MPoly img = MPoly::variable(F, n, i);
        for (int j = 0; j < n; ++j) {
            if (lower ? (j >= i) : (j <= i)) continue;
            std::int64_t cij = rng.uniform(0, 3);
            if (cij != 0)
                img = img + MPoly::variable(F, n, j) *
                                FieldElement::from_integer(F, cij);
        }
        images.push_back(img);
    }
    std::vector<MPoly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.substitute_all(images));
    return out;
}

std::vector<MPoly> prune(const std::vector<MPoly>& gens) {
    std::vector<MPoly> out;
    for (const auto& g : gens)
        if (!g.is_zero()) out.push_back(g.normalized());
    return out;
}

} // namespace

MPoly bareiss_det(std::vector<std::vector<MPoly>> m) {
    const std::size_t k = m.size();
    if (k == 0) throw std::invalid_argument("bareiss_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("bareiss_det: not square");
    const Field& F = m[0][0].field();
    const int n = m[0][0].nvars();
    MPoly prev = MPoly::constant(F, n, FieldElement::one(F));
    int sign = 1;
    for (std::size_t r = 0; r + 1 < k; ++r) {
        if (m[r][r].is_zero()) {
            std::size_t swap_row = r;
            for (std::size_t i = r + 1; i < k; ++i)
                if (!m[i][r].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == r) return MPoly::zero(F, n);
            std::swap(m[r], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < k; ++i) {
            for (std::size_t j = r + 1; j < k; ++j)
                m[i][j] = exact_div(m[r][r] * m[i][j] - m[i][r] * m[r][j], prev);
            m[i][r] = MPoly::zero(F, n);
        }
        prev = m[r][r];
    }
    MPoly det = m[k - 1][k - 1];
    if (sign < 0) det = -det;
    return det;
}

MPoly sylvester_resultant(const MPoly& f, const MPoly& g, int var) {
    const Field& F = f.field();
    const int n = f.nvars();
    const int df = std::max(f.degree_in(var), 0);
    const int dg = std::max(g.degree_in(var), 0);
    if (f.is_zero() || g.is_zero()) return MPoly::zero(F, n);
    if (df == 0 && dg == 0)
        return MPoly::constant(F, n, FieldElement::one(F));
    if (df == 0) return f.pow(dg);
    if (dg == 0) return g.pow(df);
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    const std::size_t k = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<MPoly>> m(k, std::vector<MPoly>(k, MPoly::zero(F, n)));
    for (int row = 0; row < dg; ++row)
        for (int i = 0; i <= df; ++i) m[row][row + i] = fc[df - i];
    for (int row = 0; row < df; ++row)
        for (int i = 0; i <= dg; ++i) m[dg + row][row + i] = gc[dg - i];
    return bareiss_det(std::move(m));
}

MPoly mpoly_discriminant(const MPoly& f, int var) {
    const int d = f.degree_in(var);
    if (d < 1) throw std::invalid_argument("mpoly_discriminant: constant in var");
    MPoly res = sylvester_resultant(f, f.derivative(var), var);
    MPoly lc = f.coeffs_in(var)[static_cast<std::size_t>(d)];
    MPoly disc = exact_div(res, lc);
    if ((static_cast<std::int64_t>(d) * (d - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

ElimResult eliminate_to_univariate(const std::vector<MPoly>& gens, int keep_var,
                                   DetRng& rng, int max_retries) {
    std::vector<MPoly> base = prune(gens);
    if (base.empty())
        throw std::invalid_argument("eliminate_to_univariate: no generators");
    const int n = base.front().nvars();
    ElimResult result;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<std::int64_t> shear(static_cast<std::size_t>(n), 0);
        std::vector<MPoly> work = base;
        if (attempt > 0) {
            for (int i = 0; i < n; ++i)
                if (i != keep_var) shear[static_cast<std::size_t>(i)] = rng.uniform(1, 7);
            work = apply_keep_fixing_shear(base, keep_var, shear);
        }
        ChainOutcome out = run_chain(work, keep_var);
        if (out.constant_certificate) {
            result.eliminant =
                UPoly::constant(base.front().field(),
                                FieldElement::one(base.front().field()));
            result.retries_used = attempt;
            result.sheared = attempt > 0;
            result.shear = shear;
            return result;
        }
        if (out.eliminant) {
            result.eliminant = *out.eliminant;
            result.retries_used = attempt;
            result.sheared = attempt > 0;
            result.shear = shear;
            return result;
        }
    }
    throw std::runtime_error(
        "eliminate_to_univariate: projection collapsed for every shear attempt");
}

bool certify_empty(const std::vector<MPoly>& gens, DetRng& rng, int max_retries) {
    std::vector<MPoly> base = prune(gens);
    for (const auto& g : base)
        if (nonzero_constant(g)) return true;
    if (base.empty()) return false; // zero ideal: whole space, not empty
    const int n = base.front().nvars();
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<MPoly> work =
            attempt == 0 ? base : apply_general_shear(base, rng);
        for (int keep = 0; keep < n; ++keep) {
            ChainOutcome out = run_chain(work, keep);
            if (out.constant_certificate) return true;
        }
    }
    return false;
}

} // namespace cykummer
