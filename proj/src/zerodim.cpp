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

#include "cykummer/zerodim.hpp"

#include "cykummer/elim.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cykummer {

namespace {

/// Polynomial in y whose coefficients live in K[x]/(h): stored as UPoly
/// coefficients reduced mod h, highest index = y-degree, trimmed.
using YPoly = std::vector<UPoly>;

UPoly reduce(const UPoly& a, const UPoly& h) { return UPoly::divmod(a, h).second; }

void trim(YPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

YPoly reduce_all(const YPoly& a, const UPoly& h) {
    YPoly out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(reduce(c, h));
    trim(out);
    return out;
}

YPoly ypoly_from_mpoly(const MPoly& f, const UPoly& h) {
    // var 0 = x, var 1 = y
    YPoly out;
    for (const auto& c : f.coeffs_in(1)) out.push_back(reduce(UPoly::from_mpoly(c, 0), h));
    trim(out);
    return out;
}

struct EuclidBranch {
    UPoly h;
    YPoly g; // gcd of the two inputs mod h (not normalized)
};

/// Euclidean gcd in (K[x]/h)[y] with dynamic splitting: whenever a leading
/// coefficient is a zero divisor mod h, the branch splits along
/// gcd(lc, h) and both halves continue independently.
std::vector<EuclidBranch> euclid_split(const UPoly& h0, YPoly A0, YPoly B0) {
    std::vector<EuclidBranch> done;
    struct Item {
        UPoly h;
        YPoly a, b;
    };
    std::vector<Item> stack{{h0, std::move(A0), std::move(B0)}};
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        YPoly& A = it.a;
        YPoly& B = it.b;
        trim(A);
        trim(B);
        if (B.empty()) {
            done.push_back({it.h, A});
            continue;
        }
        if (A.empty()) {
            done.push_back({it.h, B});
            continue;
        }
        if (A.size() < B.size()) std::swap(A, B);
        const UPoly& lc = B.back();
        UPoly g0 = UPoly::gcd(lc, it.h);
        if (g0.degree() > 0 && g0.degree() < it.h.degree()) {
            UPoly h1 = g0;
            auto [h2, rem] = UPoly::divmod(it.h, g0);
            if (!rem.is_zero())
                throw std::logic_error("euclid_split: gcd does not divide modulus");
            stack.push_back({h1, reduce_all(A, h1), reduce_all(B, h1)});
            stack.push_back({h2.monic(), reduce_all(A, h2), reduce_all(B, h2)});
            continue;
        }
        if (g0.degree() == it.h.degree()) {
            // lc vanishes identically mod h: drop it and retry
            B.pop_back();
            stack.push_back(std::move(it));
            continue;
        }
        // lc invertible mod h: reduce A modulo B
        auto [gg, u, v] = UPoly::xgcd(lc, it.h);
        (void)gg;
        (void)v;
        UPoly inv = reduce(u, it.h);
        YPoly R = A;
        while (R.size() >= B.size()) {
            trim(R);
            if (R.size() < B.size()) break;
            UPoly factor = reduce(R.back() * inv, it.h);
            std::size_t shift = R.size() - B.size();
            for (std::size_t i = 0; i < B.size(); ++i)
                R[i + shift] = reduce(R[i + shift] - factor * B[i], it.h);
            // top coefficient is now exactly zero
            R.pop_back();
        }
        stack.push_back({it.h, B, R});
    }
    return done;
}

} // namespace

int RurResult::point_count() const {
    int n = 0;
    for (const auto& b : branches) n += b.h.degree();
    return n;
}

UPoly eval_along(const MPoly& D, const RurBranch& b) {
    if (D.nvars() != 2) throw std::invalid_argument("eval_along: need 2 variables");
    const Field& F = b.h.field();
    // Horner over y with precomputed x substitution
    auto ycoeffs = D.coeffs_in(1);
    UPoly acc = UPoly::zero(F);
    for (auto it = ycoeffs.rbegin(); it != ycoeffs.rend(); ++it) {
        UPoly cx = UPoly::from_mpoly(*it, 0).compose(b.xrep);
        acc = reduce(acc * b.yrep + cx, b.h);
    }
    return acc;
}

UPoly value_poly(const UPoly& h, const UPoly& psi) {
    const Field& F = h.field();
    if (h.degree() < 1) throw std::invalid_argument("value_poly: trivial modulus");
    MPoly H = h.to_mpoly(2, 0);
    MPoly P = MPoly::variable(F, 2, 1) - psi.to_mpoly(2, 0);
    MPoly r = sylvester_resultant(H, P, 0);
    return UPoly::from_mpoly(r, 1).monic();
}

RurResult filter_branches(const RurResult& r, const MPoly& D) {
    RurResult out = r;
    out.branches.clear();
    for (const auto& br : r.branches) {
        UPoly e = eval_along(D, br);
        UPoly keep = e.is_zero() ? br.h : UPoly::gcd(br.h, e);
        if (keep.degree() == 0) continue;
        out.branches.push_back({keep, reduce(br.xrep, keep), reduce(br.yrep, keep)});
    }
    return out;
}

RurResult rur_bivariate(const MPoly& f, const MPoly& g, DetRng& rng,
                        int max_retries) {
    if (f.nvars() != 2 || g.nvars() != 2)
        throw std::invalid_argument("rur_bivariate: need 2 variables");
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("rur_bivariate: zero generator");
    const Field& F = f.field();

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        // small shears first: coefficient growth under x -> x - lambda*y is
        // governed by lambda^deg, which matters a lot over the rationals
        std::int64_t lambda = attempt;
        if (attempt > 4) lambda = rng.uniform(1, 19);
        MPoly fs = f, gs = g;
        if (lambda != 0) {
            // substitute x -> x - lambda*y so solutions move to (a+lambda*b, b)
            MPoly xm = MPoly::variable(F, 2, 0) -
                       MPoly::variable(F, 2, 1) * FieldElement::from_integer(F, lambda);
            std::vector<MPoly> images{xm, MPoly::variable(F, 2, 1)};
            fs = f.substitute_all(images);
            gs = g.substitute_all(images);
        }
        MPoly res = sylvester_resultant(fs, gs, 1);
        if (res.is_zero()) continue; // common component in y-direction; reshear
        UPoly h0 = UPoly::from_mpoly(res, 0);
        UPoly h = h0.squarefree_part().monic();
        RurResult out;
        out.shear_lambda = lambda;
        out.retries = attempt;
        if (h.degree() == 0) return out; // no solutions

        YPoly A = ypoly_from_mpoly(fs, h);
        YPoly B = ypoly_from_mpoly(gs, h);
        auto raw = euclid_split(h, A, B);

        bool need_shear = false;
        std::vector<std::pair<UPoly, std::array<UPoly, 2>>> lin; // (h_i, {b, a}) a*y+b
        for (auto& br : raw) {
            trim(br.g);
            if (br.g.empty())
                throw std::logic_error("rur_bivariate: zero gcd on a branch");
            if (br.g.size() == 1) continue;      // no y-solution over this block
            if (br.g.size() > 2) {
                need_shear = true;               // unseparated points share an x
                break;
            }
            lin.emplace_back(br.h, std::array<UPoly, 2>{br.g[0], br.g[1]});
        }
        if (need_shear) continue;

        // phi = -b * a^{-1} mod h_i, splitting further when a is a zero divisor
        std::vector<RurBranch> branches;
        std::vector<std::pair<UPoly, std::array<UPoly, 2>>> work = std::move(lin);
        while (!work.empty()) {
            auto [hi, ab] = std::move(work.back());
            work.pop_back();
            UPoly a = reduce(ab[1], hi);
            UPoly b = reduce(ab[0], hi);
            if (a.is_zero())
                throw std::logic_error("rur_bivariate: degenerate linear factor");
            UPoly g0 = UPoly::gcd(a, hi);
            if (g0.degree() == hi.degree())
                throw std::logic_error("rur_bivariate: vanishing leading form");
            if (g0.degree() > 0) {
                auto [h2, rem] = UPoly::divmod(hi, g0);
                if (!rem.is_zero())
                    throw std::logic_error("rur_bivariate: split failure");
                work.emplace_back(g0, std::array<UPoly, 2>{b, a});
                work.emplace_back(h2.monic(), std::array<UPoly, 2>{b, a});
                continue;
            }
            auto [gg, u, v] = UPoly::xgcd(a, hi);
            (void)gg;
            (void)v;
            UPoly phi = reduce(-(b * reduce(u, hi)), hi);
            UPoly xrep = reduce(UPoly::x(F), hi);
            if (lambda != 0)
                xrep = reduce(xrep - phi * FieldElement::from_integer(F, lambda), hi);
            branches.push_back({hi, xrep, phi});
        }

        // soundness check: the described points satisfy the original system
        for (const auto& br : branches)
            if (!eval_along(f, br).is_zero() || !eval_along(g, br).is_zero())
                throw std::logic_error("rur_bivariate: branch fails the system");
        std::sort(branches.begin(), branches.end(),
                  [](const RurBranch& x, const RurBranch& y) {
                      return x.h.degree() < y.h.degree();
                  });
        out.branches = std::move(branches);
        return out;
    }
    throw std::runtime_error(
        "rur_bivariate: could not separate the solutions (system may be "
        "positive dimensional)");
}

} // namespace cykummer
