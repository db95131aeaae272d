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

#include "cykummer/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cykummer {

Perm::Perm(int letters) {
    if (letters < 1) throw std::invalid_argument("Perm: need at least one letter");
    img_.resize(static_cast<std::size_t>(letters));
    std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_cycles(int letters, const std::vector<std::vector<int>>& cycles) {
    Perm p(letters);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= letters || to < 0 || to >= letters)
                throw std::invalid_argument("Perm::from_cycles: letter out of range");
            p.img_[static_cast<std::size_t>(from)] = to;
        }
    }
    // validate bijectivity (overlapping cycles would break it)
    std::vector<int> seen(static_cast<std::size_t>(letters), 0);
    for (int v : p.img_) {
        if (++seen[static_cast<std::size_t>(v)] > 1)
            throw std::invalid_argument("Perm::from_cycles: not a bijection");
    }
    return p;
}

Perm Perm::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<int> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= n || ++seen[static_cast<std::size_t>(v)] > 1)
            throw std::invalid_argument("Perm::from_images: not a bijection");
    }
    Perm p(n);
    p.img_ = std::move(images);
    return p;
}

Perm Perm::compose(const Perm& o) const {
    if (letters() != o.letters())
        throw std::invalid_argument("Perm::compose: letter count mismatch");
    Perm r(letters());
    for (int i = 0; i < letters(); ++i) r.img_[static_cast<std::size_t>(i)] = apply(o.apply(i));
    return r;
}

Perm Perm::inverse() const {
    Perm r(letters());
    for (int i = 0; i < letters(); ++i) r.img_[static_cast<std::size_t>(apply(i))] = i;
    return r;
}

Perm Perm::power(int k) const {
    if (k < 0) throw std::invalid_argument("Perm::power: negative exponent");
    Perm r(letters());
    for (int i = 0; i < k; ++i) r = compose(r);
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < letters(); ++i)
        if (apply(i) != i) return false;
    return true;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(img_[j]);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

bool Perm::is_even() const {
    auto type = cycle_type();
    int transpositions = 0;
    for (int len : type) transpositions += len - 1;
    return transpositions % 2 == 0;
}

std::string Perm::str() const {
    if (is_identity()) return "()";
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) {
            seen[i] = true;
            continue;
        }
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(img_[j]);
        }
        out += ')';
    }
    return out;
}

std::vector<Perm> alternating_group(int letters) {
    if (letters < 3 || letters > 8)
        throw std::invalid_argument("alternating_group: letters must be in [3, 8]");
    std::vector<int> img(static_cast<std::size_t>(letters));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        Perm q = Perm::from_images(img);
        if (q.is_even()) out.push_back(q);
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> alternating_generators(int letters) {
    if (letters < 3 || letters > 8)
        throw std::invalid_argument("alternating_generators: letters must be in [3, 8]");
    std::vector<Perm> gens;
    std::vector<int> three{1, 2, 3};
    gens.push_back(Perm::from_cycles(letters, {three}));
    if (letters == 3) return gens;
    std::vector<int> big;
    if (letters % 2 == 1)
        for (int i = 1; i <= letters; ++i) big.push_back(i);
    else
        for (int i = 2; i <= letters; ++i) big.push_back(i);
    gens.push_back(Perm::from_cycles(letters, {big}));
    return gens;
}

std::map<std::vector<int>, long long> cycle_type_census(const std::vector<Perm>& g) {
    std::map<std::vector<int>, long long> census;
    for (const auto& p : g) ++census[p.cycle_type()];
    return census;
}

std::vector<int> cycle_type_power(const std::vector<int>& type, int k) {
    std::vector<int> out;
    for (int len : type) {
        int g = std::gcd(len, k);
        for (int i = 0; i < g; ++i) out.push_back(len / g);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace cykummer
