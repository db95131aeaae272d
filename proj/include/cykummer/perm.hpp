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

#ifndef CYKUMMER_PERM_HPP
#define CYKUMMER_PERM_HPP

#include <map>
#include <string>
#include <vector>

namespace cykummer {

/**
 * Permutation of {1..n} (stored 0-based).  apply(i) is the image of letter i;
 * composition is function composition: compose(o).apply(i) = apply(o.apply(i)).
 */
class Perm {
public:
    explicit Perm(int letters); // identity
    static Perm identity(int letters) { return Perm(letters); }
    /// Cycle input uses 1-based letters, e.g. {{1,2,3}} for the 3-cycle.
    static Perm from_cycles(int letters, const std::vector<std::vector<int>>& cycles);
    /// 0-based image vector; validated to be a bijection.
    static Perm from_images(std::vector<int> images);

    int letters() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[static_cast<std::size_t>(i)]; }

    Perm compose(const Perm& o) const; // this after o
    Perm inverse() const;
    Perm power(int k) const; // k >= 0

    bool is_identity() const;
    bool is_even() const;
    /// Cycle lengths including fixed points, sorted descending: a partition
    /// of the letter count.
    std::vector<int> cycle_type() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    std::string str() const; // cycle notation with 1-based letters

private:
    std::vector<int> img_;
};

/// All even permutations of {1..letters}, sorted; letters in [3, 8].
std::vector<Perm> alternating_group(int letters);

/// The fixed generating pair: (1 2 3) together with the full cycle
/// (1 2 ... k) when k is odd, else (2 3 ... k).
std::vector<Perm> alternating_generators(int letters);

/// Count elements per cycle type.
std::map<std::vector<int>, long long> cycle_type_census(const std::vector<Perm>& g);

/// Cycle type of g^k given the type of g: a cycle of length L contributes
/// gcd(L, k) cycles of length L / gcd(L, k).
std::vector<int> cycle_type_power(const std::vector<int>& type, int k);

} // namespace cykummer

#endif
