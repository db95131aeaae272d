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

#ifndef CYKUMMER_RNG_HPP
#define CYKUMMER_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace cykummer {

/**
 * Deterministic random source.
 *
 * All randomized pieces of the library (factorization splitting, generic
 * coordinate shears, probe points) draw from this class so that a fixed seed
 * reproduces a run bit for bit.  std::mt19937_64 has a portable, fully
 * specified output sequence; we deliberately avoid std::uniform_int_distribution,
 * whose mapping is implementation defined.
 */
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform value in [lo, hi], inclusive.  Rejection sampling keeps the
    /// distribution exact and the sequence platform independent.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("DetRng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next()); // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Derive an independent child stream (used so sub-tasks cannot perturb
    /// each other's sequences when the call order changes).
    DetRng fork() { return DetRng(next() ^ 0x9e3779b97f4a7c15ULL); }

private:
    std::mt19937_64 eng_;
};

} // namespace cykummer

#endif
