/*
Copyright 2026 The bwac Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef BWAC_BWT_HPP
#define BWAC_BWT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bwac/alphabet.hpp"

namespace bwac {

// Last column of the sorted rotation matrix plus the 1-based rank of the
// first row equal to the input.
struct BwtResult {
    SymbolString transformed;
    std::uint64_t index = 0;

    friend bool operator==(const BwtResult&, const BwtResult&) = default;
};

// Largest block the rotation sort accepts (indices are 32-bit).
inline constexpr std::uint64_t max_bwt_length = 0xFFFFFFFFull;

// Sorts all cyclic rotations of s (no sentinel) by prefix doubling in
// O(n log n). Rotations compare by alphabet order. Identical rotations of a
// periodic string may appear in any order; index is the smallest matching
// rank either way.
BwtResult bwt_forward(std::span<const Symbol> s, const Alphabet& alphabet);

// LF-mapping inverse.
SymbolString bwt_inverse(const BwtResult& r, const Alphabet& alphabet);

// Sorted rotation start positions (the suffix array of the cyclic string).
// Exposed for inspection and testing.
std::vector<std::uint32_t> sort_rotations(std::span<const std::uint8_t> ranks, std::size_t alphabet_size);

} // namespace bwac

#endif
