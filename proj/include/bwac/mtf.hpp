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

#ifndef BWAC_MTF_HPP
#define BWAC_MTF_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bwac/alphabet.hpp"

namespace bwac {

// Move-to-front ranks; every value is below the alphabet size.
struct MtfSequence {
    std::vector<std::uint8_t> ranks;

    friend bool operator==(const MtfSequence&, const MtfSequence&) = default;
};

// The list starts as the alphabet in sorted order. Each rank is the number
// of list entries ahead of the symbol before it is moved to the front.
MtfSequence mtf_encode(std::span<const Symbol> s, const Alphabet& alphabet);

SymbolString mtf_decode(const MtfSequence& r, const Alphabet& alphabet);

} // namespace bwac

#endif
