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

#ifndef BWAC_HUFFMAN_HPP
#define BWAC_HUFFMAN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bwac/bits.hpp"

namespace bwac {

// Positive symbol counts, positionally aligned with the codewords returned.
using FrequencyTuple = std::vector<std::uint64_t>;
using CodewordTuple = std::vector<BitString>;

// Deterministic Huffman construction over a work list of (weight, positions)
// items. Each round takes the two positions i < j holding the two smallest
// weights (earliest occurrences win ties), prefixes 0 to every codeword under
// item i and 1 to every codeword under item j, removes both and appends the
// merged item at the end of the list. A single frequency gets codeword "0".
//
// Throws Errc::invalid_argument on an empty tuple or a zero count.
CodewordTuple huffman(std::span<const std::uint64_t> freqs);

// Codeword lengths only; same tie-breaking as huffman().
std::vector<std::size_t> huffman_lengths(std::span<const std::uint64_t> freqs);

// Minimum of sum(f_i * |v_i|) over every binary prefix code, by exhaustive
// search over complete code-length vectors. Independent of huffman(); used
// as a test oracle. Throws Errc::limit_exceeded for more than 12 counts.
std::uint64_t optimal_weighted_length(std::span<const std::uint64_t> freqs);

inline constexpr std::size_t max_oracle_size = 12;

} // namespace bwac

#endif
