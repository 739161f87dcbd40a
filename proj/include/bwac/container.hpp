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

#ifndef BWAC_CONTAINER_HPP
#define BWAC_CONTAINER_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bwac/alphabet.hpp"
#include "bwac/eah.hpp"

namespace bwac {

// Archive layout (all integers little-endian, see FORMAT.md):
//
//   "BWAC" | version:u8 | block_count:u32 | block*
//
//   block = length:u64 | order:u8 | row:u64 (0-based) | p:u16
//         | symbols[p] | prefix[min(order, length)]
//         | follower bitmap, p^(order+1) bits, byte padded
//         | codewords, each (len:8 bits, bits), packed, byte padded
//         | payload_bits:u64 | payload, byte padded

inline constexpr std::array<std::uint8_t, 4> container_magic = { 'B', 'W', 'A', 'C' };
inline constexpr std::uint8_t container_version = 1;
inline constexpr std::size_t container_header_size = 9;

struct Block {
    std::uint64_t length = 0;      // symbols in the block
    std::uint8_t order = 1;        // context order of the rank coder
    std::uint64_t bwt_index = 1;   // 1-based rotation row
    Alphabet alphabet;             // distinct bytes of the block
    EahOutput eah;                 // over the rank alphabet {0..p-1}

    friend bool operator==(const Block&, const Block&) = default;
};

struct Container {
    std::vector<Block> blocks;

    friend bool operator==(const Container&, const Container&) = default;
};

std::vector<std::uint8_t> write_container(const Container& c, std::uint64_t guard = default_bitmap_guard);

// Validates structure only; the payload is checked when decoded. Errors:
// truncated, bad_magic, bad_version, inconsistent.
Container read_container(std::span<const std::uint8_t> bytes, std::uint64_t guard = default_bitmap_guard);

} // namespace bwac

#endif
