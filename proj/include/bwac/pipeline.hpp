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

#ifndef BWAC_PIPELINE_HPP
#define BWAC_PIPELINE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "bwac/bwt.hpp"
#include "bwac/container.hpp"
#include "bwac/eah.hpp"
#include "bwac/mtf.hpp"

namespace bwac {

inline constexpr std::size_t min_block_size = 1024;
inline constexpr std::size_t default_block_size = std::size_t(1) << 20;

struct PipelineConfig {
    std::size_t order = 1;
    std::size_t block_size = default_block_size;   // 0 = whole input in one block
    std::uint64_t bitmap_guard = default_bitmap_guard;

    // When false, a block whose alphabet makes p^(order+1) exceed the guard
    // is coded at the highest order that fits. When true it is an error.
    bool strict_order = false;

    unsigned threads = 1;   // 0 = hardware concurrency

    void validate() const;
};

// Intermediate values of one block, valid only during the observer call.
struct BlockTrace {
    std::size_t block;
    std::span<const std::uint8_t> input;
    const Alphabet& alphabet;
    const BwtResult& bwt;
    const MtfSequence& mtf;
    std::size_t order;      // order actually used for this block
    const EahResult& eah;
};

// May be called concurrently from worker threads when threads != 1.
using BlockObserver = std::function<void(const BlockTrace&)>;

// Highest order <= requested whose follower bitmap fits the guard, or 0
// when not even order 1 does.
std::size_t effective_order(std::size_t alphabet_size, std::size_t requested, std::uint64_t guard);

// Per block: BWT, move-to-front over the block alphabet, then the
// context coder over the rank alphabet {0..p-1}.
Container compress(std::span<const std::uint8_t> data, const PipelineConfig& cfg = {}, const BlockObserver& observer = {});

Block compress_block(std::span<const std::uint8_t> block, const PipelineConfig& cfg, std::size_t index = 0,
    const BlockObserver& observer = {});

// Errors carry the index of the failing block.
std::vector<std::uint8_t> decompress(const Container& c, unsigned threads = 1,
    std::uint64_t guard = default_bitmap_guard);

std::vector<std::uint8_t> decompress_block(const Block& b, std::uint64_t guard = default_bitmap_guard);

// Serialized forms.
std::vector<std::uint8_t> compress_bytes(std::span<const std::uint8_t> data, const PipelineConfig& cfg = {});
std::vector<std::uint8_t> decompress_bytes(std::span<const std::uint8_t> archive, unsigned threads = 1);

void compress_stream(std::istream& in, std::ostream& out, const PipelineConfig& cfg = {});
void decompress_stream(std::istream& in, std::ostream& out, unsigned threads = 1);

// 8 * compressed / original; 0 for empty input.
double bits_per_symbol(std::uint64_t original_bytes, std::uint64_t compressed_bytes) noexcept;

} // namespace bwac

#endif
