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

#ifndef BWAC_EAH_HPP
#define BWAC_EAH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bwac/alphabet.hpp"
#include "bwac/bits.hpp"
#include "bwac/huffman.hpp"

namespace bwac {

// Order-n context coder with one Huffman code per context, built over the
// symbols that actually follow that context in the input.
//
// Contexts are the p^n strings of n alphabet symbols, ranked
// lexicographically from 0 (internally) or 1 (context_rank/rank_context).
// The follower bitmap b has p^(n+1) bits laid out symbol-major:
// bit (symbol * p^n + context) is set when symbol follows context.
//
// A context followed by a single symbol gets no codeword: the decoder
// infers that symbol from b and consumes no payload bits.

inline constexpr std::uint64_t default_bitmap_guard = std::uint64_t(1) << 26;

struct EahOutput {
    SymbolString prefix;      // first min(n, t) input symbols, verbatim
    BitString followers;      // b
    CodewordTuple codewords;  // non-empty codewords, symbol-major then context order
    BitString payload;        // concatenated codewords of positions n+1..t

    friend bool operator==(const EahOutput&, const EahOutput&) = default;
};

struct ContextEntry {
    std::uint64_t context;   // 0-based context rank
    std::uint32_t symbol;    // alphabet index
    std::uint64_t count;     // occurrences of context followed by symbol
    BitString code;          // empty when the context has one follower
};

// Counts and codewords for every (symbol, context) pair seen in the input.
// Pairs that never occur have count 0, no follower bit and no codeword.
class ContextModel {
public:
    ContextModel() = default;
    ContextModel(std::size_t order, std::size_t alphabet_size, std::vector<ContextEntry> entries);

    std::size_t order() const noexcept { return order_; }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }

    // Sorted by (context, symbol).
    const std::vector<ContextEntry>& entries() const noexcept { return entries_; }

    std::uint64_t count(std::size_t symbol, std::uint64_t context) const;
    bool follows(std::size_t symbol, std::uint64_t context) const { return count(symbol, context) > 0; }

    // nullptr for pairs without a codeword.
    const BitString* codeword(std::size_t symbol, std::uint64_t context) const;

    std::size_t follower_count(std::uint64_t context) const;

    // Distinct contexts that occur, ascending.
    std::vector<std::uint64_t> contexts() const;

    // Codewords of one context, in symbol order.
    std::vector<BitString> code_set(std::uint64_t context) const;

private:
    const ContextEntry* find(std::size_t symbol, std::uint64_t context) const;

    std::size_t order_ = 0;
    std::size_t alphabet_size_ = 0;
    std::vector<ContextEntry> entries_;
};

struct EahResult {
    EahOutput output;
    ContextModel model;
};

// p^n, throwing Errc::guard_exceeded when p^(n+1) is above guard.
std::uint64_t context_space(std::size_t alphabet_size, std::size_t order, std::uint64_t guard = default_bitmap_guard);

// True when p^(n+1) <= guard.
bool fits_guard(std::size_t alphabet_size, std::size_t order, std::uint64_t guard = default_bitmap_guard) noexcept;

// 1-based lexicographic rank of a length-n context, and its inverse.
std::uint64_t context_rank(std::span<const Symbol> context, const Alphabet& alphabet);
SymbolString rank_context(std::uint64_t rank, const Alphabet& alphabet, std::size_t order);

EahResult eah_encode(std::span<const Symbol> x, const Alphabet& alphabet, std::size_t order,
    std::uint64_t guard = default_bitmap_guard);

// Inverse of eah_encode for an input of `length` symbols. Corrupt input
// raises Errc::corrupt_stream or Errc::inconsistent.
SymbolString eah_decode(const EahOutput& out, const Alphabet& alphabet, std::size_t order, std::uint64_t length,
    std::uint64_t guard = default_bitmap_guard);

// Number of codewords a follower bitmap implies: set bits whose context has
// at least two followers.
std::size_t implied_codeword_count(const BitString& followers, std::size_t alphabet_size, std::size_t order);

} // namespace bwac

#endif
