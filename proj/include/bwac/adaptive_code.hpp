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

#ifndef BWAC_ADAPTIVE_CODE_HPP
#define BWAC_ADAPTIVE_CODE_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "bwac/alphabet.hpp"
#include "bwac/bits.hpp"

namespace bwac {

// Code of order n: one column of codewords per context of length 0..n.
// Position k of an input is coded in the context of the min(k-1, n)
// symbols before it, so short contexts are only used at the start.
class AdaptiveCodeTable {
public:
    // A context is a string of alphabet indices; the empty one is the
    // start-of-input context.
    using Context = std::vector<std::uint8_t>;

    AdaptiveCodeTable(std::size_t order, Alphabet alphabet);

    std::size_t order() const noexcept { return order_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    // Column for a context given as symbols. words[k] codes alphabet.symbol(k).
    void set_column(std::span<const Symbol> context, std::vector<BitString> words);

    // nullptr when the context has no column.
    const std::vector<BitString>* column(const Context& context) const;

    const std::map<Context, std::vector<BitString>>& columns() const noexcept { return columns_; }

    // True when every context of length 0..order has a column.
    bool complete() const;

    const BitString& codeword(Symbol s, std::span<const Symbol> context) const;

private:
    std::size_t order_;
    Alphabet alphabet_;
    std::map<Context, std::vector<BitString>> columns_;
};

// Homomorphic extension: concatenated codewords of every position.
// Throws Errc::invalid_argument when a needed column is missing.
BitString encode_adaptive(const AdaptiveCodeTable& table, std::span<const Symbol> x);

// Non-empty, no duplicates, no word a proper prefix of another.
bool is_prefix_code(std::span<const BitString> words);

// Sufficient condition for the table's extension to be injective: every
// context of length 0..order has a column and every column is a prefix
// code. False does not prove the extension is ambiguous.
bool verify_prefix_condition(const AdaptiveCodeTable& table);

// Parses a whitespace-separated table. The first row is a corner label
// followed by context labels ("-" is the empty context); each later row is
// a symbol followed by one codeword per context. '#' starts a comment.
//
//   sym  a  b  -
//   a    0  10 0
//   b    10 0  1
AdaptiveCodeTable parse_code_table(std::string_view text);

} // namespace bwac

#endif
