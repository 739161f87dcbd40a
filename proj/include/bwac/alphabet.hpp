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

#ifndef BWAC_ALPHABET_HPP
#define BWAC_ALPHABET_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bwac {

using Symbol = std::uint8_t;
using SymbolString = std::vector<Symbol>;

// Ordered set of distinct byte symbols. Symbol order is byte order, so
// comparing alphabet indices is the same as comparing the symbols.
class Alphabet {
public:
    Alphabet();

    // Sorts and deduplicates.
    explicit Alphabet(std::span<const Symbol> symbols);
    explicit Alphabet(std::string_view symbols);

    // Sorted distinct symbols occurring in data.
    static Alphabet of(std::span<const Symbol> data);

    // {0, 1, ..., p-1}; the alphabet of move-to-front ranks.
    static Alphabet ranks(std::size_t p);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    Symbol symbol(std::size_t index) const { return symbols_.at(index); }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    bool contains(Symbol s) const noexcept { return index_[s] >= 0; }

    // Throws Errc::symbol_not_in_alphabet.
    std::size_t index(Symbol s) const;

    // Symbol string -> alphabet indices, and back.
    std::vector<std::uint8_t> to_indices(std::span<const Symbol> s) const;
    SymbolString to_symbols(std::span<const std::uint8_t> indices) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept
    {
        return a.symbols_ == b.symbols_;
    }

private:
    void rebuild_index();

    std::vector<Symbol> symbols_;
    std::array<std::int16_t, 256> index_;
};

inline SymbolString to_symbols(std::string_view s)
{
    return SymbolString(s.begin(), s.end());
}

} // namespace bwac

#endif
