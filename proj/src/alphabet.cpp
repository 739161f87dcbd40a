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

#include "bwac/alphabet.hpp"

#include <algorithm>

#include "bwac/error.hpp"

namespace bwac {

Alphabet::Alphabet()
{
    index_.fill(-1);
}

Alphabet::Alphabet(std::span<const Symbol> symbols)
    : symbols_(symbols.begin(), symbols.end())
{
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
    rebuild_index();
}

Alphabet::Alphabet(std::string_view symbols)
    : Alphabet(std::span<const Symbol>(reinterpret_cast<const Symbol*>(symbols.data()), symbols.size()))
{
}

Alphabet Alphabet::of(std::span<const Symbol> data)
{
    std::array<bool, 256> seen {};
    for (Symbol s : data)
        seen[s] = true;

    Alphabet a;
    for (int s = 0; s < 256; s++) {
        if (seen[s])
            a.symbols_.push_back(static_cast<Symbol>(s));
    }
    a.rebuild_index();
    return a;
}

Alphabet Alphabet::ranks(std::size_t p)
{
    if (p == 0 || p > 256)
        throw Error(Errc::invalid_argument, "rank alphabet size must be in [1, 256], got " + std::to_string(p));

    Alphabet a;
    a.symbols_.resize(p);
    for (std::size_t i = 0; i < p; i++)
        a.symbols_[i] = static_cast<Symbol>(i);
    a.rebuild_index();
    return a;
}

std::size_t Alphabet::index(Symbol s) const
{
    const int i = index_[s];
    if (i < 0)
        throw Error(Errc::symbol_not_in_alphabet, "symbol " + std::to_string(unsigned(s)));
    return static_cast<std::size_t>(i);
}

std::vector<std::uint8_t> Alphabet::to_indices(std::span<const Symbol> s) const
{
    std::vector<std::uint8_t> out(s.size());
    for (std::size_t i = 0; i < s.size(); i++) {
        const int k = index_[s[i]];
        if (k < 0)
            throw Error(Errc::symbol_not_in_alphabet, "symbol " + std::to_string(unsigned(s[i])) + " at position " + std::to_string(i));
        out[i] = static_cast<std::uint8_t>(k);
    }
    return out;
}

SymbolString Alphabet::to_symbols(std::span<const std::uint8_t> indices) const
{
    SymbolString out(indices.size());
    for (std::size_t i = 0; i < indices.size(); i++) {
        if (indices[i] >= symbols_.size())
            throw Error(Errc::index_out_of_range, "alphabet index " + std::to_string(unsigned(indices[i])));
        out[i] = symbols_[indices[i]];
    }
    return out;
}

void Alphabet::rebuild_index()
{
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); i++)
        index_[symbols_[i]] = static_cast<std::int16_t>(i);
}

} // namespace bwac
