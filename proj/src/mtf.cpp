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

#include "bwac/mtf.hpp"

#include <array>
#include <cstring>
#include <string>

#include "bwac/error.hpp"

namespace bwac {

MtfSequence mtf_encode(std::span<const Symbol> s, const Alphabet& alphabet)
{
    // The list holds alphabet indices, so list order starts sorted.
    std::array<std::uint8_t, 256> list {};
    const std::size_t p = alphabet.size();
    for (std::size_t i = 0; i < p; i++)
        list[i] = static_cast<std::uint8_t>(i);

    MtfSequence out;
    out.ranks = alphabet.to_indices(s);

    for (std::uint8_t& r : out.ranks) {
        const std::uint8_t c = r;
        const auto q = static_cast<std::size_t>(static_cast<const std::uint8_t*>(std::memchr(list.data(), c, p)) - list.data());
        std::memmove(list.data() + 1, list.data(), q);
        list[0] = c;
        r = static_cast<std::uint8_t>(q);
    }
    return out;
}

SymbolString mtf_decode(const MtfSequence& r, const Alphabet& alphabet)
{
    std::array<std::uint8_t, 256> list {};
    const std::size_t p = alphabet.size();
    for (std::size_t i = 0; i < p; i++)
        list[i] = static_cast<std::uint8_t>(i);

    SymbolString out(r.ranks.size());
    for (std::size_t i = 0; i < r.ranks.size(); i++) {
        const std::size_t q = r.ranks[i];
        if (q >= p)
            throw Error(Errc::index_out_of_range, "rank " + std::to_string(q) + " at position " + std::to_string(i) + " exceeds list size " + std::to_string(p));

        const std::uint8_t c = list[q];
        std::memmove(list.data() + 1, list.data(), q);
        list[0] = c;
        out[i] = alphabet.symbol(c);
    }
    return out;
}

} // namespace bwac
