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

#include "bwac/bwt.hpp"

#include <algorithm>
#include <string>

#include "bwac/error.hpp"

namespace bwac {

namespace {

struct RotationOrder {
    std::vector<std::uint32_t> order; // rotation starts, sorted
    std::vector<std::uint32_t> rank;  // equivalence class of each rotation
};

// Prefix doubling over cyclic shifts. After round h the rotations are
// sorted by their first 2^(h+1) symbols; rank[i] is the class of rotation i
// under that prefix length. Each round is two linear counting passes.
RotationOrder sort_cyclic(std::span<const std::uint8_t> s, std::size_t alphabet_size)
{
    const std::size_t n = s.size();
    RotationOrder r;
    r.order.resize(n);
    r.rank.resize(n);
    std::vector<std::uint32_t> count(std::max(alphabet_size, n) + 1, 0);

    for (std::size_t i = 0; i < n; i++)
        count[s[i]]++;
    for (std::size_t k = 1; k < alphabet_size; k++)
        count[k] += count[k - 1];
    for (std::size_t i = n; i-- > 0;)
        r.order[--count[s[i]]] = static_cast<std::uint32_t>(i);

    std::size_t classes = 1;
    r.rank[r.order[0]] = 0;
    for (std::size_t i = 1; i < n; i++) {
        if (s[r.order[i]] != s[r.order[i - 1]])
            classes++;
        r.rank[r.order[i]] = static_cast<std::uint32_t>(classes - 1);
    }

    std::vector<std::uint32_t> shifted(n);
    std::vector<std::uint32_t> next(n);

    for (std::uint64_t len = 1; len < n && classes < n; len <<= 1) {
        // Order by the second half first: shifting the sorted order left by
        // len gives rotations sorted by symbols [len, 2*len).
        for (std::size_t i = 0; i < n; i++) {
            const std::uint32_t p = r.order[i];
            shifted[i] = static_cast<std::uint32_t>(p >= len ? p - len : p + n - len);
        }

        // Stable counting sort on the first half.
        std::fill(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(classes), 0);
        for (std::size_t i = 0; i < n; i++)
            count[r.rank[shifted[i]]]++;
        for (std::size_t k = 1; k < classes; k++)
            count[k] += count[k - 1];
        for (std::size_t i = n; i-- > 0;)
            r.order[--count[r.rank[shifted[i]]]] = shifted[i];

        auto second = [&](std::uint32_t p) {
            const std::uint64_t q = p + len;
            return r.rank[q < n ? q : q - n];
        };
        classes = 1;
        next[r.order[0]] = 0;
        for (std::size_t i = 1; i < n; i++) {
            const std::uint32_t a = r.order[i];
            const std::uint32_t b = r.order[i - 1];
            const std::uint32_t a2 = second(a);
            const std::uint32_t b2 = second(b);
            if (r.rank[a] != r.rank[b] || a2 != b2)
                classes++;
            next[a] = static_cast<std::uint32_t>(classes - 1);
        }
        r.rank.swap(next);
    }
    return r;
}

void check_length(std::size_t n)
{
    if (n == 0)
        throw Error(Errc::empty_input, "cannot transform an empty string");
    if (n > max_bwt_length)
        throw Error(Errc::limit_exceeded, "block of " + std::to_string(n) + " symbols exceeds the 32-bit rotation sort");
}

} // namespace

std::vector<std::uint32_t> sort_rotations(std::span<const std::uint8_t> ranks, std::size_t alphabet_size)
{
    check_length(ranks.size());
    for (std::uint8_t c : ranks) {
        if (c >= alphabet_size)
            throw Error(Errc::symbol_not_in_alphabet, "rank " + std::to_string(unsigned(c)) + " >= alphabet size " + std::to_string(alphabet_size));
    }
    return sort_cyclic(ranks, alphabet_size).order;
}

BwtResult bwt_forward(std::span<const Symbol> s, const Alphabet& alphabet)
{
    check_length(s.size());
    const std::vector<std::uint8_t> idx = alphabet.to_indices(s);
    const std::size_t n = s.size();

    const RotationOrder r = sort_cyclic(idx, alphabet.size());

    BwtResult out;
    out.transformed.resize(n);
    for (std::size_t i = 0; i < n; i++) {
        const std::size_t start = r.order[i];
        out.transformed[i] = s[(start + n - 1) % n];
    }

    // Rotations equal to s share rotation 0's class; the first of them in
    // sorted order is the smallest matching row.
    const std::uint32_t target = r.rank[0];
    for (std::size_t i = 0; i < n; i++) {
        if (r.rank[r.order[i]] == target) {
            out.index = i + 1;
            break;
        }
    }
    return out;
}

SymbolString bwt_inverse(const BwtResult& r, const Alphabet& alphabet)
{
    const std::size_t n = r.transformed.size();
    check_length(n);
    if (r.index < 1 || r.index > n)
        throw Error(Errc::index_out_of_range, "row index " + std::to_string(r.index) + " not in [1, " + std::to_string(n) + "]");

    const std::vector<std::uint8_t> last = alphabet.to_indices(r.transformed);
    const std::size_t p = alphabet.size();

    // first[c] = number of symbols smaller than c; lf[i] maps row i to the
    // row of the rotation starting one position earlier.
    std::vector<std::uint32_t> first(p + 1, 0);
    for (std::uint8_t c : last)
        first[c + 1]++;
    for (std::size_t c = 1; c <= p; c++)
        first[c] += first[c - 1];

    std::vector<std::uint32_t> lf(n);
    std::vector<std::uint32_t> seen(p, 0);
    for (std::size_t i = 0; i < n; i++) {
        const std::uint8_t c = last[i];
        lf[i] = first[c] + seen[c]++;
    }

    SymbolString out(n);
    std::size_t row = static_cast<std::size_t>(r.index - 1);
    for (std::size_t k = n; k-- > 0;) {
        out[k] = r.transformed[row];
        row = lf[row];
    }
    return out;
}

} // namespace bwac
