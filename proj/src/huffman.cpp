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

#include "bwac/huffman.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "bwac/error.hpp"

namespace bwac {

namespace {

void validate(std::span<const std::uint64_t> freqs)
{
    if (freqs.empty())
        throw Error(Errc::invalid_argument, "frequency tuple is empty");
    for (std::size_t i = 0; i < freqs.size(); i++) {
        if (freqs[i] == 0)
            throw Error(Errc::invalid_argument, "frequency at position " + std::to_string(i + 1) + " is zero");
    }
}

} // namespace

CodewordTuple huffman(std::span<const std::uint64_t> freqs)
{
    validate(freqs);
    const std::size_t n = freqs.size();

    CodewordTuple codes(n);
    if (n == 1) {
        codes[0].push_back(false);
        return codes;
    }
    if (n == 2) {
        // one merge: position 1 is i, position 2 is j
        codes[0].push_back(false);
        codes[1].push_back(true);
        return codes;
    }

    // The work list only ever loses items and gains merged ones at its end,
    // so list order is creation order. "Two smallest weights, earliest
    // occurrence first" is therefore the two smallest (weight, creation)
    // keys, and the earlier-created of the pair is the one at position i.
    struct Node {
        std::uint32_t parent = 0;
        std::uint32_t depth = 0;
        std::uint64_t value = 0;   // codeword bits, valid while depth <= 64
        bool bit = false;
    };
    std::vector<Node> nodes(2 * n - 1);
    using Key = std::pair<std::uint64_t, std::uint32_t>;   // (weight, creation index)
    std::vector<Key> heap_storage;
    heap_storage.reserve(n);
    std::priority_queue<Key, std::vector<Key>, std::greater<>> work(std::greater<> {}, std::move(heap_storage));
    for (std::size_t k = 0; k < n; k++)
        work.emplace(freqs[k], static_cast<std::uint32_t>(k));

    std::uint32_t next = static_cast<std::uint32_t>(n);
    while (work.size() > 1) {
        const Key a = work.top();
        work.pop();
        const Key b = work.top();
        work.pop();
        const std::uint32_t i = std::min(a.second, b.second);
        const std::uint32_t j = std::max(a.second, b.second);
        nodes[i].parent = next;
        nodes[i].bit = false;
        nodes[j].parent = next;
        nodes[j].bit = true;
        work.emplace(a.first + b.first, next++);
    }

    // Children are always created before their parent, so walking node ids
    // downward from the root visits every parent before its children.
    const std::uint32_t root = next - 1;
    bool fits = true;
    for (std::uint32_t v = root; v-- > 0;) {
        Node& node = nodes[v];
        node.depth = nodes[node.parent].depth + 1;
        node.value = (nodes[node.parent].value << 1) | (node.bit ? 1u : 0u);
        fits = fits && node.depth <= 64;
    }
    if (fits) {
        for (std::size_t k = 0; k < n; k++)
            codes[k].append_bits(nodes[k].value, nodes[k].depth);
        return codes;
    }

    // Deeper than 64 bits: walk each leaf up to the root instead.
    std::vector<bool> path;
    for (std::size_t k = 0; k < n; k++) {
        path.clear();
        for (std::uint32_t v = static_cast<std::uint32_t>(k); v != root; v = nodes[v].parent)
            path.push_back(nodes[v].bit);
        codes[k].reserve(path.size());
        for (std::size_t d = path.size(); d-- > 0;)
            codes[k].push_back(path[d]);
    }
    return codes;
}

std::vector<std::size_t> huffman_lengths(std::span<const std::uint64_t> freqs)
{
    const CodewordTuple codes = huffman(freqs);
    std::vector<std::size_t> lengths(codes.size());
    for (std::size_t k = 0; k < codes.size(); k++)
        lengths[k] = codes[k].size();
    return lengths;
}

namespace {

using LengthVector = std::vector<std::uint8_t>;

// All non-decreasing length vectors of size n with Kraft sum exactly 1.
// Lengths are bounded by n-1 (the depth of a maximally skewed tree).
std::vector<LengthVector> complete_length_vectors(std::size_t n)
{
    std::vector<LengthVector> out;
    const unsigned max_len = static_cast<unsigned>(n - 1);
    LengthVector cur;

    // Budget is measured in units of 2^-max_len.
    std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned min_len, std::uint64_t budget) {
        const std::size_t left = n - cur.size();
        if (left == 0) {
            if (budget == 0)
                out.push_back(cur);
            return;
        }
        for (unsigned l = min_len; l <= max_len; l++) {
            const std::uint64_t cost = std::uint64_t(1) << (max_len - l);
            if (cost > budget)
                continue;
            // every remaining word costs at most `cost` and at least 1
            if (cost * left < budget)
                break;
            if (budget < left)
                break;
            cur.push_back(static_cast<std::uint8_t>(l));
            rec(l, budget - cost);
            cur.pop_back();
        }
    };
    rec(1, std::uint64_t(1) << max_len);
    return out;
}

const std::vector<LengthVector>& cached_vectors(std::size_t n)
{
    static const auto table = [] {
        std::array<std::vector<LengthVector>, max_oracle_size + 1> t;
        for (std::size_t k = 2; k <= max_oracle_size; k++)
            t[k] = complete_length_vectors(k);
        return t;
    }();
    return table[n];
}

} // namespace

std::uint64_t optimal_weighted_length(std::span<const std::uint64_t> freqs)
{
    validate(freqs);
    if (freqs.size() > max_oracle_size)
        throw Error(Errc::limit_exceeded, "oracle supports at most " + std::to_string(max_oracle_size) + " frequencies");

    if (freqs.size() == 1)
        return freqs[0];

    // For a fixed multiset of lengths the best assignment gives the shortest
    // words to the largest counts.
    std::vector<std::uint64_t> sorted(freqs.begin(), freqs.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const LengthVector& lengths : cached_vectors(freqs.size())) {
        std::uint64_t cost = 0;
        for (std::size_t k = 0; k < lengths.size(); k++)
            cost += sorted[k] * lengths[k];
        best = std::min(best, cost);
    }
    return best;
}

} // namespace bwac
