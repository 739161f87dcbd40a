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

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#ifndef BWAC_TESTS_SUPPORT_HPP
#define BWAC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bwac::test {

using Bytes = std::vector<std::uint8_t>;

inline Bytes bytes(std::string_view s)
{
    return Bytes(s.begin(), s.end());
}

inline std::string text(std::span<const std::uint8_t> b)
{
    return std::string(b.begin(), b.end());
}

// Builds every rotation, sorts them with std::sort and reads the last
// column. The row index is the first sorted row equal to s (1-based).
struct NaiveBwt {
    Bytes last;
    std::uint64_t index;
};

inline NaiveBwt naive_bwt(std::span<const std::uint8_t> s)
{
    const std::size_t n = s.size();
    std::vector<Bytes> rows;
    rows.reserve(n);
    for (std::size_t k = 0; k < n; k++) {
        Bytes r(n);
        for (std::size_t j = 0; j < n; j++)
            r[j] = s[(k + j) % n];
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());

    NaiveBwt out { Bytes(n), 0 };
    const Bytes original(s.begin(), s.end());
    for (std::size_t i = 0; i < n; i++) {
        out.last[i] = rows[i][n - 1];
        if (out.index == 0 && rows[i] == original)
            out.index = i + 1;
    }
    return out;
}

// Move-to-front by literally erasing from and inserting into a vector.
inline Bytes naive_mtf(std::span<const std::uint8_t> s, Bytes list)
{
    Bytes out;
    for (std::uint8_t c : s) {
        const auto it = std::find(list.begin(), list.end(), c);
        out.push_back(static_cast<std::uint8_t>(it - list.begin()));
        list.erase(it);
        list.insert(list.begin(), c);
    }
    return out;
}

// Occurrences of the substring u+sym in s, counted by direct comparison.
inline std::size_t count_substring(std::string_view s, std::string_view pattern)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i + pattern.size() <= s.size(); i++) {
        if (s.substr(i, pattern.size()) == pattern)
            n++;
    }
    return n;
}

// Order-0 empirical entropy of data, in bits per symbol.
inline double order0_entropy(std::span<const std::uint8_t> data)
{
    std::array<std::uint64_t, 256> freq {};
    for (std::uint8_t c : data)
        freq[c]++;
    double h = 0.0;
    const double n = static_cast<double>(data.size());
    for (std::uint64_t f : freq) {
        if (f == 0)
            continue;
        const double q = static_cast<double>(f) / n;
        h -= q * std::log2(q);
    }
    return h;
}

// Exhaustive search over every length vector (not just sorted ones) with
// Kraft sum exactly one. Exponential; only for a handful of symbols.
inline std::uint64_t brute_force_weighted_length(std::span<const std::uint64_t> f)
{
    const std::size_t n = f.size();
    if (n == 1)
        return f[0];
    const unsigned max_len = static_cast<unsigned>(n - 1);
    std::vector<unsigned> len(n, 1);
    std::uint64_t best = ~std::uint64_t(0);
    for (;;) {
        std::uint64_t kraft = 0;
        for (unsigned l : len)
            kraft += std::uint64_t(1) << (max_len - l);
        if (kraft == (std::uint64_t(1) << max_len)) {
            std::uint64_t cost = 0;
            for (std::size_t k = 0; k < n; k++)
                cost += f[k] * len[k];
            best = std::min(best, cost);
        }
        std::size_t k = 0;
        while (k < n && len[k] == max_len)
            len[k++] = 1;
        if (k == n)
            break;
        len[k]++;
    }
    return best;
}

inline bool pairwise_prefix_free(const std::vector<std::string>& words)
{
    for (std::size_t i = 0; i < words.size(); i++) {
        if (words[i].empty())
            return false;
        for (std::size_t j = 0; j < words.size(); j++) {
            if (i != j && words[j].compare(0, words[i].size(), words[i]) == 0)
                return false;
        }
    }
    return true;
}

// Random string over `alphabet_size` distinct byte values drawn from rng.
inline Bytes random_string(std::mt19937_64& rng, std::size_t length, std::size_t alphabet_size)
{
    Bytes pool(256);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::max<std::size_t>(alphabet_size, 1));

    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Bytes out(length);
    for (auto& c : out)
        c = pool[pick(rng)];
    return out;
}

// Text from a sparse first-order Markov chain over lowercase letters and
// space: each symbol has a few likely successors.
inline Bytes markov_text(std::mt19937_64& rng, std::size_t length)
{
    const std::string letters = "abcdefghijklmnopqrstuvwxyz ";
    std::vector<std::array<std::uint8_t, 3>> next(letters.size());
    for (auto& row : next) {
        for (auto& n : row)
            n = static_cast<std::uint8_t>(rng() % letters.size());
    }
    std::discrete_distribution<int> choice({ 70, 20, 10 });

    Bytes out;
    out.reserve(length);
    std::size_t cur = 0;
    while (out.size() < length) {
        out.push_back(static_cast<std::uint8_t>(letters[cur]));
        cur = next[cur][static_cast<std::size_t>(choice(rng))];
    }
    return out;
}

// Word salad: words drawn with a skewed distribution from a fixed
// vocabulary, separated by spaces and occasional newlines.
inline Bytes word_text(std::mt19937_64& rng, std::size_t length)
{
    static const std::vector<std::string> vocab = {
        "the", "of", "and", "to", "in", "a", "is", "that", "for", "it", "as", "was", "with", "be", "by",
        "on", "not", "he", "this", "are", "or", "his", "from", "at", "which", "but", "have", "an", "had",
        "they", "you", "were", "their", "one", "all", "we", "can", "her", "has", "there", "been", "if",
        "more", "when", "will", "would", "who", "so", "no", "block", "sorting", "context", "symbol",
        "transform", "compression", "entropy", "huffman", "rotation", "matrix", "protein", "sequence",
    };
    std::vector<double> weights(vocab.size());
    for (std::size_t k = 0; k < vocab.size(); k++)
        weights[k] = 1.0 / static_cast<double>(k + 1);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

    Bytes out;
    out.reserve(length + 16);
    while (out.size() < length) {
        const std::string& w = vocab[pick(rng)];
        out.insert(out.end(), w.begin(), w.end());
        out.push_back(rng() % 13 == 0 ? '\n' : ' ');
    }
    out.resize(length);
    return out;
}

} // namespace bwac::test

#endif
