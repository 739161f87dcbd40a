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

#include "doctest.h"

#include <random>

#include "bwac/error.hpp"
#include "bwac/huffman.hpp"
#include "support.hpp"

using namespace bwac;

namespace {

std::vector<std::string> words(const CodewordTuple& codes)
{
    std::vector<std::string> out;
    for (const auto& c : codes)
        out.push_back(c.to_string());
    return out;
}

std::uint64_t weighted(const FrequencyTuple& f, const CodewordTuple& v)
{
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < f.size(); k++)
        s += f[k] * v[k].size();
    return s;
}

} // namespace

TEST_CASE("two and one frequencies")
{
    CHECK(words(huffman(FrequencyTuple { 1, 2 })) == std::vector<std::string> { "0", "1" });
    CHECK(words(huffman(FrequencyTuple { 5 })) == std::vector<std::string> { "0" });
}

TEST_CASE("merged items go to the end of the work list")
{
    // merge 1: positions 1,2 -> "0","1"; list becomes (2,{3}), (2,{1,2});
    // merge 2: {3} takes 0, {1,2} takes 1
    CHECK(words(huffman(FrequencyTuple { 1, 1, 2 })) == std::vector<std::string> { "10", "11", "0" });
}

TEST_CASE("the earlier position takes bit 0 even when its weight is larger")
{
    // smallest weights are 1 (position 2) and 2 (position 1)
    CHECK(words(huffman(FrequencyTuple { 2, 1, 5 })) == std::vector<std::string> { "10", "11", "0" });
}

TEST_CASE("oracle values")
{
    CHECK(optimal_weighted_length(FrequencyTuple { 1, 2 }) == 3);
    CHECK(optimal_weighted_length(FrequencyTuple { 1, 1, 2 }) == 6);
    CHECK(optimal_weighted_length(FrequencyTuple { 1, 1, 1, 1 }) == 8);
    CHECK(optimal_weighted_length(FrequencyTuple { 9 }) == 9);
    try {
        optimal_weighted_length(FrequencyTuple(13, 1));
        FAIL("oversized tuple accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::limit_exceeded);
    }
}

TEST_CASE("sorted-length oracle agrees with full length-vector enumeration")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; trial++) {
        FrequencyTuple f(1 + rng() % 6);
        for (auto& x : f)
            x = 1 + rng() % 20;
        REQUIRE(optimal_weighted_length(f) == test::brute_force_weighted_length(f));
    }
}

TEST_CASE("huffman is optimal, prefix-free and deterministic")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 2000; trial++) {
        FrequencyTuple f(1 + rng() % 12);
        for (auto& x : f)
            x = 1 + rng() % (trial % 2 ? 5 : 1000);
        const CodewordTuple v = huffman(f);
        REQUIRE(v.size() == f.size());
        REQUIRE(weighted(f, v) == optimal_weighted_length(f));
        REQUIRE(test::pairwise_prefix_free(words(v)));
        REQUIRE(v == huffman(f));

        for (std::size_t i = 0; i < f.size(); i++) {
            for (std::size_t j = 0; j < f.size(); j++) {
                if (f[i] < f[j])
                    REQUIRE(v[i].size() >= v[j].size());
            }
        }
    }
}

TEST_CASE("large alphabets stay prefix-free")
{
    FrequencyTuple f(256);
    std::mt19937_64 rng(33);
    for (auto& x : f)
        x = 1 + rng() % 100000;
    const auto v = huffman(f);
    CHECK(test::pairwise_prefix_free(words(v)));
    CHECK(huffman_lengths(f).size() == 256);
}

TEST_CASE("invalid tuples")
{
    CHECK_THROWS_AS(huffman(FrequencyTuple {}), Error);
    try {
        huffman(FrequencyTuple { 3, 0, 1 });
        FAIL("zero count accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_argument);
    }
}
