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

#include <map>
#include <random>
#include <set>

#include "bwac/adaptive_code.hpp"
#include "bwac/eah.hpp"
#include "bwac/error.hpp"
#include "support.hpp"

using namespace bwac;
using bwac::test::bytes;
using bwac::test::text;

namespace {

std::string row(const BitString& b, std::size_t symbol, std::size_t contexts)
{
    std::string out;
    for (std::size_t c = 0; c < contexts; c++)
        out += b[symbol * contexts + c] ? '1' : '0';
    return out;
}

Errc decode_error(const EahOutput& out, const Alphabet& a, std::size_t order, std::uint64_t length)
{
    try {
        eah_decode(out, a, order, length);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("decode accepted a corrupt stream");
    return Errc::io;
}

} // namespace

TEST_CASE("order-two coder on baabbabab")
{
    const Alphabet ab("ab");
    const auto x = bytes("baabbabab");
    const EahResult r = eah_encode(x, ab, 2);

    CHECK(text(r.output.prefix) == "ba");
    REQUIRE(r.output.followers.size() == 8);
    // contexts aa ab ba bb
    CHECK(row(r.output.followers, 0, 4) == "0111");
    CHECK(row(r.output.followers, 1, 4) == "1110");

    std::vector<std::string> y;
    for (const auto& c : r.output.codewords)
        y.push_back(c.to_string());
    CHECK(y == std::vector<std::string> { "0", "0", "1", "1" });
    CHECK(r.output.payload.to_string() == "01101");

    // counts: rows a and b over aa ab ba bb
    const std::uint64_t want[2][4] = { { 0, 1, 1, 1 }, { 1, 1, 2, 0 } };
    for (std::size_t s = 0; s < 2; s++) {
        for (std::uint64_t c = 0; c < 4; c++) {
            CHECK(r.model.count(s, c) == want[s][c]);
            const std::string ctx = text(rank_context(c + 1, ab, 2));
            CHECK(r.model.count(s, c) == test::count_substring("baabbabab", ctx + char('a' + s)));
        }
    }

    // codewords: lambda for single-follower contexts aa and bb
    CHECK(r.model.codeword(1, 0) == nullptr);
    CHECK(r.model.codeword(0, 3) == nullptr);
    CHECK(r.model.codeword(0, 1)->to_string() == "0");
    CHECK(r.model.codeword(1, 1)->to_string() == "1");
    CHECK(r.model.codeword(0, 2)->to_string() == "0");
    CHECK(r.model.codeword(1, 2)->to_string() == "1");

    CHECK(eah_decode(r.output, ab, 2, x.size()) == x);
}

TEST_CASE("context ranks are lexicographic and 1-based")
{
    const Alphabet abc("abc");
    CHECK(text(rank_context(5, abc, 2)) == "bb");
    CHECK(text(rank_context(1, abc, 2)) == "aa");
    CHECK(text(rank_context(9, abc, 2)) == "cc");
    for (std::uint64_t r = 1; r <= 27; r++)
        CHECK(context_rank(rank_context(r, abc, 3), abc) == r);
    CHECK_THROWS_AS(rank_context(0, abc, 2), Error);
    CHECK_THROWS_AS(rank_context(10, abc, 2), Error);
}

TEST_CASE("periodic inputs need no payload")
{
    const Alphabet ab("ab");
    const EahResult r1 = eah_encode(bytes("aaaa"), Alphabet("a"), 1);
    CHECK(r1.output.codewords.empty());
    CHECK(r1.output.payload.empty());
    CHECK(eah_decode(r1.output, Alphabet("a"), 1, 4) == bytes("aaaa"));

    const EahResult r2 = eah_encode(bytes("abababab"), ab, 1);
    CHECK(r2.output.codewords.empty());
    CHECK(r2.output.payload.empty());
    CHECK(r2.model.count(1, 0) == 4);
    CHECK(r2.model.count(0, 1) == 3);
    CHECK(r2.model.count(1, 0) == test::count_substring("abababab", "ab"));
    CHECK(r2.model.count(0, 1) == test::count_substring("abababab", "ba"));
    CHECK(eah_decode(r2.output, ab, 1, 8) == bytes("abababab"));
}

TEST_CASE("inputs no longer than the order are stored verbatim")
{
    const Alphabet abc("abc");
    for (const char* s : { "c", "ab", "cab" }) {
        const EahResult r = eah_encode(bytes(s), abc, 3);
        CHECK(text(r.output.prefix) == s);
        CHECK(r.output.followers.popcount() == 0);
        CHECK(r.output.followers.size() == 81);
        CHECK(r.output.payload.empty());
        CHECK(eah_decode(r.output, abc, 3, std::string_view(s).size()) == bytes(s));
    }
    CHECK_THROWS_AS(eah_encode({}, abc, 1), Error);
}

TEST_CASE("payload length is the count-weighted codeword length")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        const std::size_t p = 2 + rng() % 6;
        const std::size_t order = 1 + rng() % 3;
        const auto x = test::random_string(rng, 1 + rng() % 400, p);
        const Alphabet a = Alphabet::of(x);
        const EahResult r = eah_encode(x, a, order);

        std::uint64_t want = 0;
        std::size_t multi = 0;
        for (const ContextEntry& e : r.model.entries()) {
            want += e.count * e.code.size();
            if (r.model.follower_count(e.context) >= 2) {
                multi++;
                CHECK_FALSE(e.code.empty());
            } else {
                CHECK(e.code.empty());
            }
        }
        CHECK(r.output.payload.size() == want);
        CHECK(r.output.codewords.size() == multi);
        CHECK(implied_codeword_count(r.output.followers, a.size(), order) == multi);
        CHECK(r.output.followers.popcount() == r.model.entries().size());

        for (std::uint64_t c : r.model.contexts()) {
            if (r.model.follower_count(c) >= 2)
                CHECK(is_prefix_code(r.model.code_set(c)));
        }
    }
}

TEST_CASE("round trip over random inputs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; trial++) {
        const std::size_t p = 2 + rng() % 15;
        const std::size_t order = 1 + trial % 3;
        const auto x = test::random_string(rng, 1 + rng() % 300, p);
        const Alphabet a = Alphabet::of(x);
        const EahResult r = eah_encode(x, a, order);
        REQUIRE(eah_decode(r.output, a, order, x.size()) == x);
    }
}

TEST_CASE("encoding is deterministic")
{
    std::mt19937_64 rng(3);
    const auto x = test::markov_text(rng, 5000);
    const Alphabet a = Alphabet::of(x);
    CHECK(eah_encode(x, a, 2).output == eah_encode(x, a, 2).output);
}

TEST_CASE("guard")
{
    CHECK(fits_guard(256, 2));
    CHECK_FALSE(fits_guard(256, 3));
    CHECK(fits_guard(2, 25));
    CHECK_FALSE(fits_guard(2, 26));
    CHECK(context_space(16, 3) == 4096);
    try {
        context_space(256, 3);
        FAIL("guard not enforced");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::guard_exceeded);
    }
    const Alphabet big = Alphabet::ranks(256);
    CHECK_THROWS_AS(eah_encode(bytes("ab"), big, 3), Error);
    CHECK_THROWS_AS(context_space(4, 0), Error);
}

TEST_CASE("corrupt streams are rejected")
{
    const Alphabet ab("ab");
    const auto x = bytes("baabbabab");
    const EahOutput good = eah_encode(x, ab, 2).output;

    SUBCASE("payload truncated")
    {
        EahOutput o = good;
        o.payload = BitString::from_string("0110");
        CHECK(decode_error(o, ab, 2, x.size()) == Errc::corrupt_stream);
    }
    SUBCASE("payload too long")
    {
        EahOutput o = good;
        o.payload.push_back(false);
        CHECK(decode_error(o, ab, 2, x.size()) == Errc::corrupt_stream);
    }
    SUBCASE("codewords collide")
    {
        EahOutput o = good;
        o.codewords[2] = o.codewords[0];
        CHECK(decode_error(o, ab, 2, x.size()) == Errc::corrupt_stream);
    }
    SUBCASE("codeword missing")
    {
        EahOutput o = good;
        o.codewords.pop_back();
        CHECK(decode_error(o, ab, 2, x.size()) == Errc::inconsistent);
    }
    SUBCASE("bitmap wrong size")
    {
        EahOutput o = good;
        o.followers.push_back(false);
        CHECK(decode_error(o, ab, 2, x.size()) == Errc::inconsistent);
    }
    SUBCASE("context without followers")
    {
        // ba is the start context; clear both of its bits
        EahOutput o = good;
        o.followers.set(2, false);
        o.followers.set(6, false);
        CHECK(decode_error(o, ab, 2, x.size()) != Errc::io);
    }
    SUBCASE("prefix length")
    {
        EahOutput o = good;
        o.prefix.pop_back();
        CHECK(decode_error(o, ab, 2, x.size()) == Errc::inconsistent);
    }
}
