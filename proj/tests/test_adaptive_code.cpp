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

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "bwac/adaptive_code.hpp"
#include "bwac/error.hpp"
#include "bwac/huffman.hpp"
#include "support.hpp"

using namespace bwac;
using bwac::test::bytes;

namespace {

AdaptiveCodeTable order2_code()
{
    std::ifstream in(BWAC_TEST_DATA_DIR "/order2_code.txt");
    REQUIRE(in);
    std::stringstream s;
    s << in.rdbuf();
    return parse_code_table(s.str());
}

std::vector<BitString> set_of(std::initializer_list<const char*> w)
{
    std::vector<BitString> out;
    for (const char* s : w)
        out.push_back(BitString::from_string(s));
    return out;
}

// All strings over the alphabet of length 1..max_len.
std::vector<test::Bytes> all_strings(const Alphabet& a, std::size_t max_len)
{
    std::vector<test::Bytes> out;
    std::vector<test::Bytes> frontier { {} };
    for (std::size_t len = 1; len <= max_len; len++) {
        std::vector<test::Bytes> next;
        for (const auto& s : frontier) {
            for (Symbol c : a.symbols()) {
                auto t = s;
                t.push_back(c);
                next.push_back(t);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

bool injective_up_to(const AdaptiveCodeTable& t, std::size_t max_len)
{
    std::set<std::string> seen;
    for (const auto& s : all_strings(t.alphabet(), max_len)) {
        if (!seen.insert(encode_adaptive(t, s).to_string()).second)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("order-two table encodes abacca")
{
    const AdaptiveCodeTable t = order2_code();
    CHECK(t.order() == 2);
    CHECK(t.alphabet().size() == 3);
    CHECK(t.complete());
    CHECK(encode_adaptive(t, bytes("abacca")).to_string() == "0101111110");
}

TEST_CASE("short inputs use the growing contexts")
{
    const AdaptiveCodeTable t = order2_code();
    // lambda column only
    CHECK(encode_adaptive(t, bytes("b")) == t.codeword('b', {}));
    CHECK(encode_adaptive(t, bytes("b")).to_string() == "11");
    // c(c, lambda) c(b, c)
    CHECK(encode_adaptive(t, bytes("cb")).to_string() == "1011");
    CHECK(encode_adaptive(t, {}).empty());
}

TEST_CASE("output length is the sum of selected codeword lengths")
{
    const AdaptiveCodeTable t = order2_code();
    const auto x = bytes("abccbabcaacb");
    std::size_t want = 0;
    for (std::size_t k = 0; k < x.size(); k++) {
        const std::size_t from = k > 2 ? k - 2 : 0;
        want += t.codeword(x[k], std::span(x).subspan(from, k - from)).size();
    }
    CHECK(encode_adaptive(t, x).size() == want);
}

TEST_CASE("every column of the order-two table is a prefix code")
{
    const AdaptiveCodeTable t = order2_code();
    CHECK(t.columns().size() == 13);
    for (const auto& [ctx, col] : t.columns()) {
        std::vector<std::string> w;
        for (const auto& c : col)
            w.push_back(c.to_string());
        CHECK(test::pairwise_prefix_free(w));
    }
    CHECK(verify_prefix_condition(t));
    CHECK(injective_up_to(t, 7));
}

TEST_CASE("is_prefix_code")
{
    CHECK(is_prefix_code(set_of({ "0", "10", "11" })));
    CHECK_FALSE(is_prefix_code(set_of({ "0", "01" })));
    CHECK_FALSE(is_prefix_code(std::vector<BitString> { BitString() }));
    CHECK_FALSE(is_prefix_code(set_of({ "10", "10" })));
    CHECK_FALSE(is_prefix_code(std::vector<BitString> {}));
    CHECK(is_prefix_code(set_of({ "1" })));
}

TEST_CASE("verifier on hand-built tables")
{
    const Alphabet ab("abc");
    AdaptiveCodeTable good(1, ab);
    AdaptiveCodeTable bad(1, ab);
    for (const char* ctx : { "", "a", "b", "c" }) {
        good.set_column(bytes(ctx), set_of({ "0", "10", "11" }));
        bad.set_column(bytes(ctx), std::string_view(ctx) == "b" ? set_of({ "0", "01", "11" }) : set_of({ "0", "10", "11" }));
    }
    CHECK(verify_prefix_condition(good));
    CHECK_FALSE(verify_prefix_condition(bad));

    AdaptiveCodeTable partial(1, ab);
    partial.set_column({}, set_of({ "0", "10", "11" }));
    CHECK_FALSE(verify_prefix_condition(partial));
    try {
        encode_adaptive(partial, bytes("ab"));
        FAIL("missing column accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_argument);
    }
}

TEST_CASE("tables passing the verifier are injective")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; trial++) {
        const std::size_t p = 2 + trial % 3;
        const std::size_t order = 1 + trial % 2;
        std::string symbols;
        for (std::size_t k = 0; k < p; k++)
            symbols += static_cast<char>('a' + k);
        const Alphabet a(symbols);
        AdaptiveCodeTable t(order, a);

        std::vector<test::Bytes> contexts { {} };
        for (const auto& s : all_strings(a, order))
            contexts.push_back(s);
        for (const auto& ctx : contexts) {
            FrequencyTuple f(p);
            for (auto& x : f)
                x = 1 + rng() % 9;
            t.set_column(ctx, huffman(f));
        }
        REQUIRE(verify_prefix_condition(t));
        REQUIRE(injective_up_to(t, p == 4 ? 7 : 8));
    }
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_code_table("sym a\n"), Error);
    CHECK_THROWS_AS(parse_code_table("sym a -\na 0\n"), Error);
    CHECK_THROWS_AS(parse_code_table("sym a -\nab 0 1\n"), Error);
    CHECK_THROWS_AS(parse_code_table("sym a -\na 0 2\n"), Error);
}
