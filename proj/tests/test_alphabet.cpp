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

#include "bwac/alphabet.hpp"
#include "bwac/error.hpp"
#include "support.hpp"

using namespace bwac;
using bwac::test::bytes;

TEST_CASE("alphabet is sorted and deduplicated")
{
    const Alphabet a("research");
    REQUIRE(a.size() == 6);
    CHECK(test::text(a.symbols()) == "acehrs");
    CHECK(a.index('h') == 3);
    CHECK(a.symbol(0) == 'a');
    CHECK(a == Alphabet::of(bytes("research")));
}

TEST_CASE("index maps round trip and reject foreign symbols")
{
    const Alphabet a("abc");
    const auto idx = a.to_indices(bytes("cab"));
    CHECK(idx == std::vector<std::uint8_t> { 2, 0, 1 });
    CHECK(a.to_symbols(idx) == bytes("cab"));

    try {
        a.index('z');
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::symbol_not_in_alphabet);
    }
    CHECK_THROWS_AS(a.to_symbols(std::vector<std::uint8_t> { 3 }), Error);
}

TEST_CASE("rank alphabets")
{
    const Alphabet r = Alphabet::ranks(256);
    CHECK(r.size() == 256);
    CHECK(r.index(255) == 255);
    CHECK_THROWS_AS(Alphabet::ranks(0), Error);
    CHECK_THROWS_AS(Alphabet::ranks(257), Error);
}
