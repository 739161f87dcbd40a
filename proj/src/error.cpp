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

#include "bwac/error.hpp"

namespace bwac {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::empty_input: return "empty input";
    case Errc::symbol_not_in_alphabet: return "symbol not in alphabet";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::guard_exceeded: return "context table guard exceeded";
    case Errc::limit_exceeded: return "limit exceeded";
    case Errc::truncated: return "truncated input";
    case Errc::bad_magic: return "bad magic";
    case Errc::bad_version: return "unsupported version";
    case Errc::inconsistent: return "inconsistent container";
    case Errc::corrupt_stream: return "corrupt bitstream";
    case Errc::io: return "i/o error";
    }
    return "unknown error";
}

bool is_corruption(Errc code) noexcept
{
    switch (code) {
    case Errc::truncated:
    case Errc::bad_magic:
    case Errc::bad_version:
    case Errc::inconsistent:
    case Errc::corrupt_stream:
        return true;
    default:
        return false;
    }
}

namespace {

std::string compose(Errc code, const std::string& message, std::optional<std::size_t> block)
{
    std::string s(to_string(code));
    if (block)
        s += " in block " + std::to_string(*block);
    if (!message.empty())
        s += ": " + message;
    return s;
}

} // namespace

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(compose(code, message, std::nullopt))
    , code_(code)
    , detail_(message)
{
}

Error::Error(Errc code, const std::string& message, std::size_t block)
    : std::runtime_error(compose(code, message, block))
    , code_(code)
    , block_(block)
    , detail_(message)
{
}

Error Error::with_block(std::size_t block) const
{
    return Error(code_, detail_, block);
}

} // namespace bwac
