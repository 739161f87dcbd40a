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

#ifndef BWAC_ERROR_HPP
#define BWAC_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bwac {

enum class Errc {
    invalid_argument,
    empty_input,
    symbol_not_in_alphabet,
    index_out_of_range,
    guard_exceeded,
    limit_exceeded,
    // container / stream corruption
    truncated,
    bad_magic,
    bad_version,
    inconsistent,
    corrupt_stream,
    io,
};

std::string_view to_string(Errc code) noexcept;

// True for the codes that indicate a damaged or forged archive.
bool is_corruption(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);
    Error(Errc code, const std::string& message, std::size_t block);

    Errc code() const noexcept { return code_; }

    // Index of the block being processed when the error was raised, if known.
    std::optional<std::size_t> block() const noexcept { return block_; }

    // Same error, annotated with a block index.
    Error with_block(std::size_t block) const;

private:
    Errc code_;
    std::optional<std::size_t> block_;
    std::string detail_;
};

} // namespace bwac

#endif
