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

#ifndef BWAC_BITS_HPP
#define BWAC_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace bwac {

// Growable bit string. Bits are packed MSB-first: bit 0 is the high bit of
// byte 0. Padding bits past size() are always zero, so bytes() can be
// written to disk as-is.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t nbits);

    // "0110" -> 4 bits. Any other character throws Errc::invalid_argument.
    static BitString from_string(std::string_view bits);
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool operator[](std::size_t i) const noexcept
    {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
    }

    void set(std::size_t i, bool v = true) noexcept
    {
        const auto mask = static_cast<std::uint8_t>(0x80u >> (i & 7));
        if (v)
            bytes_[i >> 3] |= mask;
        else
            bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
    }

    void push_back(bool bit);

    // Appends the low `count` bits of value, most significant first.
    void append_bits(std::uint64_t value, unsigned count);
    void append(const BitString& other);

    void reverse();
    void clear() noexcept;
    void reserve(std::size_t nbits) { bytes_.reserve((nbits + 7) / 8); }

    std::size_t popcount() const noexcept;

    // True if *this is a prefix of other (equal strings included).
    bool is_prefix_of(const BitString& other) const noexcept;

    std::span<const std::uint8_t> bytes() const noexcept { return { bytes_.data(), bytes_.size() }; }
    std::string to_string() const;

    friend bool operator==(const BitString& a, const BitString& b) noexcept
    {
        return a.size_ == b.size_ && a.bytes_ == b.bytes_;
    }
    // Lexicographic on bits; a proper prefix orders before its extensions.
    friend bool operator<(const BitString& a, const BitString& b) noexcept;

private:
    // Codewords are short; keep up to 128 bits without a heap allocation.
    boost::container::small_vector<std::uint8_t, 16> bytes_;
    std::size_t size_ = 0;
};

// Sequential MSB-first reader over a packed bit buffer.
class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::size_t nbits);
    explicit BitReader(const BitString& bits);

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return nbits_ - pos_; }

    // Throws Errc::truncated when the buffer is exhausted.
    bool read_bit()
    {
        if (pos_ >= nbits_)
            exhausted();
        const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
        pos_++;
        return bit;
    }
    std::uint64_t read_bits(unsigned count);
    BitString read_string(std::size_t count);

private:
    [[noreturn]] static void exhausted();

    std::span<const std::uint8_t> bytes_;
    std::size_t nbits_;
    std::size_t pos_ = 0;
};

} // namespace bwac

#endif
