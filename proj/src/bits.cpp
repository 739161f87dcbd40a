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

#include "bwac/bits.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "bwac/error.hpp"

namespace bwac {

BitString::BitString(std::size_t nbits)
    : bytes_((nbits + 7) / 8, 0)
    , size_(nbits)
{
}

BitString BitString::from_string(std::string_view bits)
{
    BitString out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw Error(Errc::invalid_argument, "bit string may only contain '0' and '1'");
        out.push_back(c == '1');
    }
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits)
{
    if (bytes.size() < (nbits + 7) / 8)
        throw Error(Errc::truncated, "need " + std::to_string(nbits) + " bits");

    BitString out;
    out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((nbits + 7) / 8));
    out.size_ = nbits;
    if ((nbits & 7) != 0)
        out.bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (nbits & 7));
    return out;
}

void BitString::push_back(bool bit)
{
    if ((size_ & 7) == 0)
        bytes_.push_back(0);
    if (bit)
        bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
    size_++;
}

void BitString::append_bits(std::uint64_t value, unsigned count)
{
    while (count > 0) {
        const unsigned used = size_ & 7;
        if (used == 0)
            bytes_.push_back(0);
        const unsigned take = std::min(count, 8 - used);
        const auto chunk = static_cast<unsigned>((value >> (count - take)) & ((1u << take) - 1));
        bytes_.back() |= static_cast<std::uint8_t>(chunk << (8 - used - take));
        size_ += take;
        count -= take;
    }
}

void BitString::append(const BitString& other)
{
    if ((size_ & 7) == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        size_ += other.size_;
        return;
    }

    const unsigned shift = size_ & 7;
    std::size_t left = other.size_;
    for (std::uint8_t b : other.bytes_) {
        const unsigned take = left >= 8 ? 8u : static_cast<unsigned>(left);
        // fill the tail of the current byte, then spill into a new one
        bytes_.back() |= static_cast<std::uint8_t>(b >> shift);
        if (take > 8 - shift)
            bytes_.push_back(static_cast<std::uint8_t>(b << (8 - shift)));
        left -= take;
    }
    size_ += other.size_;
}

void BitString::reverse()
{
    BitString r(size_);
    for (std::size_t i = 0; i < size_; i++) {
        if ((*this)[i])
            r.set(size_ - 1 - i);
    }
    *this = std::move(r);
}

void BitString::clear() noexcept
{
    bytes_.clear();
    size_ = 0;
}

std::size_t BitString::popcount() const noexcept
{
    std::size_t n = 0;
    std::size_t i = 0;
    for (; i + 8 <= bytes_.size(); i += 8) {
        std::uint64_t word;
        std::memcpy(&word, bytes_.data() + i, 8);
        if (word != 0)   // bitmaps are mostly zero
            n += static_cast<std::size_t>(std::popcount(word));
    }
    for (; i < bytes_.size(); i++)
        n += static_cast<std::size_t>(std::popcount(bytes_[i]));
    return n;
}

bool operator<(const BitString& a, const BitString& b) noexcept
{
    const std::size_t common = std::min(a.size_, b.size_);
    const std::size_t full = common >> 3;
    const auto [ia, ib] = std::mismatch(a.bytes_.begin(), a.bytes_.begin() + static_cast<std::ptrdiff_t>(full), b.bytes_.begin());
    const std::size_t from = static_cast<std::size_t>(ia - a.bytes_.begin()) * 8;
    for (std::size_t i = from; i < common; i++) {
        if (a[i] != b[i])
            return b[i];
    }
    return a.size_ < b.size_;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept
{
    if (size_ > other.size_)
        return false;

    const std::size_t full = size_ >> 3;
    if (!std::equal(bytes_.begin(), bytes_.begin() + static_cast<std::ptrdiff_t>(full), other.bytes_.begin()))
        return false;

    for (std::size_t i = full * 8; i < size_; i++) {
        if ((*this)[i] != other[i])
            return false;
    }
    return true;
}

std::string BitString::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; i++) {
        if ((*this)[i])
            s[i] = '1';
    }
    return s;
}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::size_t nbits)
    : bytes_(bytes)
    , nbits_(nbits)
{
    if (bytes.size() < (nbits + 7) / 8)
        throw Error(Errc::truncated, "bit buffer shorter than its declared length");
}

BitReader::BitReader(const BitString& bits)
    : BitReader(bits.bytes(), bits.size())
{
}

void BitReader::exhausted()
{
    throw Error(Errc::truncated, "bit stream exhausted");
}

std::uint64_t BitReader::read_bits(unsigned count)
{
    if (count > 64)
        throw Error(Errc::invalid_argument, "cannot read more than 64 bits at once");
    if (remaining() < count)
        throw Error(Errc::truncated, "bit stream exhausted");

    // Whole bytes where possible, single bits at the edges.
    std::uint64_t v = 0;
    unsigned left = count;
    while (left > 0 && (pos_ & 7) != 0) {
        v = (v << 1) | (read_bit() ? 1u : 0u);
        left--;
    }
    while (left >= 8) {
        v = (v << 8) | bytes_[pos_ >> 3];
        pos_ += 8;
        left -= 8;
    }
    while (left > 0) {
        v = (v << 1) | (read_bit() ? 1u : 0u);
        left--;
    }
    return v;
}

BitString BitReader::read_string(std::size_t count)
{
    if (remaining() < count)
        throw Error(Errc::truncated, "bit stream exhausted");

    BitString out;
    out.reserve(count);
    std::size_t left = count;
    while (left > 0) {
        const unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(left, 56));
        out.append_bits(read_bits(chunk), chunk);
        left -= chunk;
    }
    return out;
}

} // namespace bwac
