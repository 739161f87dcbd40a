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

#include "bwac/container.hpp"

#include <algorithm>
#include <string>

#include "bwac/bwt.hpp"
#include "bwac/error.hpp"

namespace bwac {

namespace {

class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }

    void le(std::uint64_t v, unsigned width)
    {
        for (unsigned k = 0; k < width; k++)
            out_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
    }

    void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }

    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> in)
        : in_(in)
    {
    }

    std::size_t remaining() const noexcept { return in_.size() - pos_; }

    std::span<const std::uint8_t> bytes(std::uint64_t n, const char* what)
    {
        if (n > remaining())
            throw Error(Errc::truncated, std::string(what) + " needs " + std::to_string(n) + " bytes, " + std::to_string(remaining()) + " left");
        const auto s = in_.subspan(pos_, static_cast<std::size_t>(n));
        pos_ += static_cast<std::size_t>(n);
        return s;
    }

    std::span<const std::uint8_t> rest() const noexcept { return in_.subspan(pos_); }

    void skip(std::size_t n) { bytes(n, "skip"); }

    std::uint64_t le(unsigned width, const char* what)
    {
        const auto b = bytes(width, what);
        std::uint64_t v = 0;
        for (unsigned k = width; k-- > 0;)
            v = (v << 8) | b[k];
        return v;
    }

private:
    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
};

std::uint64_t padded_bytes(std::uint64_t bits)
{
    return bits / 8 + (bits % 8 != 0 ? 1 : 0);
}

void check_padding(std::span<const std::uint8_t> bytes, std::uint64_t bits, const char* what)
{
    if (bits % 8 == 0)
        return;
    const auto mask = static_cast<std::uint8_t>(0xFFu >> (bits % 8));
    if ((bytes.back() & mask) != 0)
        throw Error(Errc::inconsistent, std::string(what) + " has non-zero padding bits");
}

void write_block(ByteWriter& w, const Block& b, std::size_t index, std::uint64_t guard)
{
    const std::size_t p = b.alphabet.size();
    auto fail = [index](const std::string& msg) { return Error(Errc::invalid_argument, msg, index); };

    if (b.length == 0)
        throw fail("empty block");
    if (p == 0 || p > 256)
        throw fail("alphabet size " + std::to_string(p) + " outside [1, 256]");
    if (b.order == 0)
        throw fail("order must be at least 1");
    if (b.bwt_index < 1 || b.bwt_index > b.length)
        throw fail("row index outside [1, length]");
    if (b.eah.prefix.size() != std::min<std::uint64_t>(b.order, b.length))
        throw fail("prefix length does not match the order");

    std::uint64_t contexts = 0;
    try {
        contexts = context_space(p, b.order, guard);
    } catch (const Error& e) {
        throw e.with_block(index);
    }
    if (b.eah.followers.size() != p * contexts)
        throw fail("follower bitmap size does not match p^(order+1)");

    w.le(b.length, 8);
    w.u8(b.order);
    w.le(b.bwt_index - 1, 8);
    w.le(p, 2);
    w.bytes(b.alphabet.symbols());
    for (Symbol s : b.eah.prefix) {
        if (s >= p)
            throw fail("prefix rank outside the rank alphabet");
        w.u8(s);
    }
    w.bytes(b.eah.followers.bytes());

    BitString table;
    for (const BitString& code : b.eah.codewords) {
        if (code.empty() || code.size() > 255)
            throw Error(Errc::limit_exceeded, "codeword length " + std::to_string(code.size()) + " outside [1, 255]", index);
        table.append_bits(code.size(), 8);
        table.append(code);
    }
    w.bytes(table.bytes());

    w.le(b.eah.payload.size(), 8);
    w.bytes(b.eah.payload.bytes());
}

Block read_block(ByteReader& r, std::uint64_t guard)
{
    Block b;
    b.length = r.le(8, "block length");
    if (b.length == 0)
        throw Error(Errc::inconsistent, "block length is zero");
    if (b.length > max_bwt_length)
        throw Error(Errc::inconsistent, "block length " + std::to_string(b.length) + " exceeds the supported maximum");

    b.order = static_cast<std::uint8_t>(r.le(1, "order"));
    if (b.order == 0)
        throw Error(Errc::inconsistent, "order is zero");

    const std::uint64_t row = r.le(8, "row index");
    if (row >= b.length)
        throw Error(Errc::inconsistent, "row index " + std::to_string(row) + " not below block length");
    b.bwt_index = row + 1;

    const std::uint64_t p = r.le(2, "alphabet size");
    if (p == 0 || p > 256)
        throw Error(Errc::inconsistent, "alphabet size " + std::to_string(p) + " outside [1, 256]");

    const auto symbols = r.bytes(p, "alphabet");
    if (!std::is_sorted(symbols.begin(), symbols.end()) || std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end())
        throw Error(Errc::inconsistent, "alphabet is not strictly increasing");
    b.alphabet = Alphabet(symbols);

    const auto prefix = r.bytes(std::min<std::uint64_t>(b.order, b.length), "prefix");
    for (std::uint8_t s : prefix) {
        if (s >= p)
            throw Error(Errc::inconsistent, "prefix rank " + std::to_string(unsigned(s)) + " outside the rank alphabet");
    }
    b.eah.prefix.assign(prefix.begin(), prefix.end());

    if (!fits_guard(static_cast<std::size_t>(p), b.order, guard))
        throw Error(Errc::inconsistent, "follower bitmap for p=" + std::to_string(p) + ", order=" + std::to_string(unsigned(b.order))
                + " exceeds the guard of " + std::to_string(guard) + " bits");
    const std::uint64_t bitmap_bits = p * context_space(static_cast<std::size_t>(p), b.order, guard);
    const auto bitmap = r.bytes(padded_bytes(bitmap_bits), "follower bitmap");
    check_padding(bitmap, bitmap_bits, "follower bitmap");
    b.eah.followers = BitString::from_bytes(bitmap, static_cast<std::size_t>(bitmap_bits));

    const std::size_t set = b.eah.followers.popcount();
    if (b.length <= b.order ? set != 0 : (set == 0 || set > b.length - b.order))
        throw Error(Errc::inconsistent, "follower bitmap popcount " + std::to_string(set) + " impossible for length "
                + std::to_string(b.length));

    // The table's entry count is implied by the bitmap. Lengths and bits
    // are one packed stream, so read it against everything that is left.
    const std::size_t count = implied_codeword_count(b.eah.followers, static_cast<std::size_t>(p), b.order);
    if (count > 0) {
        const auto rest = r.rest();
        BitReader bits(rest, rest.size() * 8);
        b.eah.codewords.reserve(count);
        for (std::size_t k = 0; k < count; k++) {
            const auto len = static_cast<std::size_t>(bits.read_bits(8));
            if (len == 0)
                throw Error(Errc::inconsistent, "zero-length codeword");
            b.eah.codewords.push_back(bits.read_string(len));
        }
        const std::uint64_t used = padded_bytes(bits.position());
        check_padding(rest.first(static_cast<std::size_t>(used)), bits.position(), "codeword table");
        r.skip(static_cast<std::size_t>(used));
    }

    const std::uint64_t payload_bits = r.le(8, "payload length");
    const auto payload = r.bytes(padded_bytes(payload_bits), "payload");
    check_padding(payload, payload_bits, "payload");
    b.eah.payload = BitString::from_bytes(payload, static_cast<std::size_t>(payload_bits));
    return b;
}

} // namespace

std::vector<std::uint8_t> write_container(const Container& c, std::uint64_t guard)
{
    if (c.blocks.size() > 0xFFFFFFFFu)
        throw Error(Errc::limit_exceeded, "too many blocks");

    ByteWriter w;
    w.bytes(container_magic);
    w.u8(container_version);
    w.le(c.blocks.size(), 4);
    for (std::size_t k = 0; k < c.blocks.size(); k++)
        write_block(w, c.blocks[k], k, guard);
    return w.take();
}

Container read_container(std::span<const std::uint8_t> bytes, std::uint64_t guard)
{
    ByteReader r(bytes);
    const auto magic = r.bytes(container_magic.size(), "magic");
    if (!std::equal(magic.begin(), magic.end(), container_magic.begin()))
        throw Error(Errc::bad_magic, "not a bwac archive");

    const auto version = static_cast<std::uint8_t>(r.le(1, "version"));
    if (version != container_version)
        throw Error(Errc::bad_version, "version " + std::to_string(unsigned(version)) + ", expected "
                + std::to_string(unsigned(container_version)));

    const std::uint64_t count = r.le(4, "block count");

    Container c;
    for (std::uint64_t k = 0; k < count; k++) {
        try {
            c.blocks.push_back(read_block(r, guard));
        } catch (const Error& e) {
            throw e.with_block(static_cast<std::size_t>(k));
        }
    }
    if (r.remaining() != 0)
        throw Error(Errc::inconsistent, std::to_string(r.remaining()) + " trailing bytes after the last block");
    return c;
}

} // namespace bwac
