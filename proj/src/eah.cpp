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

#include "bwac/eah.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <string>

#include "bwac/error.hpp"

namespace bwac {

namespace {

// Pair key in context-major order.
inline std::uint64_t pair_key(std::uint64_t context, std::uint64_t symbol, std::uint64_t p)
{
    return context * p + symbol;
}

// Indices of keys in ascending key order, stable; keys are below `bound`.
std::vector<std::uint32_t> radix_order(const std::vector<std::uint64_t>& keys, std::uint64_t bound)
{
    const std::size_t n = keys.size();
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; i++)
        order[i] = static_cast<std::uint32_t>(i);
    // Clearing the digit counts would dominate for short inputs.
    if (n < 256) {
        std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return keys[a] != keys[b] ? keys[a] < keys[b] : a < b; });
        return order;
    }
    std::vector<std::uint32_t> tmp(n);

    constexpr unsigned digit = 16;
    const unsigned width = static_cast<unsigned>(std::bit_width(bound > 0 ? bound - 1 : 0));
    std::vector<std::uint32_t> count(std::size_t(1) << digit);
    for (unsigned shift = 0; shift < width; shift += digit) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t i = 0; i < n; i++)
            count[(keys[i] >> shift) & 0xFFFF]++;
        std::uint32_t sum = 0;
        for (auto& c : count) {
            const std::uint32_t v = c;
            c = sum;
            sum += v;
        }
        for (std::size_t i = 0; i < n; i++)
            tmp[count[(keys[order[i]] >> shift) & 0xFFFF]++] = order[i];
        order.swap(tmp);
    }
    return order;
}

struct FollowerPair {
    std::uint64_t context;
    std::uint32_t symbol;
};

// Set bits of b, in bitmap (symbol-major) order.
std::vector<FollowerPair> scan_followers(const BitString& b, std::uint64_t contexts)
{
    std::vector<FollowerPair> out;
    const auto bytes = b.bytes();
    std::uint32_t symbol = 0;
    std::uint64_t symbol_end = contexts;
    auto emit = [&](std::uint64_t bit) {
        // bits arrive in increasing order, so the symbol only moves forward
        while (bit >= symbol_end) {
            symbol++;
            symbol_end += contexts;
        }
        out.push_back({ bit - (symbol_end - contexts), symbol });
    };

    // Bitmaps are mostly zero: walk whole big-endian words and skip the
    // empty ones.
    const std::size_t words = bytes.size() / 8;
    for (std::size_t w = 0; w < words; w++) {
        std::uint64_t word;
        std::memcpy(&word, bytes.data() + w * 8, 8);
        if (word == 0)
            continue;
        if constexpr (std::endian::native == std::endian::little)
            word = __builtin_bswap64(word);
        while (word != 0) {
            const int lead = std::countl_zero(word);
            emit(w * 64 + static_cast<unsigned>(lead));
            word &= ~(std::uint64_t(1) << (63 - lead));
        }
    }
    for (std::size_t i = words * 8; i < bytes.size(); i++) {
        unsigned byte = bytes[i];
        while (byte != 0) {
            const int lead = std::countl_zero(static_cast<std::uint8_t>(byte));
            emit(i * 8 + static_cast<unsigned>(lead));
            byte &= ~(0x80u >> lead);
        }
    }
    return out;
}

struct ContextGroup {
    std::uint64_t context;
    std::uint32_t followers;
    std::uint32_t only_symbol;   // valid when followers == 1
    std::int32_t root;           // decoding trie root when followers >= 2
};

// Contexts of the bitmap with their follower counts, ascending.
std::vector<ContextGroup> group_contexts(const std::vector<FollowerPair>& pairs, std::uint64_t contexts)
{
    // Stable by context over the symbol-major scan, so followers of one
    // context stay in symbol order.
    std::vector<std::uint64_t> keys(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); i++)
        keys[i] = pairs[i].context;
    const std::vector<std::uint32_t> order = radix_order(keys, contexts);

    std::vector<ContextGroup> groups;
    for (std::uint32_t k : order) {
        const FollowerPair& fp = pairs[k];
        if (groups.empty() || groups.back().context != fp.context)
            groups.push_back({ fp.context, 0, fp.symbol, -1 });
        groups.back().followers++;
    }
    return groups;
}

const ContextGroup* find_group(const std::vector<ContextGroup>& groups, std::uint64_t context)
{
    const auto it = std::lower_bound(groups.begin(), groups.end(), context,
        [](const ContextGroup& g, std::uint64_t c) { return g.context < c; });
    return (it != groups.end() && it->context == context) ? &*it : nullptr;
}

// Context -> group lookup: a direct table when the context space is
// small or densely used, binary search otherwise.
class GroupIndex {
public:
    static constexpr std::uint64_t dense_limit = std::uint64_t(1) << 22;

    GroupIndex(const std::vector<ContextGroup>& groups, std::uint64_t contexts)
        : groups_(groups)
    {
        if (contexts <= dense_limit && contexts <= 16 * groups.size() + 4096) {
            table_.assign(static_cast<std::size_t>(contexts), -1);
            for (std::size_t g = 0; g < groups.size(); g++)
                table_[static_cast<std::size_t>(groups[g].context)] = static_cast<std::int32_t>(g);
        }
    }

    // Index into groups, or -1.
    std::int64_t find(std::uint64_t context) const
    {
        if (!table_.empty())
            return table_[static_cast<std::size_t>(context)];
        const ContextGroup* g = find_group(groups_, context);
        return g ? g - groups_.data() : -1;
    }

private:
    const std::vector<ContextGroup>& groups_;
    std::vector<std::int32_t> table_;
};

// Binary trie shared by all contexts. Child 0 means absent, a negative
// child -(s+1) is a leaf for symbol s.
class DecodeTrie {
public:
    DecodeTrie() { nodes_.push_back({ 0, 0 }); }

    std::int32_t add_root()
    {
        nodes_.push_back({ 0, 0 });
        return static_cast<std::int32_t>(nodes_.size() - 1);
    }

    void insert(std::int32_t root, const BitString& code, std::uint32_t symbol)
    {
        std::int32_t node = root;
        for (std::size_t k = 0; k < code.size(); k++) {
            std::int32_t& child = nodes_[static_cast<std::size_t>(node)][code[k] ? 1 : 0];
            const bool last = k + 1 == code.size();
            if (last) {
                if (child != 0)
                    throw Error(Errc::corrupt_stream, "codeword collides with another in its context");
                child = -static_cast<std::int32_t>(symbol) - 1;
            } else {
                if (child < 0)
                    throw Error(Errc::corrupt_stream, "codeword extends another in its context");
                if (child == 0) {
                    nodes_.push_back({ 0, 0 });
                    // reacquire: push_back may have moved the node storage
                    nodes_[static_cast<std::size_t>(node)][code[k] ? 1 : 0] = static_cast<std::int32_t>(nodes_.size() - 1);
                    node = static_cast<std::int32_t>(nodes_.size() - 1);
                } else {
                    node = child;
                }
            }
        }
    }

    std::uint32_t decode(std::int32_t root, BitReader& in) const
    {
        std::int32_t node = root;
        for (;;) {
            if (in.remaining() == 0)
                throw Error(Errc::corrupt_stream, "payload ended inside a codeword");
            const std::int32_t child = nodes_[static_cast<std::size_t>(node)][in.read_bit() ? 1 : 0];
            if (child == 0)
                throw Error(Errc::corrupt_stream, "payload bits match no codeword");
            if (child < 0)
                return static_cast<std::uint32_t>(-(child + 1));
            node = child;
        }
    }

private:
    std::vector<std::array<std::int32_t, 2>> nodes_;
};

} // namespace

ContextModel::ContextModel(std::size_t order, std::size_t alphabet_size, std::vector<ContextEntry> entries)
    : order_(order)
    , alphabet_size_(alphabet_size)
    , entries_(std::move(entries))
{
}

const ContextEntry* ContextModel::find(std::size_t symbol, std::uint64_t context) const
{
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(context, symbol),
        [](const ContextEntry& e, const std::pair<std::uint64_t, std::size_t>& k) {
            return e.context != k.first ? e.context < k.first : e.symbol < k.second;
        });
    if (it == entries_.end() || it->context != context || it->symbol != symbol)
        return nullptr;
    return &*it;
}

std::uint64_t ContextModel::count(std::size_t symbol, std::uint64_t context) const
{
    const ContextEntry* e = find(symbol, context);
    return e ? e->count : 0;
}

const BitString* ContextModel::codeword(std::size_t symbol, std::uint64_t context) const
{
    const ContextEntry* e = find(symbol, context);
    return (e && !e->code.empty()) ? &e->code : nullptr;
}

std::size_t ContextModel::follower_count(std::uint64_t context) const
{
    const auto lo = std::lower_bound(entries_.begin(), entries_.end(), context,
        [](const ContextEntry& e, std::uint64_t c) { return e.context < c; });
    const auto hi = std::upper_bound(lo, entries_.end(), context,
        [](std::uint64_t c, const ContextEntry& e) { return c < e.context; });
    return static_cast<std::size_t>(hi - lo);
}

std::vector<std::uint64_t> ContextModel::contexts() const
{
    std::vector<std::uint64_t> out;
    for (const ContextEntry& e : entries_) {
        if (out.empty() || out.back() != e.context)
            out.push_back(e.context);
    }
    return out;
}

std::vector<BitString> ContextModel::code_set(std::uint64_t context) const
{
    std::vector<BitString> out;
    for (const ContextEntry& e : entries_) {
        if (e.context == context && !e.code.empty())
            out.push_back(e.code);
    }
    return out;
}

bool fits_guard(std::size_t alphabet_size, std::size_t order, std::uint64_t guard) noexcept
{
    if (alphabet_size == 0)
        return false;
    std::uint64_t bits = 1;
    for (std::size_t k = 0; k <= order; k++) {
        if (bits > guard / alphabet_size)
            return false;
        bits *= alphabet_size;
    }
    return bits <= guard;
}

std::uint64_t context_space(std::size_t alphabet_size, std::size_t order, std::uint64_t guard)
{
    if (order == 0)
        throw Error(Errc::invalid_argument, "context order must be at least 1");
    if (alphabet_size == 0)
        throw Error(Errc::invalid_argument, "alphabet is empty");
    if (!fits_guard(alphabet_size, order, guard))
        throw Error(Errc::guard_exceeded, "follower bitmap of " + std::to_string(alphabet_size) + "^" + std::to_string(order + 1)
                + " bits exceeds the guard of " + std::to_string(guard) + " bits");

    std::uint64_t contexts = 1;
    for (std::size_t k = 0; k < order; k++)
        contexts *= alphabet_size;
    return contexts;
}

std::uint64_t context_rank(std::span<const Symbol> context, const Alphabet& alphabet)
{
    if (context.empty())
        throw Error(Errc::invalid_argument, "context must not be empty");
    // validates the length against 64-bit overflow as well
    context_space(alphabet.size(), context.size(), ~std::uint64_t(0));

    std::uint64_t r = 0;
    for (Symbol s : context)
        r = r * alphabet.size() + alphabet.index(s);
    return r + 1;
}

SymbolString rank_context(std::uint64_t rank, const Alphabet& alphabet, std::size_t order)
{
    const std::uint64_t space = context_space(alphabet.size(), order, ~std::uint64_t(0));
    if (rank < 1 || rank > space)
        throw Error(Errc::index_out_of_range, "context rank " + std::to_string(rank) + " not in [1, " + std::to_string(space) + "]");

    SymbolString out(order);
    std::uint64_t r = rank - 1;
    for (std::size_t k = order; k-- > 0;) {
        out[k] = alphabet.symbol(static_cast<std::size_t>(r % alphabet.size()));
        r /= alphabet.size();
    }
    return out;
}

EahResult eah_encode(std::span<const Symbol> x, const Alphabet& alphabet, std::size_t order, std::uint64_t guard)
{
    if (x.empty())
        throw Error(Errc::empty_input, "nothing to encode");

    const std::uint64_t p = alphabet.size();
    const std::uint64_t contexts = context_space(alphabet.size(), order, guard);
    const std::vector<std::uint8_t> idx = alphabet.to_indices(x);
    const std::size_t t = x.size();

    EahResult r;
    r.output.followers = BitString(static_cast<std::size_t>(p * contexts));
    const std::size_t head = std::min(order, t);
    r.output.prefix.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(head));
    if (t <= order) {
        r.model = ContextModel(order, alphabet.size(), {});
        return r;
    }

    // Pair key for every coded position.
    const std::size_t m = t - order;
    std::vector<std::uint64_t> keys(m);
    // Rolling context: drop the oldest symbol's weight, shift, add the new one.
    const std::uint64_t lead_weight = contexts / p;
    std::uint64_t ctx = 0;
    for (std::size_t i = 0; i < order; i++)
        ctx = ctx * p + idx[i];
    for (std::size_t i = order; i < t; i++) {
        keys[i - order] = pair_key(ctx, idx[i], p);
        ctx = (ctx - idx[i - order] * lead_weight) * p + idx[i];
    }

    // Positions grouped by key, then one entry per distinct key; entry_of
    // maps each position back to its entry for payload generation.
    const std::vector<std::uint32_t> by_key = radix_order(keys, p * contexts);
    std::vector<ContextEntry> entries;
    std::vector<std::uint32_t> entry_of(m);
    for (std::size_t i = 0; i < m;) {
        const std::uint64_t key = keys[by_key[i]];
        std::size_t j = i;
        while (j < m && keys[by_key[j]] == key)
            entry_of[by_key[j++]] = static_cast<std::uint32_t>(entries.size());
        entries.push_back({ key / p, static_cast<std::uint32_t>(key % p), j - i, {} });
        i = j;
    }

    // One Huffman code per context with at least two followers; followers
    // are already in symbol order within a context.
    FrequencyTuple freqs;
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].context == entries[i].context)
            j++;
        if (j - i >= 2) {
            freqs.clear();
            for (std::size_t k = i; k < j; k++)
                freqs.push_back(entries[k].count);
            CodewordTuple codes = huffman(freqs);
            for (std::size_t k = i; k < j; k++)
                entries[k].code = std::move(codes[k - i]);
        }
        i = j;
    }

    // Codewords in symbol-major order: a stable counting sort by symbol
    // keeps context order within each symbol.
    std::vector<std::size_t> start(static_cast<std::size_t>(p) + 1, 0);
    std::size_t coded = 0;
    for (const ContextEntry& e : entries) {
        r.output.followers.set(static_cast<std::size_t>(e.symbol * contexts + e.context));
        if (!e.code.empty()) {
            start[e.symbol + 1]++;
            coded++;
        }
    }
    for (std::size_t k = 1; k <= p; k++)
        start[k] += start[k - 1];
    std::vector<const BitString*> ordered(coded);
    for (const ContextEntry& e : entries) {
        if (!e.code.empty())
            ordered[start[e.symbol]++] = &e.code;
    }
    r.output.codewords.reserve(coded);
    for (const BitString* c : ordered)
        r.output.codewords.push_back(*c);

    std::size_t payload_bits = 0;
    for (const ContextEntry& e : entries)
        payload_bits += e.count * e.code.size();
    r.output.payload.reserve(payload_bits);
    for (std::size_t i = 0; i < m; i++)
        r.output.payload.append(entries[entry_of[i]].code);

    r.model = ContextModel(order, alphabet.size(), std::move(entries));
    return r;
}

std::size_t implied_codeword_count(const BitString& followers, std::size_t alphabet_size, std::size_t order)
{
    const std::uint64_t contexts = context_space(alphabet_size, order, ~std::uint64_t(0));
    if (followers.size() != alphabet_size * contexts)
        throw Error(Errc::inconsistent, "follower bitmap has " + std::to_string(followers.size()) + " bits, expected "
                + std::to_string(alphabet_size * contexts));

    std::size_t n = 0;
    for (const ContextGroup& g : group_contexts(scan_followers(followers, contexts), contexts)) {
        if (g.followers >= 2)
            n += g.followers;
    }
    return n;
}

SymbolString eah_decode(const EahOutput& out, const Alphabet& alphabet, std::size_t order, std::uint64_t length,
    std::uint64_t guard)
{
    const std::uint64_t p = alphabet.size();
    const std::uint64_t contexts = context_space(alphabet.size(), order, guard);

    if (out.followers.size() != p * contexts)
        throw Error(Errc::inconsistent, "follower bitmap has " + std::to_string(out.followers.size()) + " bits, expected "
                + std::to_string(p * contexts));
    if (out.prefix.size() != std::min<std::uint64_t>(order, length))
        throw Error(Errc::inconsistent, "prefix holds " + std::to_string(out.prefix.size()) + " symbols");

    const std::vector<std::uint8_t> head = alphabet.to_indices(out.prefix);
    if (length <= order) {
        if (out.followers.popcount() != 0 || !out.codewords.empty() || !out.payload.empty())
            throw Error(Errc::inconsistent, "input shorter than the order carries coded data");
        return out.prefix;
    }

    const std::vector<FollowerPair> pairs = scan_followers(out.followers, contexts);
    std::vector<ContextGroup> groups = group_contexts(pairs, contexts);
    const GroupIndex index(groups, contexts);

    // Hand out codewords in the order the encoder emitted them and build
    // one decoding trie per multi-follower context. Building the trie
    // rejects any code set that is not prefix-free: a word ending on an
    // occupied node or passing through a leaf throws.
    DecodeTrie trie;
    std::size_t next = 0;
    for (const FollowerPair& fp : pairs) {
        ContextGroup& g = groups[static_cast<std::size_t>(index.find(fp.context))];
        if (g.followers < 2)
            continue;
        if (next >= out.codewords.size())
            throw Error(Errc::inconsistent, "follower bitmap implies more codewords than stored");
        const BitString& code = out.codewords[next++];
        if (code.empty())
            throw Error(Errc::corrupt_stream, "empty codeword in context " + std::to_string(g.context + 1));
        if (g.root < 0)
            g.root = trie.add_root();
        trie.insert(g.root, code, fp.symbol);
    }
    if (next != out.codewords.size())
        throw Error(Errc::inconsistent, "stored codewords outnumber follower bitmap entries");

    SymbolString result(out.prefix);
    // length comes from the archive; do not trust it for a large up-front allocation
    result.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(length, std::uint64_t(1) << 24)));

    // Rolling context: drop the oldest symbol's weight, shift, add the new
    // one. The last `order` symbol indices live in a ring.
    const std::uint64_t lead_weight = contexts / p;
    std::vector<std::uint32_t> ring(head.begin(), head.end());
    std::size_t oldest = 0;
    std::uint64_t ctx = 0;
    for (std::uint8_t s : head)
        ctx = ctx * p + s;

    BitReader in(out.payload);
    for (std::uint64_t i = order; i < length; i++) {
        const std::int64_t gi = index.find(ctx);
        if (gi < 0)
            throw Error(Errc::corrupt_stream, "context " + std::to_string(ctx + 1) + " at position " + std::to_string(i + 1)
                    + " has no followers");

        const ContextGroup& g = groups[static_cast<std::size_t>(gi)];
        const std::uint32_t sym = g.followers == 1 ? g.only_symbol : trie.decode(g.root, in);
        result.push_back(alphabet.symbol(sym));
        ctx = (ctx - ring[oldest] * lead_weight) * p + sym;
        ring[oldest] = sym;
        oldest = oldest + 1 == ring.size() ? 0 : oldest + 1;
    }
    if (in.remaining() != 0)
        throw Error(Errc::corrupt_stream, std::to_string(in.remaining()) + " payload bits left after decoding");
    return result;
}

} // namespace bwac
