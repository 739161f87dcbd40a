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

#include "bwac/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <thread>

#include "bwac/error.hpp"

namespace bwac {

namespace {

unsigned worker_count(unsigned requested, std::size_t jobs)
{
    unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs fn(k) for k in [0, jobs). Rethrows the exception of the lowest
// failing job so errors do not depend on scheduling.
template <typename Fn>
void for_each_job(std::size_t jobs, unsigned threads, Fn&& fn)
{
    const unsigned workers = worker_count(threads, jobs);
    std::vector<std::exception_ptr> errors(jobs);

    if (workers <= 1) {
        for (std::size_t k = 0; k < jobs; k++) {
            try {
                fn(k);
            } catch (...) {
                errors[k] = std::current_exception();
                break;
            }
        }
    } else {
        std::atomic<std::size_t> next { 0 };
        std::atomic<bool> failed { false };
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < jobs && !failed; k = next++) {
                    try {
                        fn(k);
                    } catch (...) {
                        errors[k] = std::current_exception();
                        failed = true;
                    }
                }
            });
        }
    }

    for (const std::exception_ptr& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
}

std::vector<std::span<const std::uint8_t>> split_blocks(std::span<const std::uint8_t> data, std::size_t block_size)
{
    std::vector<std::span<const std::uint8_t>> out;
    const std::size_t step = block_size == 0 ? data.size() : block_size;
    for (std::size_t off = 0; off < data.size(); off += step)
        out.push_back(data.subspan(off, std::min(step, data.size() - off)));
    return out;
}

} // namespace

void PipelineConfig::validate() const
{
    if (order < 1 || order > 255)
        throw Error(Errc::invalid_argument, "order must be in [1, 255], got " + std::to_string(order));
    if (block_size != 0 && block_size < min_block_size)
        throw Error(Errc::invalid_argument, "block size must be 0 or at least " + std::to_string(min_block_size) + " bytes");
    if (block_size > max_bwt_length)
        throw Error(Errc::invalid_argument, "block size exceeds the 32-bit rotation sort");
}

std::size_t effective_order(std::size_t alphabet_size, std::size_t requested, std::uint64_t guard)
{
    for (std::size_t n = requested; n >= 1; n--) {
        if (fits_guard(alphabet_size, n, guard))
            return n;
    }
    return 0;
}

Block compress_block(std::span<const std::uint8_t> block, const PipelineConfig& cfg, std::size_t index,
    const BlockObserver& observer)
{
    const Alphabet alphabet = Alphabet::of(block);
    const BwtResult bwt = bwt_forward(block, alphabet);
    const MtfSequence mtf = mtf_encode(bwt.transformed, alphabet);

    const std::size_t p = alphabet.size();
    const std::size_t order = cfg.strict_order ? cfg.order : effective_order(p, cfg.order, cfg.bitmap_guard);
    if (order == 0)
        throw Error(Errc::guard_exceeded, "no context order fits an alphabet of " + std::to_string(p) + " symbols", index);

    EahResult eah = eah_encode(mtf.ranks, Alphabet::ranks(p), order, cfg.bitmap_guard);

    if (observer)
        observer(BlockTrace { index, block, alphabet, bwt, mtf, order, eah });

    Block b;
    b.length = block.size();
    b.order = static_cast<std::uint8_t>(order);
    b.bwt_index = bwt.index;
    b.alphabet = alphabet;
    b.eah = std::move(eah.output);
    return b;
}

Container compress(std::span<const std::uint8_t> data, const PipelineConfig& cfg, const BlockObserver& observer)
{
    cfg.validate();
    if (cfg.block_size == 0 && data.size() > max_bwt_length)
        throw Error(Errc::limit_exceeded, "input too large for a single block; set a block size");

    const auto pieces = split_blocks(data, cfg.block_size);
    Container c;
    c.blocks.resize(pieces.size());
    for_each_job(pieces.size(), cfg.threads, [&](std::size_t k) {
        try {
            c.blocks[k] = compress_block(pieces[k], cfg, k, observer);
        } catch (const Error& e) {
            throw e.with_block(k);
        }
    });
    return c;
}

std::vector<std::uint8_t> decompress_block(const Block& b, std::uint64_t guard)
{
    const Alphabet ranks = Alphabet::ranks(b.alphabet.size());
    MtfSequence mtf { eah_decode(b.eah, ranks, b.order, b.length, guard) };
    BwtResult bwt { mtf_decode(mtf, b.alphabet), b.bwt_index };
    return bwt_inverse(bwt, b.alphabet);
}

std::vector<std::uint8_t> decompress(const Container& c, unsigned threads, std::uint64_t guard)
{
    std::vector<std::vector<std::uint8_t>> parts(c.blocks.size());
    for_each_job(c.blocks.size(), threads, [&](std::size_t k) {
        try {
            parts[k] = decompress_block(c.blocks[k], guard);
        } catch (const Error& e) {
            throw e.with_block(k);
        }
    });

    std::size_t total = 0;
    for (const auto& p : parts)
        total += p.size();
    std::vector<std::uint8_t> out;
    out.reserve(total);
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<std::uint8_t> compress_bytes(std::span<const std::uint8_t> data, const PipelineConfig& cfg)
{
    return write_container(compress(data, cfg), cfg.bitmap_guard);
}

std::vector<std::uint8_t> decompress_bytes(std::span<const std::uint8_t> archive, unsigned threads)
{
    return decompress(read_container(archive), threads);
}

namespace {

std::vector<std::uint8_t> slurp(std::istream& in)
{
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw Error(Errc::io, "read failed");
    return data;
}

void spill(std::ostream& out, std::span<const std::uint8_t> data)
{
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out)
        throw Error(Errc::io, "write failed");
}

} // namespace

void compress_stream(std::istream& in, std::ostream& out, const PipelineConfig& cfg)
{
    const auto data = slurp(in);
    spill(out, compress_bytes(data, cfg));
}

void decompress_stream(std::istream& in, std::ostream& out, unsigned threads)
{
    const auto archive = slurp(in);
    spill(out, decompress_bytes(archive, threads));
}

double bits_per_symbol(std::uint64_t original_bytes, std::uint64_t compressed_bytes) noexcept
{
    if (original_bytes == 0)
        return 0.0;
    return 8.0 * static_cast<double>(compressed_bytes) / static_cast<double>(original_bytes);
}

} // namespace bwac
