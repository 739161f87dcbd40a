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

#ifndef BWAC_BENCH_HPP
#define BWAC_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bwac/pipeline.hpp"

namespace bwac {

struct BenchRow {
    std::string name;
    std::uint64_t original = 0;
    std::uint64_t compressed = 0;
    double seconds = 0.0;
    std::optional<std::uint64_t> baseline;   // reference compressed size

    double bits_per_symbol() const noexcept;
    std::optional<std::int64_t> saved_bytes() const noexcept;   // baseline - compressed
    std::optional<double> improvement_percent() const noexcept;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    // Column sums; baseline is summed only when every row has one.
    BenchRow totals() const;
    bool has_baseline() const noexcept;
};

// "name<TAB>bytes" per line; blank lines and '#' comments ignored.
std::map<std::string, std::uint64_t> parse_baseline(std::string_view text);

// Compresses data once, timing it. With verify set, the archive is
// decompressed and compared, throwing Errc::corrupt_stream on mismatch.
BenchRow bench_bytes(std::string name, std::span<const std::uint8_t> data, const PipelineConfig& cfg, bool verify = false);

// Every regular file directly inside dir, in name order. Throws
// Errc::invalid_argument when there are none.
BenchReport bench_directory(const std::filesystem::path& dir, const PipelineConfig& cfg,
    const std::map<std::string, std::uint64_t>& baseline = {}, bool verify = false);

// Aligned table; bits/symbol rounded to two decimals.
std::string format_table(const BenchReport& report);

// One header line then one tab-separated line per row and a "Total" line.
std::string format_tsv(const BenchReport& report);

} // namespace bwac

#endif
