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

#include "bwac/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bwac/error.hpp"

namespace bwac {

double BenchRow::bits_per_symbol() const noexcept
{
    return bwac::bits_per_symbol(original, compressed);
}

std::optional<std::int64_t> BenchRow::saved_bytes() const noexcept
{
    if (!baseline)
        return std::nullopt;
    return static_cast<std::int64_t>(*baseline) - static_cast<std::int64_t>(compressed);
}

std::optional<double> BenchRow::improvement_percent() const noexcept
{
    if (!baseline || *baseline == 0)
        return std::nullopt;
    return 100.0 * static_cast<double>(*saved_bytes()) / static_cast<double>(*baseline);
}

bool BenchReport::has_baseline() const noexcept
{
    return std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.baseline.has_value(); });
}

BenchRow BenchReport::totals() const
{
    BenchRow t;
    t.name = "Total";
    bool all_baseline = !rows.empty();
    std::uint64_t baseline = 0;
    for (const BenchRow& r : rows) {
        t.original += r.original;
        t.compressed += r.compressed;
        t.seconds += r.seconds;
        if (r.baseline)
            baseline += *r.baseline;
        else
            all_baseline = false;
    }
    if (all_baseline)
        t.baseline = baseline;
    return t;
}

std::map<std::string, std::uint64_t> parse_baseline(std::string_view text)
{
    std::map<std::string, std::uint64_t> out;
    std::istringstream in { std::string(text) };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string name;
        std::string size;
        if (!(fields >> name))
            continue;
        if (!(fields >> size) || size.find_first_not_of("0123456789,") != std::string::npos)
            throw Error(Errc::invalid_argument, "baseline line " + std::to_string(lineno) + ": expected '<name> <bytes>'");
        size.erase(std::remove(size.begin(), size.end(), ','), size.end());
        out[name] = std::stoull(size);
    }
    return out;
}

BenchRow bench_bytes(std::string name, std::span<const std::uint8_t> data, const PipelineConfig& cfg, bool verify)
{
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::uint8_t> archive = compress_bytes(data, cfg);
    const auto stop = std::chrono::steady_clock::now();

    if (verify) {
        const std::vector<std::uint8_t> back = decompress_bytes(archive, cfg.threads);
        if (!std::equal(back.begin(), back.end(), data.begin(), data.end()))
            throw Error(Errc::corrupt_stream, "roundtrip mismatch for " + name);
    }

    BenchRow r;
    r.name = std::move(name);
    r.original = data.size();
    r.compressed = archive.size();
    r.seconds = std::chrono::duration<double>(stop - start).count();
    return r;
}

BenchReport bench_directory(const std::filesystem::path& dir, const PipelineConfig& cfg,
    const std::map<std::string, std::uint64_t>& baseline, bool verify)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw Error(Errc::io, "not a directory: " + dir.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file())
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw Error(Errc::invalid_argument, "no files in corpus directory " + dir.string());

    BenchReport report;
    for (const fs::path& f : files) {
        std::ifstream in(f, std::ios::binary);
        if (!in)
            throw Error(Errc::io, "cannot open " + f.string());
        const std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

        BenchRow row = bench_bytes(f.filename().string(), data, cfg, verify);
        if (const auto it = baseline.find(row.name); it != baseline.end())
            row.baseline = it->second;
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

std::string grouped(std::uint64_t v)
{
    std::string digits = std::to_string(v);
    std::string out;
    for (std::size_t k = 0; k < digits.size(); k++) {
        if (k > 0 && (digits.size() - k) % 3 == 0)
            out += ',';
        out += digits[k];
    }
    return out;
}

std::string grouped_signed(std::int64_t v)
{
    return v < 0 ? "-" + grouped(static_cast<std::uint64_t>(-v)) : grouped(static_cast<std::uint64_t>(v));
}

std::string fixed(double v, int digits)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

} // namespace

std::string format_table(const BenchReport& report)
{
    const bool with_base = report.has_baseline();

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head { "File", "Size (bytes)", "Compressed", "bits/symbol" };
    if (with_base) {
        head.insert(head.end(), { "Baseline", "bits/symbol", "Saved bytes", "Improvement %" });
    }
    head.push_back("Time (s)");
    cells.push_back(head);

    auto row_cells = [&](const BenchRow& r, bool total) {
        std::vector<std::string> c { r.name, grouped(r.original), grouped(r.compressed),
            total ? "--" : fixed(r.bits_per_symbol(), 2) };
        if (with_base) {
            if (r.baseline) {
                c.push_back(grouped(*r.baseline));
                c.push_back(total ? "--" : fixed(bwac::bits_per_symbol(r.original, *r.baseline), 2));
                c.push_back(grouped_signed(*r.saved_bytes()));
                c.push_back(total ? "--" : fixed(r.improvement_percent().value_or(0.0), 2));
            } else {
                c.insert(c.end(), { "--", "--", "--", "--" });
            }
        }
        c.push_back(fixed(r.seconds, 3));
        return c;
    };
    for (const BenchRow& r : report.rows)
        cells.push_back(row_cells(r, false));
    cells.push_back(row_cells(report.totals(), true));

    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& line : cells) {
        for (std::size_t k = 0; k < line.size(); k++)
            width[k] = std::max(width[k], line[k].size());
    }

    std::ostringstream out;
    auto rule = [&] {
        for (std::size_t k = 0; k < width.size(); k++)
            out << (k ? "  " : "") << std::string(width[k], '-');
        out << '\n';
    };
    for (std::size_t i = 0; i < cells.size(); i++) {
        if (i == cells.size() - 1)
            rule();
        for (std::size_t k = 0; k < cells[i].size(); k++) {
            out << (k ? "  " : "");
            if (k == 0)
                out << std::left << std::setw(static_cast<int>(width[k])) << cells[i][k];
            else
                out << std::right << std::setw(static_cast<int>(width[k])) << cells[i][k];
        }
        out << '\n';
        if (i == 0)
            rule();
    }
    return out.str();
}

std::string format_tsv(const BenchReport& report)
{
    std::ostringstream out;
    out << "name\toriginal_bytes\tcompressed_bytes\tbits_per_symbol\tbaseline_bytes\tsaved_bytes\timprovement_percent\tseconds\n";
    auto line = [&](const BenchRow& r) {
        out << r.name << '\t' << r.original << '\t' << r.compressed << '\t' << fixed(r.bits_per_symbol(), 4) << '\t';
        if (r.baseline)
            out << *r.baseline << '\t' << *r.saved_bytes() << '\t' << fixed(r.improvement_percent().value_or(0.0), 4);
        else
            out << "\t\t";
        out << '\t' << fixed(r.seconds, 6) << '\n';
    };
    for (const BenchRow& r : report.rows)
        line(r);
    line(report.totals());
    return out.str();
}

} // namespace bwac
