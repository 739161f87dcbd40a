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

#include "cli.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <new>
#include <sstream>

#include "CLI11.hpp"
#include "bwac/bench.hpp"
#include "bwac/error.hpp"
#include "bwac/pipeline.hpp"

namespace bwac::cli {

namespace {

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io, "cannot open " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw Error(Errc::io, "cannot read " + path);
    return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Errc::io, "cannot create " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.close();
    if (!out)
        throw Error(Errc::io, "cannot write " + path);
}

std::string show_symbol(Symbol s)
{
    if (std::isprint(s) && s != '\\')
        return std::string(1, static_cast<char>(s));
    std::ostringstream o;
    o << "\\x" << std::hex << std::setw(2) << std::setfill('0') << unsigned(s);
    return o.str();
}

std::string show_string(std::span<const Symbol> s, std::size_t limit)
{
    std::string out;
    for (std::size_t k = 0; k < s.size() && k < limit; k++)
        out += show_symbol(s[k]);
    if (s.size() > limit)
        out += "...";
    return out;
}

template <typename T>
std::string show_tuple(std::span<const T> v, std::size_t limit)
{
    std::ostringstream o;
    o << '(';
    for (std::size_t k = 0; k < v.size() && k < limit; k++)
        o << (k ? "," : "") << +v[k];
    if (v.size() > limit)
        o << ",...";
    o << ')';
    return o.str();
}

std::string show_codewords(const CodewordTuple& y, std::size_t limit)
{
    std::ostringstream o;
    o << '(';
    for (std::size_t k = 0; k < y.size() && k < limit; k++)
        o << (k ? "," : "") << y[k].to_string();
    if (y.size() > limit)
        o << ",...";
    o << ')';
    return o.str();
}

// EAH summary. `names` renders an alphabet index; raw mode shows
// characters, pipeline mode shows rank values.
void print_eah(std::ostream& out, const EahResult& r, const Alphabet& alphabet, std::size_t order, bool raw,
    std::size_t limit)
{
    const std::size_t p = alphabet.size();
    auto name = [&](std::size_t idx) {
        return raw ? show_symbol(alphabet.symbol(idx)) : std::to_string(alphabet.symbol(idx));
    };

    out << "order=" << order << " p=" << p << '\n';
    if (raw)
        out << "prefix=\"" << show_string(r.output.prefix, limit) << "\"\n";
    else
        out << "prefix=" << show_tuple<Symbol>(r.output.prefix, limit) << '\n';

    const std::uint64_t contexts = context_space(p, order, ~std::uint64_t(0));
    out << "b: " << r.output.followers.size() << " bits, " << r.output.followers.popcount() << " set\n";
    if (contexts <= 64) {
        std::vector<std::string> labels;
        std::size_t w = 1;
        for (std::uint64_t c = 1; c <= contexts; c++) {
            std::string label;
            for (Symbol s : rank_context(c, alphabet, order))
                label += (label.empty() || raw ? "" : ".") + name(alphabet.index(s));
            w = std::max(w, label.size());
            labels.push_back(std::move(label));
        }
        out << "  " << std::setw(4) << "";
        for (const auto& l : labels)
            out << ' ' << std::setw(static_cast<int>(w)) << l;
        out << '\n';
        for (std::size_t s = 0; s < p; s++) {
            out << "  " << std::setw(4) << std::left << name(s) << std::right;
            for (std::uint64_t c = 0; c < contexts; c++)
                out << ' ' << std::setw(static_cast<int>(w)) << (r.output.followers[s * contexts + c] ? '1' : '0');
            out << '\n';
        }
    }
    out << "Y=" << show_codewords(r.output.codewords, limit) << '\n';
    out << "|Y|=" << r.output.codewords.size() << '\n';
    out << "|Z|=" << r.output.payload.size() << '\n';
    if (r.output.payload.size() <= limit)
        out << "Z=\"" << r.output.payload.to_string() << "\"\n";
}

struct CommonOptions {
    std::size_t order = 1;
    std::size_t block_size = default_block_size;
    unsigned threads = 1;
    bool strict = false;

    PipelineConfig config() const
    {
        PipelineConfig c;
        c.order = order;
        c.block_size = block_size;
        c.threads = threads;
        c.strict_order = strict;
        return c;
    }
};

void add_pipeline_options(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("-n,--order", o.order, "Context order of the rank coder")->check(CLI::Range(1, 255))->capture_default_str();
    cmd->add_option("-b,--block-size", o.block_size, "Block size in bytes, K/M suffixes allowed; 0 = whole input")
        ->transform(CLI::AsSizeValue(false))
        ->capture_default_str();
    cmd->add_option("-j,--threads", o.threads, "Worker threads, 0 = all cores")->capture_default_str();
    cmd->add_flag("--strict-order", o.strict, "Fail instead of lowering the order when the follower bitmap is too large");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app { "Block-sorting compressor with order-n context Huffman coding", "bwac" };
    app.require_subcommand(1);

    CommonOptions copts;
    std::string in_path;
    std::string out_path;
    auto* compress_cmd = app.add_subcommand("compress", "Compress a file");
    compress_cmd->add_option("input", in_path, "Input file")->required();
    compress_cmd->add_option("output", out_path, "Output archive")->required();
    add_pipeline_options(compress_cmd, copts);

    unsigned dthreads = 1;
    auto* decompress_cmd = app.add_subcommand("decompress", "Restore a file from an archive");
    decompress_cmd->add_option("input", in_path, "Input archive")->required();
    decompress_cmd->add_option("output", out_path, "Output file")->required();
    decompress_cmd->add_option("-j,--threads", dthreads, "Worker threads, 0 = all cores");

    CommonOptions iopts;
    std::string stage = "eah";
    bool raw = false;
    std::size_t limit = 256;
    auto* inspect_cmd = app.add_subcommand("inspect", "Print intermediate values of each block");
    inspect_cmd->add_option("input", in_path, "Input file")->required();
    inspect_cmd->add_option("-s,--stage", stage, "Stage to show")->check(CLI::IsMember({ "bwt", "mtf", "eah" }))->capture_default_str();
    inspect_cmd->add_flag("--raw", raw, "Feed the input straight to the context coder, skipping BWT and move-to-front");
    inspect_cmd->add_option("--limit", limit, "Maximum symbols or codewords printed per field")->capture_default_str();
    add_pipeline_options(inspect_cmd, iopts);

    CommonOptions bopts;
    std::string corpus;
    std::string baseline_path;
    bool verify = false;
    auto* bench_cmd = app.add_subcommand("bench", "Compress every file of a corpus directory and report bits/symbol");
    bench_cmd->add_option("corpus", corpus, "Corpus directory")->required();
    bench_cmd->add_option("--baseline", baseline_path, "TSV of reference compressed sizes: <name> <bytes>");
    bench_cmd->add_flag("--verify", verify, "Decompress and compare every file");
    add_pipeline_options(bench_cmd, bopts);

    std::vector<const char*> argv { "bwac" };
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "bwac: " << e.what() << '\n';
        if (!app.get_subcommands().empty())
            err << app.get_subcommands().front()->help();
        else
            err << app.help();
        return exit_usage;
    }

    try {
        if (compress_cmd->parsed()) {
            const auto data = read_file(in_path);
            const auto archive = compress_bytes(data, copts.config());
            write_file(out_path, archive);
            out << in_path << ": " << data.size() << " -> " << archive.size() << " bytes, " << std::fixed
                << std::setprecision(2) << bits_per_symbol(data.size(), archive.size()) << " bits/symbol\n";
        } else if (decompress_cmd->parsed()) {
            const auto archive = read_file(in_path);
            const auto data = decompress_bytes(archive, dthreads);
            write_file(out_path, data);
            out << in_path << ": " << archive.size() << " -> " << data.size() << " bytes\n";
        } else if (inspect_cmd->parsed()) {
            const auto data = read_file(in_path);
            if (raw) {
                if (stage != "eah")
                    throw Error(Errc::invalid_argument, "--raw only applies to --stage eah");
                if (data.empty()) {
                    out << "empty input\n";
                    return exit_ok;
                }
                const Alphabet alphabet = Alphabet::of(data);
                const EahResult r = eah_encode(data, alphabet, iopts.order);
                out << "raw: t=" << data.size() << '\n';
                print_eah(out, r, alphabet, iopts.order, true, limit);
                return exit_ok;
            }

            PipelineConfig cfg = iopts.config();
            cfg.threads = 1;
            std::size_t blocks = 0;
            compress(data, cfg, [&](const BlockTrace& t) {
                blocks++;
                out << "block " << t.block << ": t=" << t.input.size() << " p=" << t.alphabet.size() << '\n';
                if (stage == "bwt") {
                    out << "I=" << t.bwt.index << '\n';
                    out << "S'=\"" << show_string(t.bwt.transformed, limit) << "\"\n";
                } else if (stage == "mtf") {
                    out << "R=" << show_tuple<std::uint8_t>(t.mtf.ranks, limit) << '\n';
                } else {
                    print_eah(out, t.eah, Alphabet::ranks(t.alphabet.size()), t.order, false, limit);
                }
            });
            if (blocks == 0)
                out << "empty input\n";
        } else if (bench_cmd->parsed()) {
            std::map<std::string, std::uint64_t> baseline;
            if (!baseline_path.empty()) {
                const auto text = read_file(baseline_path);
                baseline = parse_baseline(std::string_view(reinterpret_cast<const char*>(text.data()), text.size()));
            }
            const BenchReport report = bench_directory(corpus, bopts.config(), baseline, verify);
            out << format_table(report) << '\n' << format_tsv(report);
        }
    } catch (const Error& e) {
        err << "bwac: " << e.what() << '\n';
        if (e.code() == Errc::io)
            return exit_io;
        if (is_corruption(e.code()))
            return exit_corrupt;
        return exit_usage;
    } catch (const std::bad_alloc&) {
        err << "bwac: out of memory (archive header claims an implausible size?)\n";
        return decompress_cmd->parsed() ? exit_corrupt : exit_io;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "bwac: " << e.what() << '\n';
        return exit_io;
    }
    return exit_ok;
}

} // namespace bwac::cli
