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

#include "bwac/adaptive_code.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "bwac/error.hpp"

namespace bwac {

AdaptiveCodeTable::AdaptiveCodeTable(std::size_t order, Alphabet alphabet)
    : order_(order)
    , alphabet_(std::move(alphabet))
{
    if (order_ == 0)
        throw Error(Errc::invalid_argument, "adaptive code order must be at least 1");
    if (alphabet_.empty())
        throw Error(Errc::invalid_argument, "adaptive code needs a non-empty alphabet");
}

void AdaptiveCodeTable::set_column(std::span<const Symbol> context, std::vector<BitString> words)
{
    if (context.size() > order_)
        throw Error(Errc::invalid_argument, "context longer than the code order");
    if (words.size() != alphabet_.size())
        throw Error(Errc::invalid_argument, "column needs one codeword per symbol");
    columns_[alphabet_.to_indices(context)] = std::move(words);
}

const std::vector<BitString>* AdaptiveCodeTable::column(const Context& context) const
{
    const auto it = columns_.find(context);
    return it == columns_.end() ? nullptr : &it->second;
}

bool AdaptiveCodeTable::complete() const
{
    // p^0 + p^1 + ... + p^n contexts in total
    std::size_t expected = 0;
    std::size_t power = 1;
    for (std::size_t k = 0; k <= order_; k++) {
        expected += power;
        if (expected > columns_.size())
            return false;
        power *= alphabet_.size();
    }
    return columns_.size() == expected;
}

const BitString& AdaptiveCodeTable::codeword(Symbol s, std::span<const Symbol> context) const
{
    const std::vector<BitString>* col = column(alphabet_.to_indices(context));
    if (col == nullptr)
        throw Error(Errc::invalid_argument, "no column for context of length " + std::to_string(context.size()));
    return (*col)[alphabet_.index(s)];
}

BitString encode_adaptive(const AdaptiveCodeTable& table, std::span<const Symbol> x)
{
    const std::size_t n = table.order();
    const std::vector<std::uint8_t> idx = table.alphabet().to_indices(x);

    BitString out;
    AdaptiveCodeTable::Context ctx;
    for (std::size_t k = 0; k < idx.size(); k++) {
        const std::size_t from = k > n ? k - n : 0;
        ctx.assign(idx.begin() + static_cast<std::ptrdiff_t>(from), idx.begin() + static_cast<std::ptrdiff_t>(k));

        const std::vector<BitString>* col = table.column(ctx);
        if (col == nullptr)
            throw Error(Errc::invalid_argument, "no column for the context at position " + std::to_string(k + 1));
        out.append((*col)[idx[k]]);
    }
    return out;
}

bool is_prefix_code(std::span<const BitString> words)
{
    if (words.empty())
        return false;

    // After sorting, a word that prefixes another prefixes its successor.
    std::vector<const BitString*> sorted;
    sorted.reserve(words.size());
    for (const BitString& w : words) {
        if (w.empty())
            return false;
        sorted.push_back(&w);
    }
    std::sort(sorted.begin(), sorted.end(), [](const BitString* a, const BitString* b) { return *a < *b; });

    for (std::size_t k = 1; k < sorted.size(); k++) {
        if (sorted[k - 1]->is_prefix_of(*sorted[k]))
            return false;
    }
    return true;
}

bool verify_prefix_condition(const AdaptiveCodeTable& table)
{
    if (!table.complete())
        return false;
    return std::all_of(table.columns().begin(), table.columns().end(),
        [](const auto& entry) { return is_prefix_code(entry.second); });
}

namespace {

std::vector<std::string> split_ws(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

AdaptiveCodeTable parse_code_table(std::string_view text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in { std::string(text) };
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto tokens = split_ws(line);
        if (!tokens.empty())
            rows.push_back(std::move(tokens));
    }

    if (rows.size() < 2)
        throw Error(Errc::invalid_argument, "code table needs a header row and at least one symbol row");

    const std::vector<std::string>& header = rows[0];
    const std::size_t ncols = header.size() - 1;
    if (ncols == 0)
        throw Error(Errc::invalid_argument, "code table has no context columns");

    std::string symbols;
    for (std::size_t r = 1; r < rows.size(); r++) {
        if (rows[r][0].size() != 1)
            throw Error(Errc::invalid_argument, "row label '" + rows[r][0] + "' is not a single symbol");
        if (rows[r].size() != ncols + 1)
            throw Error(Errc::invalid_argument, "row '" + rows[r][0] + "' has " + std::to_string(rows[r].size() - 1) + " codewords, expected " + std::to_string(ncols));
        symbols += rows[r][0];
    }

    const Alphabet alphabet(symbols);
    if (alphabet.size() != symbols.size())
        throw Error(Errc::invalid_argument, "duplicate symbol rows");

    std::size_t order = 0;
    std::vector<std::string> contexts;
    for (std::size_t c = 1; c <= ncols; c++) {
        contexts.push_back(header[c] == "-" ? std::string() : header[c]);
        order = std::max(order, contexts.back().size());
    }

    AdaptiveCodeTable table(std::max<std::size_t>(order, 1), alphabet);
    for (std::size_t c = 0; c < ncols; c++) {
        std::vector<BitString> words(alphabet.size());
        for (std::size_t r = 1; r < rows.size(); r++) {
            const std::string& w = rows[r][c + 1];
            words[alphabet.index(static_cast<Symbol>(rows[r][0][0]))] = w == "-" ? BitString() : BitString::from_string(w);
        }
        table.set_column(to_symbols(contexts[c]), std::move(words));
    }
    return table;
}

} // namespace bwac
