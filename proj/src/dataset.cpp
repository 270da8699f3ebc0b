#include "bnsl/dataset.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "bnsl/errors.hpp"

namespace bnsl {

namespace {

std::vector<std::string> split_line(const std::string& line, ParseOptions::Format format) {
    std::vector<std::string> tokens;
    if (format == ParseOptions::Format::csv) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                tokens.push_back(line.substr(start));
                break;
            }
            tokens.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
    } else {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            if (i > start) tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

/// Tokenized rows plus column names; shared by parse and parse_numeric.
struct RawTable {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> rows;
};

RawTable tokenize(const std::string& text, const ParseOptions& options) {
    RawTable table;
    std::istringstream in(text);
    std::string line;
    std::size_t width = 0;
    bool header_pending = options.has_header;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto tokens = split_line(line, options.format);
        if (header_pending) {
            table.names = std::move(tokens);
            width = table.names.size();
            header_pending = false;
            continue;
        }
        if (width == 0) width = tokens.size();
        if (tokens.size() != width)
            throw ParseError("ragged row at line " + std::to_string(line_no) + ": expected " +
                             std::to_string(width) + " fields, got " + std::to_string(tokens.size()));
        table.rows.push_back(std::move(tokens));
    }
    if (table.rows.empty()) throw ParseError("no observations in input");
    if (static_cast<int>(width) > kMaxVars)
        throw CapacityError("input has " + std::to_string(width) + " variables; limit is 64");
    if (table.names.empty()) {
        table.names.reserve(width);
        for (std::size_t i = 0; i < width; ++i) table.names.push_back("X" + std::to_string(i));
    }
    return table;
}

} // namespace

Dataset parse(const std::string& text, const ParseOptions& options) {
    RawTable raw = tokenize(text, options);
    Dataset d;
    d.n = static_cast<int>(raw.rows.front().size());
    d.m = static_cast<int>(raw.rows.size());
    d.names = std::move(raw.names);
    d.columns.assign(static_cast<std::size_t>(d.n), {});
    d.arities.assign(static_cast<std::size_t>(d.n), 0);
    for (int i = 0; i < d.n; ++i) {
        auto& column = d.columns[static_cast<std::size_t>(i)];
        column.reserve(static_cast<std::size_t>(d.m));
        std::unordered_map<std::string, std::uint32_t> codes;
        for (const auto& row : raw.rows) {
            auto it = codes.emplace(row[static_cast<std::size_t>(i)], static_cast<std::uint32_t>(codes.size())).first;
            column.push_back(it->second);
        }
        d.arities[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(codes.size());
    }
    return d;
}

NumericTable parse_numeric(const std::string& text, const ParseOptions& options) {
    RawTable raw = tokenize(text, options);
    NumericTable t;
    t.n = static_cast<int>(raw.rows.front().size());
    t.m = static_cast<int>(raw.rows.size());
    t.names = std::move(raw.names);
    t.columns.assign(static_cast<std::size_t>(t.n), {});
    for (auto& col : t.columns) col.reserve(static_cast<std::size_t>(t.m));
    for (const auto& row : raw.rows) {
        for (int i = 0; i < t.n; ++i) {
            const std::string& tok = row[static_cast<std::size_t>(i)];
            char* end = nullptr;
            double value = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0' || !std::isfinite(value))
                throw ParseError("non-numeric token '" + tok + "'");
            t.columns[static_cast<std::size_t>(i)].push_back(value);
        }
    }
    return t;
}

Dataset binarize_mean(const NumericTable& raw) {
    Dataset d;
    d.n = raw.n;
    d.m = raw.m;
    d.names = raw.names;
    d.columns.assign(static_cast<std::size_t>(d.n), {});
    d.arities.assign(static_cast<std::size_t>(d.n), 0);
    for (int i = 0; i < d.n; ++i) {
        const auto& values = raw.columns[static_cast<std::size_t>(i)];
        double sum = 0.0;
        for (double v : values) sum += v;
        double mean = sum / static_cast<double>(d.m);
        auto& column = d.columns[static_cast<std::size_t>(i)];
        column.reserve(static_cast<std::size_t>(d.m));
        std::uint32_t max_code = 0;
        for (double v : values) {
            std::uint32_t code = v < mean ? 0u : 1u;
            if (code > max_code) max_code = code;
            column.push_back(code);
        }
        d.arities[static_cast<std::size_t>(i)] = max_code + 1;
    }
    return d;
}

std::string render(const Dataset& d, const ParseOptions& options) {
    char sep = options.format == ParseOptions::Format::csv ? ',' : ' ';
    std::string out;
    if (options.has_header) {
        for (int i = 0; i < d.n; ++i) {
            if (i > 0) out += sep;
            out += d.names[static_cast<std::size_t>(i)];
        }
        out += '\n';
    }
    for (int row = 0; row < d.m; ++row) {
        for (int i = 0; i < d.n; ++i) {
            if (i > 0) out += sep;
            out += std::to_string(d.code(VarId{i}, row));
        }
        out += '\n';
    }
    return out;
}

DatasetSummary summary(const Dataset& d) { return DatasetSummary{d.n, d.m, d.arities}; }

} // namespace bnsl
