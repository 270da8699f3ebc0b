#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnsl/varset.hpp"

namespace bnsl {

/// Column-major categorical observation matrix. Column i holds m category
/// codes in [0, arities[i]).
struct Dataset {
    int n = 0; // variable count
    int m = 0; // observation count
    std::vector<std::vector<std::uint32_t>> columns;
    std::vector<std::uint32_t> arities;
    std::vector<std::string> names;

    std::uint32_t code(VarId var, int row) const {
        return columns[static_cast<std::size_t>(var.value)][static_cast<std::size_t>(row)];
    }
};

struct ParseOptions {
    enum class Format { csv, whitespace };
    Format format = Format::csv;
    bool has_header = false;
};

struct DatasetSummary {
    int n = 0;
    int m = 0;
    std::vector<std::uint32_t> arities;
};

/// Parse delimited text into a Dataset. Distinct raw tokens per column are
/// mapped to codes 0..arity-1 in first-appearance order. Names come from
/// the header row when present, otherwise X0..X{n-1}.
Dataset parse(const std::string& text, const ParseOptions& options);

/// Parse delimited text where every token must be a real number. Returns
/// the column-major value matrix; names as in parse().
struct NumericTable {
    int n = 0;
    int m = 0;
    std::vector<std::vector<double>> columns;
    std::vector<std::string> names;
};
NumericTable parse_numeric(const std::string& text, const ParseOptions& options);

/// Threshold each column at its arithmetic mean: code 0 for values strictly
/// below the mean, code 1 otherwise.
Dataset binarize_mean(const NumericTable& raw);

/// Render a Dataset back to delimited text (header + integer codes). Since
/// codes were assigned in first-appearance order, parse(render(d)) yields
/// identical codes.
std::string render(const Dataset& d, const ParseOptions& options);

DatasetSummary summary(const Dataset& d);

} // namespace bnsl
