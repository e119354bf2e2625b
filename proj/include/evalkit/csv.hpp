#pragma once

#include <string>
#include <vector>

#include "evalkit/config.hpp"
#include "evalkit/matrix.hpp"
#include "evalkit/preprocess.hpp"

namespace evalkit {

/// A parsed CSV dataset before any numeric interpretation. Cells stay
/// strings so qualitative labels survive until quantization.
struct RawDataset {
    std::vector<std::string> objects;               // first column, one per data row
    std::vector<std::string> indicator_names;       // header row minus the first cell
    std::vector<std::vector<std::string>> cells;    // m rows x n indicator columns
};

/// Parses CSV text per the dataset contract: UTF-8, comma-separated,
/// first row = header, first column = object label, fields trimmed,
/// no quoting. `source` names the input in error messages.
RawDataset parse_csv_dataset(const std::string& text, const std::string& source);

/// Reads and parses a CSV dataset file.
RawDataset read_csv_dataset(const std::string& path);

/// Interprets raw cells under a configuration: quantitative columns are
/// parsed as decimal numbers, qualitative-binary columns are quantized
/// through their mapping. Column order follows the CSV header; when the
/// configuration declares indicators, the declared set must match the
/// header set exactly.
JudgmentMatrix to_judgment_matrix(const RawDataset& raw, const EvaluationConfig& config);

/// read_csv_dataset + to_judgment_matrix in one step.
JudgmentMatrix load_dataset(const std::string& path, const EvaluationConfig& config);

/// Rejects labels the quote-free CSV contract cannot carry: commas,
/// quotes, line breaks, outer whitespace, or empty text. `what` names
/// the offending field in the error.
void ensure_csv_label(const std::string& label, const std::string& what);

/// Renders a labeled value table back to CSV with shortest round-trip
/// number formatting, so re-loading reproduces the matrix exactly.
/// Labels that would need quoting (commas, quotes, line breaks, outer
/// whitespace, empty) are rejected.
std::string render_csv_dataset(const std::vector<std::string>& objects,
                               const std::vector<std::string>& indicator_names,
                               const Matrix& values);

}  // namespace evalkit
