#include "evalkit/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "evalkit/errors.hpp"
#include "evalkit/numfmt.hpp"

namespace evalkit {
namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line, std::size_t line_no,
                                      const std::string& source) {
    std::vector<std::string> fields;
    std::string field;
    for (const char c : line) {
        if (c == '"') {
            throw ParseError(source + ":" + std::to_string(line_no) +
                             ": quoted fields are not supported");
        }
        if (c == ',') {
            fields.push_back(trim(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(trim(field));
    return fields;
}

double parse_number(const std::string& field, std::size_t line_no, std::size_t column_no,
                    const std::string& source) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw ParseError(source + ":" + std::to_string(line_no) + ": column " +
                         std::to_string(column_no) + ": expected a number, got '" + field + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(source + ":" + std::to_string(line_no) + ": column " +
                         std::to_string(column_no) + ": non-finite value '" + field + "'");
    }
    return value;
}

}  // namespace

void ensure_csv_label(const std::string& label, const std::string& what) {
    if (label.empty()) throw ValidationError("csv writer: empty " + what);
    if (label != trim(label)) {
        throw ValidationError("csv writer: " + what + " '" + label +
                              "' has leading or trailing whitespace");
    }
    if (label.find_first_of(",\"\r\n") != std::string::npos) {
        throw ValidationError("csv writer: " + what + " '" + label +
                              "' contains a comma, quote, or line break");
    }
}

RawDataset parse_csv_dataset(const std::string& text, const std::string& source) {
    std::string body = text;
    if (body.size() >= 3 && body.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        body.erase(0, 3);  // UTF-8 byte-order mark
    }

    RawDataset raw;
    std::istringstream lines(body);
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (trim(line).empty()) continue;  // blank lines carry no row
        std::vector<std::string> fields = split_fields(line, line_no, source);

        if (raw.indicator_names.empty() && raw.objects.empty() && width == 0) {
            if (fields.size() < 2) {
                throw ParseError(source + ":1: header needs an object column and at least one "
                                 "indicator column");
            }
            width = fields.size();
            std::set<std::string> seen;
            for (std::size_t j = 1; j < fields.size(); ++j) {
                if (fields[j].empty()) {
                    throw ParseError(source + ":1: empty header in column " +
                                     std::to_string(j + 1));
                }
                if (!seen.insert(fields[j]).second) {
                    throw ParseError(source + ":1: duplicate header '" + fields[j] + "'");
                }
                raw.indicator_names.push_back(fields[j]);
            }
            continue;
        }

        if (fields.size() != width) {
            throw ParseError(source + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(width) + " fields, got " +
                             std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            throw ParseError(source + ":" + std::to_string(line_no) + ": empty object label");
        }
        raw.objects.push_back(fields[0]);
        raw.cells.emplace_back(fields.begin() + 1, fields.end());
    }

    if (width == 0) throw ParseError(source + ": no header row");
    if (raw.objects.size() < 2) {
        throw ValidationError(source + ": need at least 2 data rows, got " +
                              std::to_string(raw.objects.size()));
    }
    return raw;
}

RawDataset read_csv_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("dataset: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv_dataset(buffer.str(), path);
}

JudgmentMatrix to_judgment_matrix(const RawDataset& raw, const EvaluationConfig& config) {
    const std::size_t m = raw.objects.size();
    const std::size_t n = raw.indicator_names.size();

    // CSV column order governs; the configuration contributes direction,
    // kind, and mappings. Both directions of the name match must close.
    std::vector<IndicatorConfig> columns(n);
    if (config.indicators.empty()) {
        for (std::size_t j = 0; j < n; ++j) columns[j].spec.name = raw.indicator_names[j];
    } else {
        std::map<std::string, const IndicatorConfig*> by_name;
        for (const auto& ind : config.indicators) by_name[ind.spec.name] = &ind;
        for (std::size_t j = 0; j < n; ++j) {
            const auto it = by_name.find(raw.indicator_names[j]);
            if (it == by_name.end()) {
                throw ValidationError("dataset column '" + raw.indicator_names[j] +
                                      "' is not declared in the configuration");
            }
            columns[j] = *it->second;
            by_name.erase(it);
        }
        if (!by_name.empty()) {
            throw ValidationError("configured indicator '" + by_name.begin()->first +
                                  "' is missing from the dataset");
        }
    }

    Matrix values(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].spec.kind == IndicatorKind::qualitative_binary) {
            std::vector<std::string> labels(m);
            for (std::size_t i = 0; i < m; ++i) labels[i] = raw.cells[i][j];
            const std::vector<double> quantized = quantize_qualitative(labels, columns[j].mapping);
            for (std::size_t i = 0; i < m; ++i) values(i, j) = quantized[i];
        } else {
            for (std::size_t i = 0; i < m; ++i) {
                // header is line 1, data row i is line i+2; the object label
                // occupies CSV column 1, indicator j sits in column j+2
                values(i, j) = parse_number(raw.cells[i][j], i + 2, j + 2, "dataset");
            }
        }
    }

    std::vector<IndicatorSpec> specs(n);
    for (std::size_t j = 0; j < n; ++j) specs[j] = columns[j].spec;
    return JudgmentMatrix::create(raw.objects, specs, std::move(values));
}

JudgmentMatrix load_dataset(const std::string& path, const EvaluationConfig& config) {
    return to_judgment_matrix(read_csv_dataset(path), config);
}

std::string render_csv_dataset(const std::vector<std::string>& objects,
                               const std::vector<std::string>& indicator_names,
                               const Matrix& values) {
    if (values.rows() != objects.size() || values.cols() != indicator_names.size()) {
        throw ShapeError("csv writer: " + std::to_string(objects.size()) + " objects and " +
                         std::to_string(indicator_names.size()) + " names vs values " +
                         values.shape_str());
    }
    for (const auto& name : indicator_names) ensure_csv_label(name, "indicator name");
    for (const auto& object : objects) ensure_csv_label(object, "object label");

    std::string out = "object";
    for (const auto& name : indicator_names) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t i = 0; i < values.rows(); ++i) {
        out += objects[i];
        for (std::size_t j = 0; j < values.cols(); ++j) {
            out += ',';
            out += format_roundtrip(values(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace evalkit
