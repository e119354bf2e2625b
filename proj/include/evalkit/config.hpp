#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "evalkit/preprocess.hpp"
#include "evalkit/scoring.hpp"

namespace evalkit {

enum class Rotation { none, varimax };
enum class OutputFormat { json, csv };

/// One configured indicator: the spec plus, for qualitative-binary
/// indicators, the label -> {0,1} mapping used at quantization time.
struct IndicatorConfig {
    IndicatorSpec spec;
    std::map<std::string, double> mapping;
};

/// A validated evaluation configuration with defaults applied.
///
/// When `indicators` is empty the dataset header governs: every column is
/// treated as a quantitative benefit indicator.
struct EvaluationConfig {
    std::vector<IndicatorConfig> indicators;
    GradeScale grade_scale = GradeScale::us_4band();
    std::string grade_scale_name = "us-4band";  // "custom" for explicit bands
    double retention_threshold = 0.85;          // in (0,1]
    Rotation rotation = Rotation::none;
    OutputFormat output_format = OutputFormat::json;
    nlohmann::ordered_json echo;  // parsed document, for report provenance; null if defaulted
};

/// The configuration used when no --config file is given.
EvaluationConfig default_config();

/// Parses and validates a configuration document. Unknown keys are
/// rejected ("notes" is allowed at the top level and per indicator).
EvaluationConfig parse_config(const nlohmann::ordered_json& doc, const std::string& source);

/// Reads, parses, and validates a JSON configuration file.
EvaluationConfig load_config(const std::string& path);

const char* to_string(Rotation r);
const char* to_string(OutputFormat f);
const char* to_string(Direction d);
const char* to_string(IndicatorKind k);

}  // namespace evalkit
