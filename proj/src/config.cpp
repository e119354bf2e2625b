#include "evalkit/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "evalkit/errors.hpp"

namespace evalkit {
namespace {

using nlohmann::ordered_json;

void require_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw ConfigError("config: unknown key '" + item.key() + "' in " + where);
        }
    }
}

std::string require_string(const ordered_json& obj, const std::string& key,
                           const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_string()) throw ConfigError("config: " + where + "." + key + " must be a string");
    return v.get<std::string>();
}

Direction parse_direction(const std::string& text, const std::string& where) {
    if (text == "benefit") return Direction::benefit;
    if (text == "cost") return Direction::cost;
    throw ConfigError("config: " + where + ".direction must be 'benefit' or 'cost', got '" +
                      text + "'");
}

IndicatorKind parse_kind(const std::string& text, const std::string& where) {
    if (text == "quantitative") return IndicatorKind::quantitative;
    if (text == "qualitative-binary") return IndicatorKind::qualitative_binary;
    throw ConfigError("config: " + where +
                      ".kind must be 'quantitative' or 'qualitative-binary', got '" + text + "'");
}

IndicatorConfig parse_indicator(const ordered_json& node, std::size_t index) {
    const std::string where = "indicators[" + std::to_string(index) + "]";
    if (!node.is_object()) throw ConfigError("config: " + where + " must be an object");
    require_keys(node, {"name", "direction", "kind", "mapping", "notes"}, where);

    IndicatorConfig ind;
    if (!node.contains("name")) throw ConfigError("config: " + where + " is missing 'name'");
    ind.spec.name = require_string(node, "name", where);
    if (ind.spec.name.empty()) throw ConfigError("config: " + where + ".name must be non-empty");
    if (node.contains("direction")) {
        ind.spec.direction = parse_direction(require_string(node, "direction", where), where);
    }
    if (node.contains("kind")) {
        ind.spec.kind = parse_kind(require_string(node, "kind", where), where);
    }
    if (node.contains("notes")) require_string(node, "notes", where);

    if (ind.spec.kind == IndicatorKind::qualitative_binary) {
        if (!node.contains("mapping")) {
            throw ConfigError("config: " + where +
                              " is qualitative-binary and requires a 'mapping'");
        }
        const auto& mapping = node.at("mapping");
        if (!mapping.is_object() || mapping.empty()) {
            throw ConfigError("config: " + where + ".mapping must be a non-empty object");
        }
        for (const auto& item : mapping.items()) {
            if (!item.value().is_number()) {
                throw ConfigError("config: " + where + ".mapping['" + item.key() +
                                  "'] must be a number");
            }
            const double v = item.value().get<double>();
            if (v != 0.0 && v != 1.0) {
                throw ConfigError("config: " + where + ".mapping['" + item.key() +
                                  "'] must be 0 or 1, got " + std::to_string(v));
            }
            ind.mapping[item.key()] = v;
        }
    } else if (node.contains("mapping")) {
        throw ConfigError("config: " + where + " is quantitative and must not carry a 'mapping'");
    }
    return ind;
}

GradeScale parse_grade_scale(const ordered_json& node, std::string& name_out) {
    if (node.is_string()) {
        name_out = node.get<std::string>();
        return GradeScale::preset(name_out);
    }
    if (node.is_array()) {
        std::vector<GradeBand> bands;
        for (std::size_t i = 0; i < node.size(); ++i) {
            const auto& b = node[i];
            const std::string where = "grade_scale[" + std::to_string(i) + "]";
            if (!b.is_object()) throw ConfigError("config: " + where + " must be an object");
            require_keys(b, {"lower", "upper", "label"}, where);
            for (const char* key : {"lower", "upper"}) {
                if (!b.contains(key) || !b.at(key).is_number()) {
                    throw ConfigError("config: " + where + "." + key + " must be a number");
                }
            }
            if (!b.contains("label")) throw ConfigError("config: " + where + " is missing 'label'");
            bands.push_back({b.at("lower").get<double>(), b.at("upper").get<double>(),
                             require_string(b, "label", where)});
        }
        name_out = "custom";
        return GradeScale::create(std::move(bands));
    }
    throw ConfigError("config: grade_scale must be a preset name or an array of bands");
}

}  // namespace

EvaluationConfig default_config() { return EvaluationConfig{}; }

EvaluationConfig parse_config(const ordered_json& doc, const std::string& source) {
    if (!doc.is_object()) throw ConfigError("config: " + source + " must hold a JSON object");
    require_keys(doc,
                 {"indicators", "grade_scale", "retention_threshold", "rotation", "output_format",
                  "notes"},
                 "top level");

    EvaluationConfig config;
    config.echo = doc;

    if (doc.contains("notes") && !doc.at("notes").is_string()) {
        throw ConfigError("config: notes must be a string");
    }

    if (doc.contains("indicators")) {
        const auto& list = doc.at("indicators");
        if (!list.is_array() || list.empty()) {
            throw ConfigError("config: indicators must be a non-empty array");
        }
        std::set<std::string> seen;
        for (std::size_t i = 0; i < list.size(); ++i) {
            IndicatorConfig ind = parse_indicator(list[i], i);
            if (!seen.insert(ind.spec.name).second) {
                throw ConfigError("config: duplicate indicator name '" + ind.spec.name + "'");
            }
            config.indicators.push_back(std::move(ind));
        }
    }

    if (doc.contains("grade_scale")) {
        config.grade_scale = parse_grade_scale(doc.at("grade_scale"), config.grade_scale_name);
    }

    if (doc.contains("retention_threshold")) {
        const auto& t = doc.at("retention_threshold");
        if (!t.is_number()) throw ConfigError("config: retention_threshold must be a number");
        config.retention_threshold = t.get<double>();
        if (!(config.retention_threshold > 0.0 && config.retention_threshold <= 1.0)) {
            throw ConfigError("config: retention_threshold must be in (0,1], got " +
                              std::to_string(config.retention_threshold));
        }
    }

    if (doc.contains("rotation")) {
        const std::string r = require_string(doc, "rotation", "top level");
        if (r == "none") {
            config.rotation = Rotation::none;
        } else if (r == "varimax") {
            config.rotation = Rotation::varimax;
        } else {
            throw ConfigError("config: rotation must be 'none' or 'varimax', got '" + r + "'");
        }
    }

    if (doc.contains("output_format")) {
        const std::string f = require_string(doc, "output_format", "top level");
        if (f == "json") {
            config.output_format = OutputFormat::json;
        } else if (f == "csv") {
            config.output_format = OutputFormat::csv;
        } else {
            throw ConfigError("config: output_format must be 'json' or 'csv', got '" + f + "'");
        }
    }

    return config;
}

EvaluationConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();

    ordered_json doc;
    try {
        doc = ordered_json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError("config: '" + path + "' is not valid JSON: " + err.what());
    }
    return parse_config(doc, "'" + path + "'");
}

const char* to_string(Rotation r) { return r == Rotation::varimax ? "varimax" : "none"; }
const char* to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }
const char* to_string(Direction d) { return d == Direction::cost ? "cost" : "benefit"; }
const char* to_string(IndicatorKind k) {
    return k == IndicatorKind::qualitative_binary ? "qualitative-binary" : "quantitative";
}

}  // namespace evalkit
