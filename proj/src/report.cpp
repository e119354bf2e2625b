#include "evalkit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <utility>

#include "evalkit/csv.hpp"
#include "evalkit/errors.hpp"
#include "evalkit/numfmt.hpp"
#include "evalkit/version.hpp"

namespace evalkit {
namespace {

using nlohmann::ordered_json;

std::string format_sig6(double value) { return format_roundtrip(round_sig6(value)); }

ordered_json vector_json(const std::vector<double>& values) {
    ordered_json arr = ordered_json::array();
    for (const double v : values) arr.push_back(round_sig6(v));
    return arr;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(round_sig6(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json report_header(const std::string& command, const Provenance& prov) {
    ordered_json doc;
    doc["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
    doc["command"] = command;
    ordered_json p;
    p["data_digest"] = prov.data_digest;
    if (prov.config_digest) {
        p["config_digest"] = *prov.config_digest;
    } else {
        p["config_digest"] = nullptr;
    }
    p["config"] = prov.config_echo.is_null() ? ordered_json(nullptr) : prov.config_echo;
    doc["provenance"] = std::move(p);
    return doc;
}

ordered_json weights_array(const std::vector<IndicatorSpec>& indicators, const EntropyVector& h,
                           const WeightVector& w) {
    const std::vector<std::int64_t> pct = percentage_hundredths(w);
    ordered_json arr = ordered_json::array();
    for (std::size_t j = 0; j < indicators.size(); ++j) {
        ordered_json entry;
        entry["indicator"] = indicators[j].name;
        entry["entropy"] = round_sig6(h.values[j]);
        entry["weight"] = round_sig6(w.values[j]);
        entry["percentage"] = format_hundredths(pct[j]);
        arr.push_back(std::move(entry));
    }
    return arr;
}

ordered_json rotation_json(const RotationResult& rot) {
    ordered_json r;
    r["rotated_loadings"] = matrix_json(rot.rotated_loadings);
    r["rotation_matrix"] = matrix_json(rot.rotation);
    r["variance_shares"] = vector_json(rot.rotated_variance_shares);
    return r;
}

void append_model_json(ordered_json& doc, const ComponentModel& model) {
    doc["eigenvalues"] = vector_json(model.eigenvalues);
    doc["explained_ratios"] = vector_json(model.explained_ratios);
    doc["cumulative_ratios"] = vector_json(model.cumulative_ratios);
    doc["retained"] = model.retained;
    doc["loadings"] = matrix_json(model.loadings);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string fnv1a64_digest(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string("fnv1a64:") + buf;
}

ComponentSummary summarize_components(const JudgmentMatrix& x, const Retention& retention,
                                      Rotation rotation) {
    ComponentSummary summary;

    std::vector<std::size_t> varying;
    for (std::size_t j = 0; j < x.indicator_count(); ++j) {
        double lo = x.values(0, j);
        double hi = lo;
        for (std::size_t i = 1; i < x.object_count(); ++i) {
            lo = std::min(lo, x.values(i, j));
            hi = std::max(hi, x.values(i, j));
        }
        if (lo == hi) {
            summary.excluded_constant.push_back(x.indicators[j].name);
        } else {
            varying.push_back(j);
            summary.indicators.push_back(x.indicators[j].name);
        }
    }
    if (varying.empty()) {
        throw DegenerateDataError("components: every indicator is constant");
    }

    Matrix values(x.object_count(), varying.size());
    std::vector<IndicatorSpec> specs(varying.size());
    for (std::size_t j = 0; j < varying.size(); ++j) {
        specs[j] = x.indicators[varying[j]];
        for (std::size_t i = 0; i < x.object_count(); ++i) {
            values(i, j) = x.values(i, varying[j]);
        }
    }
    const JudgmentMatrix sub = JudgmentMatrix::create(x.objects, specs, std::move(values));
    const StandardizedMatrix zx = zscore_standardize(sub);
    summary.model = fit_pca(zx, retention);
    // a single varying indicator leaves nothing to rotate
    if (rotation == Rotation::varimax && summary.model.loadings.rows() >= 2) {
        summary.rotation = varimax_rotate(summary.model.loadings);
    }
    return summary;
}

std::string serialize_report(const ordered_json& doc) { return doc.dump(2) + "\n"; }

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path temp = target.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("output: cannot write '" + path + "'");
        out << content;
        out.flush();
        if (!out.good()) {
            out.close();
            std::error_code ec;
            fs::remove(temp, ec);
            throw ValidationError("output: failed while writing '" + path + "'");
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp, ec);
        throw ValidationError("output: cannot move temporary file onto '" + path + "'");
    }
}

ordered_json build_weights_report(const std::vector<IndicatorSpec>& indicators,
                                  const EntropyVector& h, const WeightVector& w,
                                  const Provenance& prov) {
    ordered_json doc = report_header("weights", prov);
    doc["weights"] = weights_array(indicators, h, w);
    return doc;
}

ordered_json build_evaluate_report(const JudgmentMatrix& x, const EntropyVector& h,
                                   const WeightVector& w, const std::vector<ScoreCard>& cards,
                                   const GradeScale& scale, const std::string& scale_name,
                                   const ComponentSummary& summary, const Provenance& prov) {
    ordered_json doc = report_header("evaluate", prov);

    ordered_json bands = ordered_json::array();
    for (const auto& band : scale.bands()) {
        bands.push_back(
            ordered_json{{"lower", band.lower}, {"upper", band.upper}, {"label", band.label}});
    }
    doc["grade_scale"] = ordered_json{{"name", scale_name}, {"bands", std::move(bands)}};

    doc["weights"] = weights_array(x.indicators, h, w);

    ordered_json scores = ordered_json::array();
    for (const auto& card : cards) {
        ordered_json entry;
        entry["object"] = card.object;
        entry["raw_score"] = round_sig6(card.raw_score);
        entry["scaled_score"] =
            static_cast<double>(half_up_hundredths(card.scaled_score)) / 100.0;
        entry["grade"] = card.grade;
        entry["rank"] = card.rank;
        scores.push_back(std::move(entry));
    }
    doc["scores"] = std::move(scores);

    ordered_json components;
    components["indicators"] = summary.indicators;
    components["excluded_constant"] = summary.excluded_constant;
    append_model_json(components, summary.model);
    if (summary.rotation) components["rotation"] = rotation_json(*summary.rotation);
    doc["components"] = std::move(components);
    return doc;
}

ordered_json build_normalize_report(const NormalizedMatrix& r, const Provenance& prov) {
    ordered_json doc = report_header("normalize", prov);
    doc["objects"] = r.objects;
    ordered_json names = ordered_json::array();
    for (const auto& spec : r.indicators) names.push_back(spec.name);
    doc["indicators"] = std::move(names);
    doc["values"] = matrix_json(r.values);
    return doc;
}

ordered_json build_components_report(const std::string& command,
                                     const std::vector<std::string>& indicator_names,
                                     const std::vector<std::string>& objects,
                                     const ComponentModel& model,
                                     const std::optional<RotationResult>& rotation,
                                     const Matrix& scores, const CompositeScores& composite,
                                     const Provenance& prov) {
    ordered_json doc = report_header(command, prov);
    doc["indicators"] = indicator_names;
    append_model_json(doc, model);
    if (rotation) doc["rotation"] = rotation_json(*rotation);
    doc["scores"] = ordered_json{{"objects", objects}, {"values", matrix_json(scores)}};
    ordered_json comp = ordered_json::array();
    for (std::size_t i = 0; i < objects.size(); ++i) {
        comp.push_back(
            ordered_json{{"object", objects[i]}, {"score", round_sig6(composite.values[i])}});
    }
    doc["composite"] = std::move(comp);
    return doc;
}

std::string render_weights_csv(const std::vector<IndicatorSpec>& indicators,
                               const EntropyVector& h, const WeightVector& w) {
    const std::vector<std::int64_t> pct = percentage_hundredths(w);
    std::string out = "indicator,entropy,weight,percentage\n";
    for (std::size_t j = 0; j < indicators.size(); ++j) {
        ensure_csv_label(indicators[j].name, "indicator name");
        out += indicators[j].name;
        out += ',';
        out += format_sig6(h.values[j]);
        out += ',';
        out += format_sig6(w.values[j]);
        out += ',';
        out += format_hundredths(pct[j]);
        out += '\n';
    }
    return out;
}

std::string render_scores_csv(const std::vector<ScoreCard>& cards) {
    std::string out = "object,raw_score,scaled_score,grade,rank\n";
    for (const auto& card : cards) {
        ensure_csv_label(card.object, "object label");
        ensure_csv_label(card.grade, "grade label");
        out += card.object;
        out += ',';
        out += format_sig6(card.raw_score);
        out += ',';
        out += format_hundredths(half_up_hundredths(card.scaled_score));
        out += ',';
        out += card.grade;
        out += ',';
        out += std::to_string(card.rank);
        out += '\n';
    }
    return out;
}

std::string render_scree_csv(const ComponentModel& model) {
    std::string out = "component_index,eigenvalue,explained_ratio,cumulative_ratio\n";
    for (std::size_t i = 0; i < model.eigenvalues.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_sig6(model.eigenvalues[i]);
        out += ',';
        out += format_sig6(model.explained_ratios[i]);
        out += ',';
        out += format_sig6(model.cumulative_ratios[i]);
        out += '\n';
    }
    return out;
}

}  // namespace evalkit
