#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "evalkit/components.hpp"
#include "evalkit/config.hpp"
#include "evalkit/entropy.hpp"
#include "evalkit/preprocess.hpp"
#include "evalkit/scoring.hpp"

namespace evalkit {

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(std::string_view bytes);

/// "fnv1a64:" + 16 lowercase hex digits; the digest format used in
/// report provenance blocks.
std::string fnv1a64_digest(std::string_view bytes);

/// Input fingerprints echoed into every report.
struct Provenance {
    std::string data_digest;                   // digest of the dataset bytes
    std::optional<std::string> config_digest;  // absent when the config was defaulted
    nlohmann::ordered_json config_echo;        // parsed config document, or null
};

/// The component-analysis block of an evaluation report. Constant
/// indicators carry no correlation structure, so they are listed under
/// excluded_constant and the model covers the rest.
struct ComponentSummary {
    std::vector<std::string> indicators;  // analyzed, in dataset order
    std::vector<std::string> excluded_constant;
    ComponentModel model;
    std::optional<RotationResult> rotation;
};

ComponentSummary summarize_components(const JudgmentMatrix& x, const Retention& retention,
                                      Rotation rotation);

/// Serializes a report document: 2-space indent, trailing newline,
/// byte-deterministic for identical inputs.
std::string serialize_report(const nlohmann::ordered_json& doc);

/// Writes via a temporary file in the target directory plus rename, so
/// a failed run never leaves a partial or clobbered output file.
void write_text_atomic(const std::string& path, const std::string& content);

// --- JSON documents (numbers carry 6 significant decimals) ---

nlohmann::ordered_json build_weights_report(const std::vector<IndicatorSpec>& indicators,
                                            const EntropyVector& h, const WeightVector& w,
                                            const Provenance& prov);

nlohmann::ordered_json build_evaluate_report(const JudgmentMatrix& x, const EntropyVector& h,
                                             const WeightVector& w,
                                             const std::vector<ScoreCard>& cards,
                                             const GradeScale& scale,
                                             const std::string& scale_name,
                                             const ComponentSummary& summary,
                                             const Provenance& prov);

nlohmann::ordered_json build_normalize_report(const NormalizedMatrix& r, const Provenance& prov);

nlohmann::ordered_json build_components_report(const std::string& command,
                                               const std::vector<std::string>& indicator_names,
                                               const std::vector<std::string>& objects,
                                               const ComponentModel& model,
                                               const std::optional<RotationResult>& rotation,
                                               const Matrix& scores,
                                               const CompositeScores& composite,
                                               const Provenance& prov);

// --- CSV tables (fixed formatting; labels must be CSV-safe) ---

std::string render_weights_csv(const std::vector<IndicatorSpec>& indicators,
                               const EntropyVector& h, const WeightVector& w);

std::string render_scores_csv(const std::vector<ScoreCard>& cards);

/// Scree data: component_index,eigenvalue,explained_ratio,cumulative_ratio.
std::string render_scree_csv(const ComponentModel& model);

}  // namespace evalkit
