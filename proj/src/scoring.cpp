#include "evalkit/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "evalkit/errors.hpp"

namespace evalkit {

GradeScale GradeScale::create(std::vector<GradeBand> bands) {
    if (bands.empty()) throw ConfigError("grade scale: no bands given");
    std::stable_sort(bands.begin(), bands.end(),
                     [](const GradeBand& a, const GradeBand& b) { return a.lower < b.lower; });
    for (const auto& band : bands) {
        if (!(band.lower < band.upper)) {
            throw ConfigError("grade scale: band '" + band.label + "' has lower bound " +
                              std::to_string(band.lower) + " >= upper bound " +
                              std::to_string(band.upper));
        }
        if (band.label.empty()) throw ConfigError("grade scale: empty band label");
    }
    for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
        if (bands[i].upper > bands[i + 1].lower) {
            throw ConfigError("grade scale: bands '" + bands[i].label + "' and '" +
                              bands[i + 1].label + "' overlap");
        }
        if (bands[i].upper < bands[i + 1].lower) {
            throw ConfigError("grade scale: gap between bands '" + bands[i].label + "' and '" +
                              bands[i + 1].label + "'");
        }
    }
    if (bands.front().lower != 0.0 || bands.back().upper != 100.0) {
        throw ConfigError("grade scale: bands must cover [0,100] exactly, got [" +
                          std::to_string(bands.front().lower) + "," +
                          std::to_string(bands.back().upper) + "]");
    }
    GradeScale scale;
    scale.bands_ = std::move(bands);
    return scale;
}

const GradeScale& GradeScale::us_4band() {
    static const GradeScale scale = GradeScale::create({{0.0, 20.0, "Very bad"},
                                                        {20.0, 50.0, "Poor"},
                                                        {50.0, 80.0, "Good"},
                                                        {80.0, 100.0, "Very good"}});
    return scale;
}

const GradeScale& GradeScale::impact_5band() {
    static const GradeScale scale = GradeScale::create({{0.0, 20.0, "V"},
                                                        {20.0, 40.0, "IV"},
                                                        {40.0, 60.0, "III"},
                                                        {60.0, 80.0, "II"},
                                                        {80.0, 100.0, "I"}});
    return scale;
}

const GradeScale& GradeScale::preset(const std::string& name) {
    if (name == "us-4band") return us_4band();
    if (name == "impact-5band") return impact_5band();
    throw ConfigError("grade scale: unknown preset '" + name +
                      "' (expected us-4band or impact-5band)");
}

std::vector<double> weighted_total_score(const NormalizedMatrix& r, const WeightVector& w) {
    if (w.values.size() != r.values.cols()) {
        throw ShapeError("weighted_total_score: " + std::to_string(w.values.size()) +
                         " weights vs normalized matrix " + r.values.shape_str());
    }
    std::vector<double> scores(r.values.rows());
    for (std::size_t i = 0; i < r.values.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < r.values.cols(); ++j) s += w.values[j] * r.values(i, j);
        scores[i] = s;
    }
    return scores;
}

const std::string& assign_grade(double scaled, const GradeScale& scale) {
    if (!(scaled >= 0.0 && scaled <= 100.0)) {
        throw ValidationError("assign_grade: score " + std::to_string(scaled) +
                              " outside [0,100]");
    }
    const auto& bands = scale.bands();
    if (scaled <= bands.front().upper) return bands.front().label;  // lowest band closed at 0
    for (std::size_t i = 1; i < bands.size(); ++i) {
        if (scaled > bands[i].lower && scaled <= bands[i].upper) return bands[i].label;
    }
    return bands.back().label;  // unreachable: bands cover [0,100]
}

std::vector<ScoreCard> rank_objects(std::vector<ScoreCard> cards) {
    if (cards.empty()) throw ValidationError("rank_objects: no score cards");
    std::stable_sort(cards.begin(), cards.end(), [](const ScoreCard& a, const ScoreCard& b) {
        return a.scaled_score > b.scaled_score;
    });
    std::size_t rank = 0;
    double last = std::numeric_limits<double>::quiet_NaN();
    for (auto& card : cards) {
        if (!(card.scaled_score == last)) {
            ++rank;
            last = card.scaled_score;
        }
        card.rank = rank;
    }
    return cards;
}

std::vector<ScoreCard> evaluate(const JudgmentMatrix& x, const GradeScale& scale) {
    const NormalizedMatrix r = minmax_normalize(x);
    const WeightVector w = compute_weights(r);
    const std::vector<double> raw = weighted_total_score(r, w);

    std::vector<ScoreCard> cards(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        cards[i].object = x.objects[i];
        cards[i].raw_score = raw[i];
        cards[i].scaled_score = raw[i] * 100.0;
        cards[i].grade = assign_grade(cards[i].scaled_score, scale);
    }
    return rank_objects(std::move(cards));
}

}  // namespace evalkit
