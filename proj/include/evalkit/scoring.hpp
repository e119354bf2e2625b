#pragma once

#include <string>
#include <vector>

#include "evalkit/entropy.hpp"
#include "evalkit/preprocess.hpp"

namespace evalkit {

struct GradeBand {
    double lower = 0.0;
    double upper = 0.0;
    std::string label;
};

/// Ordered bands covering [0,100] exactly. Each band is lower-exclusive
/// and upper-inclusive ("includes large but not small"); the lowest band
/// additionally includes its lower bound so 0 is covered.
class GradeScale {
public:
    static GradeScale create(std::vector<GradeBand> bands);

    // 0-20 Very bad / 20-50 Poor / 50-80 Good / 80-100 Very good
    static const GradeScale& us_4band();
    // 0-20 V / 20-40 IV / 40-60 III / 60-80 II / 80-100 I
    static const GradeScale& impact_5band();
    // resolves "us-4band" / "impact-5band"; unknown name is a config error
    static const GradeScale& preset(const std::string& name);

    const std::vector<GradeBand>& bands() const { return bands_; }

private:
    std::vector<GradeBand> bands_;
};

struct ScoreCard {
    std::string object;
    double raw_score = 0.0;     // in [0,1]
    double scaled_score = 0.0;  // raw_score * 100, unrounded; displayed at 2 decimals
    std::string grade;
    std::size_t rank = 0;
};

/// score_i = sum_j w_j * r_ij; every score lands in [0,1].
std::vector<double> weighted_total_score(const NormalizedMatrix& r, const WeightVector& w);

/// Unique band label for a scaled score in [0,100].
const std::string& assign_grade(double scaled, const GradeScale& scale);

/// Dense ranking by descending scaled score; exact ties share a rank.
/// Returns the cards sorted by descending score, ties in input order.
std::vector<ScoreCard> rank_objects(std::vector<ScoreCard> cards);

/// The full entropy-weighted evaluation: min-max normalize, entropy
/// weights, weighted total, x100 scaling, grading, ranking.
std::vector<ScoreCard> evaluate(const JudgmentMatrix& x, const GradeScale& scale);

}  // namespace evalkit
