#pragma once

#include <map>
#include <string>
#include <vector>

#include "evalkit/matrix.hpp"

namespace evalkit {

enum class Direction { benefit, cost };
enum class IndicatorKind { quantitative, qualitative_binary };

struct IndicatorSpec {
    std::string name;
    Direction direction = Direction::benefit;
    IndicatorKind kind = IndicatorKind::quantitative;

    bool operator==(const IndicatorSpec&) const = default;
};

/// Raw m x n matrix of indicator values with object/indicator labels.
/// m >= 2, n >= 1, all values finite, indicator names unique.
struct JudgmentMatrix {
    std::vector<std::string> objects;
    std::vector<IndicatorSpec> indicators;
    Matrix values;

    static JudgmentMatrix create(std::vector<std::string> objects,
                                 std::vector<IndicatorSpec> indicators, Matrix values);

    std::size_t object_count() const { return values.rows(); }
    std::size_t indicator_count() const { return values.cols(); }
};

/// Min-max scaled values, every entry in [0,1]; each non-constant column
/// touches both 0 and 1.
struct NormalizedMatrix {
    std::vector<std::string> objects;
    std::vector<IndicatorSpec> indicators;
    Matrix values;
};

/// Column z-scores: mean 0, sample (m-1) standard deviation 1.
struct StandardizedMatrix {
    std::vector<std::string> objects;
    std::vector<IndicatorSpec> indicators;
    Matrix values;
};

/// Direction-aware min-max scaling. Benefit columns map min->0, max->1;
/// cost columns are the exact complement; constant columns map to 0.5.
NormalizedMatrix minmax_normalize(const JudgmentMatrix& x);

/// Column z-scoring with the sample (m-1) standard deviation. Constant
/// columns are a degenerate-column error naming the indicator.
StandardizedMatrix zscore_standardize(const JudgmentMatrix& x);

/// Replaces category labels with 0/1 per the mapping. An unmapped label
/// is a validation error naming the label.
std::vector<double> quantize_qualitative(const std::vector<std::string>& labels,
                                         const std::map<std::string, double>& mapping);

}  // namespace evalkit
