#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evalkit/matrix.hpp"
#include "evalkit/preprocess.hpp"

namespace evalkit {

/// Column-stochastic proportions, every entry strictly positive.
struct ProportionMatrix {
    Matrix values;
};

/// Per-indicator normalized information entropy, each value in [0,1].
/// 1 means the indicator carries no discriminating information.
struct EntropyVector {
    std::vector<double> values;
};

/// Nonnegative indicator weights summing to 1.
struct WeightVector {
    std::vector<double> values;
};

/// f_ij = (1 + r_ij) / sum_i (1 + r_ij). The corrected form is used
/// unconditionally: min-max guarantees a zero in every non-constant
/// column, so the uncorrected proportion would always hit ln 0.
ProportionMatrix corrected_proportions(const NormalizedMatrix& r);

/// H_j = -(1/ln m) * sum_i f_ij ln f_ij with m = object count.
/// An exactly-uniform column yields H_j = 1 exactly, so constant
/// indicators end up with weight exactly 0 downstream.
EntropyVector information_entropy(const ProportionMatrix& f);

/// w_j = (1 - H_j) / sum_k (1 - H_k). All H_j = 1 is a degenerate-weights
/// error (the data carries no information at all).
WeightVector entropy_weights(const EntropyVector& h);

/// Composition of the three entropy steps.
WeightVector compute_weights(const NormalizedMatrix& r);

/// Display percentages in integer hundredths (12.34% -> 1234), reconciled
/// by largest remainder so the column always totals exactly 10000.
std::vector<std::int64_t> percentage_hundredths(const WeightVector& w);

}  // namespace evalkit
