#include "evalkit/preprocess.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "evalkit/errors.hpp"

namespace evalkit {

JudgmentMatrix JudgmentMatrix::create(std::vector<std::string> objects,
                                      std::vector<IndicatorSpec> indicators, Matrix values) {
    if (values.rows() != objects.size() || values.cols() != indicators.size()) {
        throw ShapeError("judgment matrix: " + std::to_string(objects.size()) + " objects, " +
                         std::to_string(indicators.size()) + " indicators vs values " +
                         values.shape_str());
    }
    if (values.rows() < 2) {
        throw ValidationError("judgment matrix: at least 2 objects required, got " +
                              std::to_string(values.rows()));
    }
    if (values.cols() < 1) {
        throw ValidationError("judgment matrix: at least 1 indicator required");
    }
    std::set<std::string> seen;
    for (const auto& ind : indicators) {
        if (!seen.insert(ind.name).second) {
            throw ValidationError("judgment matrix: duplicate indicator name '" + ind.name + "'");
        }
    }
    values.check_finite("judgment matrix");
    return JudgmentMatrix{std::move(objects), std::move(indicators), std::move(values)};
}

NormalizedMatrix minmax_normalize(const JudgmentMatrix& x) {
    const std::size_t m = x.object_count();
    const std::size_t n = x.indicator_count();
    Matrix r(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = x.values(0, j);
        double hi = lo;
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, x.values(i, j));
            hi = std::max(hi, x.values(i, j));
        }
        const bool constant = (hi == lo);
        const bool cost = x.indicators[j].direction == Direction::cost;
        for (std::size_t i = 0; i < m; ++i) {
            double v;
            if (constant) {
                v = 0.5;
            } else {
                v = (x.values(i, j) - lo) / (hi - lo);
                // complement form keeps cost == 1 - benefit bit-exact
                if (cost) v = 1.0 - v;
            }
            r(i, j) = v;
        }
    }
    return NormalizedMatrix{x.objects, x.indicators, std::move(r)};
}

StandardizedMatrix zscore_standardize(const JudgmentMatrix& x) {
    const std::size_t m = x.object_count();
    const std::size_t n = x.indicator_count();
    Matrix z(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean += x.values(i, j);
        mean /= static_cast<double>(m);

        double ss = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double d = x.values(i, j) - mean;
            ss += d * d;
        }
        if (ss == 0.0) {
            throw DegenerateDataError("zscore_standardize: indicator '" + x.indicators[j].name +
                                      "' has zero variance");
        }
        const double sd = std::sqrt(ss / static_cast<double>(m - 1));
        for (std::size_t i = 0; i < m; ++i) z(i, j) = (x.values(i, j) - mean) / sd;
    }
    return StandardizedMatrix{x.objects, x.indicators, std::move(z)};
}

std::vector<double> quantize_qualitative(const std::vector<std::string>& labels,
                                         const std::map<std::string, double>& mapping) {
    std::vector<double> out;
    out.reserve(labels.size());
    for (const auto& label : labels) {
        auto it = mapping.find(label);
        if (it == mapping.end()) {
            throw ValidationError("quantize_qualitative: unmapped label '" + label + "'");
        }
        out.push_back(it->second);
    }
    return out;
}

}  // namespace evalkit
