#include "evalkit/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evalkit/errors.hpp"

namespace evalkit {

ProportionMatrix corrected_proportions(const NormalizedMatrix& r) {
    const std::size_t m = r.values.rows();
    const std::size_t n = r.values.cols();
    Matrix f(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) sum += 1.0 + r.values(i, j);
        for (std::size_t i = 0; i < m; ++i) f(i, j) = (1.0 + r.values(i, j)) / sum;
    }
    return ProportionMatrix{std::move(f)};
}

EntropyVector information_entropy(const ProportionMatrix& f) {
    const std::size_t m = f.values.rows();
    const std::size_t n = f.values.cols();
    if (m < 2) {
        throw ValidationError("information_entropy: at least 2 objects required, got " +
                              std::to_string(m));
    }
    const double log_m = std::log(static_cast<double>(m));
    EntropyVector h;
    h.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        bool uniform = true;
        for (std::size_t i = 1; i < m && uniform; ++i) {
            uniform = (f.values(i, j) == f.values(0, j));
        }
        if (uniform) {
            h.values[j] = 1.0;  // exact, so 1 - H_j is exactly 0
            continue;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double p = f.values(i, j);
            if (p <= 0.0) {
                throw ValidationError("information_entropy: non-positive proportion at row " +
                                      std::to_string(i) + ", column " + std::to_string(j));
            }
            s += p * std::log(p);
        }
        h.values[j] = std::clamp(-s / log_m, 0.0, 1.0);
    }
    return h;
}

WeightVector entropy_weights(const EntropyVector& h) {
    const double slack = 1e-12;
    double total = 0.0;
    for (double hj : h.values) {
        if (hj < -slack || hj > 1.0 + slack) {
            throw ValidationError("entropy_weights: entropy " + std::to_string(hj) +
                                  " outside [0,1]");
        }
        total += 1.0 - std::min(hj, 1.0);
    }
    if (total <= 0.0) {
        throw DegenerateDataError(
            "entropy_weights: every indicator has entropy 1 (zero total information)");
    }
    WeightVector w;
    w.values.resize(h.values.size());
    for (std::size_t j = 0; j < h.values.size(); ++j) {
        w.values[j] = (1.0 - std::min(h.values[j], 1.0)) / total;
    }
    return w;
}

WeightVector compute_weights(const NormalizedMatrix& r) {
    return entropy_weights(information_entropy(corrected_proportions(r)));
}

std::vector<std::int64_t> percentage_hundredths(const WeightVector& w) {
    const std::size_t n = w.values.size();
    std::vector<std::int64_t> units(n);
    std::vector<double> fracs(n);
    std::int64_t assigned = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double exact = 10000.0 * w.values[j];
        units[j] = static_cast<std::int64_t>(std::floor(exact));
        fracs[j] = exact - std::floor(exact);
        assigned += units[j];
    }
    std::int64_t leftover = 10000 - assigned;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        // exact-zero weights never receive a top-up unit before real ones
        const bool a_zero = (w.values[a] == 0.0);
        const bool b_zero = (w.values[b] == 0.0);
        if (a_zero != b_zero) return b_zero;
        return fracs[a] > fracs[b];
    });
    for (std::size_t k = 0; k < order.size() && leftover > 0; ++k, --leftover) {
        ++units[order[k]];
    }
    for (std::size_t k = order.size(); k > 0 && leftover < 0; --k, ++leftover) {
        --units[order[k - 1]];
    }
    return units;
}

}  // namespace evalkit
