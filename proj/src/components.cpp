#include "evalkit/components.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "evalkit/eigen.hpp"
#include "evalkit/errors.hpp"

namespace evalkit {

namespace {

constexpr double kNegligibleEigenvalue = 1e-12;

double varimax_criterion(const Matrix& b) {
    const std::size_t n = b.rows();
    const std::size_t k = b.cols();
    double crit = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        double s2 = 0.0;
        double s4 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double sq = b(i, j) * b(i, j);
            s2 += sq;
            s4 += sq * sq;
        }
        crit += s4 - s2 * s2 / static_cast<double>(n);
    }
    return crit;
}

void fix_rotated_column_sign(Matrix& loadings, Matrix& rotation, std::size_t col) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < loadings.rows(); ++i) {
        const double a = std::abs(loadings(i, col));
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (loadings(best, col) < 0.0) {
        for (std::size_t i = 0; i < loadings.rows(); ++i) loadings(i, col) = -loadings(i, col);
        for (std::size_t i = 0; i < rotation.rows(); ++i) rotation(i, col) = -rotation(i, col);
    }
}

}  // namespace

Retention Retention::by_threshold(double threshold) {
    Retention r;
    r.explicit_count = false;
    r.threshold = threshold;
    return r;
}

Retention Retention::by_count(std::size_t k) {
    Retention r;
    r.explicit_count = true;
    r.count = k;
    return r;
}

std::vector<double> ComponentModel::retained_shares() const {
    return {explained_ratios.begin(),
            explained_ratios.begin() + static_cast<std::ptrdiff_t>(retained)};
}

Matrix correlation_matrix(const StandardizedMatrix& zx) {
    const std::size_t m = zx.values.rows();
    const std::size_t n = zx.values.cols();
    if (m < 2) {
        throw ValidationError("correlation_matrix: at least 2 objects required, got " +
                              std::to_string(m));
    }
    Matrix corr(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < m; ++i) s += zx.values(i, j) * zx.values(i, k);
            double v = s / static_cast<double>(m - 1);
            v = std::clamp(v, -1.0, 1.0);
            corr(j, k) = v;
            corr(k, j) = v;
        }
        corr(j, j) = 1.0;
    }
    return corr;
}

std::size_t retain_components(const std::vector<double>& explained_ratios, double threshold) {
    if (explained_ratios.empty()) {
        throw ValidationError("retain_components: empty explained-ratio list");
    }
    double total = 0.0;
    for (double r : explained_ratios) {
        if (r < -1e-9) {
            throw ValidationError("retain_components: negative explained ratio " +
                                  std::to_string(r));
        }
        total += r;
    }
    if (total > 1.0 + 1e-9) {
        throw ValidationError("retain_components: explained ratios sum to " +
                              std::to_string(total) + " > 1");
    }
    double cumulative = 0.0;
    for (std::size_t k = 0; k < explained_ratios.size(); ++k) {
        cumulative += explained_ratios[k];
        if (cumulative >= threshold) return k + 1;
    }
    return explained_ratios.size();
}

ComponentModel fit_pca(const StandardizedMatrix& zx, const Retention& retention) {
    const std::size_t n = zx.values.cols();
    const Matrix corr = correlation_matrix(zx);
    const EigenDecomposition eig = jacobi_eigh(corr);

    ComponentModel model;
    model.eigenvalues = eig.eigenvalues;
    model.explained_ratios.resize(n);
    model.cumulative_ratios.resize(n);
    double running = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        model.explained_ratios[i] = eig.eigenvalues[i] / static_cast<double>(n);
        running += model.explained_ratios[i];
        model.cumulative_ratios[i] = running;
    }

    if (retention.explicit_count) {
        if (retention.count < 1 || retention.count > n) {
            throw ValidationError("fit_pca: retained count " + std::to_string(retention.count) +
                                  " outside [1, " + std::to_string(n) + "]");
        }
        model.retained = retention.count;
    } else {
        model.retained = retain_components(model.explained_ratios, retention.threshold);
    }

    const std::size_t k = model.retained;
    model.loadings = Matrix(n, k);
    model.eigvec_basis = Matrix(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        const double lambda = eig.eigenvalues[c];
        const double scale = lambda > kNegligibleEigenvalue ? std::sqrt(lambda) : 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            model.eigvec_basis(i, c) = eig.eigenvectors(i, c);
            model.loadings(i, c) = eig.eigenvectors(i, c) * scale;
        }
    }
    return model;
}

ComponentModel fit_pca(const StandardizedMatrix& zx, double threshold) {
    return fit_pca(zx, Retention::by_threshold(threshold));
}

Matrix component_scores(const StandardizedMatrix& zx, const Matrix& basis) {
    return matmul(zx.values, basis);
}

CompositeScores composite_scores(const Matrix& y, const std::vector<double>& shares) {
    if (shares.size() != y.cols()) {
        throw ShapeError("composite_scores: " + std::to_string(shares.size()) +
                         " shares vs score matrix " + y.shape_str());
    }
    CompositeScores out;
    out.values.resize(y.rows());
    for (std::size_t i = 0; i < y.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < y.cols(); ++j) s += y(i, j) * shares[j];
        out.values[i] = s;
    }
    return out;
}

RotationResult varimax_rotate(const Matrix& loadings, const VarimaxOptions& opts) {
    const std::size_t n = loadings.rows();
    const std::size_t k = loadings.cols();
    if (n < 2) {
        throw ShapeError("varimax_rotate: at least 2 indicators required, got " +
                         loadings.shape_str());
    }
    if (k < 1) {
        throw ShapeError("varimax_rotate: at least 1 factor required, got " +
                         loadings.shape_str());
    }

    RotationResult result;
    result.rotation = Matrix::identity(k);

    if (k == 1) {
        result.rotated_loadings = loadings;
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) ss += loadings(i, 0) * loadings(i, 0);
        result.rotated_variance_shares = {ss / static_cast<double>(n)};
        result.criterion_trace = {varimax_criterion(loadings)};
        return result;
    }

    // Kaiser row normalization; the rotation found on the normalized copy
    // applies unchanged to the original loadings.
    Matrix b = loadings;
    if (opts.kaiser_normalize) {
        for (std::size_t i = 0; i < n; ++i) {
            double h = 0.0;
            for (std::size_t j = 0; j < k; ++j) h += b(i, j) * b(i, j);
            h = h > 0.0 ? std::sqrt(h) : 1.0;
            for (std::size_t j = 0; j < k; ++j) b(i, j) /= h;
        }
    }

    const double fn = static_cast<double>(n);
    double crit = varimax_criterion(b);
    result.criterion_trace.push_back(crit);

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            for (std::size_t l = j + 1; l < k; ++l) {
                double su = 0.0, sv = 0.0, suv = 0.0, suu_vv = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double u = b(i, j) * b(i, j) - b(i, l) * b(i, l);
                    const double v = 2.0 * b(i, j) * b(i, l);
                    su += u;
                    sv += v;
                    suv += u * v;
                    suu_vv += u * u - v * v;
                }
                const double num = 2.0 * (fn * suv - su * sv);
                const double den = fn * suu_vv - (su * su - sv * sv);
                if (std::abs(num) <= 1e-12 * std::abs(den)) continue;

                const double angle = 0.25 * std::atan2(num, den);
                const double c = std::cos(angle);
                const double s = std::sin(angle);
                for (std::size_t i = 0; i < n; ++i) {
                    const double bj = b(i, j);
                    const double bl = b(i, l);
                    b(i, j) = c * bj + s * bl;
                    b(i, l) = -s * bj + c * bl;
                }
                for (std::size_t i = 0; i < k; ++i) {
                    const double rj = result.rotation(i, j);
                    const double rl = result.rotation(i, l);
                    result.rotation(i, j) = c * rj + s * rl;
                    result.rotation(i, l) = -s * rj + c * rl;
                }
                rotated = true;
            }
        }
        const double next = varimax_criterion(b);
        result.criterion_trace.push_back(next);
        const double gain = (next - crit) / std::max(std::abs(next), 1.0);
        crit = next;
        if (!rotated || gain < opts.rel_improvement) break;
    }

    result.rotated_loadings = matmul(loadings, result.rotation);
    for (std::size_t j = 0; j < k; ++j) {
        fix_rotated_column_sign(result.rotated_loadings, result.rotation, j);
    }

    std::vector<double> shares(k);
    for (std::size_t j = 0; j < k; ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ss += result.rotated_loadings(i, j) * result.rotated_loadings(i, j);
        }
        shares[j] = ss / fn;
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t c) { return shares[a] > shares[c]; });

    Matrix sorted_loadings(n, k);
    Matrix sorted_rotation(k, k);
    result.rotated_variance_shares.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t src = order[j];
        result.rotated_variance_shares[j] = shares[src];
        for (std::size_t i = 0; i < n; ++i) sorted_loadings(i, j) = result.rotated_loadings(i, src);
        for (std::size_t i = 0; i < k; ++i) sorted_rotation(i, j) = result.rotation(i, src);
    }
    result.rotated_loadings = std::move(sorted_loadings);
    result.rotation = std::move(sorted_rotation);
    return result;
}

Matrix eigvec_from_loadings(const Matrix& loadings, const std::vector<double>& eigenvalues) {
    if (eigenvalues.size() < loadings.cols()) {
        throw ShapeError("eigvec_from_loadings: " + std::to_string(eigenvalues.size()) +
                         " eigenvalues for loading matrix " + loadings.shape_str());
    }
    Matrix t(loadings.rows(), loadings.cols());
    for (std::size_t j = 0; j < loadings.cols(); ++j) {
        if (eigenvalues[j] <= kNegligibleEigenvalue) continue;  // zero column
        const double inv = 1.0 / std::sqrt(eigenvalues[j]);
        for (std::size_t i = 0; i < loadings.rows(); ++i) t(i, j) = loadings(i, j) * inv;
    }
    return t;
}

}  // namespace evalkit
