#pragma once

#include <cstddef>
#include <vector>

#include "evalkit/matrix.hpp"
#include "evalkit/preprocess.hpp"

namespace evalkit {

/// PCA model over the correlation matrix of the standardized data.
/// Eigenvalues cover the full spectrum (descending); loadings and the
/// unit-eigenvector basis hold only the retained components. Loading
/// column i is eigenvector column i scaled by sqrt(lambda_i); components
/// with lambda <= 1e-12 get zero loading columns.
struct ComponentModel {
    std::vector<double> eigenvalues;
    std::vector<double> explained_ratios;   // lambda_i / n
    std::vector<double> cumulative_ratios;  // running sums of explained_ratios
    std::size_t retained = 0;
    Matrix loadings;      // n_indicators x retained
    Matrix eigvec_basis;  // n_indicators x retained, orthonormal columns

    /// Explained-variance shares of the retained components, the weights
    /// of the composite score on the unrotated path.
    std::vector<double> retained_shares() const;
};

struct RotationResult {
    Matrix rotated_loadings;                      // n x k
    Matrix rotation;                              // k x k orthogonal
    std::vector<double> rotated_variance_shares;  // column SS / n, descending
    std::vector<double> criterion_trace;          // varimax criterion per sweep
};

struct CompositeScores {
    std::vector<double> values;  // per object
};

/// How many components fit_pca keeps: smallest k with cumulative
/// explained ratio >= threshold, or an explicit count.
struct Retention {
    static Retention by_threshold(double threshold);
    static Retention by_count(std::size_t k);

    bool explicit_count = false;
    double threshold = 0.85;
    std::size_t count = 0;
};

/// n x n sample correlation matrix Zx'Zx/(m-1) with entries clamped to
/// [-1,1] and an exactly unit diagonal.
Matrix correlation_matrix(const StandardizedMatrix& zx);

/// Smallest k with cumulative ratio >= threshold (k >= 1).
std::size_t retain_components(const std::vector<double>& explained_ratios, double threshold);

ComponentModel fit_pca(const StandardizedMatrix& zx, const Retention& retention);
ComponentModel fit_pca(const StandardizedMatrix& zx, double threshold = 0.85);

/// Per-object component scores y = Zx * t, one column per retained
/// component.
Matrix component_scores(const StandardizedMatrix& zx, const Matrix& basis);

/// Per-object dot product of the score row with the variance shares.
CompositeScores composite_scores(const Matrix& y, const std::vector<double>& shares);

struct VarimaxOptions {
    bool kaiser_normalize = true;
    double rel_improvement = 1e-6;  // convergence: relative criterion gain per sweep
    int max_sweeps = 100;
};

/// Orthogonal varimax rotation of the retained loadings. k = 1 returns
/// the identity rotation. Output columns carry the same sign convention
/// as eigenvectors and are ordered by rotated variance share descending.
RotationResult varimax_rotate(const Matrix& loadings, const VarimaxOptions& opts = {});

/// Unit eigenvectors recovered from loadings: column i divided by
/// sqrt(lambda_i). Components with lambda <= 1e-12 yield zero columns.
Matrix eigvec_from_loadings(const Matrix& loadings, const std::vector<double>& eigenvalues);

}  // namespace evalkit
