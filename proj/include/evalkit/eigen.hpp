#pragma once

#include <vector>

#include "evalkit/matrix.hpp"

namespace evalkit {

/// Full eigendecomposition of a symmetric matrix.
/// Invariants: eigenvalues descending; eigenvector columns orthonormal;
/// in each column the entry of largest magnitude is positive (ties
/// broken by lowest index).
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;  // column i pairs with eigenvalues[i]
};

struct JacobiOptions {
    double rel_tolerance = 1e-12;  // off-diagonal Frobenius norm vs 1 + ||S||_F
    int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver for symmetric matrices. The input must be
/// square and symmetric within 1e-12 relative tolerance; the strictly
/// lower triangle is mirrored from the upper before iteration.
/// Deterministic: identical input gives bit-identical output.
EigenDecomposition jacobi_eigh(const Matrix& s, const JacobiOptions& opts = {});

}  // namespace evalkit
