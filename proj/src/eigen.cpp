#include "evalkit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "evalkit/errors.hpp"

namespace evalkit {

namespace {

double offdiag_norm(const Matrix& a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
}

// Largest-magnitude entry positive, ties broken by lowest index.
void fix_column_sign(Matrix& v, std::size_t col) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const double a = std::abs(v(i, col));
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (v(best, col) < 0.0) {
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, col) = -v(i, col);
    }
}

}  // namespace

EigenDecomposition jacobi_eigh(const Matrix& s, const JacobiOptions& opts) {
    const std::size_t n = s.rows();
    if (n == 0 || n != s.cols()) {
        throw ValidationError("jacobi_eigh: matrix " + s.shape_str() + " is not square");
    }
    const double scale = s.max_abs();
    const double sym_tol = 1e-12 * (1.0 + scale);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (std::abs(s(p, q) - s(q, p)) > sym_tol) {
                throw ValidationError("jacobi_eigh: matrix is not symmetric at (" +
                                      std::to_string(p) + "," + std::to_string(q) +
                                      "): " + std::to_string(s(p, q)) + " vs " +
                                      std::to_string(s(q, p)));
            }
        }
    }

    // Work on a copy with the lower triangle mirrored from the upper, so
    // sub-tolerance input asymmetries cannot leak into the iteration.
    Matrix a = s;
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) a(q, p) = a(p, q);

    const double conv_tol = opts.rel_tolerance * (1.0 + a.frobenius_norm());
    Matrix v = Matrix::identity(n);

    int sweep = 0;
    while (offdiag_norm(a) > conv_tol) {
        if (sweep++ >= opts.max_sweeps) {
            throw ConvergenceError("jacobi_eigh: no convergence after " +
                                   std::to_string(opts.max_sweeps) +
                                   " sweeps; off-diagonal norm " + std::to_string(offdiag_norm(a)));
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;

                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);  // avoids overflow in theta*theta
                } else {
                    const double sg = theta < 0.0 ? -1.0 : 1.0;
                    t = sg / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                const double tau = sn / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p);
                        const double arq = a(r, q);
                        a(r, p) = arp - sn * (arq + tau * arp);
                        a(p, r) = a(r, p);
                        a(r, q) = arq + sn * (arp - tau * arq);
                        a(q, r) = a(r, q);
                    }
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = c * vrp - sn * vrq;
                    v(r, q) = sn * vrp + c * vrq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
        fix_column_sign(out.eigenvectors, k);
    }
    return out;
}

}  // namespace evalkit
