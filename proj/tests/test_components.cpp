#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "evalkit/components.hpp"
#include "evalkit/errors.hpp"
#include "evalkit/matrix.hpp"
#include "evalkit/preprocess.hpp"

using evalkit::ComponentModel;
using evalkit::composite_scores;
using evalkit::CompositeScores;
using evalkit::correlation_matrix;
using evalkit::fit_pca;
using evalkit::Matrix;
using evalkit::retain_components;
using evalkit::Retention;
using evalkit::RotationResult;
using evalkit::StandardizedMatrix;
using evalkit::varimax_rotate;

namespace {

StandardizedMatrix standardized(Matrix values) {
    StandardizedMatrix zx;
    zx.values = std::move(values);
    for (std::size_t i = 0; i < zx.values.rows(); ++i) {
        zx.objects.push_back("o" + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < zx.values.cols(); ++j) {
        evalkit::IndicatorSpec spec;
        spec.name = "x" + std::to_string(j + 1);
        zx.indicators.push_back(spec);
    }
    return zx;
}

double column_sample_variance(const Matrix& m, std::size_t j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) mean += m(i, j);
    mean /= static_cast<double>(m.rows());
    double ss = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) ss += (m(i, j) - mean) * (m(i, j) - mean);
    return ss / static_cast<double>(m.rows() - 1);
}

double row_communality(const Matrix& loadings, std::size_t i) {
    double h = 0.0;
    for (std::size_t j = 0; j < loadings.cols(); ++j) h += loadings(i, j) * loadings(i, j);
    return h;
}

}  // namespace

TEST_CASE("correlation of identical and negated columns") {
    const Matrix col{3, 1, {-1.0, 0.0, 1.0}};
    Matrix twice(3, 2);
    Matrix opposed(3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        twice(i, 0) = twice(i, 1) = col(i, 0);
        opposed(i, 0) = col(i, 0);
        opposed(i, 1) = -col(i, 0);
    }
    CHECK(correlation_matrix(standardized(twice)) == Matrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(correlation_matrix(standardized(opposed)) == Matrix::from_rows({{1, -1}, {-1, 1}}));
}

TEST_CASE("correlation hand case: off-diagonal 0.5") {
    // [0,-1,1] z-scores to itself (mean 0, sample std 1)
    const Matrix values(3, 2, {-1.0, 0.0, 0.0, -1.0, 1.0, 1.0});
    const Matrix corr = correlation_matrix(standardized(values));
    CHECK(corr(0, 0) == 1.0);
    CHECK(corr(1, 1) == 1.0);
    CHECK(corr(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(corr(1, 0) == corr(0, 1));
}

TEST_CASE("correlation rejects a single object") {
    CHECK_THROWS_AS(correlation_matrix(standardized(Matrix(1, 2))), evalkit::ValidationError);
}

TEST_CASE("retention: reference explained ratios keep four components at 0.85") {
    const std::vector<double> ratios{0.57691, 0.20225, 0.06755, 0.05962, 0.09367};
    CHECK(retain_components(ratios, 0.85) == 4);
    // the running sums the rule pivots on
    CHECK(ratios[0] + ratios[1] + ratios[2] == doctest::Approx(0.84671).epsilon(1e-12));
    CHECK(ratios[0] + ratios[1] + ratios[2] + ratios[3] ==
          doctest::Approx(0.90633).epsilon(1e-12));
}

TEST_CASE("retention boundary cases") {
    CHECK(retain_components({1.0}, 1.0) == 1);
    CHECK(retain_components({0.5, 0.3, 0.2}, 0.8) == 2);
    CHECK(retain_components({0.5, 0.5}, 0.85) == 2);
    CHECK(retain_components({0.3, 0.3}, 1.0) == 2);  // never exceeds the list length
    CHECK_THROWS_AS(retain_components({}, 0.85), evalkit::ValidationError);
    CHECK_THROWS_AS(retain_components({0.6, -0.2}, 0.85), evalkit::ValidationError);
    CHECK_THROWS_AS(retain_components({0.8, 0.3}, 0.85), evalkit::ValidationError);  // sum > 1
}

TEST_CASE("fit_pca on a perfectly correlated pair") {
    Matrix values(3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        values(i, 0) = values(i, 1) = static_cast<double>(i) - 1.0;
    }
    const ComponentModel model = fit_pca(standardized(values), 0.85);
    CHECK(model.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(model.eigenvalues[1]) <= 1e-12);
    CHECK(model.explained_ratios[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(model.retained == 1);
    CHECK(model.loadings(0, 0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(model.loadings(1, 0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fit_pca on uncorrelated columns keeps both at 0.85") {
    const double s3 = std::sqrt(3.0);
    const Matrix values(3, 2, {-1.0, 1.0 / s3, 0.0, -2.0 / s3, 1.0, 1.0 / s3});
    const ComponentModel model = fit_pca(standardized(values), 0.85);
    CHECK(model.explained_ratios[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.explained_ratios[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(model.retained == 2);
}

TEST_CASE("fit_pca loading matches the 2x2 closed form") {
    // sample correlation exactly 0.5 (hand case above)
    const Matrix values(3, 2, {-1.0, 0.0, 0.0, -1.0, 1.0, 1.0});
    const ComponentModel model = fit_pca(standardized(values), 0.85);
    CHECK(model.eigenvalues[0] == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(model.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
    // loading = e * sqrt(lambda) = (1/sqrt(2)) * sqrt(1.5) = sqrt(3)/2
    CHECK(model.loadings(0, 0) == doctest::Approx(0.8660254037844385).epsilon(1e-12));
    CHECK(model.loadings(1, 0) == doctest::Approx(0.8660254037844385).epsilon(1e-12));
}

TEST_CASE("fit_pca explicit retained count is validated") {
    const Matrix values(3, 2, {-1.0, 0.0, 0.0, -1.0, 1.0, 1.0});
    const ComponentModel two = fit_pca(standardized(values), Retention::by_count(2));
    CHECK(two.retained == 2);
    CHECK(two.loadings.cols() == 2);
    CHECK_THROWS_AS(fit_pca(standardized(values), Retention::by_count(0)),
                    evalkit::ValidationError);
    CHECK_THROWS_AS(fit_pca(standardized(values), Retention::by_count(3)),
                    evalkit::ValidationError);
}

TEST_CASE("model invariants on random data") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 13 + rng() % 38;  // up to 50
        const std::size_t n = 2 + rng() % 11;   // up to 12
        const evalkit::JudgmentMatrix x = oracles::random_judgment(rng, m, n);
        const StandardizedMatrix zx = evalkit::zscore_standardize(x);
        const ComponentModel model = fit_pca(zx, Retention::by_count(n));

        double ratio_sum = 0.0;
        for (const double r : model.explained_ratios) ratio_sum += r;
        CHECK(std::abs(ratio_sum - 1.0) <= 1e-10);

        // orthonormal basis columns
        const Matrix btb = matmul(model.eigvec_basis.transposed(), model.eigvec_basis);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(std::abs(btb(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-10);
            }
        }

        // loading column = basis column * sqrt(lambda), and the inverse map
        const Matrix back = evalkit::eigvec_from_loadings(model.loadings, model.eigenvalues);
        for (std::size_t c = 0; c < n; ++c) {
            const double lambda = model.eigenvalues[c];
            const double scale = lambda > 1e-12 ? std::sqrt(lambda) : 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(std::abs(model.loadings(i, c) - model.eigvec_basis(i, c) * scale) <=
                      1e-10);
                if (lambda > 1e-12) {
                    CHECK(std::abs(back(i, c) - model.eigvec_basis(i, c)) <= 1e-10);
                }
            }
        }

        // sample variance of score column i equals lambda_i
        const Matrix y = evalkit::component_scores(zx, model.eigvec_basis);
        for (std::size_t c = 0; c < n; ++c) {
            CHECK(std::abs(column_sample_variance(y, c) - model.eigenvalues[c]) <= 1e-8);
        }
    }
}

TEST_CASE("component scores: identity basis and hand product") {
    const Matrix values(3, 2, {-1.0, 0.0, 0.0, -1.0, 1.0, 1.0});
    const StandardizedMatrix zx = standardized(values);
    CHECK(evalkit::component_scores(zx, Matrix::identity(2)) == zx.values);

    const double inv_sqrt2 = 0.7071067811865476;
    const StandardizedMatrix unit = standardized(Matrix::from_rows({{1, 0}, {0, 1}}));
    const Matrix y = evalkit::component_scores(unit, Matrix(2, 1, {inv_sqrt2, inv_sqrt2}));
    CHECK(y(0, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(y(1, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-15));

    const StandardizedMatrix zeros = standardized(Matrix(4, 2));
    CHECK(evalkit::component_scores(zeros, Matrix(2, 2)) == Matrix(4, 2));

    CHECK_THROWS_AS(evalkit::component_scores(zx, Matrix(3, 1)), evalkit::ShapeError);
}

TEST_CASE("composite scores reproduce both reference coefficient sums") {
    const Matrix ones(1, 4, {1.0, 1.0, 1.0, 1.0});
    const CompositeScores pca_path =
        composite_scores(ones, {0.57691, 0.20225, 0.06755, 0.05962});
    CHECK(std::abs(pca_path.values[0] - 0.90633) <= 1e-12);
    const CompositeScores factor_path =
        composite_scores(ones, {0.46936, 0.16537, 0.13997, 0.13163});
    CHECK(std::abs(factor_path.values[0] - 0.90633) <= 1e-12);
}

TEST_CASE("composite scores: identity share and shape validation") {
    const Matrix y(2, 1, {0.25, -0.5});
    const CompositeScores c = composite_scores(y, {1.0});
    CHECK(c.values == std::vector<double>{0.25, -0.5});
    CHECK_THROWS_AS(composite_scores(y, {0.5, 0.5}), evalkit::ShapeError);
}

TEST_CASE("varimax leaves simple structure alone") {
    const RotationResult rot = varimax_rotate(Matrix::identity(2));
    CHECK(rot.rotation == Matrix::identity(2));
    CHECK(rot.rotated_loadings == Matrix::identity(2));
}

TEST_CASE("varimax recovers simple structure hidden by a 30-degree rotation") {
    // simple structure {v1,v3 -> F1; v2 -> F2} spun by 30 degrees
    const double cos30 = std::sqrt(3.0) / 2.0;
    const Matrix mixed =
        Matrix::from_rows({{cos30, -0.5}, {0.5, cos30}, {cos30, -0.5}});
    const RotationResult rot = varimax_rotate(mixed);
    // up to sign/permutation the result is the original pattern: every row
    // has one entry of magnitude ~1 and one of magnitude ~0
    for (std::size_t i = 0; i < 3; ++i) {
        const double a = std::abs(rot.rotated_loadings(i, 0));
        const double b = std::abs(rot.rotated_loadings(i, 1));
        CHECK(std::max(a, b) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(std::min(a, b) == doctest::Approx(0.0).epsilon(1e-8));
    }
    CHECK(rot.rotated_loadings == matmul(mixed, rot.rotation));
    // the two-variable F1 column comes first after the variance-share sort
    CHECK(rot.rotated_variance_shares[0] > rot.rotated_variance_shares[1]);
    CHECK(rot.rotated_loadings(0, 0) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("varimax holds still at the criterion's symmetric saddle point") {
    // rows [c, c] and [c, -c] give the planar criterion a zero gradient, so
    // the pair rotation is skipped and the frame is returned unchanged
    const double c = 0.70711;
    const Matrix mixed = Matrix::from_rows({{c, c}, {c, -c}});
    const RotationResult rot = varimax_rotate(mixed);
    CHECK(rot.rotation == Matrix::identity(2));
    CHECK(rot.rotated_loadings == mixed);
}

TEST_CASE("varimax invariants on random loadings") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 19;  // up to 20
        const std::size_t k = 1 + rng() % 6;   // up to 6
        Matrix loadings = oracles::random_matrix(rng, n, k, -1.0, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double h = std::sqrt(row_communality(loadings, i));
            if (h > 1.0) {
                for (std::size_t j = 0; j < k; ++j) loadings(i, j) /= h;
            }
        }
        const RotationResult rot = varimax_rotate(loadings);

        // orthogonal rotation
        const Matrix rtr = matmul(rot.rotation.transposed(), rot.rotation);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                CHECK(std::abs(rtr(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-10);
            }
        }

        // communalities preserved
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(row_communality(rot.rotated_loadings, i) -
                           row_communality(loadings, i)) <= 1e-10);
        }

        // criterion non-decreasing sweep over sweep
        for (std::size_t s = 0; s + 1 < rot.criterion_trace.size(); ++s) {
            CHECK(rot.criterion_trace[s + 1] >=
                  rot.criterion_trace[s] - 1e-10 * (1.0 + std::abs(rot.criterion_trace[s])));
        }

        // share conservation vs the unrotated columns
        double before = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < n; ++i) before += loadings(i, j) * loadings(i, j);
        }
        before /= static_cast<double>(n);
        double after = 0.0;
        for (const double share : rot.rotated_variance_shares) after += share;
        CHECK(std::abs(before - after) <= 1e-10);

        // descending share order
        for (std::size_t j = 0; j + 1 < rot.rotated_variance_shares.size(); ++j) {
            CHECK(rot.rotated_variance_shares[j] >= rot.rotated_variance_shares[j + 1]);
        }
    }
}

TEST_CASE("two-factor rotations match the closed-form angle") {
    std::mt19937_64 rng(16180339);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng() % 10;
        Matrix loadings = oracles::random_matrix(rng, n, 2, -1.0, 1.0);
        const RotationResult rot = varimax_rotate(loadings);
        const double want = oracles::varimax_angle_2f(loadings);
        const double got = oracles::rotation_angle(rot.rotation);
        CHECK(oracles::angle_distance_mod_quarter(got, want) <= 1e-8);
    }
}

TEST_CASE("varimax single factor and shape validation") {
    const Matrix single(3, 1, {0.9, 0.8, 0.7});
    const RotationResult rot = varimax_rotate(single);
    CHECK(rot.rotation == Matrix::identity(1));
    CHECK(rot.rotated_loadings == single);
    CHECK(rot.rotated_variance_shares[0] ==
          doctest::Approx((0.81 + 0.64 + 0.49) / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(varimax_rotate(Matrix(1, 2)), evalkit::ShapeError);
}

TEST_CASE("varimax is deterministic") {
    std::mt19937_64 rng(5);
    const Matrix loadings = oracles::random_matrix(rng, 12, 4, -0.9, 0.9);
    const RotationResult a = varimax_rotate(loadings);
    const RotationResult b = varimax_rotate(loadings);
    CHECK(a.rotated_loadings == b.rotated_loadings);
    CHECK(a.rotation == b.rotation);
    CHECK(a.rotated_variance_shares == b.rotated_variance_shares);
}
