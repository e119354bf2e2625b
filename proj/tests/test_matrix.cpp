#include <cmath>
#include <limits>

#include "doctest.h"

#include "evalkit/errors.hpp"
#include "evalkit/matrix.hpp"

using evalkit::Matrix;
using evalkit::ShapeError;
using evalkit::ValidationError;

TEST_CASE("matrix stores row-major and reports its shape") {
    Matrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.shape_str() == "2x3");
    m(0, 2) = 7.0;
    m(1, 0) = -1.5;
    CHECK(m(0, 2) == 7.0);
    CHECK(m(1, 0) == -1.5);
    CHECK(m.entries()[2] == 7.0);   // (0,2) sits at flat index 2
    CHECK(m.entries()[3] == -1.5);  // (1,0) starts the second row
}

TEST_CASE("from_rows, row, column, transposed") {
    const Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(m.row(1) == std::vector<double>{4, 5, 6});
    CHECK(m.column(2) == std::vector<double>{3, 6});
    const Matrix t = m.transposed();
    CHECK(t.shape_str() == "3x2");
    CHECK(t(2, 1) == 6);
    CHECK(t.transposed() == m);
}

TEST_CASE("construction validates shape and finiteness") {
    CHECK_THROWS_AS(Matrix(0, 3), ValidationError);
    CHECK_THROWS_AS(Matrix(3, 0), ValidationError);
    CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), ValidationError);  // 3 entries for 4 slots
    CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), ValidationError);
    CHECK_THROWS_AS(Matrix::from_rows({{1, std::nan("")}}), ValidationError);
    CHECK_THROWS_AS(Matrix::from_rows({{std::numeric_limits<double>::infinity()}}),
                    ValidationError);
}

TEST_CASE("identity is the matmul neutral element") {
    const Matrix b = Matrix::from_rows({{5, 6}, {7, 8}});
    CHECK(matmul(Matrix::identity(2), b) == b);
    CHECK(matmul(b, Matrix::identity(2)) == b);
}

TEST_CASE("matmul matches hand multiplication") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix b = Matrix::from_rows({{5}, {6}});
    const Matrix p = matmul(a, b);
    CHECK(p.shape_str() == "2x1");
    CHECK(p(0, 0) == 17);
    CHECK(p(1, 0) == 39);
}

TEST_CASE("matmul by a zero matrix annihilates") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix zero(2, 2);
    CHECK(matmul(a, zero) == zero);
    CHECK(matmul(zero, a) == zero);
}

TEST_CASE("matmul rejects incompatible shapes naming both") {
    const Matrix a(2, 3);
    const Matrix b(2, 3);
    CHECK_THROWS_WITH_AS(matmul(a, b), "matmul: incompatible shapes 2x3 and 2x3", ShapeError);
}

TEST_CASE("trace, frobenius norm, max_abs") {
    const Matrix m = Matrix::from_rows({{3, -4}, {0, 1}});
    CHECK(m.trace() == 4.0);
    CHECK(m.frobenius_norm() == doctest::Approx(std::sqrt(26.0)).epsilon(1e-15));
    CHECK(m.max_abs() == 4.0);
    CHECK_THROWS_AS(Matrix(2, 3).trace(), ShapeError);
}

TEST_CASE("equality is elementwise") {
    const Matrix a = Matrix::from_rows({{1, 2}});
    Matrix b = a;
    CHECK(a == b);
    b(0, 1) = 2.5;
    CHECK(a != b);
}
