#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace evalkit {

/// Dense real matrix, row-major. Entries are validated to be finite
/// whenever a matrix is built from caller-supplied data.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const double> entries() const { return entries_; }

    std::vector<double> row(std::size_t i) const;
    std::vector<double> column(std::size_t j) const;

    Matrix transposed() const;
    double trace() const;           // square matrices only
    double frobenius_norm() const;
    double max_abs() const;

    // "3x4", used in error messages
    std::string shape_str() const;

    // Throws ValidationError if any entry is NaN or infinite.
    void check_finite(const std::string& context) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

/// Standard matrix product. Throws ShapeError naming both shapes when
/// a.cols != b.rows.
Matrix matmul(const Matrix& a, const Matrix& b);

}  // namespace evalkit
