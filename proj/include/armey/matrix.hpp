#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace armey {

/// Dense row-major matrix of doubles. Small k (<= 12) and n (<= a few
/// hundred) throughout this project, so no blocking or sparsity.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<double>& data() noexcept { return data_; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    /// Copy of the first `nrows` rows.
    Matrix top_rows(std::size_t nrows) const;

    bool all_finite() const noexcept;

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

std::vector<double> matvec(const Matrix& a, std::span<const double> x);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// x' * a * x for square a.
double quadratic_form(const Matrix& a, std::span<const double> x);

double frobenius_norm(const Matrix& a);

struct LeastSquaresSolution {
    std::vector<double> beta;  ///< minimizer of ||y - X beta||^2
    Matrix xtx_inverse;        ///< (X'X)^{-1}, k x k, for covariance
};

/// Least squares via Householder QR. Rank deficiency (|r_jj| below
/// 1e-10 * ||X||_F) raises a collinearity error naming the offending
/// column; `column_names`, when given, supplies the name.
LeastSquaresSolution solve_least_squares(const Matrix& x, std::span<const double> y,
                                         const std::vector<std::string>* column_names = nullptr);

}  // namespace armey
