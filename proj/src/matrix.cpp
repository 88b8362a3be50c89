#include "armey/matrix.hpp"

#include <cmath>
#include <limits>

#include "armey/error.hpp"

namespace armey {

Matrix Matrix::top_rows(std::size_t nrows) const {
    Matrix out(nrows, cols_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

bool Matrix::all_finite() const noexcept {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
        }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

double quadratic_form(const Matrix& a, std::span<const double> x) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        total += x[i] * s;
    }
    return total;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

LeastSquaresSolution solve_least_squares(const Matrix& x, std::span<const double> y,
                                         const std::vector<std::string>* column_names) {
    const std::size_t n = x.rows();
    const std::size_t k = x.cols();
    if (n < k) throw Error::numeric("least squares needs n >= k rows");
    if (y.size() != n) throw Error::numeric("response length does not match design rows");
    if (!x.all_finite()) throw Error::numeric("design matrix contains non-finite entries");
    for (double v : y)
        if (!std::isfinite(v)) throw Error::numeric("response contains non-finite entries");

    const double rank_tol = 1e-10 * frobenius_norm(x);

    // Householder QR, transforming a working copy of [X | y] in place.
    Matrix r = x;
    std::vector<double> qty(y.begin(), y.end());

    for (std::size_t j = 0; j < k; ++j) {
        double norm = 0.0;
        for (std::size_t i = j; i < n; ++i) norm += r(i, j) * r(i, j);
        norm = std::sqrt(norm);
        if (norm < rank_tol) {
            std::string name = column_names && j < column_names->size()
                                   ? (*column_names)[j]
                                   : "column " + std::to_string(j);
            throw Error::numeric("collinear design: " + name +
                                 " lies in the span of the preceding columns");
        }
        const double alpha = r(j, j) >= 0.0 ? -norm : norm;
        // Householder vector v: v_j = r_jj - alpha, v_i = r_ij below the pivot.
        std::vector<double> v(n - j);
        v[0] = r(j, j) - alpha;
        for (std::size_t i = j + 1; i < n; ++i) v[i - j] = r(i, j);
        double vtv = 0.0;
        for (double e : v) vtv += e * e;
        r(j, j) = alpha;
        for (std::size_t i = j + 1; i < n; ++i) r(i, j) = 0.0;
        if (vtv == 0.0) continue;

        for (std::size_t c = j + 1; c < k; ++c) {
            double dot = 0.0;
            for (std::size_t i = j; i < n; ++i) dot += v[i - j] * r(i, c);
            const double scale = 2.0 * dot / vtv;
            for (std::size_t i = j; i < n; ++i) r(i, c) -= scale * v[i - j];
        }
        double dot = 0.0;
        for (std::size_t i = j; i < n; ++i) dot += v[i - j] * qty[i];
        const double scale = 2.0 * dot / vtv;
        for (std::size_t i = j; i < n; ++i) qty[i] -= scale * v[i - j];
    }

    for (std::size_t j = 0; j < k; ++j) {
        if (std::abs(r(j, j)) < rank_tol) {
            std::string name = column_names && j < column_names->size()
                                   ? (*column_names)[j]
                                   : "column " + std::to_string(j);
            throw Error::numeric("collinear design: " + name +
                                 " lies in the span of the preceding columns");
        }
    }

    // Back-substitute R beta = (Q'y)_{1..k}.
    std::vector<double> beta(k, 0.0);
    for (std::size_t jj = k; jj-- > 0;) {
        double s = qty[jj];
        for (std::size_t c = jj + 1; c < k; ++c) s -= r(jj, c) * beta[c];
        beta[jj] = s / r(jj, jj);
    }

    // (X'X)^{-1} = R^{-1} R^{-T}; invert the upper-triangular R first.
    Matrix rinv(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        rinv(j, j) = 1.0 / r(j, j);
        for (std::size_t i = j; i-- > 0;) {
            double s = 0.0;
            for (std::size_t l = i + 1; l <= j; ++l) s += r(i, l) * rinv(l, j);
            rinv(i, j) = -s / r(i, i);
        }
    }
    Matrix xtx_inv(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double s = 0.0;
            for (std::size_t l = std::max(i, j); l < k; ++l) s += rinv(i, l) * rinv(j, l);
            xtx_inv(i, j) = s;
        }

    return {std::move(beta), std::move(xtx_inv)};
}

}  // namespace armey
