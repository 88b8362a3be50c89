#include "armey/ols.hpp"

#include <cmath>
#include <numeric>

#include "armey/error.hpp"
#include "armey/special.hpp"

namespace armey {

int OlsFit::index_of(const std::string& regressor) const {
    for (std::size_t i = 0; i < design.regressor_names.size(); ++i)
        if (design.regressor_names[i] == regressor) return static_cast<int>(i);
    throw Error::data("fit has no regressor '" + regressor + "'");
}

double OlsFit::coef(const std::string& regressor) const { return beta[index_of(regressor)]; }
double OlsFit::stderr_of(const std::string& regressor) const { return se[index_of(regressor)]; }
double OlsFit::pvalue_of(const std::string& regressor) const {
    return pvalues[index_of(regressor)];
}

OlsFit fit(const DesignMatrix& design) {
    const std::size_t n = design.n();
    const std::size_t k = design.k();
    if (n <= k) throw Error::numeric("fit: n <= k");

    LeastSquaresSolution sol =
        solve_least_squares(design.X, design.response, &design.regressor_names);

    OlsFit f;
    f.design = design;
    f.beta = std::move(sol.beta);
    f.fitted = matvec(design.X, f.beta);
    f.residuals.resize(n);
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        f.residuals[i] = design.response[i] - f.fitted[i];
        sse += f.residuals[i] * f.residuals[i];
    }

    f.df_resid = static_cast<int>(n - k);
    f.sigma2 = sse / f.df_resid;
    f.rmse = std::sqrt(f.sigma2);

    f.covariance = sol.xtx_inverse;
    for (double& v : f.covariance.data()) v *= f.sigma2;

    f.se.resize(k);
    f.tstats.resize(k);
    f.pvalues.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        f.se[j] = std::sqrt(f.covariance(j, j));
        f.tstats[j] = f.se[j] > 0.0 ? f.beta[j] / f.se[j] : 0.0;
        f.pvalues[j] = 2.0 * (1.0 - student_t_cdf(std::abs(f.tstats[j]), f.df_resid));
    }

    double sst = 0.0;
    if (design.has_intercept) {
        const double mean =
            std::accumulate(design.response.begin(), design.response.end(), 0.0) / n;
        for (double yi : design.response) sst += (yi - mean) * (yi - mean);
    } else {
        for (double yi : design.response) sst += yi * yi;
    }
    if (sst > 0.0) {
        f.r2 = 1.0 - sse / sst;
        const double dof_total = design.has_intercept ? n - 1.0 : static_cast<double>(n);
        f.adjusted_r2 = 1.0 - (1.0 - f.r2) * dof_total / f.df_resid;
    } else {
        // Constant response fitted exactly by the intercept.
        f.r2 = 0.0;
        f.adjusted_r2 = 0.0;
    }
    return f;
}

std::vector<double> recursive_residuals(const DesignMatrix& design) {
    const std::size_t n = design.n();
    const std::size_t k = design.k();
    if (n <= k) throw Error::numeric("recursive_residuals: n <= k");

    std::vector<double> w;
    w.reserve(n - k);
    for (std::size_t t = k + 1; t <= n; ++t) {
        const Matrix head = design.X.top_rows(t - 1);
        std::span<const double> yhead(design.response.data(), t - 1);
        LeastSquaresSolution sol;
        try {
            sol = solve_least_squares(head, yhead, &design.regressor_names);
        } catch (const Error& e) {
            if (t - 1 == k)
                throw Error::numeric(std::string("recursive_residuals: leading k x k subdesign "
                                                 "is singular; reorder rows or drop a regressor "
                                                 "(") +
                                     e.what() + ")");
            throw;
        }
        const std::span<const double> xt = design.X.row(t - 1);
        double pred = 0.0;
        for (std::size_t j = 0; j < k; ++j) pred += xt[j] * sol.beta[j];
        const double denom = std::sqrt(1.0 + quadratic_form(sol.xtx_inverse, xt));
        w.push_back((design.response[t - 1] - pred) / denom);
    }
    return w;
}

std::string significance_stars(double pvalue) {
    if (pvalue < 0.01) return "***";
    if (pvalue < 0.05) return "**";
    if (pvalue < 0.10) return "*";
    return "";
}

}  // namespace armey
