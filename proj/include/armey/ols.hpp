#pragma once

#include <string>
#include <vector>

#include "armey/dataset.hpp"
#include "armey/matrix.hpp"

namespace armey {

/// One estimated regression. Immutable once produced by fit().
struct OlsFit {
    DesignMatrix design;
    std::vector<double> beta;
    std::vector<double> se;
    std::vector<double> tstats;
    std::vector<double> pvalues;  ///< two-sided, t(n-k)
    std::vector<double> residuals;
    std::vector<double> fitted;
    double sigma2 = 0.0;  ///< e'e / (n-k)
    double r2 = 0.0;
    double adjusted_r2 = 0.0;
    double rmse = 0.0;  ///< sqrt(e'e / df_resid)
    int df_resid = 0;
    Matrix covariance;  ///< sigma2 * (X'X)^{-1}

    double coef(const std::string& regressor) const;
    double stderr_of(const std::string& regressor) const;
    double pvalue_of(const std::string& regressor) const;
    int index_of(const std::string& regressor) const;
};

/// OLS fit with coefficient inference. R^2 is computed against the
/// centered total sum of squares when an intercept is present, and
/// against the uncentered one otherwise.
OlsFit fit(const DesignMatrix& design);

/// Standardized recursive residuals w_t (Brown, Durbin and Evans 1975) for
/// t = k+1..n, each from a least-squares refit on the first t-1 rows.
std::vector<double> recursive_residuals(const DesignMatrix& design);

/// Significance stars at the 10/5/1% two-sided thresholds.
std::string significance_stars(double pvalue);

}  // namespace armey
