#pragma once

#include <map>
#include <string>
#include <vector>

#include "armey/critical_values.hpp"
#include "armey/ols.hpp"

namespace armey {

/// Outcome of one chi-square residual diagnostic.
struct TestResult {
    std::string name;
    double statistic = 0.0;
    int df = 0;            ///< chi-square reference degrees of freedom
    double p_value = 1.0;
    bool reject_1pct = false;
    bool reject_5pct = false;
    bool reject_10pct = false;
    std::map<std::string, std::string> nuisance;  ///< run parameters (lag order, flags)
};

/// Recursive-residual CUSUM path with Brown-Durbin-Evans bounds.
struct CusumResult {
    std::vector<int> steps;    ///< observation index t = k+1..n
    std::vector<double> path;  ///< W_t = cumulative sum of w / sigma_hat
    double scale = 0.0;        ///< sigma_hat of the recursive residuals
    double statistic = 0.0;    ///< max_t |W_t| / (sqrt(m) + 2(t-k)/sqrt(m))
    CriticalValueTable critical_values{};
    bool reject_1pct = false;
    bool reject_5pct = false;
    bool reject_10pct = false;

    /// +/- boundary magnitude at path position i for boundary parameter a.
    double bound_at(std::size_t i, double a) const;
    /// True when |W_t| touches or crosses the level-a boundary anywhere.
    bool exits_band(double a) const;
};

/// Breusch-Godfrey LM test: auxiliary regression of e_t on the original
/// regressors plus e_{t-1}..e_{t-p} (pre-sample lags zero); n*R^2 ~ chi2(p).
TestResult breusch_godfrey(const OlsFit& fit, int lag_order);

/// White's test: auxiliary regression of e^2 on regressors, squares and
/// (optionally) cross products, duplicates dropped keeping the first
/// occurrence; n*R^2 ~ chi2(q) with q the retained non-constant columns.
TestResult white_test(const OlsFit& fit, bool include_cross_terms = true);

/// Jarque-Bera: n (S^2/6 + (K-3)^2/24) ~ chi2(2), moment-based S and K.
TestResult jarque_bera(const std::vector<double>& residuals);

/// Recursive-residual CUSUM stability test over the given design.
CusumResult cusum_test(const DesignMatrix& design);

}  // namespace armey
