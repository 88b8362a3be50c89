#pragma once

#include <span>
#include <string>
#include <vector>

#include "armey/critical_values.hpp"

namespace armey {

enum class LagCriterion {
    Bic,          ///< Schwarz criterion, ties toward the smaller lag
    SequentialT,  ///< drop the longest lag while its t-ratio is insignificant
    Fixed,        ///< use max_lag as given
};

struct UnitRootResult {
    std::string series;
    AdfVariant variant;
    int chosen_lag = 0;
    int n_effective = 0;  ///< rows in the final test regression
    double statistic = 0.0;
    CriticalValueTable critical_values{};
    bool reject_1pct = false;
    bool reject_5pct = false;
    bool reject_10pct = false;
};

struct ZaCandidate {
    int year;
    double t_ratio;
};

struct ZaResult {
    std::string series;
    ZaBreakType break_type;
    int break_year = 0;
    int chosen_lag = 0;
    int n_effective = 0;
    double statistic = 0.0;  ///< minimum t-ratio over the candidate breaks
    std::vector<ZaCandidate> trace;
    CriticalValueTable critical_values{};
    bool reject_1pct = false;
    bool reject_5pct = false;
    bool reject_10pct = false;
};

/// Schwert's rule floor(12 * (n/100)^(1/4)), clamped so the test regression
/// keeps at least 10 usable rows.
int default_max_lag(std::size_t n);

/// BIC = n ln(e'e/n) + k ln(n) over lags 0..max_lag, every candidate fit on
/// the rows available at max_lag; ties break toward the smaller lag.
int select_lag_bic(std::span<const double> series, AdfVariant variant, int max_lag);

/// Augmented Dickey-Fuller regression
///   dx_t = deterministics + gamma * x_{t-1} + sum_i delta_i dx_{t-i} + u_t
/// with the statistic being the t-ratio on gamma. The final regression is
/// refit on all rows available at the chosen lag.
UnitRootResult adf_test(std::span<const double> series, AdfVariant variant, int max_lag,
                        LagCriterion criterion = LagCriterion::Bic,
                        const std::string& series_name = "");

/// Zivot-Andrews minimum-t unit-root test with one endogenous break.
///
/// Break-dummy timing (conventions differ across implementations, so this
/// is pinned here): with T_b the reported break year at sample index b,
///   DU_t = 1        for t > b, else 0   (level shift, types
///                                        intercept/both)
///   DT_t = t - b    for t > b, else 0   (trend shift, types trend/both;
///                                        one-period ramp starting the
///                                        first post-break year)
/// Every model keeps the constant and linear trend among its
/// deterministics. The lag order is selected once from the no-break trend
/// regression and held fixed across candidates (Baum's approximation to
/// the original per-candidate search). Candidate break indices run over
/// [floor(trim*n), ceil((1-trim)*n) - 1], clamped so at least one
/// observation lies on each side of the break within the estimation
/// sample; ties in the minimum go to the earlier year.
ZaResult zivot_andrews(std::span<const double> series, std::span<const int> years,
                       ZaBreakType break_type, double trim_fraction = 0.15, int max_lag = -1,
                       LagCriterion criterion = LagCriterion::Bic,
                       const std::string& series_name = "");

}  // namespace armey
