#pragma once

#include <string>

namespace armey {

enum class AdfVariant {
    NoConstant,  ///< no deterministic terms
    Drift,       ///< constant only
    Trend,       ///< constant and linear trend
};

enum class ZaBreakType {
    Intercept,
    Trend,
    Both,
};

enum class TestFamily {
    Adf,
    ZivotAndrews,
    Cusum,
};

/// One row of critical values at the 1/5/10% levels. For the left-tailed
/// unit-root families the rejection region is statistic < value; for the
/// CUSUM boundary parameters it is statistic >= value.
struct CriticalValueTable {
    TestFamily family;
    double at_1pct;
    double at_5pct;
    double at_10pct;

    double at(double level) const;  // level in {0.01, 0.05, 0.10}
};

/// ADF critical values interpolated in the effective sample size.
CriticalValueTable adf_critical_values(AdfVariant variant, int n_effective);

/// Zivot-Andrews asymptotic critical values per break type.
CriticalValueTable za_critical_values(ZaBreakType break_type);

/// Recursive-CUSUM boundary parameters (1.143, 0.947, 0.850).
CriticalValueTable cusum_critical_values();

std::string to_string(AdfVariant v);
std::string to_string(ZaBreakType b);

}  // namespace armey
