#include "armey/critical_values.hpp"

#include <array>
#include <cmath>

#include "armey/error.hpp"

namespace armey {

namespace {

// Finite-sample Dickey-Fuller critical values, Fuller (1976) as tabulated
// in MacKinnon (2010)-style references. Rows are sample sizes
// 25/50/100/250/500/inf; columns are the 1/5/10% levels.
constexpr std::array<int, 6> kAdfSampleSizes = {25, 50, 100, 250, 500, 100000};

constexpr double kAdfNoConstant[6][3] = {
    {-2.66, -1.95, -1.60},  // n=25
    {-2.62, -1.95, -1.61},  // n=50
    {-2.60, -1.95, -1.61},  // n=100
    {-2.58, -1.95, -1.62},  // n=250
    {-2.58, -1.95, -1.62},  // n=500
    {-2.58, -1.95, -1.62},  // asymptotic
};

constexpr double kAdfDrift[6][3] = {
    {-3.75, -3.00, -2.63},  // n=25
    {-3.58, -2.93, -2.60},  // n=50
    {-3.51, -2.89, -2.58},  // n=100
    {-3.46, -2.87, -2.57},  // n=250
    {-3.44, -2.87, -2.57},  // n=500
    {-3.43, -2.86, -2.57},  // asymptotic
};

constexpr double kAdfTrend[6][3] = {
    {-4.38, -3.60, -3.24},  // n=25
    {-4.15, -3.50, -3.18},  // n=50
    {-4.04, -3.45, -3.15},  // n=100
    {-3.99, -3.43, -3.13},  // n=250
    {-3.98, -3.42, -3.13},  // n=500
    {-3.96, -3.41, -3.12},  // asymptotic
};

// Zivot and Andrews (1992), Tables 2-4: asymptotic critical values of the
// minimum t-statistic for break in intercept (A), trend (B), both (C).
constexpr double kZaIntercept[3] = {-5.34, -4.80, -4.58};
constexpr double kZaTrend[3] = {-4.93, -4.42, -4.11};
constexpr double kZaBoth[3] = {-5.57, -5.08, -4.82};

double interpolate(const double table[6][3], int n, int level_idx) {
    if (n <= kAdfSampleSizes.front()) return table[0][level_idx];
    if (n >= kAdfSampleSizes.back()) return table[5][level_idx];
    for (int i = 0; i < 5; ++i) {
        if (n >= kAdfSampleSizes[i] && n <= kAdfSampleSizes[i + 1]) {
            const double w = static_cast<double>(n - kAdfSampleSizes[i]) /
                             (kAdfSampleSizes[i + 1] - kAdfSampleSizes[i]);
            return (1.0 - w) * table[i][level_idx] + w * table[i + 1][level_idx];
        }
    }
    return table[5][level_idx];
}

}  // namespace

double CriticalValueTable::at(double level) const {
    if (std::abs(level - 0.01) < 1e-12) return at_1pct;
    if (std::abs(level - 0.05) < 1e-12) return at_5pct;
    if (std::abs(level - 0.10) < 1e-12) return at_10pct;
    throw Error::config("unsupported significance level; use 0.01, 0.05 or 0.10");
}

CriticalValueTable adf_critical_values(AdfVariant variant, int n_effective) {
    if (n_effective < 1) throw Error::numeric("adf_critical_values: empty sample");
    const double(*table)[3] = nullptr;
    switch (variant) {
        case AdfVariant::NoConstant: table = kAdfNoConstant; break;
        case AdfVariant::Drift: table = kAdfDrift; break;
        case AdfVariant::Trend: table = kAdfTrend; break;
    }
    return {TestFamily::Adf, interpolate(table, n_effective, 0),
            interpolate(table, n_effective, 1), interpolate(table, n_effective, 2)};
}

CriticalValueTable za_critical_values(ZaBreakType break_type) {
    switch (break_type) {
        case ZaBreakType::Intercept:
            return {TestFamily::ZivotAndrews, kZaIntercept[0], kZaIntercept[1], kZaIntercept[2]};
        case ZaBreakType::Trend:
            return {TestFamily::ZivotAndrews, kZaTrend[0], kZaTrend[1], kZaTrend[2]};
        case ZaBreakType::Both:
            return {TestFamily::ZivotAndrews, kZaBoth[0], kZaBoth[1], kZaBoth[2]};
    }
    throw Error::config("unsupported Zivot-Andrews break type");
}

CriticalValueTable cusum_critical_values() {
    // Brown-Durbin-Evans (1975) boundary parameters. The 5% value is
    // 0.9479; we store it truncated to 0.947, matching the convention of
    // STATA's sbcusum output, rather than rounded to 0.948.
    return {TestFamily::Cusum, 1.143, 0.947, 0.850};
}

std::string to_string(AdfVariant v) {
    switch (v) {
        case AdfVariant::NoConstant: return "none";
        case AdfVariant::Drift: return "drift";
        case AdfVariant::Trend: return "trend";
    }
    return "?";
}

std::string to_string(ZaBreakType b) {
    switch (b) {
        case ZaBreakType::Intercept: return "intercept";
        case ZaBreakType::Trend: return "trend";
        case ZaBreakType::Both: return "both";
    }
    return "?";
}

}  // namespace armey
