#include "armey/unitroot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "armey/dataset.hpp"
#include "armey/error.hpp"
#include "armey/matrix.hpp"
#include "armey/ols.hpp"

namespace armey {

namespace {

struct AdfRegression {
    DesignMatrix design;
    int gamma_index = 0;  ///< column of x_{t-1}
};

struct BreakDummies {
    bool level = false;
    bool trend = false;
    int break_index = 0;  ///< 0-based; dummies active for obs index > break_index
};

// Builds the test regression for lag p. Response rows are the differences
// at obs index t for t = start_t..N-1 (start_t >= p+1). Column order:
// const, trend, [DU], [DT], x_{t-1}, dx_{t-1}..dx_{t-p}.
AdfRegression build_adf_design(std::span<const double> x, AdfVariant variant, int p, int start_t,
                               const BreakDummies* brk = nullptr) {
    const int n_obs = static_cast<int>(x.size());
    const int n = n_obs - start_t;
    if (n <= 0) throw Error::numeric("adf regression: empty sample");

    AdfRegression reg;
    DesignMatrix& d = reg.design;
    d.response_name = "dx";
    d.has_intercept = variant != AdfVariant::NoConstant;

    if (variant != AdfVariant::NoConstant) d.regressor_names.push_back("const");
    if (variant == AdfVariant::Trend) d.regressor_names.push_back("trend");
    if (brk && brk->level) d.regressor_names.push_back("du");
    if (brk && brk->trend) d.regressor_names.push_back("dt");
    reg.gamma_index = static_cast<int>(d.regressor_names.size());
    d.regressor_names.push_back("level_lag1");
    for (int i = 1; i <= p; ++i) d.regressor_names.push_back("dlag" + std::to_string(i));

    const int k = static_cast<int>(d.regressor_names.size());
    if (n <= k) throw Error::numeric("adf regression: n <= k after lagging");

    d.X = Matrix(n, k);
    d.response.resize(n);
    d.years.resize(n);
    for (int r = 0; r < n; ++r) {
        const int t = start_t + r;
        d.response[r] = x[t] - x[t - 1];
        d.years[r] = t;
        int c = 0;
        if (variant != AdfVariant::NoConstant) d.X(r, c++) = 1.0;
        if (variant == AdfVariant::Trend) d.X(r, c++) = static_cast<double>(t);
        if (brk && brk->level) d.X(r, c++) = t > brk->break_index ? 1.0 : 0.0;
        if (brk && brk->trend)
            d.X(r, c++) = t > brk->break_index ? static_cast<double>(t - brk->break_index) : 0.0;
        d.X(r, c++) = x[t - 1];
        for (int i = 1; i <= p; ++i) d.X(r, c++) = x[t - i] - x[t - i - 1];
    }
    return reg;
}

void check_series(std::span<const double> x, int max_lag) {
    const int n_obs = static_cast<int>(x.size());
    if (n_obs - 1 - max_lag < 10)
        throw Error::numeric("series too short: " + std::to_string(n_obs) +
                             " observations leave fewer than 10 usable rows at max lag " +
                             std::to_string(max_lag));
    double mn = x[0], mx = x[0];
    for (double v : x) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    if (mx - mn < 1e-12 * std::max(1.0, std::abs(mx)))
        throw Error::numeric("series is constant; unit-root regression is degenerate");
}

double sse_of(const OlsFit& f) {
    double s = 0.0;
    for (double e : f.residuals) s += e * e;
    return s;
}

int select_lag(std::span<const double> x, AdfVariant variant, int max_lag,
               LagCriterion criterion) {
    if (max_lag == 0 || criterion == LagCriterion::Fixed) return std::max(0, max_lag);
    if (criterion == LagCriterion::Bic) {
        // Common estimation sample: the rows available at max_lag.
        const int start_t = max_lag + 1;
        int best_lag = 0;
        double best_bic = std::numeric_limits<double>::infinity();
        for (int p = 0; p <= max_lag; ++p) {
            const OlsFit f = fit(build_adf_design(x, variant, p, start_t).design);
            const double n = static_cast<double>(f.design.n());
            const double bic = n * std::log(sse_of(f) / n) + f.design.k() * std::log(n);
            if (bic < best_bic - 1e-12) {
                best_bic = bic;
                best_lag = p;
            }
        }
        return best_lag;
    }
    // Sequential-t: drop the longest lag while insignificant at 10%.
    for (int p = max_lag; p >= 1; --p) {
        const AdfRegression reg = build_adf_design(x, variant, p, p + 1);
        const OlsFit f = fit(reg.design);
        const double t_last = f.tstats.back();
        if (std::abs(t_last) >= 1.645) return p;
    }
    return 0;
}

void set_left_tail_verdicts(double statistic, const CriticalValueTable& cv, bool& r1, bool& r5,
                            bool& r10) {
    r1 = statistic < cv.at_1pct;
    r5 = statistic < cv.at_5pct;
    r10 = statistic < cv.at_10pct;
}

}  // namespace

int default_max_lag(std::size_t n) {
    const int schwert = static_cast<int>(std::floor(12.0 * std::pow(n / 100.0, 0.25)));
    const int feasible = static_cast<int>(n) - 11;
    return std::max(0, std::min(schwert, feasible));
}

int select_lag_bic(std::span<const double> series, AdfVariant variant, int max_lag) {
    if (max_lag < 0) throw Error::config("max_lag must be >= 0");
    check_series(series, max_lag);
    return select_lag(series, variant, max_lag, LagCriterion::Bic);
}

UnitRootResult adf_test(std::span<const double> series, AdfVariant variant, int max_lag,
                        LagCriterion criterion, const std::string& series_name) {
    if (max_lag < 0) max_lag = default_max_lag(series.size());
    check_series(series, max_lag);

    const int p = select_lag(series, variant, max_lag, criterion);
    // Final regression on all rows available at the chosen lag.
    const AdfRegression reg = build_adf_design(series, variant, p, p + 1);
    const OlsFit f = fit(reg.design);

    UnitRootResult res;
    res.series = series_name;
    res.variant = variant;
    res.chosen_lag = p;
    res.n_effective = static_cast<int>(f.design.n());
    res.statistic = f.tstats[reg.gamma_index];
    res.critical_values = adf_critical_values(variant, res.n_effective);
    set_left_tail_verdicts(res.statistic, res.critical_values, res.reject_1pct, res.reject_5pct,
                           res.reject_10pct);
    return res;
}

ZaResult zivot_andrews(std::span<const double> series, std::span<const int> years,
                       ZaBreakType break_type, double trim_fraction, int max_lag,
                       LagCriterion criterion, const std::string& series_name) {
    const int n_obs = static_cast<int>(series.size());
    if (n_obs < 20) throw Error::numeric("zivot_andrews: need at least 20 observations");
    if (years.size() != series.size())
        throw Error::data("zivot_andrews: years and series lengths differ");
    if (!(trim_fraction > 0.0 && trim_fraction < 0.5))
        throw Error::config("zivot_andrews: trim fraction must lie in (0, 0.5)");
    if (max_lag < 0) max_lag = default_max_lag(series.size());
    check_series(series, max_lag);

    // Lag order chosen once from the no-break trend regression and held
    // fixed across candidates, so every candidate sees the same sample.
    const int p = select_lag(series, AdfVariant::Trend, max_lag, criterion);

    // Trimmed candidate window, kept inside the estimation sample so the
    // break dummies vary (at least one row on each side of the break).
    const int lo = std::max(static_cast<int>(std::floor(trim_fraction * n_obs)), p + 1);
    const int hi =
        std::min(static_cast<int>(std::ceil((1.0 - trim_fraction) * n_obs)) - 1, n_obs - 2);
    if (lo > hi) throw Error::config("zivot_andrews: candidate window empty after trimming");

    BreakDummies brk;
    brk.level = break_type == ZaBreakType::Intercept || break_type == ZaBreakType::Both;
    brk.trend = break_type == ZaBreakType::Trend || break_type == ZaBreakType::Both;

    ZaResult res;
    res.series = series_name;
    res.break_type = break_type;
    res.chosen_lag = p;
    res.statistic = std::numeric_limits<double>::infinity();

    for (int b = lo; b <= hi; ++b) {
        brk.break_index = b;
        const AdfRegression reg = build_adf_design(series, AdfVariant::Trend, p, p + 1, &brk);
        const OlsFit f = fit(reg.design);
        const double t_gamma = f.tstats[reg.gamma_index];
        res.trace.push_back({years[b], t_gamma});
        if (t_gamma < res.statistic) {  // strict: ties keep the earlier year
            res.statistic = t_gamma;
            res.break_year = years[b];
            res.n_effective = static_cast<int>(f.design.n());
        }
    }

    res.critical_values = za_critical_values(break_type);
    set_left_tail_verdicts(res.statistic, res.critical_values, res.reject_1pct, res.reject_5pct,
                           res.reject_10pct);
    return res;
}

}  // namespace armey
