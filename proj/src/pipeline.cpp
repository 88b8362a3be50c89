#include "armey/pipeline.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "armey/error.hpp"
#include "armey/kvdoc.hpp"
#include "armey/rng.hpp"

namespace armey {

namespace {

template <typename F>
auto with_stage(const std::string& stage, F&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.code(), "stage '" + stage + "': " + e.what());
    }
}

}  // namespace

const std::vector<std::string>& canonical_raw_columns() {
    static const std::vector<std::string> cols = {"gdp", "gfcf", "gfce_share", "exports",
                                                  "population"};
    return cols;
}

std::vector<DummySpec> RunConfig::default_dummies() {
    return {
        {"du1", {1973}},
        {"du2", {1989}},
        {"du3", {1994, 1995}},
        {"du4", {1997}},
    };
}

void RunConfig::validate() const {
    if (!(za_trim > 0.0 && za_trim < 0.5))
        throw Error::config("za_trim must lie in (0, 0.5), got " + format_double(za_trim));
    if (bg_lags <= 0) throw Error::config("bg_lags must be positive");
    if (adf_max_lag < -1) throw Error::config("adf_max_lag must be -1 (auto) or >= 0");
    const bool level_ok = std::abs(plot_level - 0.01) < 1e-12 ||
                          std::abs(plot_level - 0.05) < 1e-12 ||
                          std::abs(plot_level - 0.10) < 1e-12;
    if (!level_ok) throw Error::config("plot_level must be 0.01, 0.05 or 0.10");
    for (const auto& d : dummies)
        if (d.active_years.empty())
            throw Error::config("dummy '" + d.name + "' has no active years");
}

TimeSeriesFrame derive_analysis_frame(const TimeSeriesFrame& raw, const RunConfig& config,
                                      std::vector<std::string>* warnings) {
    auto mapped = [&](const std::string& canonical) {
        auto it = config.column_map.find(canonical);
        return it == config.column_map.end() ? canonical : it->second;
    };
    for (const auto& c : canonical_raw_columns())
        if (!raw.has_column(mapped(c)))
            throw Error::data("raw data lacks column '" + mapped(c) + "' (canonical '" + c +
                              "')");

    TimeSeriesFrame out(raw.years());
    for (const auto& name : raw.column_names()) out.add_column(name, raw.column(name));

    out.add_column("GGDP", growth_rate(raw, mapped("gdp"), warnings));
    out.add_column("LAB", growth_rate(raw, mapped("population"), warnings));
    out.add_column("EXPO", growth_rate(raw, mapped("exports"), warnings));
    out.add_column("GFCF", share_of_gdp(raw, mapped("gfcf"), mapped("gdp"), warnings));
    out.add_column("GFCE", raw.column(mapped("gfce_share")));

    for (const char* share : {"GFCF", "GFCE"}) {
        const std::vector<double>& s = out.column(share);
        std::vector<double> sq(s.size(), missing_value());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!is_missing(s[i])) sq[i] = s[i] * s[i];
        out.add_column(std::string(share) + "2", std::move(sq));
    }
    return out;
}

std::vector<double> contiguous_values(const TimeSeriesFrame& frame, const std::string& column,
                                      std::vector<int>* years_out) {
    const std::vector<double>& col = frame.column(column);
    std::size_t begin = 0, end = col.size();
    while (begin < end && is_missing(col[begin])) ++begin;
    while (end > begin && is_missing(col[end - 1])) --end;
    if (begin == end) throw Error::data("column '" + column + "' is entirely missing");
    for (std::size_t i = begin; i < end; ++i)
        if (is_missing(col[i]))
            throw Error::data("column '" + column + "' has an interior missing cell in " +
                              std::to_string(frame.years()[i]));
    if (years_out)
        years_out->assign(frame.years().begin() + begin, frame.years().begin() + end);
    return {col.begin() + begin, col.begin() + end};
}

ReplicationReport run_replication(const RunConfig& config) {
    config.validate();

    ReplicationReport rep;
    rep.config = config;
    rep.data_path = config.data_path;

    const std::string bytes = with_stage("ingest", [&] { return read_file(config.data_path); });
    rep.data_fingerprint = fnv1a_hex(bytes);

    const TimeSeriesFrame raw = with_stage("ingest", [&] {
        std::vector<std::string> mapped;
        for (const auto& c : canonical_raw_columns()) {
            auto it = config.column_map.find(c);
            mapped.push_back(it == config.column_map.end() ? c : it->second);
        }
        return parse_csv(bytes, mapped, config.data_path);
    });

    const TimeSeriesFrame frame = with_stage(
        "transform", [&] { return derive_analysis_frame(raw, config, &rep.warnings); });

    with_stage("unitroot", [&] {
        for (const char* name : {"GGDP", "LAB", "EXPO", "GFCF", "GFCF2", "GFCE", "GFCE2"}) {
            const std::vector<double> x = contiguous_values(frame, name);
            rep.unit_roots.push_back(
                adf_test(x, config.adf_variant, config.adf_max_lag, config.lag_criterion, name));
        }
        return 0;
    });

    with_stage("fit", [&] {
        rep.model_i = fit_armey_model(frame, SpendingVariable::Gfcf);
        rep.model_ii = fit_armey_model(frame, SpendingVariable::Gfce);
        return 0;
    });
    rep.effective_n = static_cast<int>(rep.model_i.fit.design.n());

    with_stage("diagnose", [&] {
        for (int p = 1; p <= 3; ++p) {
            rep.bg_sweep_i.push_back(breusch_godfrey(rep.model_i.fit, p));
            rep.bg_sweep_ii.push_back(breusch_godfrey(rep.model_ii.fit, p));
        }
        rep.bg_i = breusch_godfrey(rep.model_i.fit, config.bg_lags);
        rep.bg_ii = breusch_godfrey(rep.model_ii.fit, config.bg_lags);
        rep.white_i = white_test(rep.model_i.fit, config.white_cross_terms);
        rep.white_ii = white_test(rep.model_ii.fit, config.white_cross_terms);
        rep.jb_i = jarque_bera(rep.model_i.fit.residuals);
        rep.jb_ii = jarque_bera(rep.model_ii.fit.residuals);
        return 0;
    });

    with_stage("cusum", [&] {
        rep.cusum_i = cusum_test(rep.model_i.fit.design);
        rep.cusum_ii = cusum_test(rep.model_ii.fit.design);
        return 0;
    });

    with_stage("zivot_andrews", [&] {
        std::vector<int> years;
        const std::vector<double> ggdp = contiguous_values(frame, "GGDP", &years);
        for (ZaBreakType bt : {ZaBreakType::Intercept, ZaBreakType::Trend, ZaBreakType::Both})
            rep.za.push_back(zivot_andrews(ggdp, years, bt, config.za_trim, config.adf_max_lag,
                                           config.lag_criterion, "GGDP"));
        return 0;
    });

    with_stage("robustness", [&] {
        rep.robustness = fit_robustness_model(frame, config.dummies);
        return 0;
    });

    return rep;
}

Simulation simulate_dataset(int n_effective, std::uint64_t seed, double sigma) {
    if (n_effective < 10) throw Error::config("simulate: need n >= 10");
    if (sigma <= 0.0) throw Error::config("simulate: sigma must be positive");

    Simulation sim;
    sim.truth.beta = {-20.0, 1.2, 0.1, 9.0, -0.85};
    sim.truth.sigma = sigma;
    sim.truth.seed = seed;
    sim.truth.n_effective = n_effective;
    sim.truth.true_optimum = -sim.truth.beta[3] / (2.0 * sim.truth.beta[4]);

    Rng rng(seed);
    const int last_year = 2015;
    const int first_year = last_year - n_effective;  // one extra base year
    std::vector<int> years;
    for (int y = first_year; y <= last_year; ++y) years.push_back(y);
    const std::size_t rows = years.size();

    std::vector<double> lab(rows), expo(rows), gov(rows), gfce(rows), ggdp(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        lab[i] = rng.normal(2.0, 0.7);
        expo[i] = rng.normal(8.0, 6.0);
        gov[i] = rng.uniform(2.0, 9.0);
        gfce[i] = rng.uniform(3.0, 12.0);
        const auto& b = sim.truth.beta;
        ggdp[i] = b[0] + b[1] * lab[i] + b[2] * expo[i] + b[3] * gov[i] +
                  b[4] * gov[i] * gov[i] + rng.normal(0.0, sigma);
    }

    // Integrate levels so the derivation step reproduces the growth rates.
    std::vector<double> gdp(rows), pop(rows), exports(rows), gfcf(rows);
    gdp[0] = 100.0;
    pop[0] = 10.0;
    exports[0] = 20.0;
    for (std::size_t i = 1; i < rows; ++i) {
        gdp[i] = gdp[i - 1] * (1.0 + ggdp[i] / 100.0);
        pop[i] = pop[i - 1] * (1.0 + lab[i] / 100.0);
        exports[i] = exports[i - 1] * (1.0 + expo[i] / 100.0);
    }
    for (std::size_t i = 0; i < rows; ++i) gfcf[i] = gov[i] * gdp[i] / 100.0;

    sim.raw = TimeSeriesFrame(years);
    sim.raw.add_column("gdp", gdp);
    sim.raw.add_column("gfcf", gfcf);
    sim.raw.add_column("gfce_share", gfce);
    sim.raw.add_column("exports", exports);
    sim.raw.add_column("population", pop);

    RunConfig config;
    const TimeSeriesFrame frame = derive_analysis_frame(sim.raw, config);
    const ArmeyResult fitted = fit_armey_model(frame, SpendingVariable::Gfcf);
    sim.truth.fitted_beta = fitted.fit.beta;
    sim.truth.fitted_optimum = fitted.optimum_share.value_or(
        std::numeric_limits<double>::quiet_NaN());
    return sim;
}

}  // namespace armey
