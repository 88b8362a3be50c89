#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "armey/curve.hpp"
#include "armey/dataset.hpp"
#include "armey/diagnostics.hpp"
#include "armey/unitroot.hpp"

namespace armey {

/// Canonical raw input columns: year plus these five series.
///   gdp         GDP, constant prices
///   gfcf        government fixed capital formation, constant prices
///   gfce_share  government final consumption, percent of GDP
///   exports     exports of goods and services, value
///   population  population level
const std::vector<std::string>& canonical_raw_columns();

struct RunConfig {
    std::string data_path;
    std::map<std::string, std::string> column_map;  ///< canonical -> file column

    AdfVariant adf_variant = AdfVariant::Drift;
    int adf_max_lag = -1;  ///< -1 = Schwert rule
    LagCriterion lag_criterion = LagCriterion::Bic;

    int bg_lags = 2;
    bool white_cross_terms = true;

    ZaBreakType za_break = ZaBreakType::Both;
    double za_trim = 0.15;

    std::vector<DummySpec> dummies = default_dummies();

    double plot_level = 0.05;  ///< significance level for CUSUM plot band
    std::string out_dir = "out";
    std::uint64_t seed = 20240101;  ///< simulate subcommand only
    bool assert_mode = false;

    static std::vector<DummySpec> default_dummies();

    /// Throws Error::config on out-of-range values.
    void validate() const;
};

/// Applies the column mapping and derives the analysis variables:
/// GGDP, LAB, EXPO (growth rates), GFCF (share of GDP), GFCE, and the
/// squared shares GFCF2/GFCE2. Raw columns are carried along.
TimeSeriesFrame derive_analysis_frame(const TimeSeriesFrame& raw, const RunConfig& config,
                                      std::vector<std::string>* warnings = nullptr);

/// Strips leading/trailing missing cells from a column; interior missing
/// cells are a data error (unit-root tests need contiguous series).
std::vector<double> contiguous_values(const TimeSeriesFrame& frame, const std::string& column,
                                      std::vector<int>* years_out = nullptr);

struct ReplicationReport {
    std::string data_path;
    std::string data_fingerprint;
    int effective_n = 0;
    RunConfig config;
    std::vector<std::string> warnings;

    std::vector<UnitRootResult> unit_roots;  ///< the seven analysis series
    ArmeyResult model_i;                     ///< GFCF
    ArmeyResult model_ii;                    ///< GFCE
    std::vector<TestResult> bg_sweep_i;      ///< lag orders 1..3
    std::vector<TestResult> bg_sweep_ii;
    TestResult bg_i, bg_ii;  ///< at the configured lag order
    TestResult white_i, white_ii;
    TestResult jb_i, jb_ii;
    CusumResult cusum_i, cusum_ii;
    std::vector<ZaResult> za;  ///< GGDP, all three break types
    RobustnessResult robustness;
};

/// Runs the full pipeline: transforms, ADF on all seven variables, both
/// quadratic models, diagnostics, CUSUM, Zivot-Andrews on GGDP, the
/// orthogonal-polynomial robustness model and the optima. Errors carry
/// the failing stage name.
ReplicationReport run_replication(const RunConfig& config);

struct SimulationTruth {
    std::vector<double> beta;  ///< const, LAB, EXPO, GFCF, GFCF2
    double sigma = 1.0;
    std::uint64_t seed = 0;
    int n_effective = 0;
    double true_optimum = 0.0;
    double optimum_tolerance = 0.3;
    std::vector<double> fitted_beta;
    double fitted_optimum = 0.0;
};

struct Simulation {
    TimeSeriesFrame raw;
    SimulationTruth truth;
};

/// Generates a raw dataset whose derived GGDP follows the quadratic model
/// in the GFCF share with known coefficients (const -20, LAB 1.2,
/// EXPO 0.1, GFCF 9.0, GFCF^2 -0.85), so the fitted optimum can be checked
/// against the documented truth. n_effective is the number of usable
/// growth-rate observations; the raw frame has one extra base year.
Simulation simulate_dataset(int n_effective, std::uint64_t seed, double sigma = 1.0);

}  // namespace armey
