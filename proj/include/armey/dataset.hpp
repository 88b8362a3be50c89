#pragma once

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "armey/matrix.hpp"

namespace armey {

inline bool is_missing(double v) { return std::isnan(v); }
inline double missing_value() { return std::nan(""); }

/// Year-indexed frame of annual series. Years are strictly increasing and
/// consecutive; every column holds one value slot per year, NaN marking a
/// missing cell. Column order is preserved for deterministic output.
class TimeSeriesFrame {
public:
    TimeSeriesFrame() = default;
    explicit TimeSeriesFrame(std::vector<int> years);

    const std::vector<int>& years() const noexcept { return years_; }
    std::size_t n_years() const noexcept { return years_.size(); }
    const std::vector<std::string>& column_names() const noexcept { return names_; }

    bool has_column(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const;

    /// Adds a column aligned to the frame's years; duplicate names and
    /// length mismatches are data errors.
    void add_column(const std::string& name, std::vector<double> values);

    /// Index of a year within the frame, or -1.
    int year_index(int year) const;

private:
    std::vector<int> years_;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> values_;
};

/// Indicator variable active in the given calendar years.
struct DummySpec {
    std::string name;
    std::set<int> active_years;
};

struct DesignSpec {
    std::string response;
    std::vector<std::string> regressors;
    bool intercept = true;
};

/// Regression-ready data: rows with any missing constituent dropped
/// uniformly, intercept column first unless suppressed, retained years
/// recorded. regressor_names aligns with the columns of X.
struct DesignMatrix {
    std::string response_name;
    std::vector<double> response;
    std::vector<std::string> regressor_names;
    Matrix X;
    std::vector<int> years;
    bool has_intercept = true;

    std::size_t n() const noexcept { return X.rows(); }
    std::size_t k() const noexcept { return X.cols(); }
};

/// Reads `year,<var>,...` CSV. All header columns are loaded; every name in
/// `schema` must be present. Unparseable numeric cells become missing.
TimeSeriesFrame load_csv(const std::string& path, const std::vector<std::string>& schema);

/// Parses CSV text (same contract as load_csv).
TimeSeriesFrame parse_csv(const std::string& text, const std::vector<std::string>& schema,
                          const std::string& origin = "<string>");

/// Serializes a frame back to CSV; missing cells render empty. Values use
/// shortest round-trip formatting so load(write(frame)) == frame.
std::string write_csv(const TimeSeriesFrame& frame);

/// 100 * (x_t - x_{t-1}) / x_{t-1}; first year (and any year whose
/// predecessor is missing or zero) is missing. Division by zero appends a
/// warning when a sink is given.
std::vector<double> growth_rate(const TimeSeriesFrame& frame, const std::string& column,
                                std::vector<std::string>* warnings = nullptr);

/// 100 * numerator_t / gdp_t; non-positive GDP cells flag the result
/// missing with a warning.
std::vector<double> share_of_gdp(const TimeSeriesFrame& frame, const std::string& numerator,
                                 const std::string& gdp_column,
                                 std::vector<std::string>* warnings = nullptr);

/// 1.0 in the spec's active years, 0.0 elsewhere; active years outside the
/// frame are a data error.
std::vector<double> apply_dummy(const TimeSeriesFrame& frame, const DummySpec& spec);

/// Assembles the design matrix per the spec, dropping rows listwise where
/// any constituent is missing. n <= k is an estimability error.
DesignMatrix build_design(const TimeSeriesFrame& frame, const DesignSpec& spec);

}  // namespace armey
