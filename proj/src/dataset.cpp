#include "armey/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "armey/error.hpp"

namespace armey {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    cells.push_back(cell);
    return cells;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

bool parse_int(const std::string& s, int& out) {
    const std::string t = trim(s);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    return ec == std::errc{} && p == t.data() + t.size();
}

double parse_cell(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) return missing_value();
    double v = 0.0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) return missing_value();
    return v;
}

std::string format_value(double v) {
    if (is_missing(v)) return "";
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

}  // namespace

TimeSeriesFrame::TimeSeriesFrame(std::vector<int> years) : years_(std::move(years)) {
    for (std::size_t i = 1; i < years_.size(); ++i) {
        if (years_[i] == years_[i - 1])
            throw Error::data("duplicate year " + std::to_string(years_[i]));
        if (years_[i] != years_[i - 1] + 1)
            throw Error::data("gap in years between " + std::to_string(years_[i - 1]) + " and " +
                              std::to_string(years_[i]));
    }
}

bool TimeSeriesFrame::has_column(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

const std::vector<double>& TimeSeriesFrame::column(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return values_[i];
    throw Error::data("unknown column '" + name + "'");
}

void TimeSeriesFrame::add_column(const std::string& name, std::vector<double> values) {
    if (has_column(name)) throw Error::data("duplicate column '" + name + "'");
    if (values.size() != years_.size())
        throw Error::data("column '" + name + "' has " + std::to_string(values.size()) +
                          " values for " + std::to_string(years_.size()) + " years");
    names_.push_back(name);
    values_.push_back(std::move(values));
}

int TimeSeriesFrame::year_index(int year) const {
    if (years_.empty() || year < years_.front() || year > years_.back()) return -1;
    return year - years_.front();
}

TimeSeriesFrame parse_csv(const std::string& text, const std::vector<std::string>& schema,
                          const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error::data(origin + ": empty file");
    if (line.rfind("\xef\xbb\xbf", 0) == 0) line.erase(0, 3);  // UTF-8 BOM
    std::vector<std::string> header = split_csv_line(line);
    for (auto& h : header) h = trim(h);
    if (header.empty() || header[0] != "year")
        throw Error::data(origin + ": first header column must be 'year'");
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i].empty()) throw Error::data(origin + ": empty column name in header");
        for (std::size_t j = 1; j < i; ++j)
            if (header[i] == header[j])
                throw Error::data(origin + ": duplicate column '" + header[i] + "'");
    }
    for (const auto& want : schema) {
        if (std::find(header.begin() + 1, header.end(), want) == header.end())
            throw Error::data(origin + ": required column '" + want + "' not found");
    }

    std::vector<int> years;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw Error::data(origin + ": row with " + std::to_string(cells.size()) +
                              " cells, expected " + std::to_string(header.size()));
        int year = 0;
        if (!parse_int(cells[0], year))
            throw Error::data(origin + ": unparseable year '" + cells[0] + "'");
        years.push_back(year);
        std::vector<double> row(header.size() - 1);
        for (std::size_t j = 1; j < cells.size(); ++j) row[j - 1] = parse_cell(cells[j]);
        rows.push_back(std::move(row));
    }

    // Sort rows by year, then let the frame constructor enforce the
    // no-duplicate / no-gap invariants.
    std::vector<std::size_t> order(years.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (years[a] != years[b]) return years[a] < years[b];
        return a < b;
    });
    std::vector<int> sorted_years;
    sorted_years.reserve(years.size());
    for (std::size_t idx : order) sorted_years.push_back(years[idx]);

    TimeSeriesFrame frame(std::move(sorted_years));
    for (std::size_t j = 1; j < header.size(); ++j) {
        std::vector<double> col;
        col.reserve(order.size());
        for (std::size_t idx : order) col.push_back(rows[idx][j - 1]);
        frame.add_column(header[j], std::move(col));
    }
    return frame;
}

TimeSeriesFrame load_csv(const std::string& path, const std::vector<std::string>& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::data("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), schema, path);
}

std::string write_csv(const TimeSeriesFrame& frame) {
    std::string out = "year";
    for (const auto& name : frame.column_names()) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t i = 0; i < frame.n_years(); ++i) {
        out += std::to_string(frame.years()[i]);
        for (const auto& name : frame.column_names()) {
            out += ',';
            out += format_value(frame.column(name)[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<double> growth_rate(const TimeSeriesFrame& frame, const std::string& column,
                                std::vector<std::string>* warnings) {
    const std::vector<double>& x = frame.column(column);
    std::vector<double> g(x.size(), missing_value());
    std::size_t computable = 0;
    for (std::size_t t = 1; t < x.size(); ++t) {
        if (is_missing(x[t]) || is_missing(x[t - 1])) continue;
        if (x[t - 1] == 0.0) {
            if (warnings)
                warnings->push_back("growth_rate(" + column + "): zero base value in " +
                                    std::to_string(frame.years()[t - 1]) + ", cell left missing");
            continue;
        }
        g[t] = 100.0 * (x[t] - x[t - 1]) / x[t - 1];
        ++computable;
    }
    if (computable == 0)
        throw Error::data("growth_rate(" + column + "): no consecutive non-missing pair");
    return g;
}

std::vector<double> share_of_gdp(const TimeSeriesFrame& frame, const std::string& numerator,
                                 const std::string& gdp_column,
                                 std::vector<std::string>* warnings) {
    const std::vector<double>& num = frame.column(numerator);
    const std::vector<double>& gdp = frame.column(gdp_column);
    std::vector<double> s(num.size(), missing_value());
    for (std::size_t t = 0; t < num.size(); ++t) {
        if (is_missing(num[t])) continue;
        if (is_missing(gdp[t]) || gdp[t] <= 0.0) {
            if (warnings)
                warnings->push_back("share_of_gdp(" + numerator + "): non-positive or missing GDP in " +
                                    std::to_string(frame.years()[t]) + ", cell left missing");
            continue;
        }
        s[t] = 100.0 * num[t] / gdp[t];
    }
    return s;
}

std::vector<double> apply_dummy(const TimeSeriesFrame& frame, const DummySpec& spec) {
    if (spec.active_years.empty())
        throw Error::data("dummy '" + spec.name + "' has no active years");
    for (int y : spec.active_years)
        if (frame.year_index(y) < 0)
            throw Error::data("dummy '" + spec.name + "' year " + std::to_string(y) +
                              " outside the frame's " + std::to_string(frame.years().front()) +
                              "-" + std::to_string(frame.years().back()) + " range");
    std::vector<double> d(frame.n_years(), 0.0);
    for (int y : spec.active_years) d[frame.year_index(y)] = 1.0;
    return d;
}

DesignMatrix build_design(const TimeSeriesFrame& frame, const DesignSpec& spec) {
    const std::vector<double>& y = frame.column(spec.response);
    std::vector<const std::vector<double>*> cols;
    cols.reserve(spec.regressors.size());
    for (const auto& name : spec.regressors) cols.push_back(&frame.column(name));

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < frame.n_years(); ++i) {
        bool complete = !is_missing(y[i]);
        for (const auto* c : cols) complete = complete && !is_missing((*c)[i]);
        if (complete) keep.push_back(i);
    }

    DesignMatrix d;
    d.response_name = spec.response;
    d.has_intercept = spec.intercept;
    if (spec.intercept) d.regressor_names.push_back("const");
    for (const auto& name : spec.regressors) d.regressor_names.push_back(name);

    const std::size_t n = keep.size();
    const std::size_t k = d.regressor_names.size();
    if (n <= k)
        throw Error::numeric("design for '" + spec.response + "' has n=" + std::to_string(n) +
                             " complete rows for k=" + std::to_string(k) +
                             " regressors; need n > k");

    d.response.reserve(n);
    d.years.reserve(n);
    d.X = Matrix(n, k);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t i = keep[r];
        d.response.push_back(y[i]);
        d.years.push_back(frame.years()[i]);
        std::size_t c = 0;
        if (spec.intercept) d.X(r, c++) = 1.0;
        for (const auto* col : cols) d.X(r, c++) = (*col)[i];
    }
    return d;
}

}  // namespace armey
