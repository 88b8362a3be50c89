#include "armey/diagnostics.hpp"

#include <cmath>
#include <numeric>

#include "armey/error.hpp"
#include "armey/special.hpp"

namespace armey {

namespace {

void set_chi_square_verdicts(TestResult& r) {
    r.p_value = 1.0 - chi_square_cdf(r.statistic, r.df);
    r.reject_1pct = r.p_value < 0.01;
    r.reject_5pct = r.p_value < 0.05;
    r.reject_10pct = r.p_value < 0.10;
}

double aux_r_squared(const DesignMatrix& aux) {
    const OlsFit f = fit(aux);
    return f.r2;
}

bool near_duplicate(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, norm_a = 0.0, norm_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        norm_a += a[i] * a[i];
        norm_b += b[i] * b[i];
    }
    const double scale = std::max(norm_a, norm_b);
    return scale == 0.0 || num <= 1e-24 * scale;
}

bool near_zero(const std::vector<double>& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s <= 1e-24;
}

}  // namespace

TestResult breusch_godfrey(const OlsFit& f, int lag_order) {
    if (lag_order <= 0) throw Error::config("breusch_godfrey: lag order must be positive");
    const std::size_t n = f.residuals.size();
    const std::size_t k = f.design.k();
    if (n < static_cast<std::size_t>(lag_order) + k + 1)
        throw Error::numeric("breusch_godfrey: too few residuals for lag order " +
                             std::to_string(lag_order));

    // An (all but) exact fit leaves nothing to correlate: the lagged
    // residual columns would be numerically zero and collinear.
    double ess = 0.0, yss = 0.0;
    for (double e : f.residuals) ess += e * e;
    for (double y : f.design.response) yss += y * y;
    if (ess <= 1e-24 * std::max(1.0, yss)) {
        TestResult r;
        r.name = "breusch_godfrey";
        r.df = lag_order;
        r.statistic = 0.0;
        r.nuisance["lag_order"] = std::to_string(lag_order);
        set_chi_square_verdicts(r);
        return r;
    }

    DesignMatrix aux;
    aux.response_name = "resid";
    aux.response = f.residuals;
    aux.has_intercept = f.design.has_intercept;
    aux.regressor_names = f.design.regressor_names;
    aux.years = f.design.years;
    const std::size_t k_aux = k + lag_order;
    aux.X = Matrix(n, k_aux);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) aux.X(i, j) = f.design.X(i, j);
    for (int l = 1; l <= lag_order; ++l) {
        aux.regressor_names.push_back("resid_lag" + std::to_string(l));
        for (std::size_t i = 0; i < n; ++i)
            aux.X(i, k + l - 1) = i >= static_cast<std::size_t>(l)
                                      ? f.residuals[i - l]
                                      : 0.0;  // pre-sample lags set to zero
    }

    TestResult r;
    r.name = "breusch_godfrey";
    r.df = lag_order;
    r.statistic = static_cast<double>(n) * aux_r_squared(aux);
    r.nuisance["lag_order"] = std::to_string(lag_order);
    set_chi_square_verdicts(r);
    return r;
}

TestResult white_test(const OlsFit& f, bool include_cross_terms) {
    const std::size_t n = f.residuals.size();
    const std::size_t k = f.design.k();

    // Candidate auxiliary columns in deterministic order: the original
    // non-constant regressors, their squares, then pairwise cross
    // products. Duplicates and zero columns are dropped, first kept.
    std::vector<std::vector<double>> base;
    std::vector<std::string> base_names;
    for (std::size_t j = 0; j < k; ++j) {
        if (f.design.has_intercept && j == 0) continue;
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = f.design.X(i, j);
        base.push_back(std::move(col));
        base_names.push_back(f.design.regressor_names[j]);
    }

    std::vector<std::vector<double>> candidates = base;
    std::vector<std::string> names = base_names;
    for (std::size_t j = 0; j < base.size(); ++j) {
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = base[j][i] * base[j][i];
        candidates.push_back(std::move(col));
        names.push_back(base_names[j] + "^2");
    }
    if (include_cross_terms) {
        for (std::size_t a = 0; a < base.size(); ++a)
            for (std::size_t b = a + 1; b < base.size(); ++b) {
                std::vector<double> col(n);
                for (std::size_t i = 0; i < n; ++i) col[i] = base[a][i] * base[b][i];
                candidates.push_back(std::move(col));
                names.push_back(base_names[a] + "*" + base_names[b]);
            }
    }

    std::vector<std::vector<double>> kept;
    std::vector<std::string> kept_names;
    const std::vector<double> ones(n, 1.0);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (near_zero(candidates[c]) || near_duplicate(candidates[c], ones)) continue;
        bool dup = false;
        for (const auto& prev : kept)
            if (near_duplicate(candidates[c], prev)) {
                dup = true;
                break;
            }
        if (!dup) {
            kept.push_back(std::move(candidates[c]));
            kept_names.push_back(names[c]);
        }
    }
    if (kept.empty()) throw Error::numeric("white_test: degenerate auxiliary design");

    DesignMatrix aux;
    aux.response_name = "resid_sq";
    aux.response.resize(n);
    for (std::size_t i = 0; i < n; ++i) aux.response[i] = f.residuals[i] * f.residuals[i];
    aux.has_intercept = true;
    aux.regressor_names.push_back("const");
    for (const auto& nm : kept_names) aux.regressor_names.push_back(nm);
    aux.years = f.design.years;
    aux.X = Matrix(n, kept.size() + 1);
    for (std::size_t i = 0; i < n; ++i) {
        aux.X(i, 0) = 1.0;
        for (std::size_t c = 0; c < kept.size(); ++c) aux.X(i, c + 1) = kept[c][i];
    }
    if (aux.X.rows() <= aux.X.cols())
        throw Error::numeric("white_test: auxiliary design has n <= k");

    TestResult r;
    r.name = "white";
    r.df = static_cast<int>(kept.size());
    r.statistic = static_cast<double>(n) * aux_r_squared(aux);
    r.nuisance["cross_terms"] = include_cross_terms ? "yes" : "no";
    r.nuisance["aux_regressors"] = std::to_string(kept.size());
    set_chi_square_verdicts(r);
    return r;
}

TestResult jarque_bera(const std::vector<double>& residuals) {
    const std::size_t n = residuals.size();
    if (n < 4) throw Error::numeric("jarque_bera: need at least 4 observations");
    const double mean = std::accumulate(residuals.begin(), residuals.end(), 0.0) / n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double e : residuals) {
        const double d = e - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (m2 <= 0.0) throw Error::numeric("jarque_bera: zero variance sample");
    const double skew = m3 / std::pow(m2, 1.5);
    const double kurt = m4 / (m2 * m2);

    TestResult r;
    r.name = "jarque_bera";
    r.df = 2;
    r.statistic = n * (skew * skew / 6.0 + (kurt - 3.0) * (kurt - 3.0) / 24.0);
    set_chi_square_verdicts(r);
    return r;
}

double CusumResult::bound_at(std::size_t i, double a) const {
    const double m = static_cast<double>(path.size());
    // t - k = i + 1 at path position i.
    return a * (std::sqrt(m) + 2.0 * (i + 1) / std::sqrt(m));
}

bool CusumResult::exits_band(double a) const {
    for (std::size_t i = 0; i < path.size(); ++i)
        if (std::abs(path[i]) >= bound_at(i, a)) return true;
    return false;
}

CusumResult cusum_test(const DesignMatrix& design) {
    const std::vector<double> w = recursive_residuals(design);
    const std::size_t m = w.size();
    if (m < 2) throw Error::numeric("cusum_test: need at least 2 recursive residuals");

    const double wbar = std::accumulate(w.begin(), w.end(), 0.0) / m;
    double ss = 0.0;
    for (double v : w) ss += (v - wbar) * (v - wbar);
    double sigma = std::sqrt(ss / (m - 1));

    // Zero-noise designs leave only rounding error in w; the path is
    // identically zero rather than rounding noise divided by itself.
    double resp_scale = 0.0;
    for (double y : design.response) resp_scale = std::max(resp_scale, std::abs(y));
    if (sigma <= 1e-12 * std::max(1.0, resp_scale)) sigma = 0.0;

    CusumResult r;
    r.scale = sigma;
    r.steps.resize(m);
    r.path.resize(m);
    double cum = 0.0;
    const double sqrt_m = std::sqrt(static_cast<double>(m));
    double max_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        cum += w[i];
        r.steps[i] = static_cast<int>(design.k() + i + 1);
        r.path[i] = sigma > 0.0 ? cum / sigma : 0.0;
        const double unit_bound = sqrt_m + 2.0 * (i + 1) / sqrt_m;
        max_ratio = std::max(max_ratio, std::abs(r.path[i]) / unit_bound);
    }
    r.statistic = max_ratio;
    r.critical_values = cusum_critical_values();
    r.reject_1pct = r.statistic >= r.critical_values.at_1pct;
    r.reject_5pct = r.statistic >= r.critical_values.at_5pct;
    r.reject_10pct = r.statistic >= r.critical_values.at_10pct;
    return r;
}

}  // namespace armey
