#include "armey/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "armey/error.hpp"

namespace armey {

namespace {

constexpr double kCurvatureTol = 1e-12;
constexpr int kCurveSamples = 200;

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

}  // namespace

std::string column_name(SpendingVariable v) {
    return v == SpendingVariable::Gfcf ? "GFCF" : "GFCE";
}

std::string to_string(SpendingVariable v) {
    return v == SpendingVariable::Gfcf ? "gfcf" : "gfce";
}

std::string to_string(ShapeVerdict v) {
    switch (v) {
        case ShapeVerdict::InvertedU: return "inverted_u";
        case ShapeVerdict::UShaped: return "u_shaped";
        case ShapeVerdict::MonotoneDegenerate: return "monotone_degenerate";
    }
    return "?";
}

ShapeVerdict classify_shape(double beta3, double beta4) {
    if (std::abs(beta4) <= kCurvatureTol) return ShapeVerdict::MonotoneDegenerate;
    if (beta4 > 0.0) return ShapeVerdict::UShaped;
    return beta3 > 0.0 ? ShapeVerdict::InvertedU : ShapeVerdict::MonotoneDegenerate;
}

double optimal_share(double beta3, double beta4) {
    if (!(beta4 < 0.0))
        throw Error::numeric("no interior maximum: quadratic term is not negative (shape: " +
                             to_string(classify_shape(beta3, beta4)) + ")");
    return -beta3 / (2.0 * beta4);
}

ArmeyResult fit_armey_model(const TimeSeriesFrame& frame, SpendingVariable spending) {
    const std::string gov = column_name(spending);
    const std::string gov2 = gov + "2";

    TimeSeriesFrame work = frame;
    if (!work.has_column(gov2)) {
        const std::vector<double>& g = work.column(gov);
        std::vector<double> sq(g.size(), missing_value());
        for (std::size_t i = 0; i < g.size(); ++i)
            if (!is_missing(g[i])) sq[i] = g[i] * g[i];
        work.add_column(gov2, std::move(sq));
    }

    DesignSpec spec;
    spec.response = "GGDP";
    spec.regressors = {"LAB", "EXPO", gov, gov2};
    const DesignMatrix design = build_design(work, spec);

    // The spending share must actually vary within the retained sample.
    const int gov_col = 3;
    double gmin = design.X(0, gov_col), gmax = gmin;
    for (std::size_t i = 0; i < design.n(); ++i) {
        gmin = std::min(gmin, design.X(i, gov_col));
        gmax = std::max(gmax, design.X(i, gov_col));
    }
    if (gmax - gmin < 1e-12)
        throw Error::numeric("spending share '" + gov + "' has zero variance");

    ArmeyResult res;
    res.spending_variable = spending;
    res.fit = fit(design);
    res.beta3 = res.fit.coef(gov);
    res.beta4 = res.fit.coef(gov2);
    res.shape_verdict = classify_shape(res.beta3, res.beta4);
    if (res.beta4 < 0.0) res.optimum_share = -res.beta3 / (2.0 * res.beta4);

    double lab_mean = 0.0, expo_mean = 0.0;
    for (std::size_t i = 0; i < design.n(); ++i) {
        lab_mean += design.X(i, 1);
        expo_mean += design.X(i, 2);
    }
    lab_mean /= design.n();
    expo_mean /= design.n();
    const double base = res.fit.beta[0] + res.fit.beta[1] * lab_mean + res.fit.beta[2] * expo_mean;

    res.curve.reserve(kCurveSamples);
    for (int i = 0; i < kCurveSamples; ++i) {
        const double g = gmin + (gmax - gmin) * i / (kCurveSamples - 1.0);
        res.curve.push_back({g, base + res.beta3 * g + res.beta4 * g * g});
    }
    return res;
}

OrthoBasis build_ortho_basis(const std::vector<double>& x, const std::string& source_name) {
    const std::size_t n = x.size();
    std::set<double> distinct(x.begin(), x.end());
    if (distinct.size() < 3)
        throw Error::numeric("orthogonal basis for '" + source_name +
                             "' needs at least 3 distinct values");

    OrthoBasis b;
    b.source = source_name;
    b.n = n;

    // Monic recurrence: pi0 = 1, pi1 = x - a0, pi2 = (x - a1) pi1 - b1,
    // with a_j = <x pi_j, pi_j>/<pi_j, pi_j> and b1 = <pi1, pi1>/<pi0, pi0>.
    b.a0 = mean_of(x);
    std::vector<double> pi1(n);
    double norm1_sq = 0.0, x_pi1_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        pi1[i] = x[i] - b.a0;
        norm1_sq += pi1[i] * pi1[i];
        x_pi1_sq += x[i] * pi1[i] * pi1[i];
    }
    b.a1 = x_pi1_sq / norm1_sq;
    b.b1 = norm1_sq / n;

    std::vector<double> pi2(n);
    double norm2_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        pi2[i] = (x[i] - b.a1) * pi1[i] - b.b1;
        norm2_sq += pi2[i] * pi2[i];
    }
    if (norm2_sq <= 0.0)
        throw Error::numeric("orthogonal basis for '" + source_name + "' is rank deficient");

    b.scale1 = std::sqrt(n / norm1_sq);
    b.scale2 = std::sqrt(n / norm2_sq);
    b.p1.resize(n);
    b.p2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.p1[i] = b.scale1 * pi1[i];
        b.p2[i] = b.scale2 * pi2[i];
    }
    return b;
}

RawVertex vertex_on_raw_scale(const OrthoBasis& basis, double alpha1, double alpha2) {
    // q(x) = a1 s1 (x - a0) + a2 s2 ((x - a1)(x - a0) - b1) has second
    // derivative 2 a2 s2; concavity needs alpha2 < 0.
    if (!(alpha2 * basis.scale2 < 0.0))
        throw Error::numeric("no interior maximum on raw scale: quadratic coefficient " +
                             std::to_string(alpha2) + " is not negative");
    RawVertex v{};
    v.exact = 0.5 * (basis.a0 + basis.a1) -
              alpha1 * basis.scale1 / (2.0 * alpha2 * basis.scale2);
    const double ortho_vertex = -alpha1 / (2.0 * alpha2);
    v.approximate = basis.a0 + ortho_vertex / basis.scale1;
    return v;
}

RobustnessResult fit_robustness_model(const TimeSeriesFrame& frame,
                                      const std::vector<DummySpec>& dummies) {
    // Find the retained rows first, then build the orthogonal bases over
    // exactly that estimation sample.
    DesignSpec probe;
    probe.response = "GGDP";
    probe.regressors = {"LAB", "EXPO", "GFCF", "GFCE"};
    const DesignMatrix raw = build_design(frame, probe);

    std::vector<double> gfcf(raw.n()), gfce(raw.n());
    for (std::size_t i = 0; i < raw.n(); ++i) {
        gfcf[i] = raw.X(i, 3);
        gfce[i] = raw.X(i, 4);
    }

    RobustnessResult res;
    res.basis_gfcf = build_ortho_basis(gfcf, "GFCF");
    res.basis_gfce = build_ortho_basis(gfce, "GFCE");

    DesignMatrix d;
    d.response_name = "GGDP";
    d.response = raw.response;
    d.years = raw.years;
    d.has_intercept = true;
    d.regressor_names = {"const", "LAB", "EXPO", "PGFCF1", "PGFCF2", "PGFCE1", "PGFCE2"};
    std::vector<std::vector<double>> dummy_cols;
    for (const auto& spec : dummies) {
        d.regressor_names.push_back(spec.name);
        const std::vector<double> full = apply_dummy(frame, spec);
        std::vector<double> sub(raw.n());
        for (std::size_t i = 0; i < raw.n(); ++i)
            sub[i] = full[frame.year_index(raw.years[i])];
        dummy_cols.push_back(std::move(sub));
    }

    const std::size_t n = raw.n();
    const std::size_t k = d.regressor_names.size();
    if (n <= k)
        throw Error::numeric("robustness design has n=" + std::to_string(n) +
                             " rows for k=" + std::to_string(k) + " regressors");
    d.X = Matrix(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        d.X(i, 0) = 1.0;
        d.X(i, 1) = raw.X(i, 1);  // LAB
        d.X(i, 2) = raw.X(i, 2);  // EXPO
        d.X(i, 3) = res.basis_gfcf.p1[i];
        d.X(i, 4) = res.basis_gfcf.p2[i];
        d.X(i, 5) = res.basis_gfce.p1[i];
        d.X(i, 6) = res.basis_gfce.p2[i];
        for (std::size_t j = 0; j < dummy_cols.size(); ++j) d.X(i, 7 + j) = dummy_cols[j][i];
    }

    res.fit = fit(d);

    const double a1 = res.fit.coef("PGFCF1");
    const double a2 = res.fit.coef("PGFCF2");
    if (a2 < 0.0) {
        const RawVertex v = vertex_on_raw_scale(res.basis_gfcf, a1, a2);
        res.optimum_gfcf = QuadraticOptimum{-a1 / (2.0 * a2), v.exact, v.approximate};
    }
    const double a3 = res.fit.coef("PGFCE1");
    const double a4 = res.fit.coef("PGFCE2");
    if (a4 < 0.0) {
        const RawVertex v = vertex_on_raw_scale(res.basis_gfce, a3, a4);
        res.optimum_gfce = QuadraticOptimum{-a3 / (2.0 * a4), v.exact, v.approximate};
    }
    return res;
}

}  // namespace armey
