#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "armey/curve.hpp"
#include "armey/error.hpp"
#include "armey/pipeline.hpp"
#include "armey/rng.hpp"
#include "oracles.hpp"

using namespace armey;

namespace {

// Analysis frame drawn from the quadratic model with known coefficients.
TimeSeriesFrame synthetic_frame(Rng& rng, int n, const std::vector<double>& beta, double sigma,
                                double gov_lo = 2.0, double gov_hi = 9.0) {
    std::vector<int> years;
    for (int i = 0; i < n; ++i) years.push_back(1800 + i);
    TimeSeriesFrame f(years);
    std::vector<double> lab(n), expo(n), gov(n), gfce(n), ggdp(n);
    for (int i = 0; i < n; ++i) {
        lab[i] = rng.normal(2.0, 0.7);
        expo[i] = rng.normal(8.0, 6.0);
        gov[i] = rng.uniform(gov_lo, gov_hi);
        gfce[i] = rng.uniform(3.0, 12.0);
        ggdp[i] = beta[0] + beta[1] * lab[i] + beta[2] * expo[i] + beta[3] * gov[i] +
                  beta[4] * gov[i] * gov[i] + (sigma > 0.0 ? rng.normal(0.0, sigma) : 0.0);
    }
    f.add_column("GGDP", ggdp);
    f.add_column("LAB", lab);
    f.add_column("EXPO", expo);
    f.add_column("GFCF", gov);
    f.add_column("GFCE", gfce);
    return f;
}

const std::vector<double> kTrueBeta = {-20.0, 1.2, 0.1, 9.0, -0.85};

}  // namespace

TEST_CASE("optimal_share formula and error contract") {
    CHECK(optimal_share(9.155, -0.848) == doctest::Approx(5.398).epsilon(2e-4));
    CHECK(optimal_share(2.820, -0.195) == doctest::Approx(7.231).epsilon(2e-4));
    CHECK(optimal_share(2.0, -1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_WITH_AS(optimal_share(1.0, 0.5), doctest::Contains("no interior maximum"),
                         Error);
    CHECK_THROWS_AS(optimal_share(1.0, 0.0), Error);
}

TEST_CASE("orthogonal-scale vertex arithmetic on reference coefficients") {
    // Reference robustness estimates: PGFCF pair (1.427, -1.657) and
    // PGFCE pair (-2.486, -2.264).
    CHECK(-1.427 / (2.0 * -1.657) == doctest::Approx(0.4306).epsilon(2e-4));
    CHECK(-(-2.486) / (2.0 * -2.264) == doctest::Approx(-0.549).epsilon(2e-3));
    CHECK(optimal_share(1.427, -1.657) == doctest::Approx(0.4306).epsilon(2e-4));
}

TEST_CASE("shape classification") {
    CHECK(classify_shape(9.0, -0.85) == ShapeVerdict::InvertedU);
    CHECK(classify_shape(1.0, 0.5) == ShapeVerdict::UShaped);
    CHECK(classify_shape(1.0, 0.0) == ShapeVerdict::MonotoneDegenerate);
    CHECK(classify_shape(1.0, 1e-13) == ShapeVerdict::MonotoneDegenerate);
    // Concave but with a non-positive vertex: monotone over positive shares.
    CHECK(classify_shape(-2.0, -0.5) == ShapeVerdict::MonotoneDegenerate);
}

TEST_CASE("ortho basis: symmetric sample orthogonality is exact") {
    const std::vector<double> x = {-2.0, -1.0, 0.0, 1.0, 2.0};
    const OrthoBasis b = build_ortho_basis(x);
    CHECK(b.a0 == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    // P1 proportional to x - mean.
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(b.p1[i] == doctest::Approx(b.scale1 * x[i]).epsilon(1e-14));
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += b.p1[i] * b.p2[i];
    CHECK(dot == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("ortho basis: Gram(1, P1, P2) = n*I on random samples") {
    Rng rng(300);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 10 + static_cast<int>(rng.uniform() * 80);
        std::vector<double> x(n);
        for (auto& v : x) v = rng.uniform(1.0, 25.0);
        const OrthoBasis b = build_ortho_basis(x);
        double g01 = 0.0, g02 = 0.0, g12 = 0.0, g11 = 0.0, g22 = 0.0;
        for (int i = 0; i < n; ++i) {
            g01 += b.p1[i];
            g02 += b.p2[i];
            g12 += b.p1[i] * b.p2[i];
            g11 += b.p1[i] * b.p1[i];
            g22 += b.p2[i] * b.p2[i];
        }
        CHECK(std::abs(g01) <= 1e-8 * n);
        CHECK(std::abs(g02) <= 1e-8 * n);
        CHECK(std::abs(g12) <= 1e-8 * n);
        CHECK(std::abs(g11 - n) <= 1e-8 * n);
        CHECK(std::abs(g22 - n) <= 1e-8 * n);
        // Evaluation maps reproduce the stored columns.
        for (int i = 0; i < n; ++i) {
            CHECK(b.eval_p1(x[i]) == doctest::Approx(b.p1[i]).epsilon(1e-10));
            CHECK(b.eval_p2(x[i]) == doctest::Approx(b.p2[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("ortho basis: fewer than 3 distinct values is a rank error") {
    CHECK_THROWS_AS(build_ortho_basis({1.0, 1.0, 2.0, 2.0, 1.0}), Error);
}

TEST_CASE("regression on (1, P1, P2) equals regression on (1, x, x^2)") {
    Rng rng(301);
    const int n = 45;
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = rng.uniform(2.0, 9.0);
        y[i] = 3.0 + 2.0 * x[i] - 0.4 * x[i] * x[i] + rng.normal();
    }
    const OrthoBasis b = build_ortho_basis(x);

    auto make_design = [&](bool ortho) {
        DesignMatrix d;
        d.response_name = "y";
        d.response = y;
        d.has_intercept = true;
        d.regressor_names = ortho ? std::vector<std::string>{"const", "P1", "P2"}
                                  : std::vector<std::string>{"const", "x", "x2"};
        d.X = Matrix(n, 3);
        d.years.resize(n);
        for (int i = 0; i < n; ++i) {
            d.years[i] = i;
            d.X(i, 0) = 1.0;
            d.X(i, 1) = ortho ? b.p1[i] : x[i];
            d.X(i, 2) = ortho ? b.p2[i] : x[i] * x[i];
        }
        return d;
    };
    const OlsFit fo = fit(make_design(true));
    const OlsFit fr = fit(make_design(false));
    CHECK(fo.r2 == doctest::Approx(fr.r2).epsilon(1e-9));
    for (int i = 0; i < n; ++i)
        CHECK(fo.fitted[i] == doctest::Approx(fr.fitted[i]).epsilon(1e-9));

    // Raw-scale vertex from the orthogonal fit equals the raw fit's vertex.
    const RawVertex v = vertex_on_raw_scale(b, fo.beta[1], fo.beta[2]);
    CHECK(v.exact == doctest::Approx(-fr.beta[1] / (2.0 * fr.beta[2])).epsilon(1e-8));
}

TEST_CASE("vertex_on_raw_scale: zero skew kills P2's linear-in-P1 term") {
    std::vector<double> x;
    for (int i = 0; i <= 20; ++i) x.push_back(3.0 + 0.25 * i);  // symmetric grid
    const OrthoBasis b = build_ortho_basis(x);
    // Symmetry forces a1 = a0, so the exact vertex loses its a1 shift...
    CHECK(b.a1 == doctest::Approx(b.a0).epsilon(1e-12));
    const RawVertex v = vertex_on_raw_scale(b, 1.3, -0.7);
    CHECK(v.exact ==
          doctest::Approx(b.a0 - 1.3 * b.scale1 / (2.0 * -0.7 * b.scale2)).epsilon(1e-12));
    // ...and the two routes differ exactly by the curvature ratio
    // s1^2/s2 that the approximate z = P1 reading ignores.
    CHECK(v.exact - b.a0 ==
          doctest::Approx((v.approximate - b.a0) * b.scale1 * b.scale1 / b.scale2)
              .epsilon(1e-10));
}

TEST_CASE("vertex_on_raw_scale matches a dense grid search") {
    Rng rng(302);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 45;
        std::vector<double> x(n);
        for (auto& v : x) v = rng.uniform(2.0, 9.0);
        const OrthoBasis b = build_ortho_basis(x);
        const double alpha1 = rng.uniform(0.2, 3.0);
        const double alpha2 = -rng.uniform(0.2, 3.0);
        const RawVertex v = vertex_on_raw_scale(b, alpha1, alpha2);
        auto q = [&](double t) { return alpha1 * b.eval_p1(t) + alpha2 * b.eval_p2(t); };
        const double lo = *std::min_element(x.begin(), x.end());
        const double hi = *std::max_element(x.begin(), x.end());
        if (v.exact > lo && v.exact < hi) {
            const double grid = oracles::grid_search_max(q, lo, hi);
            CHECK(std::abs(v.exact - grid) < 1e-6 + (hi - lo) / 2000000.0);
        }
    }
    const OrthoBasis b = build_ortho_basis({1.0, 2.0, 3.0, 4.0});
    CHECK_THROWS_AS(vertex_on_raw_scale(b, 1.0, 0.5), Error);
}

TEST_CASE("fit_armey_model recovers a known quadratic model") {
    Rng rng(303);
    const TimeSeriesFrame f = synthetic_frame(rng, 200, kTrueBeta, 1.0);
    const ArmeyResult r = fit_armey_model(f, SpendingVariable::Gfcf);
    CHECK(r.shape_verdict == ShapeVerdict::InvertedU);
    for (std::size_t j = 0; j < 5; ++j)
        CHECK(std::abs(r.fit.beta[j] - kTrueBeta[j]) <= 3.0 * r.fit.se[j]);
    REQUIRE(r.optimum_share.has_value());
    CHECK(std::abs(*r.optimum_share - 9.0 / (2.0 * 0.85)) < 0.3);
    CHECK(r.curve.size() == 200);
}

TEST_CASE("optimal share is scale-consistent under rescaling of the share") {
    Rng rng(304);
    TimeSeriesFrame f = synthetic_frame(rng, 150, kTrueBeta, 0.5);
    const ArmeyResult base = fit_armey_model(f, SpendingVariable::Gfcf);

    const double c = 3.5;
    std::vector<double> scaled = f.column("GFCF");
    for (double& v : scaled) v *= c;
    TimeSeriesFrame g(f.years());
    g.add_column("GGDP", f.column("GGDP"));
    g.add_column("LAB", f.column("LAB"));
    g.add_column("EXPO", f.column("EXPO"));
    g.add_column("GFCF", scaled);
    g.add_column("GFCE", f.column("GFCE"));
    const ArmeyResult rescaled = fit_armey_model(g, SpendingVariable::Gfcf);

    REQUIRE(base.optimum_share.has_value());
    REQUIRE(rescaled.optimum_share.has_value());
    CHECK(*rescaled.optimum_share ==
          doctest::Approx(c * *base.optimum_share).epsilon(1e-8));
}

TEST_CASE("the optimum maximizes predicted growth at sample means") {
    Rng rng(305);
    const TimeSeriesFrame f = synthetic_frame(rng, 150, kTrueBeta, 1.0);
    const ArmeyResult r = fit_armey_model(f, SpendingVariable::Gfcf);
    REQUIRE(r.optimum_share.has_value());
    const double opt = *r.optimum_share;
    auto predict = [&](double g) { return r.beta3 * g + r.beta4 * g * g; };
    for (double delta : {0.1, 1.0}) {
        CHECK(predict(opt) >= predict(opt + delta));
        CHECK(predict(opt) >= predict(opt - delta));
    }
}

TEST_CASE("fit_armey_model: zero-variance share is a degenerate error") {
    Rng rng(306);
    TimeSeriesFrame f = synthetic_frame(rng, 50, kTrueBeta, 1.0);
    std::vector<double> flat(f.n_years(), 5.0);
    TimeSeriesFrame g(f.years());
    g.add_column("GGDP", f.column("GGDP"));
    g.add_column("LAB", f.column("LAB"));
    g.add_column("EXPO", f.column("EXPO"));
    g.add_column("GFCF", flat);
    g.add_column("GFCE", f.column("GFCE"));
    CHECK_THROWS_AS(fit_armey_model(g, SpendingVariable::Gfcf), Error);
}

TEST_CASE("robustness model: ortho and raw parameterizations agree where it matters") {
    Rng rng(307);
    TimeSeriesFrame f = synthetic_frame(rng, 80, kTrueBeta, 1.0);
    std::vector<DummySpec> dummies = {{"du1", {1810}}, {"du2", {1840, 1841}}};
    const RobustnessResult r = fit_robustness_model(f, dummies);
    REQUIRE(r.optimum_gfcf.has_value());

    // Same regression with raw x, x^2 columns instead of P1, P2.
    DesignMatrix raw;
    raw.response_name = "GGDP";
    raw.has_intercept = true;
    raw.regressor_names = {"const", "LAB",  "EXPO", "GFCF", "GFCF_sq",
                           "GFCE",  "GFCE_sq", "du1",  "du2"};
    const DesignMatrix& od = r.fit.design;
    const std::size_t n = od.n();
    raw.X = Matrix(n, 9);
    raw.response = od.response;
    raw.years = od.years;
    for (std::size_t i = 0; i < n; ++i) {
        const int yi = f.year_index(od.years[i]);
        const double gfcf = f.column("GFCF")[yi];
        const double gfce = f.column("GFCE")[yi];
        raw.X(i, 0) = 1.0;
        raw.X(i, 1) = od.X(i, 1);
        raw.X(i, 2) = od.X(i, 2);
        raw.X(i, 3) = gfcf;
        raw.X(i, 4) = gfcf * gfcf;
        raw.X(i, 5) = gfce;
        raw.X(i, 6) = gfce * gfce;
        raw.X(i, 7) = od.X(i, 7);
        raw.X(i, 8) = od.X(i, 8);
    }
    const OlsFit rf = fit(raw);
    CHECK(r.fit.r2 == doctest::Approx(rf.r2).epsilon(1e-9));
    CHECK(r.fit.rmse == doctest::Approx(rf.rmse).epsilon(1e-9));
    for (std::size_t i = 0; i < n; ++i)
        CHECK(r.fit.fitted[i] == doctest::Approx(rf.fitted[i]).epsilon(1e-8));
    const double raw_vertex = -rf.coef("GFCF") / (2.0 * rf.coef("GFCF_sq"));
    CHECK(r.optimum_gfcf->share_exact == doctest::Approx(raw_vertex).epsilon(1e-8));
}

TEST_CASE("single-year dummy absorbs an exact outlier") {
    Rng rng(308);
    const int n = 40;
    TimeSeriesFrame f = synthetic_frame(rng, n, kTrueBeta, 0.0);  // zero noise
    const int outlier_year = 1820;
    std::vector<double> y = f.column("GGDP");
    const int idx = f.year_index(outlier_year);
    const double delta = -7.5;
    y[idx] += delta;
    TimeSeriesFrame g(f.years());
    g.add_column("GGDP", y);
    g.add_column("LAB", f.column("LAB"));
    g.add_column("EXPO", f.column("EXPO"));
    g.add_column("GFCF", f.column("GFCF"));
    g.add_column("GFCE", f.column("GFCE"));

    TimeSeriesFrame h = g;
    h.add_column("du", apply_dummy(g, {"du", {outlier_year}}));
    h.add_column("GFCF2", [&] {
        std::vector<double> sq;
        for (double v : g.column("GFCF")) sq.push_back(v * v);
        return sq;
    }());
    const DesignMatrix d =
        build_design(h, {"GGDP", {"LAB", "EXPO", "GFCF", "GFCF2", "du"}, true});
    const OlsFit fit_with_dummy = fit(d);

    // The dummy coefficient is exactly the injected adjustment and the
    // remaining coefficients are the true ones.
    CHECK(fit_with_dummy.coef("du") == doctest::Approx(delta).epsilon(1e-8));
    CHECK(fit_with_dummy.coef("const") == doctest::Approx(kTrueBeta[0]).epsilon(1e-8));
    CHECK(fit_with_dummy.coef("LAB") == doctest::Approx(kTrueBeta[1]).epsilon(1e-8));
    CHECK(fit_with_dummy.coef("GFCF") == doctest::Approx(kTrueBeta[3]).epsilon(1e-8));
    for (double e : fit_with_dummy.residuals) CHECK(std::abs(e) < 1e-8);

    // Dropping the dummy's contribution changes only the outlier year.
    const int dummy_col = fit_with_dummy.index_of("du");
    for (std::size_t i = 0; i < d.n(); ++i) {
        const double without = fit_with_dummy.fitted[i] -
                               fit_with_dummy.beta[dummy_col] * d.X(i, dummy_col);
        if (d.years[i] == outlier_year)
            CHECK(std::abs(without - fit_with_dummy.fitted[i]) > 1.0);
        else
            CHECK(without == doctest::Approx(fit_with_dummy.fitted[i]).epsilon(1e-10));
    }
}
