#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "armey/diagnostics.hpp"
#include "armey/error.hpp"
#include "armey/rng.hpp"

using namespace armey;

namespace {

DesignMatrix simple_design(Rng& rng, std::size_t n, std::size_t k) {
    DesignMatrix d;
    d.response_name = "y";
    d.has_intercept = true;
    d.regressor_names.push_back("const");
    for (std::size_t j = 1; j < k; ++j) d.regressor_names.push_back("x" + std::to_string(j));
    d.X = Matrix(n, k);
    d.response.resize(n);
    d.years.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.years[i] = static_cast<int>(i);
        d.X(i, 0) = 1.0;
        for (std::size_t j = 1; j < k; ++j) d.X(i, j) = rng.normal(1.0, 1.0);
    }
    return d;
}

OlsFit fit_with_errors(Rng& rng, std::size_t n, const std::vector<double>& errors) {
    DesignMatrix d = simple_design(rng, n, 2);
    for (std::size_t i = 0; i < n; ++i) d.response[i] = 1.0 + 0.5 * d.X(i, 1) + errors[i];
    return fit(d);
}

}  // namespace

TEST_CASE("breusch-godfrey: zero residuals give a zero statistic") {
    Rng rng(200);
    DesignMatrix d = simple_design(rng, 40, 2);
    for (std::size_t i = 0; i < 40; ++i) d.response[i] = 2.0 - 3.0 * d.X(i, 1);
    const TestResult r = breusch_godfrey(fit(d), 2);
    CHECK(r.statistic == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK_FALSE(r.reject_10pct);
}

TEST_CASE("breusch-godfrey: AR(1) errors are detected with high power") {
    Rng rng(201);
    const int reps = 400;
    int rejects = 0;
    for (int rep = 0; rep < reps; ++rep) {
        std::vector<double> e(200);
        e[0] = rng.normal();
        for (std::size_t i = 1; i < e.size(); ++i) e[i] = 0.8 * e[i - 1] + rng.normal();
        const TestResult r = breusch_godfrey(fit_with_errors(rng, 200, e), 2);
        if (r.reject_1pct) ++rejects;
    }
    CHECK(rejects >= static_cast<int>(0.99 * reps));
}

TEST_CASE("breusch-godfrey: configuration and length errors") {
    Rng rng(202);
    std::vector<double> e(30);
    for (auto& v : e) v = rng.normal();
    const OlsFit f = fit_with_errors(rng, 30, e);
    CHECK_THROWS_AS(breusch_godfrey(f, 0), Error);
    CHECK_THROWS_AS(breusch_godfrey(f, -1), Error);
    CHECK_THROWS_AS(breusch_godfrey(f, 29), Error);
    CHECK(breusch_godfrey(f, 2).statistic >= 0.0);
    CHECK(breusch_godfrey(f, 2).nuisance.at("lag_order") == "2");
}

TEST_CASE("white test: size close to nominal under homoscedastic errors") {
    Rng rng(203);
    const int reps = 1000;
    int rejects = 0;
    for (int rep = 0; rep < reps; ++rep) {
        std::vector<double> e(200);
        for (auto& v : e) v = rng.normal();
        const TestResult r = white_test(fit_with_errors(rng, 200, e), true);
        if (r.reject_5pct) ++rejects;
    }
    const double rate = rejects / static_cast<double>(reps);
    CHECK(rate >= 0.02);
    CHECK(rate <= 0.09);
}

TEST_CASE("white test: power against variance proportional to a regressor squared") {
    Rng rng(204);
    const int reps = 300;
    int rejects = 0;
    for (int rep = 0; rep < reps; ++rep) {
        DesignMatrix d = simple_design(rng, 200, 2);
        for (std::size_t i = 0; i < 200; ++i)
            d.response[i] = 1.0 + 0.5 * d.X(i, 1) + std::abs(d.X(i, 1)) * rng.normal();
        if (white_test(fit(d), true).reject_5pct) ++rejects;
    }
    CHECK(rejects >= static_cast<int>(0.90 * reps));
}

TEST_CASE("white test: dummy squares deduplicate instead of erroring") {
    Rng rng(205);
    DesignMatrix d = simple_design(rng, 60, 3);
    // Turn x2 into a 0/1 dummy: its square duplicates itself.
    for (std::size_t i = 0; i < 60; ++i) d.X(i, 2) = i % 7 == 0 ? 1.0 : 0.0;
    for (std::size_t i = 0; i < 60; ++i)
        d.response[i] = 1.0 + 0.5 * d.X(i, 1) - 2.0 * d.X(i, 2) + rng.normal();
    const TestResult r = white_test(fit(d), true);
    // Candidates: x1, dummy, x1^2, dummy^2 (dup), x1*dummy -> q = 4.
    CHECK(r.df == 4);
    CHECK(r.statistic >= 0.0);

    const TestResult no_cross = white_test(fit(d), false);
    CHECK(no_cross.df == 3);
    CHECK(no_cross.nuisance.at("cross_terms") == "no");
}

TEST_CASE("jarque-bera closed forms") {
    std::vector<double> alternating;
    for (int i = 0; i < 10; ++i) alternating.push_back(i % 2 == 0 ? -1.0 : 1.0);
    const TestResult r = jarque_bera(alternating);
    CHECK(r.statistic == doctest::Approx(10.0 * 4.0 / 24.0).epsilon(1e-12));  // 5/3

    // Symmetric sample: S = 0 exactly, JB = n (K-3)^2 / 24.
    std::vector<double> symmetric = {-3, -2, -1, 0, 1, 2, 3};
    const TestResult s = jarque_bera(symmetric);
    double m2 = 0.0, m4 = 0.0;
    for (double v : symmetric) {
        m2 += v * v;
        m4 += v * v * v * v;
    }
    m2 /= symmetric.size();
    m4 /= symmetric.size();
    const double kurt = m4 / (m2 * m2);
    CHECK(s.statistic ==
          doctest::Approx(symmetric.size() * (kurt - 3.0) * (kurt - 3.0) / 24.0).epsilon(1e-12));
}

TEST_CASE("jarque-bera errors") {
    CHECK_THROWS_AS(jarque_bera({1.0, 2.0, 3.0}), Error);
    CHECK_THROWS_AS(jarque_bera({2.0, 2.0, 2.0, 2.0}), Error);
}

TEST_CASE("jarque-bera size on normal samples stays within [2%, 9%]") {
    Rng rng(206);
    const int reps = 2000;
    int rejects = 0;
    std::vector<double> sample(1000);
    for (int rep = 0; rep < reps; ++rep) {
        for (auto& v : sample) v = rng.normal();
        if (jarque_bera(sample).reject_5pct) ++rejects;
    }
    const double rate = rejects / static_cast<double>(reps);
    CHECK(rate >= 0.02);
    CHECK(rate <= 0.09);
}

TEST_CASE("cusum: zero-noise data has a zero path and no rejection") {
    Rng rng(207);
    DesignMatrix d = simple_design(rng, 40, 2);
    for (std::size_t i = 0; i < 40; ++i) d.response[i] = 3.0 + 2.0 * d.X(i, 1);
    const CusumResult r = cusum_test(d);
    CHECK(r.path.size() == 38);
    for (double v : r.path) CHECK(v == 0.0);
    CHECK(r.statistic == 0.0);
    CHECK_FALSE(r.reject_10pct);
}

TEST_CASE("cusum detects a mid-sample coefficient break") {
    Rng rng(208);
    const std::size_t n = 100;
    DesignMatrix d;
    d.response_name = "y";
    d.has_intercept = true;
    d.regressor_names = {"const", "x"};
    d.X = Matrix(n, 2);
    d.response.resize(n);
    d.years.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.years[i] = static_cast<int>(i);
        d.X(i, 0) = 1.0;
        d.X(i, 1) = rng.normal(4.0, 1.0);  // level regressor away from zero
    }
    // Shift the slope by 5 standard errors of its estimate at t > n/2.
    const OlsFit base = [&] {
        DesignMatrix tmp = d;
        for (std::size_t i = 0; i < n; ++i) tmp.response[i] = 1.0 + 0.5 * tmp.X(i, 1) + rng.normal();
        return fit(tmp);
    }();
    const double shift = 5.0 * base.se[1];
    for (std::size_t i = 0; i < n; ++i)
        d.response[i] = 1.0 + (0.5 + (i > n / 2 ? shift : 0.0)) * d.X(i, 1) + rng.normal();
    const CusumResult r = cusum_test(d);
    CHECK(r.reject_5pct);
}

TEST_CASE("cusum: band-exit verdict equals the scalar-statistic verdict") {
    Rng rng(209);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 30 + static_cast<std::size_t>(rng.uniform() * 50);
        DesignMatrix d = simple_design(rng, n, 2);
        const bool broken = rep % 3 == 0;
        for (std::size_t i = 0; i < n; ++i)
            d.response[i] = 1.0 + (broken && i > n / 2 ? 3.0 : 0.0) + 0.5 * d.X(i, 1) +
                            0.7 * rng.normal();
        const CusumResult r = cusum_test(d);
        for (double level : {0.01, 0.05, 0.10}) {
            const double a = r.critical_values.at(level);
            CHECK(r.exits_band(a) == (r.statistic >= a));
        }
        CHECK(r.statistic >= 0.0);
        // Path accumulation starts at t = k + 1.
        CHECK(r.steps.front() == static_cast<int>(d.k()) + 1);
    }
}

TEST_CASE("all four diagnostics are invariant to adding a constant to y") {
    Rng rng(210);
    DesignMatrix d = simple_design(rng, 80, 3);
    for (std::size_t i = 0; i < 80; ++i)
        d.response[i] = 1.0 + 0.5 * d.X(i, 1) - 0.25 * d.X(i, 2) + rng.normal();
    DesignMatrix shifted = d;
    for (auto& y : shifted.response) y += 1234.5;

    const OlsFit f1 = fit(d);
    const OlsFit f2 = fit(shifted);
    CHECK(std::abs(breusch_godfrey(f1, 2).statistic - breusch_godfrey(f2, 2).statistic) < 1e-9);
    CHECK(std::abs(white_test(f1, true).statistic - white_test(f2, true).statistic) < 1e-9);
    CHECK(std::abs(jarque_bera(f1.residuals).statistic - jarque_bera(f2.residuals).statistic) <
          1e-9);
    CHECK(std::abs(cusum_test(d).statistic - cusum_test(shifted).statistic) < 1e-9);
}
