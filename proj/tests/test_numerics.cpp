#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "armey/critical_values.hpp"
#include "armey/error.hpp"
#include "armey/matrix.hpp"
#include "armey/rng.hpp"
#include "armey/special.hpp"
#include "oracles.hpp"

using namespace armey;

namespace {

Matrix random_design(Rng& rng, std::size_t n, std::size_t k) {
    Matrix x(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        x(i, 0) = 1.0;
        for (std::size_t j = 1; j < k; ++j) x(i, j) = rng.normal(0.0, 2.0);
    }
    return x;
}

}  // namespace

TEST_CASE("least squares: mean-only model returns the sample mean") {
    Matrix x(7, 1, 1.0);
    std::vector<double> y = {3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0};
    const auto sol = solve_least_squares(x, y);
    const double mean = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
    CHECK(sol.beta[0] == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("least squares: exact line is interpolated") {
    Matrix x(5, 2);
    std::vector<double> y(5);
    for (int i = 0; i < 5; ++i) {
        x(i, 0) = 1.0;
        x(i, 1) = i;
        y[i] = 2.0 * i + 1.0;
    }
    const auto sol = solve_least_squares(x, y);
    CHECK(sol.beta[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.beta[1] == doctest::Approx(2.0).epsilon(1e-12));
    const auto fitted = matvec(x, sol.beta);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(fitted[i] - y[i]) < 1e-12);
}

TEST_CASE("least squares agrees with the normal-equations oracle on 1000 random systems") {
    Rng rng(7101);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t k = 2 + static_cast<std::size_t>(rng.uniform() * 11);  // up to 12
        const std::size_t n = k + 5 + static_cast<std::size_t>(rng.uniform() * (60 - k - 5));
        const Matrix x = random_design(rng, n, k);
        std::vector<double> y(n);
        for (auto& v : y) v = rng.normal(0.0, 3.0);

        const auto sol = solve_least_squares(x, y);
        const auto oracle_beta = oracles::normal_equations_beta(x, y);

        double scale = 0.0;
        for (std::size_t j = 0; j < k; ++j) scale = std::max(scale, std::abs(oracle_beta[j]));
        for (std::size_t j = 0; j < k; ++j)
            CHECK(std::abs(sol.beta[j] - oracle_beta[j]) <= 1e-8 * std::max(1.0, scale));

        // (X'X)^{-1} agrees too.
        const Matrix inv_oracle = oracles::normal_equations_inverse(x);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                CHECK(std::abs(sol.xtx_inverse(a, b) - inv_oracle(a, b)) <=
                      1e-6 * std::max(1.0, std::abs(inv_oracle(a, b))));
    }
}

TEST_CASE("least squares flags the collinear column by name") {
    Matrix x(10, 3);
    Rng rng(42);
    for (int i = 0; i < 10; ++i) {
        x(i, 0) = 1.0;
        x(i, 1) = rng.normal();
        x(i, 2) = 3.0 * x(i, 1);  // exact multiple
    }
    std::vector<double> y(10, 1.0);
    const std::vector<std::string> names = {"const", "a", "b"};
    CHECK_THROWS_WITH_AS(solve_least_squares(x, y, &names),
                         doctest::Contains("collinear design: b"), Error);
}

TEST_CASE("least squares rejects non-finite input") {
    Matrix x(3, 1, 1.0);
    x(1, 0) = std::nan("");
    std::vector<double> y(3, 0.0);
    CHECK_THROWS_AS(solve_least_squares(x, y), Error);
}

TEST_CASE("normal_cdf basics and symmetry") {
    CHECK(normal_cdf(0.0) == 0.5);
    CHECK(normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-6));
    for (double z : {0.1, 0.5, 1.0, 2.0, 3.5, 6.0}) {
        CHECK(std::abs(normal_cdf(-z) - (1.0 - normal_cdf(z))) < 1e-12);
        CHECK(std::abs(normal_cdf(z) - oracles::normal_cdf_series(z)) < 1e-10);
    }
}

TEST_CASE("CDFs are nondecreasing and bounded") {
    double prev_n = -1.0, prev_c = -1.0, prev_t = -1.0;
    for (double u = -8.0; u <= 8.0; u += 0.05) {
        const double pn = normal_cdf(u);
        CHECK(pn >= prev_n);
        CHECK(pn >= 0.0);
        CHECK(pn <= 1.0);
        prev_n = pn;

        const double pt = student_t_cdf(u, 7);
        CHECK(pt >= prev_t);
        CHECK(pt >= 0.0);
        CHECK(pt <= 1.0);
        prev_t = pt;

        if (u >= 0.0) {
            const double pc = chi_square_cdf(u, 3);
            CHECK(pc >= prev_c);
            CHECK(pc >= 0.0);
            CHECK(pc <= 1.0);
            prev_c = pc;
        }
    }
}

TEST_CASE("chi_square_cdf closed forms and identity") {
    CHECK(chi_square_cdf(0.0, 5) == 0.0);
    CHECK(chi_square_cdf(2.0 * std::log(2.0), 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(chi_square_cdf(3.841459, 1) == doctest::Approx(0.95).epsilon(1e-6));
    for (double x = 0.0; x <= 40.0; x += 0.25) {
        const double via_normal = 2.0 * normal_cdf(std::sqrt(x)) - 1.0;
        CHECK(std::abs(chi_square_cdf(x, 1) - via_normal) < 1e-9);
    }
    CHECK_THROWS_AS(chi_square_cdf(-0.1, 2), Error);
}

TEST_CASE("student_t_cdf closed forms and quadrature oracle") {
    CHECK(student_t_cdf(0.0, 5) == 0.5);
    // df=1 is Cauchy: F(t) = 1/2 + atan(t)/pi.
    CHECK(student_t_cdf(1.0, 1) == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(student_t_cdf(-1.0, 1) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(student_t_cdf(2.021, 40) == doctest::Approx(0.975).epsilon(1e-4));
    for (double t : {0.3, 1.2, 2.5}) {
        for (int df : {2, 10, 40}) {
            CHECK(std::abs(student_t_cdf(t, df) - oracles::t_cdf_quadrature(t, df)) < 1e-9);
        }
    }
}

TEST_CASE("CUSUM critical parameters are stored verbatim") {
    const auto cv = cusum_critical_values();
    CHECK(cv.at_1pct == 1.143);
    CHECK(cv.at_5pct == 0.947);
    CHECK(cv.at_10pct == 0.850);
    CHECK(cv.at(0.05) == 0.947);
    CHECK_THROWS_AS(cv.at(0.025), Error);
}

TEST_CASE("ADF critical values: negative, monotone, interpolated in n") {
    const auto cv = adf_critical_values(AdfVariant::Drift, 44);
    CHECK(cv.at_1pct < cv.at_5pct);
    CHECK(cv.at_5pct < cv.at_10pct);
    CHECK(cv.at_10pct < 0.0);
    // n=44 lies strictly between the n=25 and n=50 rows.
    const auto lo = adf_critical_values(AdfVariant::Drift, 25);
    const auto hi = adf_critical_values(AdfVariant::Drift, 50);
    CHECK(cv.at_1pct > lo.at_1pct);
    CHECK(cv.at_1pct < hi.at_1pct);

    for (AdfVariant v : {AdfVariant::NoConstant, AdfVariant::Drift, AdfVariant::Trend}) {
        for (int n : {10, 25, 44, 100, 400, 5000}) {
            const auto t = adf_critical_values(v, n);
            CHECK(t.at_1pct < t.at_5pct);
            CHECK(t.at_5pct < t.at_10pct);
        }
    }
}

TEST_CASE("Zivot-Andrews critical values monotone per break type") {
    for (ZaBreakType b : {ZaBreakType::Intercept, ZaBreakType::Trend, ZaBreakType::Both}) {
        const auto t = za_critical_values(b);
        CHECK(t.at_1pct < t.at_5pct);
        CHECK(t.at_5pct < t.at_10pct);
        CHECK(t.at_10pct < 0.0);
    }
    CHECK(za_critical_values(ZaBreakType::Both).at_1pct <
          za_critical_values(ZaBreakType::Both).at_10pct);
}
