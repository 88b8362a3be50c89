#include "armey/special.hpp"

#include <cmath>
#include <limits>

#include "armey/error.hpp"

namespace armey {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-15;
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;

// Series representation of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) = 1 - P(a, x), valid for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for the incomplete beta.
double beta_contfrac(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double normal_cdf(double z) {
    if (!std::isfinite(z)) throw Error::numeric("normal_cdf: non-finite argument");
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw Error::numeric("gamma_p: domain error");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double chi_square_cdf(double x, int df) {
    if (df < 1) throw Error::numeric("chi_square_cdf: df must be >= 1");
    if (x < 0.0) throw Error::numeric("chi_square_cdf: negative statistic");
    return gamma_p(0.5 * df, 0.5 * x);
}

double incomplete_beta(double a, double b, double x) {
    if (x < 0.0 || x > 1.0) throw Error::numeric("incomplete_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front =
        std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                 b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_contfrac(a, b, x) / a;
    return 1.0 - front * beta_contfrac(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, int df) {
    if (df < 1) throw Error::numeric("student_t_cdf: df must be >= 1");
    if (!std::isfinite(t)) throw Error::numeric("student_t_cdf: non-finite argument");
    if (t == 0.0) return 0.5;
    const double p = 0.5 * incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
    return t > 0.0 ? 1.0 - p : p;
}

}  // namespace armey
