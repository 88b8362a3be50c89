#pragma once

#include <optional>
#include <string>
#include <vector>

#include "armey/dataset.hpp"
#include "armey/ols.hpp"

namespace armey {

enum class SpendingVariable { Gfcf, Gfce };

std::string column_name(SpendingVariable v);   // "GFCF" / "GFCE"
std::string to_string(SpendingVariable v);     // "gfcf" / "gfce"

/// Shape of the fitted quadratic over positive spending shares.
/// inverted_u needs a negative quadratic term and a positive linear term
/// (interior maximum at a positive share); a concave fit whose vertex is
/// non-positive is monotone over the domain and classified degenerate.
enum class ShapeVerdict { InvertedU, UShaped, MonotoneDegenerate };

std::string to_string(ShapeVerdict v);

ShapeVerdict classify_shape(double beta3, double beta4);

/// Vertex -beta3 / (2 beta4) of the fitted quadratic; requires beta4 < 0
/// (throws a no-interior-maximum error carrying the shape verdict).
double optimal_share(double beta3, double beta4);

struct CurvePoint {
    double share;
    double predicted_growth;  ///< other regressors held at sample means
};

/// Quadratic growth model in one spending share:
///   growth = b0 + b1 LAB + b2 EXPO + b3 GOV + b4 GOV^2 + e.
struct ArmeyResult {
    SpendingVariable spending_variable;
    OlsFit fit;
    double beta3 = 0.0;  ///< linear spending coefficient
    double beta4 = 0.0;  ///< quadratic spending coefficient
    std::optional<double> optimum_share;  ///< set iff beta4 < 0
    ShapeVerdict shape_verdict = ShapeVerdict::MonotoneDegenerate;
    std::vector<CurvePoint> curve;  ///< 200 samples over the observed share range
};

ArmeyResult fit_armey_model(const TimeSeriesFrame& frame, SpendingVariable spending);

/// Degree-2 orthonormal polynomial basis over a sample, built by the
/// three-term recurrence pi_{j+1}(x) = (x - a_j) pi_j(x) - b_j pi_{j-1}(x)
/// with coefficients from sample inner products. Columns are rescaled so
/// the Gram matrix of (1, P1, P2) equals n * I.
struct OrthoBasis {
    std::string source;
    int degree = 2;
    std::size_t n = 0;
    double a0 = 0.0;     ///< sample mean of x
    double a1 = 0.0;
    double b1 = 0.0;
    double scale1 = 0.0;  ///< P1(x) = scale1 * (x - a0)
    double scale2 = 0.0;  ///< P2(x) = scale2 * ((x - a1)(x - a0) - b1)
    std::vector<double> p1;
    std::vector<double> p2;

    double eval_p1(double x) const { return scale1 * (x - a0); }
    double eval_p2(double x) const { return scale2 * ((x - a1) * (x - a0) - b1); }
};

OrthoBasis build_ortho_basis(const std::vector<double>& x, const std::string& source_name = "x");

/// Maximizer of alpha1 * P1(x) + alpha2 * P2(x) on the raw scale.
struct RawVertex {
    double exact;        ///< analytic zero of the derivative in x
    double approximate;  ///< P1-affine inversion of -alpha1/(2 alpha2)
};

/// Requires concavity in raw coordinates (alpha2 < 0); throws a
/// no-interior-maximum error otherwise. The approximate route treats the
/// fit as if it were alpha1*z + alpha2*z^2 in z = P1, which drops both
/// P2's linear-in-P1 component (zero for zero-skew samples) and the
/// curvature rescaling s1^2/s2 that the orthonormal columns carry, so the
/// two routes generally differ even for symmetric samples.
RawVertex vertex_on_raw_scale(const OrthoBasis& basis, double alpha1, double alpha2);

struct QuadraticOptimum {
    double ortho_vertex = 0.0;  ///< vertex in P1 coordinates
    double share_exact = 0.0;
    double share_approx = 0.0;
};

/// Growth regression on orthogonal quadratic terms of both spending
/// shares plus event dummies:
///   growth = b0 + b1 LAB + b2 EXPO + a1 PGFCF1 + a2 PGFCF2
///          + a3 PGFCE1 + a4 PGFCE2 + a5 du1 + .. + a8 du4 + e.
struct RobustnessResult {
    OlsFit fit;
    OrthoBasis basis_gfcf;
    OrthoBasis basis_gfce;
    std::optional<QuadraticOptimum> optimum_gfcf;  ///< set iff a2 < 0
    std::optional<QuadraticOptimum> optimum_gfce;  ///< set iff a4 < 0
};

RobustnessResult fit_robustness_model(const TimeSeriesFrame& frame,
                                      const std::vector<DummySpec>& dummies);

}  // namespace armey
