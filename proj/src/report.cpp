#include "armey/report.hpp"

#include <cstdarg>
#include <cstdio>

#include "armey/error.hpp"

namespace armey {

namespace {

std::string strf(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

std::string pad(const std::string& s, int width) {
    return s.size() >= static_cast<std::size_t>(width) ? s + " "
                                                       : s + std::string(width - s.size(), ' ');
}

// Coefficient rows with the intercept moved last.
std::vector<int> display_order(const OlsFit& f) {
    std::vector<int> order;
    for (std::size_t j = 0; j < f.beta.size(); ++j)
        if (!(f.design.has_intercept && j == 0)) order.push_back(static_cast<int>(j));
    if (f.design.has_intercept && !f.beta.empty()) order.push_back(0);
    return order;
}

std::string rejection_levels(bool r1, bool r5, bool r10) {
    if (r1) return "1/5/10%";
    if (r5) return "5/10%";
    if (r10) return "10%";
    return "none";
}

void unit_root_to_kv(KvDoc& doc, const std::string& section, const UnitRootResult& u) {
    doc.set(section, "variant", to_string(u.variant));
    doc.set(section, "lags", u.chosen_lag);
    doc.set(section, "n_effective", u.n_effective);
    doc.set(section, "statistic", u.statistic);
    doc.set(section, "cv_1pct", u.critical_values.at_1pct);
    doc.set(section, "cv_5pct", u.critical_values.at_5pct);
    doc.set(section, "cv_10pct", u.critical_values.at_10pct);
    doc.set(section, "reject_1pct", u.reject_1pct ? "yes" : "no");
    doc.set(section, "reject_5pct", u.reject_5pct ? "yes" : "no");
    doc.set(section, "reject_10pct", u.reject_10pct ? "yes" : "no");
}

void test_to_kv(KvDoc& doc, const std::string& section, const std::string& prefix,
                const TestResult& t) {
    doc.set(section, prefix + ".statistic", t.statistic);
    doc.set(section, prefix + ".df", t.df);
    doc.set(section, prefix + ".p_value", t.p_value);
    for (const auto& [k, v] : t.nuisance) doc.set(section, prefix + "." + k, v);
}

}  // namespace

std::string render_fit_text(const OlsFit& f, const std::string& title) {
    std::string out = title + "\n";
    out += pad("", 12) + pad("coefficient", 16) + "SE\n";
    for (int j : display_order(f)) {
        const std::string name =
            f.design.has_intercept && j == 0 ? "const" : f.design.regressor_names[j];
        out += pad(name, 12) +
               pad(strf("%.3f%s", f.beta[j], significance_stars(f.pvalues[j]).c_str()), 16) +
               strf("%.3f", f.se[j]) + "\n";
    }
    out += pad("R^2", 12) + strf("%.4f", f.r2) + "\n";
    out += pad("adj R^2", 12) + strf("%.4f", f.adjusted_r2) + "\n";
    out += pad("Root MSE", 12) + strf("%.4f", f.rmse) + "\n";
    out += pad("n", 12) + std::to_string(f.design.n()) + "\n";
    out += "stars: * 10%, ** 5%, *** 1% (two-sided)\n";
    return out;
}

void fit_to_kv(KvDoc& doc, const std::string& section, const OlsFit& f) {
    doc.set(section, "n", static_cast<int>(f.design.n()));
    doc.set(section, "k", static_cast<int>(f.design.k()));
    for (std::size_t j = 0; j < f.beta.size(); ++j) {
        const std::string& name = f.design.regressor_names[j];
        doc.set(section, "coef." + name, f.beta[j]);
        doc.set(section, "se." + name, f.se[j]);
        doc.set(section, "t." + name, f.tstats[j]);
        doc.set(section, "p." + name, f.pvalues[j]);
    }
    doc.set(section, "r2", f.r2);
    doc.set(section, "adjusted_r2", f.adjusted_r2);
    doc.set(section, "rmse", f.rmse);
    doc.set(section, "sigma2", f.sigma2);
    doc.set(section, "df_resid", f.df_resid);
}

std::string render_text_report(const ReplicationReport& rep) {
    std::string out;
    out += "Armey curve estimation report\n";
    out += "=============================\n\n";

    out += "Provenance\n";
    out += "  data file:    " + rep.data_path + "\n";
    out += "  data fnv1a:   " + rep.data_fingerprint + "\n";
    out += "  effective n:  " + std::to_string(rep.effective_n) + "\n";
    out += "  adf variant:  " + to_string(rep.config.adf_variant) +
           ", max lag: " + std::to_string(rep.config.adf_max_lag) + " (-1 = auto)\n";
    out += strf("  bg lags: %d, white cross terms: %s, za trim: %.2f\n", rep.config.bg_lags,
                rep.config.white_cross_terms ? "yes" : "no", rep.config.za_trim);
    for (const auto& w : rep.warnings) out += "  warning: " + w + "\n";
    out += "\n";

    out += "Unit roots (ADF, H0: unit root)\n";
    out += pad("  series", 10) + pad("stat", 10) + pad("lag", 5) + pad("n", 5) + pad("1%", 8) +
           pad("5%", 8) + pad("10%", 8) + "rejected at\n";
    for (const auto& u : rep.unit_roots) {
        out += pad("  " + u.series, 10) + pad(strf("%.3f", u.statistic), 10) +
               pad(std::to_string(u.chosen_lag), 5) + pad(std::to_string(u.n_effective), 5) +
               pad(strf("%.2f", u.critical_values.at_1pct), 8) +
               pad(strf("%.2f", u.critical_values.at_5pct), 8) +
               pad(strf("%.2f", u.critical_values.at_10pct), 8) +
               rejection_levels(u.reject_1pct, u.reject_5pct, u.reject_10pct) + "\n";
    }
    out += "\n";

    out += render_fit_text(rep.model_i.fit, "Model I: GGDP on LAB, EXPO, GFCF, GFCF^2");
    out += strf("shape: %s", to_string(rep.model_i.shape_verdict).c_str());
    if (rep.model_i.optimum_share)
        out += strf(", optimum share %.3f%% of GDP", *rep.model_i.optimum_share);
    out += "\n\n";
    out += render_fit_text(rep.model_ii.fit, "Model II: GGDP on LAB, EXPO, GFCE, GFCE^2");
    out += strf("shape: %s", to_string(rep.model_ii.shape_verdict).c_str());
    if (rep.model_ii.optimum_share)
        out += strf(", optimum share %.3f%% of GDP", *rep.model_ii.optimum_share);
    out += "\n\n";

    out += "Residual diagnostics (chi-square statistics, H0 holds)\n";
    out += pad("  test", 26) + pad("Model I", 16) + "Model II\n";
    auto diag_row = [&](const std::string& label, const TestResult& a, const TestResult& b) {
        out += pad("  " + label, 26) + pad(strf("%.3f [p=%.3f]", a.statistic, a.p_value), 16) +
               strf("%.3f [p=%.3f]", b.statistic, b.p_value) + "\n";
    };
    diag_row(strf("Breusch-Godfrey (p=%d)", rep.config.bg_lags), rep.bg_i, rep.bg_ii);
    for (std::size_t i = 0; i < rep.bg_sweep_i.size(); ++i)
        diag_row(strf("  BG sweep p=%zu", i + 1), rep.bg_sweep_i[i], rep.bg_sweep_ii[i]);
    diag_row(rep.config.white_cross_terms ? "White (cross terms)" : "White (no cross)",
             rep.white_i, rep.white_ii);
    diag_row("Jarque-Bera", rep.jb_i, rep.jb_ii);
    out += "\n";

    out += "Parameter stability (recursive CUSUM)\n";
    out += pad("  model", 10) + pad("stat", 8) + pad("1%", 8) + pad("5%", 8) + pad("10%", 8) +
           "verdict@5%\n";
    auto cusum_row = [&](const std::string& label, const CusumResult& c) {
        out += pad("  " + label, 10) + pad(strf("%.3f", c.statistic), 8) +
               pad(strf("%.3f", c.critical_values.at_1pct), 8) +
               pad(strf("%.3f", c.critical_values.at_5pct), 8) +
               pad(strf("%.3f", c.critical_values.at_10pct), 8) +
               (c.reject_5pct ? "unstable" : "stable") + "\n";
    };
    cusum_row("Model I", rep.cusum_i);
    cusum_row("Model II", rep.cusum_ii);
    out += "\n";

    out += "Zivot-Andrews unit-root test with one endogenous break (GGDP)\n";
    out += pad("  break", 12) + pad("stat", 10) + pad("break yr", 10) + pad("lag", 5) +
           pad("1%", 8) + pad("5%", 8) + pad("10%", 8) + "rejected at\n";
    for (const auto& z : rep.za) {
        out += pad("  " + to_string(z.break_type), 12) + pad(strf("%.3f", z.statistic), 10) +
               pad(std::to_string(z.break_year), 10) + pad(std::to_string(z.chosen_lag), 5) +
               pad(strf("%.2f", z.critical_values.at_1pct), 8) +
               pad(strf("%.2f", z.critical_values.at_5pct), 8) +
               pad(strf("%.2f", z.critical_values.at_10pct), 8) +
               rejection_levels(z.reject_1pct, z.reject_5pct, z.reject_10pct) + "\n";
    }
    out += "\n";

    out += render_fit_text(rep.robustness.fit,
                           "Robustness: orthogonal quadratic terms and event dummies");
    out += "orthonormal convention: Gram(1, P1, P2) = n*I\n\n";

    out += "Optimal spending shares (percent of GDP)\n";
    auto optimum_row = [&](const std::string& label, const std::optional<double>& v) {
        out += pad("  " + label, 30) + (v ? strf("%.3f", *v) : std::string("n/a")) + "\n";
    };
    optimum_row("Model I (GFCF)", rep.model_i.optimum_share);
    optimum_row("Model II (GFCE)", rep.model_ii.optimum_share);
    auto robust_row = [&](const std::string& label, const std::optional<QuadraticOptimum>& q) {
        if (q)
            out += pad("  " + label, 30) +
                   strf("vertex %.3f -> exact %.3f / approx %.3f", q->ortho_vertex,
                        q->share_exact, q->share_approx) +
                   "\n";
        else
            out += pad("  " + label, 30) + "n/a (no interior maximum)\n";
    };
    robust_row("robustness GFCF", rep.robustness.optimum_gfcf);
    robust_row("robustness GFCE", rep.robustness.optimum_gfce);
    return out;
}

KvDoc render_kv_report(const ReplicationReport& rep) {
    KvDoc doc;
    doc.set("provenance", "format", "armey-report/1");
    doc.set("provenance", "data_path", rep.data_path);
    doc.set("provenance", "data_fnv1a", rep.data_fingerprint);
    doc.set("provenance", "effective_n", rep.effective_n);
    doc.set("provenance", "config.adf_variant", to_string(rep.config.adf_variant));
    doc.set("provenance", "config.adf_max_lag", rep.config.adf_max_lag);
    doc.set("provenance", "config.lag_criterion",
            rep.config.lag_criterion == LagCriterion::Bic
                ? "bic"
                : (rep.config.lag_criterion == LagCriterion::SequentialT ? "seq_t" : "fixed"));
    doc.set("provenance", "config.bg_lags", rep.config.bg_lags);
    doc.set("provenance", "config.white_cross_terms", rep.config.white_cross_terms ? "yes" : "no");
    doc.set("provenance", "config.za_trim", rep.config.za_trim);
    doc.set("provenance", "config.plot_level", rep.config.plot_level);
    for (const auto& d : rep.config.dummies) {
        std::string years;
        for (int y : d.active_years) years += (years.empty() ? "" : " ") + std::to_string(y);
        doc.set("provenance", "config.dummy." + d.name, years);
    }
    for (const auto& [canonical, mapped] : rep.config.column_map)
        doc.set("provenance", "config.map." + canonical, mapped);
    for (std::size_t i = 0; i < rep.warnings.size(); ++i)
        doc.set("provenance", "warning." + std::to_string(i), rep.warnings[i]);

    for (const auto& u : rep.unit_roots) unit_root_to_kv(doc, "adf." + u.series, u);

    auto model_to_kv = [&](const std::string& section, const ArmeyResult& m) {
        fit_to_kv(doc, section, m.fit);
        doc.set(section, "beta3", m.beta3);
        doc.set(section, "beta4", m.beta4);
        doc.set(section, "shape", to_string(m.shape_verdict));
        if (m.optimum_share) doc.set(section, "optimum_share", *m.optimum_share);
    };
    model_to_kv("model_i", rep.model_i);
    model_to_kv("model_ii", rep.model_ii);

    for (int m = 0; m < 2; ++m) {
        const std::string section = m == 0 ? "diagnostics.model_i" : "diagnostics.model_ii";
        const auto& sweep = m == 0 ? rep.bg_sweep_i : rep.bg_sweep_ii;
        test_to_kv(doc, section, "bg", m == 0 ? rep.bg_i : rep.bg_ii);
        for (const auto& t : sweep)
            test_to_kv(doc, section, "bg_sweep." + t.nuisance.at("lag_order"), t);
        test_to_kv(doc, section, "white", m == 0 ? rep.white_i : rep.white_ii);
        test_to_kv(doc, section, "jarque_bera", m == 0 ? rep.jb_i : rep.jb_ii);
    }

    auto cusum_to_kv = [&](const std::string& section, const CusumResult& c) {
        doc.set(section, "statistic", c.statistic);
        doc.set(section, "scale", c.scale);
        doc.set(section, "path_length", static_cast<int>(c.path.size()));
        doc.set(section, "cv_1pct", c.critical_values.at_1pct);
        doc.set(section, "cv_5pct", c.critical_values.at_5pct);
        doc.set(section, "cv_10pct", c.critical_values.at_10pct);
        doc.set(section, "reject_1pct", c.reject_1pct ? "yes" : "no");
        doc.set(section, "reject_5pct", c.reject_5pct ? "yes" : "no");
        doc.set(section, "reject_10pct", c.reject_10pct ? "yes" : "no");
    };
    cusum_to_kv("cusum.model_i", rep.cusum_i);
    cusum_to_kv("cusum.model_ii", rep.cusum_ii);

    for (const auto& z : rep.za) {
        const std::string section = "za." + to_string(z.break_type);
        doc.set(section, "series", z.series);
        doc.set(section, "statistic", z.statistic);
        doc.set(section, "break_year", z.break_year);
        doc.set(section, "lags", z.chosen_lag);
        doc.set(section, "n_effective", z.n_effective);
        doc.set(section, "cv_1pct", z.critical_values.at_1pct);
        doc.set(section, "cv_5pct", z.critical_values.at_5pct);
        doc.set(section, "cv_10pct", z.critical_values.at_10pct);
        doc.set(section, "reject_1pct", z.reject_1pct ? "yes" : "no");
        doc.set(section, "reject_5pct", z.reject_5pct ? "yes" : "no");
        doc.set(section, "reject_10pct", z.reject_10pct ? "yes" : "no");
    }

    fit_to_kv(doc, "robustness", rep.robustness.fit);
    doc.set("robustness", "ortho_convention", "gram_n_identity");
    auto basis_to_kv = [&](const std::string& prefix, const OrthoBasis& b) {
        doc.set("robustness", prefix + ".a0", b.a0);
        doc.set("robustness", prefix + ".a1", b.a1);
        doc.set("robustness", prefix + ".b1", b.b1);
        doc.set("robustness", prefix + ".scale1", b.scale1);
        doc.set("robustness", prefix + ".scale2", b.scale2);
    };
    basis_to_kv("basis.GFCF", rep.robustness.basis_gfcf);
    basis_to_kv("basis.GFCE", rep.robustness.basis_gfce);

    auto optimum_to_kv = [&](const std::string& key, const std::optional<QuadraticOptimum>& q) {
        if (!q) {
            doc.set("optima", key + ".defined", "no");
            return;
        }
        doc.set("optima", key + ".defined", "yes");
        doc.set("optima", key + ".ortho_vertex", q->ortho_vertex);
        doc.set("optima", key + ".share_exact", q->share_exact);
        doc.set("optima", key + ".share_approx", q->share_approx);
    };
    if (rep.model_i.optimum_share) doc.set("optima", "model_i_gfcf", *rep.model_i.optimum_share);
    if (rep.model_ii.optimum_share)
        doc.set("optima", "model_ii_gfce", *rep.model_ii.optimum_share);
    optimum_to_kv("robust_gfcf", rep.robustness.optimum_gfcf);
    optimum_to_kv("robust_gfce", rep.robustness.optimum_gfce);
    return doc;
}

KvDoc truth_to_kv(const SimulationTruth& truth) {
    KvDoc doc;
    doc.set("truth", "model", "gfcf");
    const char* names[] = {"const", "LAB", "EXPO", "GFCF", "GFCF2"};
    for (int i = 0; i < 5; ++i) doc.set("truth", std::string("beta.") + names[i], truth.beta[i]);
    doc.set("truth", "sigma", truth.sigma);
    doc.set("truth", "seed", std::to_string(truth.seed));
    doc.set("truth", "n_effective", truth.n_effective);
    doc.set("truth", "optimum", truth.true_optimum);
    doc.set("truth", "optimum_tolerance", truth.optimum_tolerance);
    for (int i = 0; i < 5; ++i)
        doc.set("fitted_at_generation", std::string("beta.") + names[i], truth.fitted_beta[i]);
    doc.set("fitted_at_generation", "optimum", truth.fitted_optimum);
    return doc;
}

SimulationTruth truth_from_kv(const KvDoc& doc) {
    SimulationTruth t;
    const char* names[] = {"const", "LAB", "EXPO", "GFCF", "GFCF2"};
    auto need = [&](const std::string& section, const std::string& key) -> const std::string& {
        const std::string* v = doc.find(section, key);
        if (!v) throw Error::data("truth document lacks " + section + "/" + key);
        return *v;
    };
    for (int i = 0; i < 5; ++i)
        t.beta.push_back(std::stod(need("truth", std::string("beta.") + names[i])));
    t.sigma = std::stod(need("truth", "sigma"));
    t.seed = std::stoull(need("truth", "seed"));
    t.n_effective = std::stoi(need("truth", "n_effective"));
    t.true_optimum = std::stod(need("truth", "optimum"));
    t.optimum_tolerance = std::stod(need("truth", "optimum_tolerance"));
    for (int i = 0; i < 5; ++i)
        t.fitted_beta.push_back(
            std::stod(need("fitted_at_generation", std::string("beta.") + names[i])));
    t.fitted_optimum = std::stod(need("fitted_at_generation", "optimum"));
    return t;
}

ScatterPlot make_scatter_plot(const TimeSeriesFrame& frame, SpendingVariable spending,
                              const ArmeyResult* fitted) {
    const std::string gov = column_name(spending);
    const std::vector<double>& x = frame.column(gov);
    const std::vector<double>& y = frame.column("GGDP");

    ScatterPlot plot;
    plot.title = "GDP growth vs " + gov + " share";
    plot.x_label = gov + " (percent of GDP)";
    plot.y_label = "GDP growth rate (percent)";
    for (std::size_t i = 0; i < frame.n_years(); ++i)
        if (!is_missing(x[i]) && !is_missing(y[i])) plot.points.emplace_back(x[i], y[i]);
    if (fitted)
        for (const auto& p : fitted->curve)
            plot.curve.emplace_back(p.share, p.predicted_growth);
    return plot;
}

BandPlot make_cusum_plot(const CusumResult& cusum, double level) {
    BandPlot plot;
    const double a = cusum.critical_values.at(level);
    plot.title = strf("Recursive CUSUM with %g%% bounds", level * 100.0);
    plot.x_label = "observation";
    plot.y_label = "cumulative sum";
    for (std::size_t i = 0; i < cusum.path.size(); ++i) {
        plot.xs.push_back(cusum.steps[i]);
        plot.path.push_back(cusum.path[i]);
        plot.upper.push_back(cusum.bound_at(i, a));
        plot.lower.push_back(-cusum.bound_at(i, a));
    }
    return plot;
}

}  // namespace armey
