#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "armey/curve.hpp"
#include "armey/error.hpp"
#include "armey/kvdoc.hpp"
#include "armey/pipeline.hpp"
#include "armey/reference.hpp"
#include "armey/report.hpp"

namespace {

using namespace armey;

struct CliState {
    RunConfig config;
    std::vector<std::string> map_entries;    // canonical=file
    std::vector<std::string> dummy_entries;  // name=year[,year...]
    std::string adf_variant = "drift";
    std::string criterion = "bic";
    std::string za_break = "both";
};

void apply_string_options(CliState& s) {
    if (s.adf_variant == "none")
        s.config.adf_variant = AdfVariant::NoConstant;
    else if (s.adf_variant == "drift")
        s.config.adf_variant = AdfVariant::Drift;
    else if (s.adf_variant == "trend")
        s.config.adf_variant = AdfVariant::Trend;
    else
        throw Error::config("unknown ADF variant '" + s.adf_variant + "'");

    if (s.criterion == "bic")
        s.config.lag_criterion = LagCriterion::Bic;
    else if (s.criterion == "seq_t")
        s.config.lag_criterion = LagCriterion::SequentialT;
    else if (s.criterion == "fixed")
        s.config.lag_criterion = LagCriterion::Fixed;
    else
        throw Error::config("unknown lag criterion '" + s.criterion + "'");

    if (s.za_break == "intercept")
        s.config.za_break = ZaBreakType::Intercept;
    else if (s.za_break == "trend")
        s.config.za_break = ZaBreakType::Trend;
    else if (s.za_break == "both")
        s.config.za_break = ZaBreakType::Both;
    else
        throw Error::config("unknown break type '" + s.za_break + "'");

    for (const auto& entry : s.map_entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw Error::config("--map expects canonical=file_column, got '" + entry + "'");
        s.config.column_map[entry.substr(0, eq)] = entry.substr(eq + 1);
    }

    if (!s.dummy_entries.empty()) {
        s.config.dummies.clear();
        for (const auto& entry : s.dummy_entries) {
            const auto eq = entry.find('=');
            if (eq == std::string::npos)
                throw Error::config("--dummy expects name=year[,year...], got '" + entry + "'");
            DummySpec d;
            d.name = entry.substr(0, eq);
            std::string years = entry.substr(eq + 1);
            std::size_t pos = 0;
            while (pos < years.size()) {
                const std::size_t comma = years.find(',', pos);
                const std::string tok = years.substr(pos, comma - pos);
                try {
                    d.active_years.insert(std::stoi(tok));
                } catch (const std::exception&) {
                    throw Error::config("--dummy year '" + tok + "' is not an integer");
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            s.config.dummies.push_back(std::move(d));
        }
    }
    s.config.validate();
}

TimeSeriesFrame load_analysis_frame(const RunConfig& config,
                                    std::vector<std::string>* warnings = nullptr) {
    std::vector<std::string> mapped;
    for (const auto& c : canonical_raw_columns()) {
        auto it = config.column_map.find(c);
        mapped.push_back(it == config.column_map.end() ? c : it->second);
    }
    const TimeSeriesFrame raw = load_csv(config.data_path, mapped);
    return derive_analysis_frame(raw, config, warnings);
}

void ensure_out_dir(const RunConfig& config) {
    std::filesystem::create_directories(config.out_dir);
}

std::string out_path(const RunConfig& config, const std::string& name) {
    return (std::filesystem::path(config.out_dir) / name).string();
}

int cmd_ingest_check(const RunConfig& config) {
    std::vector<std::string> warnings;
    const TimeSeriesFrame frame = load_analysis_frame(config, &warnings);
    std::cout << "data file:  " << config.data_path << "\n";
    std::cout << "fnv1a:      " << fnv1a_hex(read_file(config.data_path)) << "\n";
    std::cout << "years:      " << frame.years().front() << "-" << frame.years().back() << " ("
              << frame.n_years() << " rows)\n";
    std::cout << "columns:    ";
    for (const auto& n : frame.column_names()) std::cout << n << " ";
    std::cout << "\n";
    DesignSpec spec;
    spec.response = "GGDP";
    spec.regressors = {"LAB", "EXPO", "GFCF", "GFCF2"};
    const DesignMatrix d = build_design(frame, spec);
    std::cout << "effective n (quadratic GFCF design): " << d.n() << "\n";
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    return 0;
}

int cmd_unitroot(const RunConfig& config, bool kv_output) {
    const TimeSeriesFrame frame = load_analysis_frame(config);
    ReplicationReport rep;  // reuse the report renderers for the two blocks
    rep.config = config;
    for (const char* name : {"GGDP", "LAB", "EXPO", "GFCF", "GFCF2", "GFCE", "GFCE2"}) {
        const std::vector<double> x = contiguous_values(frame, name);
        rep.unit_roots.push_back(
            adf_test(x, config.adf_variant, config.adf_max_lag, config.lag_criterion, name));
    }
    std::vector<int> years;
    const std::vector<double> ggdp = contiguous_values(frame, "GGDP", &years);
    for (ZaBreakType bt : {ZaBreakType::Intercept, ZaBreakType::Trend, ZaBreakType::Both})
        rep.za.push_back(zivot_andrews(ggdp, years, bt, config.za_trim, config.adf_max_lag,
                                       config.lag_criterion, "GGDP"));

    if (kv_output) {
        KvDoc doc;
        doc.set("run", "data_path", config.data_path);
        doc.set("run", "adf_variant", to_string(config.adf_variant));
        doc.set("run", "adf_max_lag", config.adf_max_lag);
        doc.set("run", "lag_criterion",
                config.lag_criterion == LagCriterion::Bic
                    ? "bic"
                    : (config.lag_criterion == LagCriterion::SequentialT ? "seq_t" : "fixed"));
        doc.set("run", "za_trim", config.za_trim);
        for (const auto& u : rep.unit_roots) {
            const std::string section = "adf." + u.series;
            doc.set(section, "statistic", u.statistic);
            doc.set(section, "lags", u.chosen_lag);
            doc.set(section, "n_effective", u.n_effective);
            doc.set(section, "cv_1pct", u.critical_values.at_1pct);
            doc.set(section, "cv_5pct", u.critical_values.at_5pct);
            doc.set(section, "cv_10pct", u.critical_values.at_10pct);
        }
        for (const auto& z : rep.za) {
            const std::string section = "za." + to_string(z.break_type);
            doc.set(section, "statistic", z.statistic);
            doc.set(section, "break_year", z.break_year);
            doc.set(section, "lags", z.chosen_lag);
        }
        std::cout << render_kv(doc);
        return 0;
    }

    // Borrow the text renderer's unit-root and ZA sections.
    std::string text = render_text_report(rep);
    const auto start = text.find("Unit roots");
    const auto stop = text.find("Model I:");
    std::cout << text.substr(start, stop - start);
    const auto za_start = text.find("Zivot-Andrews");
    const auto za_stop = text.find("Robustness:");
    std::cout << text.substr(za_start, za_stop - za_start);
    return 0;
}

int cmd_fit(const RunConfig& config) {
    const TimeSeriesFrame frame = load_analysis_frame(config);
    const ArmeyResult i = fit_armey_model(frame, SpendingVariable::Gfcf);
    const ArmeyResult ii = fit_armey_model(frame, SpendingVariable::Gfce);
    std::cout << render_fit_text(i.fit, "Model I: GGDP on LAB, EXPO, GFCF, GFCF^2") << "\n";
    std::cout << render_fit_text(ii.fit, "Model II: GGDP on LAB, EXPO, GFCE, GFCE^2");
    return 0;
}

int cmd_armey(const RunConfig& config) {
    const TimeSeriesFrame frame = load_analysis_frame(config);
    for (SpendingVariable v : {SpendingVariable::Gfcf, SpendingVariable::Gfce}) {
        const ArmeyResult r = fit_armey_model(frame, v);
        std::cout << column_name(v) << ": beta3 = " << format_double(r.beta3)
                  << ", beta4 = " << format_double(r.beta4) << ", shape "
                  << to_string(r.shape_verdict);
        if (r.optimum_share)
            std::cout << ", optimum share " << format_double(*r.optimum_share)
                      << "% of GDP";
        std::cout << "\n";
    }
    return 0;
}

int cmd_diagnose(const RunConfig& config) {
    const TimeSeriesFrame frame = load_analysis_frame(config);
    ReplicationReport rep;
    rep.config = config;
    rep.model_i = fit_armey_model(frame, SpendingVariable::Gfcf);
    rep.model_ii = fit_armey_model(frame, SpendingVariable::Gfce);
    for (int p = 1; p <= 3; ++p) {
        rep.bg_sweep_i.push_back(breusch_godfrey(rep.model_i.fit, p));
        rep.bg_sweep_ii.push_back(breusch_godfrey(rep.model_ii.fit, p));
    }
    rep.bg_i = breusch_godfrey(rep.model_i.fit, config.bg_lags);
    rep.bg_ii = breusch_godfrey(rep.model_ii.fit, config.bg_lags);
    rep.white_i = white_test(rep.model_i.fit, config.white_cross_terms);
    rep.white_ii = white_test(rep.model_ii.fit, config.white_cross_terms);
    rep.jb_i = jarque_bera(rep.model_i.fit.residuals);
    rep.jb_ii = jarque_bera(rep.model_ii.fit.residuals);
    std::string text = render_text_report(rep);
    const auto start = text.find("Residual diagnostics");
    const auto stop = text.find("Parameter stability");
    std::cout << text.substr(start, stop - start);
    return 0;
}

int cmd_cusum(const RunConfig& config) {
    const TimeSeriesFrame frame = load_analysis_frame(config);
    ReplicationReport rep;
    rep.config = config;
    rep.model_i = fit_armey_model(frame, SpendingVariable::Gfcf);
    rep.model_ii = fit_armey_model(frame, SpendingVariable::Gfce);
    rep.cusum_i = cusum_test(rep.model_i.fit.design);
    rep.cusum_ii = cusum_test(rep.model_ii.fit.design);
    std::string text = render_text_report(rep);
    const auto start = text.find("Parameter stability");
    const auto stop = text.find("Zivot-Andrews");
    std::cout << text.substr(start, stop - start);
    return 0;
}

int cmd_robustness(const RunConfig& config) {
    const TimeSeriesFrame frame = load_analysis_frame(config);
    const RobustnessResult r = fit_robustness_model(frame, config.dummies);
    std::cout << render_fit_text(r.fit,
                                 "Robustness: orthogonal quadratic terms and event dummies");
    auto show = [](const char* label, const std::optional<QuadraticOptimum>& q) {
        std::cout << label;
        if (q)
            std::cout << "vertex " << format_double(q->ortho_vertex) << " -> exact "
                      << format_double(q->share_exact) << "% / approx "
                      << format_double(q->share_approx) << "%\n";
        else
            std::cout << "no interior maximum\n";
    };
    show("GFCF: ", r.optimum_gfcf);
    show("GFCE: ", r.optimum_gfce);
    return 0;
}

int cmd_replicate(const RunConfig& config) {
    const ReplicationReport rep = run_replication(config);
    ensure_out_dir(config);

    write_file_atomic(out_path(config, "report.txt"), render_text_report(rep));
    write_file_atomic(out_path(config, "report.kv"), render_kv(render_kv_report(rep)));

    const TimeSeriesFrame frame =
        derive_analysis_frame(load_csv(config.data_path, {}), config);
    write_file_atomic(
        out_path(config, "scatter_gfcf.svg"),
        render_scatter_svg(make_scatter_plot(frame, SpendingVariable::Gfcf, &rep.model_i)));
    write_file_atomic(
        out_path(config, "scatter_gfce.svg"),
        render_scatter_svg(make_scatter_plot(frame, SpendingVariable::Gfce, &rep.model_ii)));
    write_file_atomic(out_path(config, "cusum_model_i.svg"),
                      render_band_svg(make_cusum_plot(rep.cusum_i, config.plot_level)));
    write_file_atomic(out_path(config, "cusum_model_ii.svg"),
                      render_band_svg(make_cusum_plot(rep.cusum_ii, config.plot_level)));

    std::cout << render_text_report(rep);
    std::cout << "\nwrote report.txt, report.kv and 4 SVG plots to " << config.out_dir << "\n";

    if (config.assert_mode) {
        const ReferenceCheck check = check_against_reference(rep);
        std::cout << "\nReference comparison\n";
        for (const auto& line : check.lines) std::cout << "  " << line << "\n";
        if (!check.ok()) {
            std::cerr << "error (stage 'assert'): " << check.failures.size()
                      << " value(s) out of tolerance\n";
            return 5;
        }
    }
    return 0;
}

int cmd_plot_scatter(const RunConfig& config, const std::string& model,
                     std::string out_file) {
    const SpendingVariable v =
        model == "gfce" ? SpendingVariable::Gfce : SpendingVariable::Gfcf;
    const TimeSeriesFrame frame = load_analysis_frame(config);

    ArmeyResult fit_result;
    const ArmeyResult* fitted = nullptr;
    try {
        fit_result = fit_armey_model(frame, v);
        fitted = &fit_result;
    } catch (const Error& e) {
        std::cerr << "warning: curve omitted (" << e.what() << ")\n";
    }

    ensure_out_dir(config);
    if (out_file.empty()) out_file = out_path(config, "scatter_" + to_string(v) + ".svg");
    write_file_atomic(out_file, render_scatter_svg(make_scatter_plot(frame, v, fitted)));
    std::cout << "wrote " << out_file << "\n";
    return 0;
}

int cmd_plot_cusum(const RunConfig& config, const std::string& model, std::string out_file) {
    const SpendingVariable v =
        model == "gfce" ? SpendingVariable::Gfce : SpendingVariable::Gfcf;
    const TimeSeriesFrame frame = load_analysis_frame(config);
    const ArmeyResult fit_result = fit_armey_model(frame, v);
    const CusumResult cusum = cusum_test(fit_result.fit.design);
    ensure_out_dir(config);
    if (out_file.empty())
        out_file = out_path(config, std::string("cusum_model_") +
                                        (v == SpendingVariable::Gfcf ? "i" : "ii") + ".svg");
    write_file_atomic(out_file, render_band_svg(make_cusum_plot(cusum, config.plot_level)));
    std::cout << "wrote " << out_file << "\n";
    return 0;
}

int cmd_simulate(const RunConfig& config, int n, double sigma, std::string data_out,
                 std::string truth_out) {
    const Simulation sim = simulate_dataset(n, config.seed, sigma);
    ensure_out_dir(config);
    if (data_out.empty()) data_out = out_path(config, "synthetic.csv");
    if (truth_out.empty()) truth_out = out_path(config, "synthetic_truth.kv");
    write_file_atomic(data_out, write_csv(sim.raw));
    write_file_atomic(truth_out, render_kv(truth_to_kv(sim.truth)));
    std::cout << "wrote " << data_out << " and " << truth_out << "\n";
    std::cout << "true optimum " << format_double(sim.truth.true_optimum) << ", fitted "
              << format_double(sim.truth.fitted_optimum) << " (tolerance "
              << format_double(sim.truth.optimum_tolerance) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CliState state;
    CLI::App app{"Armey-curve econometrics: quadratic growth models, unit-root pretests,"
                 " residual diagnostics, CUSUM stability and orthogonal-polynomial"
                 " robustness analysis for annual macro data"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config", "", "key-value config file; command-line flags override it");

    app.add_option("--data", state.config.data_path, "input CSV (year,gdp,gfcf,gfce_share,exports,population)");
    app.add_option("--out", state.config.out_dir, "output directory")
        ->envname("ARMEY_OUT_DIR")
        ->capture_default_str();
    app.add_option("--map", state.map_entries, "column mapping canonical=file_column (repeatable)");
    app.add_option("--adf-variant", state.adf_variant, "ADF deterministics: none|drift|trend")
        ->capture_default_str();
    app.add_option("--max-lag", state.config.adf_max_lag, "max ADF/ZA lag; -1 = Schwert rule")
        ->capture_default_str();
    app.add_option("--criterion", state.criterion, "lag choice: bic|seq_t|fixed")
        ->capture_default_str();
    app.add_option("--bg-lags", state.config.bg_lags, "Breusch-Godfrey lag order")
        ->capture_default_str();
    app.add_flag("!--no-white-cross", state.config.white_cross_terms,
                 "drop cross products from White's test");
    app.add_option("--za-trim", state.config.za_trim, "Zivot-Andrews trim fraction")
        ->capture_default_str();
    app.add_option("--dummy", state.dummy_entries,
                   "event dummy name=year[,year...] (repeatable; replaces the defaults "
                   "du1=1973 du2=1989 du3=1994,1995 du4=1997)");
    app.add_option("--plot-level", state.config.plot_level, "CUSUM band level: 0.01|0.05|0.10")
        ->capture_default_str();
    app.add_option("--seed", state.config.seed, "random seed (simulate)")
        ->capture_default_str();

    auto* ingest = app.add_subcommand("ingest-check", "load the data and report the derived frame");
    bool kv_output = false;
    auto* unitroot_cmd = app.add_subcommand("unitroot", "ADF tests on all series plus Zivot-Andrews on GGDP");
    unitroot_cmd->add_flag("--kv", kv_output, "emit a machine-readable record");
    auto* fit_cmd = app.add_subcommand("fit", "quadratic growth models I (GFCF) and II (GFCE)");
    auto* diagnose = app.add_subcommand("diagnose", "Breusch-Godfrey, White and Jarque-Bera tests");
    auto* cusum_cmd = app.add_subcommand("cusum", "recursive CUSUM stability tests");
    auto* armey_cmd = app.add_subcommand("armey", "optimal spending shares from the quadratic fits");
    auto* robust = app.add_subcommand("robustness", "orthogonal-polynomial model with event dummies");
    auto* replicate = app.add_subcommand("replicate", "full pipeline; writes reports and plots");
    replicate->add_flag("--assert", state.config.assert_mode,
                        "exit 5 unless results match the built-in Cambodia reference values");

    std::string model = "gfcf", out_file;
    auto* plot_scatter = app.add_subcommand("plot-scatter", "scatter plus fitted curve SVG");
    plot_scatter->add_option("--model", model, "gfcf|gfce")->capture_default_str();
    plot_scatter->add_option("--out-file", out_file, "output SVG path");
    auto* plot_cusum = app.add_subcommand("plot-cusum", "CUSUM band plot SVG");
    plot_cusum->add_option("--model", model, "gfcf|gfce")->capture_default_str();
    plot_cusum->add_option("--out-file", out_file, "output SVG path");

    int sim_n = 200;
    double sim_sigma = 1.0;
    std::string sim_data_out, sim_truth_out;
    auto* simulate = app.add_subcommand("simulate", "generate a synthetic dataset with known truth");
    simulate->add_option("--n", sim_n, "effective observations")->capture_default_str();
    simulate->add_option("--sigma", sim_sigma, "noise standard deviation")->capture_default_str();
    simulate->add_option("--data-out", sim_data_out, "CSV output path");
    simulate->add_option("--truth-out", sim_truth_out, "truth key-value output path");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_string_options(state);
        if (!simulate->parsed() && state.config.data_path.empty())
            throw Error::config("--data is required");
        if (ingest->parsed()) return cmd_ingest_check(state.config);
        if (unitroot_cmd->parsed()) return cmd_unitroot(state.config, kv_output);
        if (fit_cmd->parsed()) return cmd_fit(state.config);
        if (diagnose->parsed()) return cmd_diagnose(state.config);
        if (cusum_cmd->parsed()) return cmd_cusum(state.config);
        if (armey_cmd->parsed()) return cmd_armey(state.config);
        if (robust->parsed()) return cmd_robustness(state.config);
        if (replicate->parsed()) return cmd_replicate(state.config);
        if (plot_scatter->parsed()) return cmd_plot_scatter(state.config, model, out_file);
        if (plot_cusum->parsed()) return cmd_plot_cusum(state.config, model, out_file);
        if (simulate->parsed())
            return cmd_simulate(state.config, sim_n, sim_sigma, sim_data_out, sim_truth_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
