#pragma once

#include <string>

#include "armey/kvdoc.hpp"
#include "armey/pipeline.hpp"
#include "armey/svg.hpp"

namespace armey {

/// Coefficient table with significance stars, R^2, adjusted R^2 and Root
/// MSE; intercept printed last to match the usual journal layout.
std::string render_fit_text(const OlsFit& fit, const std::string& title);

void fit_to_kv(KvDoc& doc, const std::string& section, const OlsFit& fit);

std::string render_text_report(const ReplicationReport& rep);
KvDoc render_kv_report(const ReplicationReport& rep);

KvDoc truth_to_kv(const SimulationTruth& truth);
SimulationTruth truth_from_kv(const KvDoc& doc);

/// One dot per year where both the share and GGDP are present, plus the
/// fitted curve when available.
ScatterPlot make_scatter_plot(const TimeSeriesFrame& frame, SpendingVariable spending,
                              const ArmeyResult* fitted);

BandPlot make_cusum_plot(const CusumResult& cusum, double level);

}  // namespace armey
