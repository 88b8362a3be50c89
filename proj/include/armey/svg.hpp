#pragma once

#include <string>
#include <vector>

namespace armey {

/// Minimal deterministic SVG emission for the two plot kinds the CLI
/// produces. Same input bytes in, same output bytes out: coordinates are
/// formatted with fixed precision and nothing time- or locale-dependent
/// is written.
struct ScatterPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<std::pair<double, double>> points;
    std::vector<std::pair<double, double>> curve;  ///< dashed overlay; may be empty
};

struct BandPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> xs;
    std::vector<double> path;
    std::vector<double> upper;  ///< band edge, same length as xs
    std::vector<double> lower;
};

std::string render_scatter_svg(const ScatterPlot& plot);
std::string render_band_svg(const BandPlot& plot);

}  // namespace armey
