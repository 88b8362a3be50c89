#include "armey/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "armey/error.hpp"

namespace armey {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 20.0;
constexpr double kTop = 44.0;
constexpr double kBottom = 52.0;

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    double step = 0.5;

    double span() const { return hi - lo; }
};

double nice_step(double raw) {
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    if (frac <= 1.0) return mag;
    if (frac <= 2.0) return 2.0 * mag;
    if (frac <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

Axis make_axis(double lo, double hi) {
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    Axis a;
    a.lo = lo - pad;
    a.hi = hi + pad;
    a.step = nice_step((a.hi - a.lo) / 5.0);
    return a;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

class Canvas {
public:
    Canvas(const Axis& x, const Axis& y) : x_(x), y_(y) {}

    double px(double x) const { return kLeft + (x - x_.lo) / x_.span() * (kWidth - kLeft - kRight); }
    double py(double y) const {
        return kHeight - kBottom - (y - y_.lo) / y_.span() * (kHeight - kTop - kBottom);
    }

    void open(std::string& out, const std::string& title) const {
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
               "viewBox=\"0 0 640 480\">\n";
        out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
        out += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"15\">" +
               title + "</text>\n";
    }

    void axes(std::string& out, const std::string& x_label, const std::string& y_label) const {
        out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kHeight - kBottom) + "\" x2=\"" +
               fmt(kWidth - kRight) + "\" y2=\"" + fmt(kHeight - kBottom) +
               "\" stroke=\"black\"/>\n";
        out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
               "\" y2=\"" + fmt(kHeight - kBottom) + "\" stroke=\"black\"/>\n";
        for (double t = std::ceil(x_.lo / x_.step) * x_.step; t <= x_.hi + 1e-9; t += x_.step) {
            const double x = px(t);
            out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kHeight - kBottom) + "\" x2=\"" +
                   fmt(x) + "\" y2=\"" + fmt(kHeight - kBottom + 5) + "\" stroke=\"black\"/>\n";
            out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kHeight - kBottom + 18) +
                   "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
                   fmt_tick(t) + "</text>\n";
        }
        for (double t = std::ceil(y_.lo / y_.step) * y_.step; t <= y_.hi + 1e-9; t += y_.step) {
            const double y = py(t);
            out += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kLeft) +
                   "\" y2=\"" + fmt(y) + "\" stroke=\"black\"/>\n";
            out += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(y + 4) +
                   "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
                   fmt_tick(t) + "</text>\n";
        }
        out += "<text x=\"" + fmt((kLeft + kWidth - kRight) / 2) + "\" y=\"" +
               fmt(kHeight - 12) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + x_label +
               "</text>\n";
        out += "<text x=\"16\" y=\"" + fmt((kTop + kHeight - kBottom) / 2) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
               "transform=\"rotate(-90 16 " +
               fmt((kTop + kHeight - kBottom) / 2) + ")\">" + y_label + "</text>\n";
    }

private:
    Axis x_, y_;
};

template <typename It>
std::pair<double, double> min_max(It begin, It end) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (It it = begin; it != end; ++it) {
        lo = std::min(lo, *it);
        hi = std::max(hi, *it);
    }
    return {lo, hi};
}

}  // namespace

std::string render_scatter_svg(const ScatterPlot& plot) {
    if (plot.points.empty()) throw Error::data("scatter plot with no points");
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const auto& [x, y] : plot.points) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    for (const auto& [x, y] : plot.curve) {
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    const Axis ax = make_axis(xlo, xhi);
    const Axis ay = make_axis(ylo, yhi);
    Canvas c(ax, ay);

    std::string out;
    c.open(out, plot.title);
    c.axes(out, plot.x_label, plot.y_label);
    if (!plot.curve.empty()) {
        std::string d;
        for (std::size_t i = 0; i < plot.curve.size(); ++i) {
            d += i == 0 ? "M " : " L ";
            d += fmt(c.px(plot.curve[i].first)) + " " + fmt(c.py(plot.curve[i].second));
        }
        out += "<path class=\"curve\" d=\"" + d +
               "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" "
               "stroke-dasharray=\"6 4\"/>\n";
    }
    for (const auto& [x, y] : plot.points)
        out += "<circle class=\"pt\" cx=\"" + fmt(c.px(x)) + "\" cy=\"" + fmt(c.py(y)) +
               "\" r=\"3\" fill=\"#2c3e50\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string render_band_svg(const BandPlot& plot) {
    const std::size_t n = plot.xs.size();
    if (n == 0 || plot.path.size() != n || plot.upper.size() != n || plot.lower.size() != n)
        throw Error::data("band plot arrays empty or of unequal length");
    const auto [xlo, xhi] = min_max(plot.xs.begin(), plot.xs.end());
    auto [ylo, yhi] = min_max(plot.lower.begin(), plot.lower.end());
    const auto [ulo, uhi] = min_max(plot.upper.begin(), plot.upper.end());
    const auto [plo, phi] = min_max(plot.path.begin(), plot.path.end());
    ylo = std::min({ylo, ulo, plo});
    yhi = std::max({yhi, uhi, phi});
    const Axis ax = make_axis(xlo, xhi);
    const Axis ay = make_axis(ylo, yhi);
    Canvas c(ax, ay);

    std::string out;
    c.open(out, plot.title);
    c.axes(out, plot.x_label, plot.y_label);

    std::string poly;
    for (std::size_t i = 0; i < n; ++i)
        poly += fmt(c.px(plot.xs[i])) + "," + fmt(c.py(plot.upper[i])) + " ";
    for (std::size_t i = n; i-- > 0;)
        poly += fmt(c.px(plot.xs[i])) + "," + fmt(c.py(plot.lower[i])) + " ";
    poly.pop_back();
    out += "<polygon class=\"band\" points=\"" + poly + "\" fill=\"#d6eaf8\" stroke=\"none\"/>\n";

    auto polyline = [&](const std::vector<double>& ys, const char* cls, const char* style) {
        std::string pts;
        for (std::size_t i = 0; i < n; ++i)
            pts += fmt(c.px(plot.xs[i])) + "," + fmt(c.py(ys[i])) + " ";
        pts.pop_back();
        out += "<polyline class=\"" + std::string(cls) + "\" points=\"" + pts +
               "\" fill=\"none\" " + style + "/>\n";
    };
    polyline(plot.upper, "bound", "stroke=\"#2980b9\" stroke-width=\"1\"");
    polyline(plot.lower, "bound", "stroke=\"#2980b9\" stroke-width=\"1\"");
    std::vector<double> zeros(n, 0.0);
    polyline(zeros, "zero", "stroke=\"#7f8c8d\" stroke-width=\"0.5\" stroke-dasharray=\"3 3\"");
    polyline(plot.path, "path", "stroke=\"#1a1a1a\" stroke-width=\"1.5\"");
    out += "</svg>\n";
    return out;
}

}  // namespace armey
