#include "gaindoublet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gaindoublet {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 420;
constexpr double kMargin = 56;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

Eigen::ArrayXd peak_normalized(const TimeTrace& trace) {
  const Eigen::ArrayXd intensity = trace.intensity();
  const double peak = intensity.maxCoeff();
  return peak > 0 ? Eigen::ArrayXd(intensity / peak) : intensity;
}

}  // namespace

std::string line_plot_svg(const std::string& title, const std::string& x_label, const std::vector<PlotSeries>& series) {
  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    if (s.x.size() == 0) continue;
    x_min = std::min(x_min, s.x.minCoeff());
    x_max = std::max(x_max, s.x.maxCoeff());
    y_min = std::min(y_min, s.y.minCoeff());
    y_max = std::max(y_max, s.y.maxCoeff());
  }
  if (!(x_max > x_min)) { x_min -= 1; x_max += 1; }
  if (!(y_max > y_min)) { y_min -= 1; y_max += 1; }
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;

  auto px = [&](double x) { return kMargin + (x - x_min) / (x_max - x_min) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) { return kHeight - kMargin - (y - y_min) / (y_max - y_min) * (kHeight - 2 * kMargin); };

  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin << "\" height=\""
      << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kMargin / 2 << "\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(title) << "</text>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\" font-size=\"12\">"
      << escape(x_label) << "</text>\n";
  svg << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\" font-size=\"10\">" << x_min
      << "</text>\n";
  svg << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
      << "\" text-anchor=\"end\" font-size=\"10\">" << x_max << "</text>\n";
  svg << "<text x=\"" << kMargin - 4 << "\" y=\"" << py(y_max) + 10 << "\" text-anchor=\"end\" font-size=\"10\">"
      << y_max << "</text>\n";
  svg << "<text x=\"" << kMargin - 4 << "\" y=\"" << py(y_min) << "\" text-anchor=\"end\" font-size=\"10\">" << y_min
      << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (s.dashed) svg << " stroke-dasharray=\"6 4\"";
    svg << " points=\"";
    for (Eigen::Index k = 0; k < s.x.size(); ++k) svg << px(s.x(k)) << "," << py(s.y(k)) << " ";
    svg << "\"/>\n";
    const double ly = kMargin + 16 + 16 * static_cast<double>(i);
    svg << "<text x=\"" << kWidth - kMargin - 8 << "\" y=\"" << ly << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
        << s.color << "\">" << escape(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string traces_svg(const TimeTrace& reference, const TimeTrace& output, const std::string& title) {
  const Eigen::ArrayXd t = time_axis(reference.grid);
  return line_plot_svg(title, "time (s)",
                       {PlotSeries{"reference", t, peak_normalized(reference), "#555555", true},
                        PlotSeries{"output", t, peak_normalized(output), "#d62728", false}});
}

std::string profile_svg(const CouplingProfiled& profile, const std::string& title) {
  auto normalized = [](const Eigen::ArrayXd& y) {
    const double scale = y.abs().maxCoeff();
    return scale > 0 ? Eigen::ArrayXd(y / scale) : y;
  };
  return line_plot_svg(title, "detuning (Hz)",
                       {PlotSeries{"gamma_in", profile.detunings, normalized(profile.gamma_in), "#1f77b4", true},
                        PlotSeries{"gamma_ph", profile.detunings, normalized(profile.gamma_ph), "#2ca02c", false}});
}

std::string dispersion_svg(const std::vector<DispersionTrace>& traces, const std::string& title) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::vector<PlotSeries> series;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    std::ostringstream label;
    label << "pump at " << traces[i].pump_offset << " Hz";
    series.push_back(PlotSeries{label.str(), traces[i].detunings, traces[i].phase, colors[i % 4], false});
  }
  return line_plot_svg(title, "probe detuning from pump (Hz)", series);
}

}  // namespace gaindoublet
