#pragma once

// Static line plots for quick inspection. Not used by any numerical check.

#include <string>
#include <vector>

#include <Eigen/Core>

#include "gaindoublet/heterodyne.hpp"
#include "gaindoublet/medium.hpp"
#include "gaindoublet/signal.hpp"

namespace gaindoublet {

struct PlotSeries {
  std::string label;
  Eigen::ArrayXd x;
  Eigen::ArrayXd y;
  std::string color{"#1f77b4"};
  bool dashed{false};
};

std::string line_plot_svg(const std::string& title, const std::string& x_label, const std::vector<PlotSeries>& series);

// Peak-normalized reference (dashed) and output (solid) intensity.
std::string traces_svg(const TimeTrace& reference, const TimeTrace& output, const std::string& title);
std::string profile_svg(const CouplingProfiled& profile, const std::string& title);
std::string dispersion_svg(const std::vector<DispersionTrace>& traces, const std::string& title);

}  // namespace gaindoublet
