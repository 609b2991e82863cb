#include "gaindoublet/metrics.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <sstream>
#include <vector>

#include "gaindoublet/errors.hpp"

namespace gaindoublet {

namespace {

constexpr double kCoEqualTolerance = 1e-9;

void require_shared_grid(const TimeTrace& a, const TimeTrace& b) {
  if (!(a.grid == b.grid)) throw ConfigError("traces '" + a.label + "' and '" + b.label + "' do not share a grid");
}

bool is_local_max(const Eigen::ArrayXd& y, Eigen::Index k) {
  return k > 0 && k + 1 < y.size() && y(k) > y(k - 1) && y(k) >= y(k + 1);
}

// Index of the unique global intensity maximum, away from the window edges.
Eigen::Index main_peak_index(const TimeTrace& trace, const Eigen::ArrayXd& intensity) {
  Eigen::Index k_max = 0;
  const double peak = intensity.maxCoeff(&k_max);
  if (!(peak > 0)) throw DomainError("trace '" + trace.label + "' has no intensity");
  if (k_max == 0 || k_max + 1 == intensity.size())
    throw WindowingError("intensity maximum of trace '" + trace.label + "' lies on the window edge");
  for (Eigen::Index k = 1; k + 1 < intensity.size(); ++k) {
    if (k == k_max || !is_local_max(intensity, k)) continue;
    if (intensity(k) >= peak * (1.0 - kCoEqualTolerance)) {
      std::ostringstream msg;
      msg << "trace '" << trace.label << "' has co-equal intensity maxima at t = " << trace.grid.time(k_max)
          << " s and t = " << trace.grid.time(k) << " s";
      throw AmbiguityError(msg.str());
    }
  }
  return k_max;
}

}  // namespace

double peak_time(const TimeTrace& trace) {
  const Eigen::ArrayXd intensity = trace.intensity();
  const Eigen::Index k = main_peak_index(trace, intensity);
  const double y0 = intensity(k - 1);
  const double y1 = intensity(k);
  const double y2 = intensity(k + 1);
  const double curvature = y0 - 2.0 * y1 + y2;
  const double offset = curvature != 0.0 ? 0.5 * (y0 - y2) / curvature : 0.0;
  return trace.grid.time(k) + offset * trace.grid.dt;
}

double peak_shift(const TimeTrace& reference, const TimeTrace& output) {
  require_shared_grid(reference, output);
  return peak_time(output) - peak_time(reference);
}

double centroid_time(const TimeTrace& trace) {
  const Eigen::ArrayXd intensity = trace.intensity();
  const double total = intensity.sum();
  if (!(total > 0)) throw DomainError("trace '" + trace.label + "' has no intensity");
  return (intensity * time_axis(trace.grid)).sum() / total;
}

double centroid_shift(const TimeTrace& reference, const TimeTrace& output) {
  require_shared_grid(reference, output);
  return centroid_time(output) - centroid_time(reference);
}

double fwhm(const TimeTrace& trace) {
  const Eigen::ArrayXd intensity = trace.intensity();
  const Eigen::Index k = main_peak_index(trace, intensity);
  const double half = 0.5 * intensity(k);

  Eigen::Index left = k;
  while (left > 0 && intensity(left) > half) --left;
  Eigen::Index right = k;
  while (right + 1 < intensity.size() && intensity(right) > half) ++right;
  if (intensity(left) > half || intensity(right) > half)
    throw WindowingError("half-maximum crossing of trace '" + trace.label + "' lies outside the window");

  // Crossing positions in fractional sample units.
  const double left_cross =
      static_cast<double>(left) + (half - intensity(left)) / (intensity(left + 1) - intensity(left));
  const double right_cross =
      static_cast<double>(right - 1) + (intensity(right - 1) - half) / (intensity(right - 1) - intensity(right));
  return (right_cross - left_cross) * trace.grid.dt;
}

std::optional<double> beat_frequency(const TimeTrace& trace, double threshold) {
  const Eigen::ArrayXd intensity = trace.intensity();
  std::vector<double> samples(intensity.data(), intensity.data() + intensity.size());
  std::vector<std::complex<double>> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, samples);

  const auto half = static_cast<Eigen::Index>(samples.size() / 2);
  Eigen::ArrayXd magnitude(half + 1);
  for (Eigen::Index k = 0; k <= half; ++k) magnitude(k) = std::abs(spectrum[static_cast<std::size_t>(k)]);

  Eigen::Index best = -1;
  for (Eigen::Index k = 1; k < half; ++k) {
    if (is_local_max(magnitude, k) && (best < 0 || magnitude(k) > magnitude(best))) best = k;
  }
  if (best < 0 || !(magnitude(best) > threshold * magnitude(0))) return std::nullopt;
  return static_cast<double>(best) * trace.grid.df();
}

double energy_gain(const TimeTrace& reference, const TimeTrace& output) {
  require_shared_grid(reference, output);
  const double reference_energy = reference.intensity().sum();
  if (!(reference_energy > 0)) throw DomainError("reference trace has zero energy");
  return output.intensity().sum() / reference_energy;
}

PulseMetrics compute_metrics(const TimeTrace& reference, const TimeTrace& output, const MetricsOptions& options) {
  PulseMetrics m;
  m.peak_shift = peak_shift(reference, output);
  m.centroid_shift = centroid_shift(reference, output);
  m.fwhm_in = fwhm(reference);
  m.fwhm_out = fwhm(output);
  m.compression_ratio = m.fwhm_out / m.fwhm_in;
  m.beat_frequency = beat_frequency(output, options.beat_threshold);
  m.energy_gain = energy_gain(reference, output);
  return m;
}

}  // namespace gaindoublet
