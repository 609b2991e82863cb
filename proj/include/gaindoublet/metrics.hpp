#pragma once

#include <optional>

#include "gaindoublet/signal.hpp"

namespace gaindoublet {

struct PulseMetrics {
  double peak_shift{0};      // s, > 0 delay, < 0 advance
  double centroid_shift{0};  // s, intensity-centroid difference
  double fwhm_in{0};         // s
  double fwhm_out{0};        // s
  double compression_ratio{1};
  std::optional<double> beat_frequency;  // Hz
  double energy_gain{1};
};

struct MetricsOptions {
  // A beat is reported when its spectral peak exceeds this fraction of DC.
  double beat_threshold{0.1};
};

// Sub-sample time of the intensity maximum (3-point parabola around argmax).
double peak_time(const TimeTrace& trace);

double peak_shift(const TimeTrace& reference, const TimeTrace& output);

double centroid_time(const TimeTrace& trace);
double centroid_shift(const TimeTrace& reference, const TimeTrace& output);

// Full width at half maximum of the lobe containing the global maximum.
double fwhm(const TimeTrace& trace);

// Dominant local maximum (k >= 1) of |FFT(intensity)|; empty when it does not
// exceed `threshold` times the DC magnitude.
std::optional<double> beat_frequency(const TimeTrace& trace, double threshold = 0.1);

double energy_gain(const TimeTrace& reference, const TimeTrace& output);

PulseMetrics compute_metrics(const TimeTrace& reference, const TimeTrace& output, const MetricsOptions& options = {});

}  // namespace gaindoublet
