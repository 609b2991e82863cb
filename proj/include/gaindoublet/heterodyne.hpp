#pragma once

// Signal-level model of a swept-probe heterodyne dispersion measurement. The
// probe is ramped linearly around one pump and the demodulated lock-in output
// is taken as the medium phase shift itself (unit gain, zero offset).

#include <Eigen/Core>

#include <cstddef>
#include <utility>

#include "gaindoublet/medium.hpp"

namespace gaindoublet {

struct ScanSpec {
  double ramp_min{-0.5};  // Hz, relative to the selected pump
  double ramp_max{0.5};
  Eigen::Index n_points{201};
  std::size_t pump_index{0};          // which GainLine the scan is centered on
  double modulation_frequency{1000};  // Hz, carried into file metadata only
};

struct DispersionTrace {
  Eigen::ArrayXd detunings;  // Hz, relative to pump_offset
  Eigen::ArrayXd phase;      // rad
  double pump_offset{0};     // Hz, absolute position of the scanned pump
  double modulation_frequency{1000};
  // Assumed lock-in calibration.
  double lockin_gain{1.0};
  double lockin_offset{0.0};
};

void validate(const ScanSpec& scan);

Eigen::ArrayXd scan_detunings(const ScanSpec& scan);

DispersionTrace simulate_scan(const MediumSpecd& medium, const ScanSpec& scan);

// One scan per pump of a two-line medium, lower-frequency pump first.
std::pair<DispersionTrace, DispersionTrace> dual_trace(const MediumSpecd& medium, const ScanSpec& scan);

}  // namespace gaindoublet
