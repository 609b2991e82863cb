#include "gaindoublet/heterodyne.hpp"

#include <cmath>
#include <string>

namespace gaindoublet {

void validate(const ScanSpec& scan) {
  if (!std::isfinite(scan.ramp_min) || !std::isfinite(scan.ramp_max) || !(scan.ramp_min < scan.ramp_max))
    throw ConfigError("scan ramp_min must be < ramp_max");
  if (scan.n_points < 2) throw ConfigError("scan needs at least 2 points");
  if (!(scan.modulation_frequency > 0)) throw ConfigError("scan modulation_frequency must be > 0");
}

Eigen::ArrayXd scan_detunings(const ScanSpec& scan) {
  validate(scan);
  return Eigen::ArrayXd::LinSpaced(scan.n_points, scan.ramp_min, scan.ramp_max);
}

DispersionTrace simulate_scan(const MediumSpecd& medium, const ScanSpec& scan) {
  validate(medium);
  if (scan.pump_index >= medium.lines.size())
    throw ConfigError("scan pump selector " + std::to_string(scan.pump_index) + " is out of range; medium has " +
                      std::to_string(medium.lines.size()) + " line(s)");
  DispersionTrace trace;
  trace.detunings = scan_detunings(scan);
  trace.pump_offset = medium.lines[scan.pump_index].center_offset;
  trace.modulation_frequency = scan.modulation_frequency;
  trace.phase.resize(trace.detunings.size());
  for (Eigen::Index k = 0; k < trace.detunings.size(); ++k)
    trace.phase(k) = total_coupling(trace.pump_offset + trace.detunings(k), medium).gamma_ph;
  return trace;
}

std::pair<DispersionTrace, DispersionTrace> dual_trace(const MediumSpecd& medium, const ScanSpec& scan) {
  if (medium.lines.size() != 2)
    throw ConfigError("dual trace needs exactly 2 gain lines; medium has " + std::to_string(medium.lines.size()));
  const std::size_t lower = medium.lines[0].center_offset <= medium.lines[1].center_offset ? 0 : 1;
  ScanSpec first = scan;
  first.pump_index = lower;
  ScanSpec second = scan;
  second.pump_index = 1 - lower;
  return {simulate_scan(medium, first), simulate_scan(medium, second)};
}

}  // namespace gaindoublet
