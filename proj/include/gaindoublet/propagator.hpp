#pragma once

// Undepleted-pump propagation: the medium acts as a linear filter
// S_out(f) = S_in(f)·exp(Γ_in(f))·exp(iΓ_ph(f)) on the baseband spectrum.

#include "gaindoublet/medium.hpp"
#include "gaindoublet/metrics.hpp"
#include "gaindoublet/signal.hpp"

namespace gaindoublet {

struct PropagationOptions {
  double gain_cap{50.0};  // refuse exp(Γ_in) above e^gain_cap
  MetricsOptions metrics;
};

struct PropagationResult {
  TimeTrace input;
  TimeTrace reference;  // free-space copy
  TimeTrace output;
  MediumSpecd medium;
  PulseMetrics metrics;
};

// exp(Γ_in + iΓ_ph) sampled on the spectrum's detuning bins.
Eigen::ArrayXcd transfer_function(const SampleGrid& grid, const MediumSpecd& medium);

Spectrum apply_medium(const Spectrum& spectrum, const MediumSpecd& medium, double gain_cap = 50.0);

PropagationResult run_scenario(const TimeTrace& pulse, const MediumSpecd& medium,
                               const PropagationOptions& options = {});

// |envelope|² scaled to unit peak.
Eigen::ArrayXd normalized_intensity(const TimeTrace& trace);

}  // namespace gaindoublet
