#include "gaindoublet/propagator.hpp"

#include <sstream>

namespace gaindoublet {

Eigen::ArrayXcd transfer_function(const SampleGrid& grid, const MediumSpecd& medium) {
  validate(medium);
  Eigen::ArrayXcd h(grid.n_samples);
  for (Eigen::Index j = 0; j < grid.n_samples; ++j) {
    const auto c = total_coupling(grid.detuning(j), medium);
    h(j) = std::exp(std::complex<double>(c.gamma_in, c.gamma_ph));
  }
  return h;
}

Spectrum apply_medium(const Spectrum& spectrum, const MediumSpecd& medium, double gain_cap) {
  validate(medium);
  double max_gain = 0.0;
  for (Eigen::Index j = 0; j < spectrum.grid.n_samples; ++j)
    max_gain = std::max(max_gain, total_coupling(spectrum.grid.detuning(j), medium).gamma_in);
  if (max_gain > gain_cap) {
    std::ostringstream msg;
    msg << "peak intensity coupling " << max_gain << " exceeds the gain cap " << gain_cap
        << "; exp(gamma_in) would overflow double precision headroom";
    throw GainOverflowError(msg.str());
  }
  return Spectrum{spectrum.grid, spectrum.samples * transfer_function(spectrum.grid, medium)};
}

PropagationResult run_scenario(const TimeTrace& pulse, const MediumSpecd& medium, const PropagationOptions& options) {
  TimeTrace reference = pulse;
  reference.label = "reference";
  TimeTrace output = inverse_transform(apply_medium(forward_transform(pulse), medium, options.gain_cap), "output");
  PulseMetrics metrics = compute_metrics(reference, output, options.metrics);
  return PropagationResult{pulse, std::move(reference), std::move(output), medium, metrics};
}

Eigen::ArrayXd normalized_intensity(const TimeTrace& trace) {
  const Eigen::ArrayXd intensity = trace.intensity();
  const double peak = intensity.maxCoeff();
  if (!(peak > 0)) return intensity;
  return intensity / peak;
}

}  // namespace gaindoublet
