#include "gaindoublet/signal.hpp"

#include <unsupported/Eigen/FFT>

#include <bit>
#include <cmath>
#include <sstream>
#include <vector>

#include "gaindoublet/errors.hpp"

namespace gaindoublet {

namespace {

void check_samples(const SampleGrid& grid, const Eigen::ArrayXcd& samples, const char* what) {
  if (samples.size() != grid.n_samples)
    throw ConfigError(std::string(what) + " length does not match its grid");
  if (!samples.allFinite()) throw DomainError(std::string(what) + " contains non-finite samples");
}

// Rotate by n/2: centered order ↔ FFT order. For even n the shift is its own inverse.
std::vector<std::complex<double>> half_rotate(const Eigen::ArrayXcd& in) {
  const auto n = in.size();
  const auto half = n / 2;
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) out[static_cast<std::size_t>((k + half) % n)] = in(k);
  return out;
}

Eigen::ArrayXcd half_rotate(const std::vector<std::complex<double>>& in) {
  const auto n = static_cast<Eigen::Index>(in.size());
  const auto half = n / 2;
  Eigen::ArrayXcd out(n);
  for (Eigen::Index k = 0; k < n; ++k) out((k + half) % n) = in[static_cast<std::size_t>(k)];
  return out;
}

}  // namespace

SampleGrid make_grid(Eigen::Index n_samples, double dt) {
  if (n_samples < 64 || !std::has_single_bit(static_cast<unsigned long long>(n_samples))) {
    std::ostringstream msg;
    msg << "grid n_samples must be a power of two >= 64 (got " << n_samples << ")";
    throw ConfigError(msg.str());
  }
  if (!(dt > 0) || !std::isfinite(dt)) throw ConfigError("grid dt must be finite and > 0");
  return SampleGrid{n_samples, dt, n_samples / 2};
}

Eigen::ArrayXd time_axis(const SampleGrid& grid) {
  Eigen::ArrayXd t(grid.n_samples);
  for (Eigen::Index k = 0; k < grid.n_samples; ++k) t(k) = grid.time(k);
  return t;
}

Eigen::ArrayXd detuning_axis(const SampleGrid& grid) {
  Eigen::ArrayXd f(grid.n_samples);
  for (Eigen::Index j = 0; j < grid.n_samples; ++j) f(j) = grid.detuning(j);
  return f;
}

TimeTrace gaussian_pulse(double t0, double peak_time, const SampleGrid& grid, std::string label) {
  if (!(t0 > 0) || !std::isfinite(t0)) throw ConfigError("pulse t0 must be finite and > 0");
  const double required = 16.0 * t0;
  if (grid.window() < required) {
    std::ostringstream msg;
    msg << "time window " << grid.window() << " s is too small for t0 = " << t0 << " s; need a span of at least "
        << required << " s (16·t0)";
    throw ConfigError(msg.str());
  }
  const double t_first = grid.time(0);
  const double t_last = grid.time(grid.n_samples - 1);
  if (!(peak_time >= t_first && peak_time <= t_last)) {
    std::ostringstream msg;
    msg << "pulse peak_time " << peak_time << " s lies outside the window [" << t_first << ", " << t_last << "] s";
    throw ConfigError(msg.str());
  }
  const Eigen::ArrayXd t = time_axis(grid);
  const Eigen::ArrayXd envelope = (-((t - peak_time) / t0).square()).exp();
  return TimeTrace{grid, envelope.cast<std::complex<double>>(), std::move(label)};
}

Spectrum forward_transform(const TimeTrace& trace) {
  check_samples(trace.grid, trace.samples, "time trace");
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> out;
  // Eigen's inverse applies e^{+i...} and the 1/n factor.
  fft.inv(out, half_rotate(trace.samples));
  return Spectrum{trace.grid, half_rotate(out)};
}

TimeTrace inverse_transform(const Spectrum& spectrum, std::string label) {
  check_samples(spectrum.grid, spectrum.samples, "spectrum");
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> out;
  fft.fwd(out, half_rotate(spectrum.samples));
  return TimeTrace{spectrum.grid, half_rotate(out), std::move(label)};
}

double energy(const TimeTrace& trace) { return trace.samples.abs2().sum() * trace.grid.dt; }

double energy(const Spectrum& spectrum) {
  return spectrum.samples.abs2().sum() * static_cast<double>(spectrum.grid.n_samples) * spectrum.grid.dt;
}

}  // namespace gaindoublet
