#pragma once

// Sampled baseband envelopes and the discrete Fourier pair used to move them
// between the time axis and the signed-detuning axis.
//
// Conventions:
//   * time sample k sits at t_k = (k - n/2)·dt, so the origin is the window center;
//   * spectrum bin j sits at detuning f_j = (j - n/2)·df, df = 1/(n·dt);
//   * forward:  S_j = (1/n) Σ_k x_k e^{+i2π f_j t_k}
//     inverse:  x_k =       Σ_j S_j e^{-i2π f_j t_k}
//     i.e. the e^{-iωt} field convention, so multiplying a spectrum by
//     e^{+iφ(ω)} with dφ/dω > 0 delays the envelope.

#include <Eigen/Core>

#include <complex>
#include <string>

namespace gaindoublet {

struct SampleGrid {
  Eigen::Index n_samples{0};
  double dt{0};
  Eigen::Index t0_index{0};

  double df() const { return 1.0 / (static_cast<double>(n_samples) * dt); }
  double nyquist() const { return 0.5 / dt; }
  double window() const { return static_cast<double>(n_samples) * dt; }
  double time(Eigen::Index k) const { return static_cast<double>(k - t0_index) * dt; }
  double detuning(Eigen::Index j) const { return static_cast<double>(j - n_samples / 2) * df(); }

  bool operator==(const SampleGrid&) const = default;
};

struct TimeTrace {
  SampleGrid grid;
  Eigen::ArrayXcd samples;  // field envelope
  std::string label;

  Eigen::ArrayXd intensity() const { return samples.abs2(); }
};

struct Spectrum {
  SampleGrid grid;
  Eigen::ArrayXcd samples;  // bin j ↔ grid.detuning(j)
};

SampleGrid make_grid(Eigen::Index n_samples, double dt);

Eigen::ArrayXd time_axis(const SampleGrid& grid);
Eigen::ArrayXd detuning_axis(const SampleGrid& grid);

// exp(-(t - peak_time)²/t0²) with unit peak amplitude.
TimeTrace gaussian_pulse(double t0, double peak_time, const SampleGrid& grid, std::string label = "input");

Spectrum forward_transform(const TimeTrace& trace);
TimeTrace inverse_transform(const Spectrum& spectrum, std::string label = {});

// ∫|x|² dt, in the same units for both domains.
double energy(const TimeTrace& trace);
double energy(const Spectrum& spectrum);

}  // namespace gaindoublet
