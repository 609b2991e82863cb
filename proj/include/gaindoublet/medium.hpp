#pragma once

// Two-wave-mixing gain lines and the coupling coefficients they induce on a
// weak probe. Everything here is a pure function of value inputs, templated on
// the scalar type so the same code evaluates in double or long double.

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gaindoublet/errors.hpp"

namespace gaindoublet {

// How a detuning given in Hz enters the Lorentzian argument x = u·δ·τ.
enum class DetuningConvention {
  OrdinaryFrequency,  // u = 1
  AngularFrequency,   // u = 2π
};

enum class DispersionRegime { Normal, Anomalous, Flat };

std::string to_string(DetuningConvention convention);
DetuningConvention convention_from_string(const std::string& text);
std::string to_string(DispersionRegime regime);

template <typename Scalar>
constexpr Scalar convention_factor(DetuningConvention convention) {
  return convention == DetuningConvention::AngularFrequency ? Scalar(2) * std::numbers::pi_v<Scalar>
                                                            : Scalar(1);
}

template <typename Scalar = double>
struct GainLine {
  Scalar center_offset{0};  // pump detuning from the probe carrier, Hz
  Scalar strength{0};       // Γ0j·d, dimensionless
  Scalar response_time{1};  // space-charge rise time, s

  bool operator==(const GainLine&) const = default;
};

template <typename Scalar = double>
struct MediumSpec {
  std::vector<GainLine<Scalar>> lines;
  Scalar mean_index{2.4};
  Scalar length{0.005};  // m
  DetuningConvention convention{DetuningConvention::OrdinaryFrequency};

  bool operator==(const MediumSpec&) const = default;
};

template <typename Scalar = double>
struct Coupling {
  Scalar gamma_in{0};  // dimensionless
  Scalar gamma_ph{0};  // rad
};

template <typename Scalar = double>
struct CouplingProfile {
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  Array detunings;
  Array gamma_in;
  Array gamma_ph;
};

using GainLined = GainLine<double>;
using MediumSpecd = MediumSpec<double>;
using CouplingProfiled = CouplingProfile<double>;

namespace detail {

template <typename Scalar>
void require_finite(Scalar value, const char* what) {
  if (!std::isfinite(value)) throw DomainError(std::string(what) + " must be finite");
}

// Lorentzian argument for one line.
template <typename Scalar>
Scalar normalized_detuning(Scalar delta, const GainLine<Scalar>& line, DetuningConvention convention) {
  return convention_factor<Scalar>(convention) * (delta - line.center_offset) * line.response_time;
}

}  // namespace detail

template <typename Scalar>
void validate(const GainLine<Scalar>& line) {
  if (!std::isfinite(line.center_offset)) throw ConfigError("gain line center_offset must be finite");
  if (!std::isfinite(line.strength)) throw ConfigError("gain line strength must be finite");
  if (!(line.response_time > 0) || !std::isfinite(line.response_time))
    throw ConfigError("gain line response_time must be finite and > 0");
}

template <typename Scalar>
void validate(const MediumSpec<Scalar>& medium) {
  if (medium.lines.empty()) throw ConfigError("medium has no gain lines");
  for (const auto& line : medium.lines) validate(line);
  if (!(medium.mean_index >= 1) || !std::isfinite(medium.mean_index))
    throw ConfigError("medium mean_index must be >= 1");
  if (!(medium.length > 0) || !std::isfinite(medium.length)) throw ConfigError("medium length must be > 0");
}

// Two lines at ±offset with equal strength and response time; pump 1 is the
// up-shifted one.
template <typename Scalar>
MediumSpec<Scalar> make_doublet(Scalar offset, Scalar strength, Scalar response_time,
                                DetuningConvention convention = DetuningConvention::OrdinaryFrequency) {
  if (!(offset >= 0) || !std::isfinite(offset)) throw ConfigError("doublet offset must be finite and >= 0");
  MediumSpec<Scalar> medium;
  medium.convention = convention;
  medium.lines = {GainLine<Scalar>{offset, strength, response_time},
                  GainLine<Scalar>{-offset, strength, response_time}};
  validate(medium);
  return medium;
}

template <typename Scalar>
MediumSpec<Scalar> make_single_line(Scalar center_offset, Scalar strength, Scalar response_time,
                                    DetuningConvention convention = DetuningConvention::OrdinaryFrequency) {
  MediumSpec<Scalar> medium;
  medium.convention = convention;
  medium.lines = {GainLine<Scalar>{center_offset, strength, response_time}};
  validate(medium);
  return medium;
}

template <typename Scalar>
bool is_symmetric_doublet(const MediumSpec<Scalar>& medium) {
  if (medium.lines.size() != 2) return false;
  const auto& a = medium.lines[0];
  const auto& b = medium.lines[1];
  return a.center_offset == -b.center_offset && a.strength == b.strength && a.response_time == b.response_time;
}

template <typename Scalar>
Scalar line_gamma_in(Scalar delta, const GainLine<Scalar>& line,
                     DetuningConvention convention = DetuningConvention::OrdinaryFrequency) {
  detail::require_finite(delta, "detuning");
  validate(line);
  const Scalar x = detail::normalized_detuning(delta, line, convention);
  return line.strength / 2 / (1 + x * x);
}

template <typename Scalar>
Scalar line_gamma_ph(Scalar delta, const GainLine<Scalar>& line,
                     DetuningConvention convention = DetuningConvention::OrdinaryFrequency) {
  detail::require_finite(delta, "detuning");
  validate(line);
  const Scalar x = detail::normalized_detuning(delta, line, convention);
  return line.strength / 2 * x / (1 + x * x);
}

template <typename Scalar>
Coupling<Scalar> total_coupling(Scalar delta, const MediumSpec<Scalar>& medium) {
  detail::require_finite(delta, "detuning");
  validate(medium);
  Coupling<Scalar> total;
  for (const auto& line : medium.lines) {
    const Scalar x = detail::normalized_detuning(delta, line, medium.convention);
    const Scalar lorentz = 1 / (1 + x * x);
    total.gamma_in += line.strength / 2 * lorentz;
    total.gamma_ph += line.strength / 2 * x * lorentz;
  }
  return total;
}

// dΓ_ph/dω in seconds, ω the angular detuning. Each line contributes
// (strength/2)·τ_eff·(1−x²)/(1+x²)² with τ_eff = u·τ/(2π).
template <typename Scalar>
Scalar gamma_ph_slope(Scalar delta, const MediumSpec<Scalar>& medium) {
  detail::require_finite(delta, "detuning");
  validate(medium);
  const Scalar u = convention_factor<Scalar>(medium.convention);
  Scalar slope{0};
  for (const auto& line : medium.lines) {
    const Scalar x = detail::normalized_detuning(delta, line, medium.convention);
    const Scalar tau_eff = u * line.response_time / (2 * std::numbers::pi_v<Scalar>);
    const Scalar denom = 1 + x * x;
    slope += line.strength / 2 * tau_eff * (1 - x * x) / (denom * denom);
  }
  return slope;
}

// Peak delay (> 0) or advance (< 0) relative to free-space transit, narrowband
// limit. The geometric (n−1)d/c term is below 1e-10 s and is left out.
template <typename Scalar>
Scalar group_delay(const MediumSpec<Scalar>& medium, Scalar delta = Scalar(0)) {
  return gamma_ph_slope(delta, medium);
}

template <typename Scalar, typename Derived>
CouplingProfile<Scalar> dispersion_profile(const MediumSpec<Scalar>& medium, const Eigen::ArrayBase<Derived>& grid) {
  validate(medium);
  if (grid.size() == 0) throw ConfigError("dispersion profile grid is empty");
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    detail::require_finite(Scalar(grid(i)), "profile grid detuning");
    if (i > 0 && grid(i) < grid(i - 1)) throw ConfigError("dispersion profile grid must be sorted");
  }
  CouplingProfile<Scalar> profile;
  profile.detunings = grid.template cast<Scalar>();
  profile.gamma_in.resize(grid.size());
  profile.gamma_ph.resize(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const auto c = total_coupling(profile.detunings(i), medium);
    profile.gamma_in(i) = c.gamma_in;
    profile.gamma_ph(i) = c.gamma_ph;
  }
  return profile;
}

template <typename Scalar>
DispersionRegime classify_dispersion(const MediumSpec<Scalar>& medium, Scalar dead_band = Scalar(1e-12)) {
  const Scalar slope = gamma_ph_slope(Scalar(0), medium);
  if (std::abs(slope) <= dead_band) return DispersionRegime::Flat;
  return slope > 0 ? DispersionRegime::Normal : DispersionRegime::Anomalous;
}

// Smallest doublet offset Δ >= 0 whose center slope equals target_slope.
// The center slope falls monotonically from strength·τ_eff at Δ = 0 to its
// global minimum −strength·τ_eff/8 at Δ·τ·u = √3, then recovers toward zero,
// so bisection on [0, √3/(τ·u)] finds the first crossing.
template <typename Scalar>
Scalar separation_for_target_slope(Scalar tau, Scalar strength, Scalar target_slope,
                                   DetuningConvention convention = DetuningConvention::OrdinaryFrequency,
                                   Scalar relative_tolerance = Scalar(1e-10)) {
  if (!(tau > 0) || !std::isfinite(tau)) throw ConfigError("response time must be > 0");
  if (!(strength > 0) || !std::isfinite(strength)) throw ConfigError("strength must be > 0");
  detail::require_finite(target_slope, "target slope");

  const Scalar u = convention_factor<Scalar>(convention);
  auto center_slope = [&](Scalar offset) {
    return gamma_ph_slope(Scalar(0), make_doublet(offset, strength, tau, convention));
  };
  const Scalar max_slope = center_slope(Scalar(0));
  const Scalar x_min = std::sqrt(Scalar(3));
  const Scalar min_slope = center_slope(x_min / (tau * u));
  if (target_slope > max_slope || target_slope < min_slope) {
    throw RangeError("target slope " + std::to_string(double(target_slope)) + " s outside attainable range [" +
                         std::to_string(double(min_slope)) + ", " + std::to_string(double(max_slope)) + "] s",
                     double(min_slope), double(max_slope));
  }
  if (target_slope == max_slope) return Scalar(0);

  Scalar lo = 0;
  Scalar hi = x_min / (tau * u);
  bool tolerance_reached = false;
  // Bisect until the bracket is below the tolerance, then keep going to the
  // last representable midpoint so the residual slope sits at roundoff level.
  for (int iter = 0; iter < 200; ++iter) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= relative_tolerance * hi) tolerance_reached = true;
    if (center_slope(mid) > target_slope)
      lo = mid;
    else
      hi = mid;
  }
  if (!tolerance_reached && hi - lo > relative_tolerance * hi)
    throw DomainError("slope root bracket did not converge");
  const Scalar slope_lo = center_slope(lo) - target_slope;
  const Scalar slope_hi = center_slope(hi) - target_slope;
  return std::abs(slope_lo) <= std::abs(slope_hi) ? lo : hi;
}

}  // namespace gaindoublet
