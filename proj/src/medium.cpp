#include "gaindoublet/medium.hpp"

namespace gaindoublet {

std::string to_string(DetuningConvention convention) {
  return convention == DetuningConvention::AngularFrequency ? "angular-frequency" : "ordinary-frequency";
}

DetuningConvention convention_from_string(const std::string& text) {
  if (text == "ordinary-frequency") return DetuningConvention::OrdinaryFrequency;
  if (text == "angular-frequency") return DetuningConvention::AngularFrequency;
  throw ConfigError("unknown detuning convention '" + text +
                    "' (expected 'ordinary-frequency' or 'angular-frequency')");
}

std::string to_string(DispersionRegime regime) {
  switch (regime) {
    case DispersionRegime::Normal:
      return "normal";
    case DispersionRegime::Anomalous:
      return "anomalous";
    case DispersionRegime::Flat:
      return "flat";
  }
  return "unknown";
}

}  // namespace gaindoublet
