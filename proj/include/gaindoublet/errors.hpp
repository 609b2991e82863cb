#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gaindoublet {

// Invalid sizes, empty line lists, bad selectors, malformed scenario setup.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite inputs or quantities outside their mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A requested target cannot be reached; carries the attainable interval.
struct RangeError : std::range_error {
  RangeError(const std::string& what, double attainable_min, double attainable_max)
      : std::range_error(what), min(attainable_min), max(attainable_max) {}
  double min;
  double max;
};

// A pulse feature (peak, half-maximum crossing) is not contained in the window.
struct WindowingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two or more co-equal intensity maxima.
struct AmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GainOverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Config text that cannot be parsed or does not match the schema.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::string field_path = {}, int line_number = 0)
      : std::runtime_error(what), field(std::move(field_path)), line(line_number) {}
  std::string field;
  int line;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gaindoublet
