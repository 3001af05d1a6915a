#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binsketch {

// Out-of-domain numeric parameters (sizes, probabilities, counts).
class parameter_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Vectors, sketches or mappings of incompatible dimensions/keys were combined.
class dimension_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input data. Carries the 1-based line number when one is known (0 otherwise).
class format_error : public std::runtime_error {
public:
  explicit format_error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] auto line() const noexcept -> std::size_t { return line_; }

private:
  std::size_t line_;
};

} // namespace binsketch
