#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Bad user-supplied data (rank mismatch, non-dominant bound, malformed JSON...).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// A result could not be certified at the working precision; retry with a
// larger precision/radius rather than trusting a truncated answer.
struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& m) : std::runtime_error(m) {}
};

// An internal cross-check failed (two routes disagree, a postcondition does
// not hold).  Never downgraded to a warning.
struct consistency_error : std::logic_error {
  explicit consistency_error(const std::string& m) : std::logic_error(m) {}
};

// An enumeration finished without a completeness certificate.
struct uncertified_error : std::runtime_error {
  explicit uncertified_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace hecke
