#pragma once

#include <stdexcept>
#include <string>

namespace hyperwalk {

/// Malformed input: bad JSON documents, unknown labels, unreadable files.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structural or numerical invariant of a walk description is violated.
struct spec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A transformation was requested for a walk it does not apply to.
struct transform_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Certification failure; carries the measured deviation from unitarity.
struct unitarity_error : spec_error {
  unitarity_error(const std::string& what, double dev)
      : spec_error(what), deviation(dev) {}
  double deviation;
};

}  // namespace hyperwalk
