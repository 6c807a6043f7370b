#pragma once

#include <stdexcept>

namespace qcl {

inline constexpr const char* kVersion = "0.1.0";

// Bad configuration input: unknown keys, malformed values, missing files
// that the run cannot start without.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad data content: non-binary pixels, impossible draws, manifest or
// checkpoint schema mismatches.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numeric breakdown during optimization (non-finite loss and the like).
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcl
