#pragma once

#include <stdexcept>
#include <string>

namespace relm {

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data: CSV cells, schema mismatches, bad label values.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad configuration file or configuration value.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Model file problems: wrong magic, unsupported version, checksum mismatch,
/// truncated or inconsistent sections.
class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical breakdown (failed eigendecomposition, non-finite state).
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace relm
