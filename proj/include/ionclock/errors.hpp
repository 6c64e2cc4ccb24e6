#pragma once

#include <stdexcept>
#include <string>

namespace ionclock {

// Error taxonomy mirrors the CLI exit codes:
//   ConfigError -> 2, DataError -> 3, NumericalError -> 4.

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ionclock
