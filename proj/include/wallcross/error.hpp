#pragma once

#include <stdexcept>
#include <string>

namespace wallcross {

enum class ErrorKind {
  DimensionMismatch,
  InvalidSurface,
  InvalidPolarization,
  DegenerateC,
  LevelTooLarge,
  DegreeMismatch,
  IdentityViolation,
  DTooLarge,
  WeightMismatch,
  RangeError,
  ConfigError,
  UnknownWall,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wallcross
