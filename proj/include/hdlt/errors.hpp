#pragma once

#include <stdexcept>

namespace hdlt {

/// Invalid arguments or malformed inputs. The CLI maps these to exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric failures: singular solves, degenerate estimates. Exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statistic that does not exist for the given data shape, e.g. T^2 when
/// the dimension reaches the sample size.
class UndefinedTestError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace hdlt
