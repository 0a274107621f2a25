#ifndef MIRTH_COMMON_HPP
#define MIRTH_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mirth {

// Error taxonomy maps onto CLI exit codes: data/format problems -> 3,
// numeric failures (NaN gradients, diverged optimizer) -> 4.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

class FormatError : public DataError {
 public:
  explicit FormatError(const std::string& msg) : DataError(msg) {}
};

class LayoutError : public DataError {
 public:
  explicit LayoutError(const std::string& msg) : DataError(msg) {}
};

class DimensionError : public DataError {
 public:
  explicit DimensionError(const std::string& msg) : DataError(msg) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

}  // namespace mirth

#endif  // MIRTH_COMMON_HPP
