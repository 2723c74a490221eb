#ifndef DIMERS_ERRORS_HPP
#define DIMERS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dimers {

// Invalid arguments: incompatible parity, height mismatch, malformed input.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration / dense-matrix budget was exceeded.
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// A quantity fell below the working precision; caller should raise digits.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine could not reach the requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dimers

#endif
