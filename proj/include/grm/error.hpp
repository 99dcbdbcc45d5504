#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold. When the failure
/// is located at a point of F_q^m, `witness()` holds that point's coordinates.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what, std::vector<std::uint8_t> witness = {})
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<std::uint8_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::uint8_t> witness_;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A JSON document does not follow the expected schema. The message names the
/// offending field.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace grm
