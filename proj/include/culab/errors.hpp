#pragma once

#include <stdexcept>
#include <string>

namespace culab {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed input data (bad JSON, unparsable rational, shape mismatch).
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what) : Error("SchemaError", what) {}
};

// A documented operation precondition was violated. `code` names the
// specific condition (UnboundedRank, NotAtomic, TooManyAtoms, ...).
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& what)
      : Error(std::move(code), what) {}
};

}  // namespace culab
