#pragma once

#include <stdexcept>
#include <string>

namespace purecubic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankDeficient : public Error {
 public:
  RankDeficient() : Error("generators span a submodule of rank < 3") {}
};

class ZeroElement : public Error {
 public:
  explicit ZeroElement(const std::string& where) : Error(where + ": element is zero") {}
};

class NotAnIdeal : public Error {
 public:
  NotAnIdeal() : Error("submodule is not an ideal") {}
};

class NotPrimitive : public Error {
 public:
  NotPrimitive() : Error("ideal is not primitive") {}
};

class NotReduced : public Error {
 public:
  NotReduced() : Error("ideal is not reduced") {}
};

class NotMinimalElement : public Error {
 public:
  NotMinimalElement() : Error("element is not a minimal element in [1, epsilon0)") {}
};

class GeneratorMismatch : public Error {
 public:
  GeneratorMismatch() : Error("supplied generator does not generate the ideal") {}
};

class IterationCapExceeded : public Error {
 public:
  explicit IterationCapExceeded(long cap)
      : Error("iteration cap of " + std::to_string(cap) + " steps exceeded") {}
};

/// Raised when a certified comparison cannot be decided; indicates an expression
/// outside the supported grammar.
class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what) : Error("precision exhausted: " + what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

}  // namespace purecubic
