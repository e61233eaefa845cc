#pragma once

#include <stdexcept>
#include <string>

namespace oscomp {

// Typed failure codes surfaced by every operation. CLI maps these to exit code 2.
enum class Errc {
  ValueOutOfBound,
  NegativeInput,
  WrongKind,
  ZeroNormalizer,
  UnsupportedOrderMode,
  PreconditionViolated,
  NotIncreasing,
  IncompatibleModels,
  NoFullElement,
  NoFullPair,
  OracleFailure,
  BoundTooSmall,
  UndecidableAtBound,
  ParseError,
  InternalLimit,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace oscomp
