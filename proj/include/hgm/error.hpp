#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  UnknownLetter,
  SingularMatrix,
  NotHermitian,
  AmbiguousSnap,
  NoRationalMatch,
  NonUnitEigenvalue,
  SharedEigenvalue,
  RepeatedEigenvalue,
  ExcludedFamily,
  UnknownEntry,
  UnknownId,
  UnsupportedP,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hgm
