#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

// Error taxonomy for the whole library. The CLI maps these onto exit codes:
// Inadmissible -> 2, everything else -> 3 (validation failures are reported
// through ValidationReport, not exceptions).
enum class Errc {
  Inadmissible,
  NotInOmega,
  NonPositiveRadicand,
  NoBracket,
  BranchViolation,
  SingularInterval,
  NonPositiveRadius,
  HorizontalTangent,
  ArcLengthViolation,
  OutsideDomain,
  NoSurface,
  Degenerate,
  NoRoot,
  BadParameters,
  TooFewSamples,
  NonNegativeK,
  UnsupportedFormat,
  NumericalFailure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ricci
