#include "ricci/errors.hpp"

namespace ricci {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::NotInOmega: return "NotInOmega";
    case Errc::NonPositiveRadicand: return "NonPositiveRadicand";
    case Errc::NoBracket: return "NoBracket";
    case Errc::BranchViolation: return "BranchViolation";
    case Errc::SingularInterval: return "SingularInterval";
    case Errc::NonPositiveRadius: return "NonPositiveRadius";
    case Errc::HorizontalTangent: return "HorizontalTangent";
    case Errc::ArcLengthViolation: return "ArcLengthViolation";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::NoSurface: return "NoSurface";
    case Errc::Degenerate: return "Degenerate";
    case Errc::NoRoot: return "NoRoot";
    case Errc::BadParameters: return "BadParameters";
    case Errc::TooFewSamples: return "TooFewSamples";
    case Errc::NonNegativeK: return "NonNegativeK";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::NumericalFailure: return "NumericalFailure";
  }
  return "UnknownError";
}

}  // namespace ricci
