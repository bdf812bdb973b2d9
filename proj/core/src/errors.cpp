#include "hilbtan/errors.hpp"

namespace hilbtan {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotTwoStep: return "NotTwoStep";
    case ErrorKind::HasLinearSyzygies: return "HasLinearSyzygies";
    case ErrorKind::NotStrictlySandwiched: return "NotStrictlySandwiched";
    case ErrorKind::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::OutOfRange: return "OutOfRange";
  }
  return "Error";
}

}  // namespace hilbtan
