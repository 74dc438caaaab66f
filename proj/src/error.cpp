#include "fialg/error.hpp"

namespace fialg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::TorsionRefused: return "TorsionRefused";
    case ErrorKind::NotJordan: return "NotJordan";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fialg
