#include "superinv/errors.hpp"

namespace superinv {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAPermutationGroup: return "NotAPermutationGroup";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::BasisTooLarge: return "BasisTooLarge";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    }
    return "Error";
}

}  // namespace superinv
