#ifndef ANTIPODE_ERROR_HPP
#define ANTIPODE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace antipode {

enum class ErrorKind {
    FieldMismatch,
    DivisionByZero,
    ZeroGlobalDimension,
    DimensionMismatch,
    NonConvergence,
    NotInvertibleClass,
    EmptyEigenspace,
    AmbiguousM,
    ZeroEntry,
    NotInEigenspace,
    JDependence,
    InvalidTwist,
    SignSplitMismatch,
    NonRealSigns,
    BadParameters,
    NotACharacter,
    NotASubgroup,
    MissingDims,
    ParseError,
    SchemaError,
    UnsupportedSymbolic,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroGlobalDimension: return "ZeroGlobalDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotInvertibleClass: return "NotInvertibleClass";
    case ErrorKind::EmptyEigenspace: return "EmptyEigenspace";
    case ErrorKind::AmbiguousM: return "AmbiguousM";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::NotInEigenspace: return "NotInEigenspace";
    case ErrorKind::JDependence: return "JDependence";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::SignSplitMismatch: return "SignSplitMismatch";
    case ErrorKind::NonRealSigns: return "NonRealSigns";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::MissingDims: return "MissingDims";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnsupportedSymbolic: return "UnsupportedSymbolic";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the named kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace antipode

#endif
