#pragma once

#include <stdexcept>
#include <string>

namespace ylab {

enum class ErrorKind {
    TooFewPoints,
    NonFiniteCoordinate,
    NotSquare,
    NotSymmetric,
    NegativeDistance,
    NonFiniteDistance,
    NonzeroDiagonal,
    InvalidPointId,
    InvalidTour,
    TourComplete,
    TourTooSmall,
    CoordinatesRequired,
    CrossingStale,
    TooLarge,
    NonPositiveOptimal,
    ParseError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::NonFiniteCoordinate: return "NonFiniteCoordinate";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NegativeDistance: return "NegativeDistance";
        case ErrorKind::NonFiniteDistance: return "NonFiniteDistance";
        case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
        case ErrorKind::InvalidPointId: return "InvalidPointId";
        case ErrorKind::InvalidTour: return "InvalidTour";
        case ErrorKind::TourComplete: return "TourComplete";
        case ErrorKind::TourTooSmall: return "TourTooSmall";
        case ErrorKind::CoordinatesRequired: return "CoordinatesRequired";
        case ErrorKind::CrossingStale: return "CrossingStale";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NonPositiveOptimal: return "NonPositiveOptimal";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Library-wide exception; `kind()` identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace ylab
