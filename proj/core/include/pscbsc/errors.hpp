#ifndef PSCBSC_ERRORS_HPP
#define PSCBSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pscbsc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

// Thrown when an enumeration or dense oracle would exceed its configured cap.
struct SizeLimit : Error {
    using Error::Error;
};

struct NumericalRankLoss : Error {
    using Error::Error;
};

struct StepTooSmall : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace pscbsc

#endif
