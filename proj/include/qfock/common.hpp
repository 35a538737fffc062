#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace qfock {

using cxd = std::complex<double>;

// Hard ceiling on the dimension d^n of any operator this library builds.
// Keeps every eigendecomposition at desk scale.
inline constexpr std::size_t kDefaultSizeCap = 4096;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested object exceeds a hard size limit (enumeration caps, d^n cap).
struct SizeLimitError : Error {
  using Error::Error;
};

// Input data violates a structural invariant of its type.
struct ValidationError : Error {
  using Error::Error;
};

// Operands disagree in degree or base dimension.
struct DimensionError : Error {
  using Error::Error;
};

// A mathematical precondition of the operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// A component would be pushed past the truncation degree.
struct TruncationError : Error {
  using Error::Error;
};

}  // namespace qfock
