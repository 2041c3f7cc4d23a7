#ifndef RIESZMIX_ERRORS_HPP
#define RIESZMIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rieszmix {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x (or a principal block of x) failed the Cholesky pivot test.
struct NotPositiveDefinite : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Shape vector hits a gamma pole of the cone gamma function.
struct PoleError : Error {
  using Error::Error;
};

// Shape not absolutely continuous: the Riesz measure has no density.
struct BoundaryShape : Error {
  using Error::Error;
};

// theta outside the domain of the Laplace transform / cumulant.
struct OutOfDomain : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// Bessel order alpha <= -1 and non-integer.
struct UnsupportedOrder : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace rieszmix

#endif  // RIESZMIX_ERRORS_HPP
