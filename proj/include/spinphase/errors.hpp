#pragma once

#include <stdexcept>
#include <string>

namespace spinphase {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector/matrix sizes inconsistent with the stated j or d.
struct DimensionMismatch : Error {
  using Error::Error;
};

// A state required to be normalized was not, within the stated tolerance.
struct NotNormalized : Error {
  using Error::Error;
};

// Angular momentum indices outside their domain (negative j, |m| > j, ...).
struct InvalidIndex : Error {
  using Error::Error;
};

// Fields or cached tables built on different quadrature grids.
struct GridMismatch : Error {
  using Error::Error;
};

// Kernel sign vector not of the form (+1, ±1, ..., ±1).
struct InvalidSigns : Error {
  using Error::Error;
};

// Rotation operator deviates from unitarity beyond tolerance.
struct NotUnitary : Error {
  using Error::Error;
};

// Lattice kernels exist for d = 2 and odd d only.
struct EvenDimension : Error {
  using Error::Error;
};

// Quadrature grid too coarse for the requested transform to be exact.
struct InsufficientBandLimit : Error {
  using Error::Error;
};

// Amplitudes combined across different window states.
struct WindowMismatch : Error {
  using Error::Error;
};

// A numerical identity that must hold by construction failed at runtime.
struct ContractViolation : Error {
  using Error::Error;
};

// Malformed CLI input (state specs, angle expressions, ...).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace spinphase
