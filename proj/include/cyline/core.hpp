#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cyline {

using Complex = std::complex<double>;

// Relative tolerance for zero tests, scaled by the magnitude of the object under test.
inline constexpr double kZeroTol = 1e-9;
// Absolute tolerance on unit canonical Plücker vectors.
inline constexpr double kLineTol = 1e-7;
// Default normalized residual bound for incidence of a line with a variety.
inline constexpr double kIncidenceTol = 1e-8;
// Relative singular-value cut for syzygy nullspaces.
inline constexpr double kNullspaceTol = 1e-8;
// Distance from a degeneracy locus below which a parameter is rejected.
inline constexpr double kDegeneracyTol = 1e-6;
// Distance below which a parameter is accepted with a warning.
inline constexpr double kNearDegeneracyTol = 1e-3;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Parses "RE" or "RE,IM".
Complex parse_complex(const std::string& text);

}  // namespace cyline
