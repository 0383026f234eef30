#pragma once

#include <stdexcept>
#include <string>

namespace cgeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Division by zero (or otherwise degenerate) exact scalar.
struct DegenerateScalar : Error {
  using Error::Error;
};

/// Fixture / scalar text that does not parse.
struct ParseError : Error {
  using Error::Error;
};

/// Endomorphism handed to an almost-complex operation with J^2 != -1.
struct NonComplexStructure : Error {
  using Error::Error;
};

/// Gauduchon family parameters outside Omega^+ x Omega^{1,1}_s (or wrong trace).
struct InvalidParams : Error {
  using Error::Error;
};

/// Connection that was required to satisfy nabla J = 0 but does not.
struct NonHermitianConnection : Error {
  using Error::Error;
};

/// Weitzenboeck machinery requires a nice connection.
struct NonNiceConnection : Error {
  using Error::Error;
};

/// The rough-Laplacian reduction is only valid on unimodular frames.
struct NonUnimodular : Error {
  using Error::Error;
};

}  // namespace cgeo
