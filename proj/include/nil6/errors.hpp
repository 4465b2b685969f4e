#pragma once

#include <stdexcept>
#include <string>

namespace nil6 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NotSkew : Error { using Error::Error; };
struct NotTwoStep : Error { using Error::Error; };
struct NotLieAlgebra : Error { using Error::Error; };
struct NotUnitCoefficients : Error { using Error::Error; };
struct CommutatorNotCentral : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroMap : Error { using Error::Error; };
struct UnsupportedCodomain : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };
struct DegenerateColumn : Error { using Error::Error; };
struct ReductionFailed : Error { using Error::Error; };
struct UnclassifiableRegion : Error { using Error::Error; };

} // namespace nil6
