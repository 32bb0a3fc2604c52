#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace roflow {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ROFLOW_DEFINE_ERROR(Name)    \
  struct Name : Error {              \
    using Error::Error;              \
  }

ROFLOW_DEFINE_ERROR(SingularMatrix);
ROFLOW_DEFINE_ERROR(InvalidDims);
ROFLOW_DEFINE_ERROR(GeometryMismatch);
ROFLOW_DEFINE_ERROR(EmptyRegion);
ROFLOW_DEFINE_ERROR(SaddleSingular);
ROFLOW_DEFINE_ERROR(RankDeficient);
ROFLOW_DEFINE_ERROR(BlowUp);
ROFLOW_DEFINE_ERROR(EmptyDataset);
ROFLOW_DEFINE_ERROR(NegativeGamma);
ROFLOW_DEFINE_ERROR(DimMismatch);
ROFLOW_DEFINE_ERROR(EmptyBatch);
ROFLOW_DEFINE_ERROR(NotOrthogonal);
ROFLOW_DEFINE_ERROR(EmptyInputs);
ROFLOW_DEFINE_ERROR(BadS);
ROFLOW_DEFINE_ERROR(ZeroTruth);
ROFLOW_DEFINE_ERROR(Diverged);
ROFLOW_DEFINE_ERROR(ParseError);
ROFLOW_DEFINE_ERROR(ConfigError);

#undef ROFLOW_DEFINE_ERROR

/// Iterative solver failed to reach the requested residual.
struct NoConvergence : Error {
  NoConvergence(std::int64_t iterations, double residual, const std::string& what_arg)
      : Error(what_arg + " (iterations=" + std::to_string(iterations) +
              ", residual=" + std::to_string(residual) + ")"),
        iterations(iterations),
        residual(residual) {}
  std::int64_t iterations = 0;
  double residual = 0.0;
};

}  // namespace roflow
