#pragma once

#include <string>

namespace dlra {

/// Time integrators for the semi-discrete moment system.
///   Full           -- dense update on the full coefficient matrix
///   PsDiscrete     -- projector splitting applied to the fully discrete update
///   PsNaive        -- projector splitting of the semi-discrete system,
///                     forward-Euler substeps without stabilizing averages
///   PsStabilized   -- as PsNaive but with the averaging stencil kept in the
///                     S- and L-substeps
///   Unconventional -- basis-update & Galerkin integrator (parallel K/L
///                     updates, then a Galerkin step for S)
enum class Scheme {
  Full,
  PsDiscrete,
  PsNaive,
  PsStabilized,
  Unconventional,
};

/// How the (diagonal) relaxation/scattering operator is applied each step.
enum class ScatteringMode {
  None,
  FullSplit3Step, // three projected substeps (K forward, S backward, L forward)
  LStepOnly,      // single forward update of the L factor
};

std::string to_string(Scheme s);
std::string to_string(ScatteringMode m);
Scheme parse_scheme(const std::string& name);
ScatteringMode parse_scattering(const std::string& name);

} // namespace dlra
