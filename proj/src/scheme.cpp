#include "dlra/scheme.hpp"

#include <stdexcept>

namespace dlra {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Full: return "full";
    case Scheme::PsDiscrete: return "ps-discrete";
    case Scheme::PsNaive: return "ps-naive";
    case Scheme::PsStabilized: return "ps-stabilized";
    case Scheme::Unconventional: return "unconventional";
  }
  throw std::invalid_argument("to_string: unknown scheme");
}

std::string to_string(ScatteringMode m) {
  switch (m) {
    case ScatteringMode::None: return "none";
    case ScatteringMode::FullSplit3Step: return "full-split";
    case ScatteringMode::LStepOnly: return "l-only";
  }
  throw std::invalid_argument("to_string: unknown scattering mode");
}

Scheme parse_scheme(const std::string& name) {
  if (name == "full") return Scheme::Full;
  if (name == "ps-discrete") return Scheme::PsDiscrete;
  if (name == "ps-naive") return Scheme::PsNaive;
  if (name == "ps-stabilized") return Scheme::PsStabilized;
  if (name == "unconventional") return Scheme::Unconventional;
  throw std::invalid_argument("unknown scheme: " + name);
}

ScatteringMode parse_scattering(const std::string& name) {
  if (name == "none") return ScatteringMode::None;
  if (name == "full-split") return ScatteringMode::FullSplit3Step;
  if (name == "l-only") return ScatteringMode::LStepOnly;
  throw std::invalid_argument("unknown scattering mode: " + name);
}

} // namespace dlra
