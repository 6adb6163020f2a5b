#pragma once

#include <string>

#include "bjq/grid.hpp"

namespace bjq {

struct UnknownBuiltin : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Named sample functions on the phase-space torus:
///   "one"          constant 1
///   "harper"       -cos(2*pi*q/L) - cos(2*pi*p/P)
///   "cosq"         cos(2*pi*q/L)
///   "cosp"         cos(2*pi*p/P)
///   "qwell"        (q - L/2)^2 / 2
///   "mixed:<m>,<s>" harper plus cos(k_m q + l_s p)
PhaseSpaceGridFunction builtin_function(const GridSpec& spec, const std::string& name);

/// Named states (normalized):
///   "gaussian"          exp(-(q - L/2)^2 / (2 hbar))
///   "gaussian-excited"  (q - L/2) * exp(-(q - L/2)^2 / (2 hbar))
///   "uniform"           constant amplitude
GridState builtin_state(const GridSpec& spec, const std::string& name);

/// Named operators:
///   "identity"
///   "cosq"              (E(1,0) + E(-1,0)) / 2
///   "cosp"              (E(0,1) + E(0,-1)) / 2
///   "gaussian-excited"  projector onto the gaussian-excited state
GridOperator builtin_operator(const GridSpec& spec, const std::string& name);

/// |psi><psi|.
GridOperator projector(const GridState& psi);

}  // namespace bjq
