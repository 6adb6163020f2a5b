#pragma once

#include <string>

#include "bjq/grid.hpp"

namespace bjq {

/// IO failure or malformed file content.
struct FileFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Files are JSON objects
///   {"kind": "operator"|"state"|"psfunction", "N": .., "L": .., "hbar": ..,
///    "data": [[re, im], ...]}
/// with data in row-major order. Doubles are printed with enough digits to
/// round-trip bit-exactly.
void save_operator(const std::string& path, const GridOperator& a);
void save_state(const std::string& path, const GridState& psi);
void save_psfunction(const std::string& path, const PhaseSpaceGridFunction& f);

GridOperator load_operator(const std::string& path);
GridState load_state(const std::string& path);
PhaseSpaceGridFunction load_psfunction(const std::string& path);

}  // namespace bjq
