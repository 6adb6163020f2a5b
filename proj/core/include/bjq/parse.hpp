#pragma once

#include <string>

#include "bjq/classical.hpp"

namespace bjq {

/// Syntax or range error in polynomial text; offset is the byte position of
/// the offending token.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off);
};

/// Parse a phase-space polynomial.
///
/// Grammar (whitespace insignificant):
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)? ('/' uint)*
///   atom   := rational | 'i' | 'hbar' | var | '(' expr ')'
///   rational := uint ('/' uint)?
///   var    := ('q'|'p') index?        index := uint, 1-based, defaults to 1
///
/// Division is defined only by positive integer literals, so every input is
/// a polynomial with exact rational coefficients. The number of degrees of
/// freedom is the largest variable index seen (at least 1).
ClassicalPoly parse_classical(const std::string& text);

}  // namespace bjq
