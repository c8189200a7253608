#pragma once

// Polynomial text grammar and canonical string forms.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*      division only by nonzero constants
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | 'x' | 't' | 'z' | '(' expr ')'
//
// number is an integer or a finite decimal. At most one of t, z may appear.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abelzero/algebra.hpp"

namespace abelzero {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParsedPoly {
  BiPoly coeffs;                         // outer x, inner parameter
  std::optional<Parameter> parameter;    // set when t or z occurs
};

ParsedPoly parse_poly(std::string_view text);

/// Only x allowed.
UniPoly parse_univariate(std::string_view text);

/// x and at most one parameter; a parameter-free text gets `fallback`.
ParamPoly parse_param_poly(std::string_view text, Parameter fallback = Parameter::t);

/// Polynomial in one variable written with the given letter, e.g. "x^2 - 1/3".
std::string format_poly(const UniPoly& p, char var = 'x');

/// Polynomial in an outer and an inner variable, e.g. "x^2 - x - t".
std::string format_bipoly(const BiPoly& p, char outer, char inner);

std::string format_poly(const ParamPoly& p);

/// Canonical JSON-ready coefficient list, lowest degree first.
std::vector<std::string> coefficient_strings(const UniPoly& p);

/// Inverse of coefficient_strings.
UniPoly from_coefficient_strings(const std::vector<std::string>& coeffs);

}  // namespace abelzero
