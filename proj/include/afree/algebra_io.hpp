#pragma once

// Textual algebra format:
//
//   sullivan v1
//   gen x1 2
//   gen y_1_2 3
//   d x1 = 0
//   d y_1_2 = x1^2 + x1*x2 + x2^2
//
// Generator order in the file fixes the ids. Blank lines and lines starting
// with '#' are ignored. Differentials that are not listed are zero.

#include "afree/algebra.hpp"

#include <string>
#include <string_view>

namespace afree {

/// Terms in canonical order, e.g. "x1^2 - 1/2*x1*x2 + y_1_2*y_1_3". Zero is "0".
std::string format_element(const Element& e);

/// Parses a polynomial using + - * ^ and integer or rational coefficients.
/// Factors are multiplied left to right, so "y2*y1" equals "-y1*y2" for odd y.
/// Throws ParseError (line 0) on bad syntax or unknown names.
Element parse_element(const GeneratorSetPtr& gens, std::string_view text);

std::string write_algebra(const SullivanAlgebra& A);

/// Throws ParseError with the offending line number.
SullivanAlgebra read_algebra(std::string_view text);

}  // namespace afree
