#pragma once

#include <utility>

#include "planekit/bipoly.hpp"
#include "planekit/proj.hpp"

namespace planekit {

// Text grammar, shared by CLI input and JSON payload strings. Whitespace is
// insignificant. Multiplication is explicit ('*'), '^' takes a nonnegative
// integer, '/' needs a constant nonzero divisor. All parsers reject trailing
// garbage and report failures as ParseError with a byte offset.

Scalar parse_scalar(const std::string& text, const FieldSpec& f);
UniPoly parse_unipoly(const std::string& text, const FieldSpec& f);   // variable t
BiPoly parse_bipoly(const std::string& text, const FieldSpec& f);     // variables x, y
Mat2 parse_mat2(const std::string& text, const FieldSpec& f);         // [[a,b],[c,d]]
MatPoly2 parse_matpoly(const std::string& text, const FieldSpec& f);  // entries in t
ProjPoint parse_projpoint(const std::string& text, const FieldSpec& f); // (a:b)

// "(f ; g)" with f, g in x, y. Used to read polynomial maps.
std::pair<BiPoly, BiPoly> parse_poly_pair(const std::string& text, const FieldSpec& f);

} // namespace planekit
