#pragma once

#include <string>
#include <vector>

#include "hilbtan/errors.hpp"
#include "hilbtan/ring.hpp"

namespace hilbtan {

/// Parses a homogeneous polynomial with integer coefficients.
///
/// Grammar: variables x1..xN or x_1..x_N, integers, + - * ^ and parentheses;
/// whitespace is ignored. Throws Error with SyntaxError (with the character
/// offset), UnknownVariable or NotHomogeneous.
Form parse_polynomial(const std::string& text, const RingCtx& ring);

/// Comma-separated list of polynomials; commas inside parentheses are kept.
std::vector<Form> parse_polynomial_list(const std::string& text, const RingCtx& ring);

/// Canonical text: terms in graded lex order, "x1^2*x3" monomials, "0" for zero.
std::string to_string(const Form& f, const RingCtx& ring);

}  // namespace hilbtan
