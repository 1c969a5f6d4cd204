#pragma once

// Text and JSON forms of scalars and polynomials.
//
// Polynomial grammar (whitespace-insensitive):
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | 'i' | 'x' index ['^' integer]
//           | '(' poly ')' ['^' integer]
// e.g. `3/2*x1^2*x2 - x3 + 1/2*i*x2^4`.

#include <string>
#include <string_view>

#include "json.hpp"

#include "sphalg/poly.hpp"

namespace sphalg {

/// Parses text into a polynomial of dimension dim. Variables must satisfy
/// 1 <= k <= dim. Throws ParseError (with offset) on any violation.
Poly parse_poly(std::string_view text, std::size_t dim);

/// {dim, terms: [{exponents, re_num, re_den, im_num, im_den}]} with terms in
/// canonical order. Integers are decimal strings (arbitrary precision).
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const GaussianRational& z);

Poly poly_from_json(const nlohmann::json& j);
GaussianRational scalar_from_json(const nlohmann::json& j);

}  // namespace sphalg
