#pragma once

#include <string>

#include "qpair/algebra.hpp"

namespace qpair {

// Surface syntax for elements, 1-based generator indices:
//   atoms:    e1, f2, k[1,-1], q[-3], integer literals, ( expr )
//   product:  juxtaposition; '/' divides with the same precedence
//   powers:   x^3 repeats a factor, e1^(2) / f1^(2) are divided powers
//   sums:     '+' and '-', unary '-' allowed at the front of a (sub)sum
// Rendering emits one term per monomial as
//   (num)/(den) f... k[...] e...
// with the torus factor omitted when zero; rendered output parses back
// to the identical representative.
Element parse_element(const Algebra& algebra, const std::string& text);

std::string render_scalar(const Scalar& s);
std::string render_element(const Element& x);
std::string render_tensor(const Tensor& t);

}  // namespace qpair
