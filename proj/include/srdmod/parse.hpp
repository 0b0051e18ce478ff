#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "srdmod/weyl.hpp"

namespace srdmod {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Variables are the complex labels; x<k> (1-based) is accepted for any
/// index not shadowed by a label. Derivatives are d<k> or d_<label>, with
/// d^[k] a divided power and d^k an ordinary power (k! d^[k]). Factors may be
/// juxtaposed or joined by '*'; coefficients may be rationals such as 1/2.
///   "3*x^2*y - 1/2*w", "x1^2 d1^[3] + 5 x2 d2^[1]", "(x + w)^2"
DiffOp parse_operator(const std::string& text, Field k, const std::vector<std::string>& labels);

/// As parse_operator, rejecting derivatives.
Polynomial parse_polynomial(const std::string& text, Field k, const std::vector<std::string>& labels);

/// "num/den" split at the last top-level '/' that is followed by a variable
/// or a parenthesis; a missing denominator means 1.
std::pair<Polynomial, Polynomial> parse_fraction(const std::string& text, Field k,
                                                 const std::vector<std::string>& labels);

Scalar parse_scalar(const std::string& text, Field k);

/// "1,1,0,0"; entries may be rationals.
std::vector<Scalar> parse_point(const std::string& text, Field k);

/// "lo:hi".
std::pair<int, int> parse_box(const std::string& text);

}  // namespace srdmod
