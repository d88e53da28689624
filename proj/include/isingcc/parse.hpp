#pragma once

#include <string>
#include <string_view>

#include "isingcc/operator.hpp"

namespace isingcc {

/// A literal evaluated in both modes. Decimal numbers make it float-only.
struct ParsedScalar {
  ExactComplex exact;
  Complex numeric;
  bool is_exact = true;
};

/// Sums and products of rationals, decimals, pi, pi^k, i and parentheses,
/// e.g. "1/4+pi/20", "1/16-1/400*pi^2", "0.25". Throws kSchema.
ParsedScalar parse_scalar(std::string_view text);

/// Real-valued literal; throws kSchema if it has an imaginary part.
ParsedScalar parse_real(std::string_view text);

struct ParsedOperator {
  ExactOperator exact;
  Operator numeric;
  bool is_exact = true;
};

/// Compact operator text: scalar literals and generators U<site> combined
/// with + - * / and parentheses, e.g. "1/2 + 1/2*U-1/2*U0*U1/2",
/// "i*U0*U1/2", "(1/4+pi/20)*U0". A site is a half-integer literal, so
/// "U1/2" is the generator at 1/2. Throws kSchema.
ParsedOperator parse_operator(std::string_view text);

}  // namespace isingcc
