#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rahecke {

using Rational = mpq_class;

// "n" for integers, "num/den" otherwise; always in lowest terms.
std::string to_string(const Rational& q);

// Accepts "n", "-n", "num/den" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

double to_double(const Rational& q);

}  // namespace rahecke
