#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace xlag {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "p" or "p/q" with optional sign into a reduced rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Floor of a rational as an Integer.
Integer floor(const Rational& q);

Rational factorial(unsigned n);

double to_double(const Rational& q);

}  // namespace xlag
