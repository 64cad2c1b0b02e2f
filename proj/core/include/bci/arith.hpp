#pragma once

// Exact scalar arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bci {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when input violates a documented precondition of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws DomainError.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(unsigned long k);
Integer binomial(unsigned long n, unsigned long k);

/// d! / (alpha_1! ... alpha_n!). Throws DomainError when sum(alpha) != d.
Integer multinomial(const Integer& d, std::span<const Integer> alpha);

/// Exact power with a machine exponent; negative exponents invert (q != 0).
Rational pow(const Rational& base, std::int64_t e);

}  // namespace bci
