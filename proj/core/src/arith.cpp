#include "bci/arith.hpp"

#include <cctype>

namespace bci {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty rational literal");
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (std::size_t i = pos; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer multinomial(const Integer& d, std::span<const Integer> alpha) {
  Integer sum = 0;
  for (const auto& a : alpha) {
    if (a < 0) throw DomainError("multinomial: negative part");
    sum += a;
  }
  if (sum != d) throw DomainError("multinomial: parts sum to " + sum.get_str() + ", expected " + d.get_str());
  // Product of binomials: C(a1, a1) C(a1+a2, a2) ... avoids huge factorials.
  Integer result = 1;
  Integer running = 0;
  for (const auto& a : alpha) {
    running += a;
    if (!running.fits_ulong_p()) throw DomainError("multinomial: degree too large");
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), running.get_ui(), a.get_ui());
    result *= b;
  }
  return result;
}

Rational pow(const Rational& base, std::int64_t e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace bci
