#pragma once

#include "bci/arith.hpp"
#include "bci/sparse_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bci {

/// Dense univariate polynomial over Z; coeffs[k] multiplies x^k.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly x_pow_minus_one(unsigned long e);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
  /// Exact division by a monic divisor; throws DomainError on a nonzero remainder.
  IntPoly divide_exact(const IntPoly& monic_divisor) const;

  /// "x^2 - x + 1".
  std::string to_string(char var = 'x') const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Phi_e, by exact division of x^e - 1 by Phi_d over the proper divisors d of e.
IntPoly cyclotomic(unsigned long e);

/// Positive divisors of e in increasing order.
std::vector<unsigned long> divisors(unsigned long e);

/// B^{deg} * Phi_e(A/B) with A, B given as polynomials.
SparsePoly homogenized_cyclotomic(unsigned long e, const SparsePoly& A, const SparsePoly& B);

}  // namespace bci
