#pragma once

#include "bci/arith.hpp"
#include "bci/coeff_monomial.hpp"
#include "bci/monomial.hpp"
#include "bci/poly_over.hpp"
#include "bci/sparse_poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bci {

/// Malformed family source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Well-formed input that breaks a family invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f_i = a_i x_i^{d_i} - b_i m_i, i = 1..n, with deg m_i = d_i and m_i != x_i^{d_i}.
/// Coefficients are symbolic, numeric, or a mix (see CoeffAssignment).
class BinomialFamily {
 public:
  BinomialFamily() = default;
  /// Validates every invariant; throws ValidationError.
  BinomialFamily(std::vector<unsigned long> degrees, std::vector<Monomial> tails, CoeffAssignment coeffs);
  static BinomialFamily symbolic(std::vector<unsigned long> degrees, std::vector<Monomial> tails);

  std::size_t n() const { return degrees_.size(); }
  const std::vector<unsigned long>& degrees() const { return degrees_; }
  /// 1-based.
  unsigned long degree(std::size_t i) const { return degrees_.at(i - 1); }
  const Monomial& tail(std::size_t i) const { return tails_.at(i - 1); }
  const std::vector<Monomial>& tails() const { return tails_; }
  const CoeffAssignment& coefficients() const { return coeffs_; }

  bool is_symbolic() const { return coeffs_.fully_symbolic(); }
  bool is_numeric() const { return coeffs_.fully_numeric(); }

  /// x_i^{d_i}.
  Monomial leading_monomial(std::size_t i) const;
  /// sum (d_i - 1).
  unsigned long socle_degree() const;
  /// sum (d_i - 1) + 1.
  unsigned long resultant_degree() const { return socle_degree() + 1; }

  /// Membership in M_{d_1..d_k}: exponent i below d_i for every i <= k.
  bool in_basis_set(const Monomial& m, std::size_t k) const;
  bool in_basis_set(const Monomial& m) const { return in_basis_set(m, n()); }
  /// Minimal i with x_i^{d_i} | m, or 0 when m is in M_{d_1..d_n}.
  std::size_t reducing_index(const Monomial& m) const;

  /// a_i or b_i as a polynomial: the symbol itself or its assigned value.
  SparsePoly coeff_a(std::size_t i) const;
  SparsePoly coeff_b(std::size_t i) const;
  /// f_i with coefficients in the symbol ring.
  SymPoly generator(std::size_t i) const;
  /// f_i over Q; throws DomainError unless the family is fully numeric.
  QPoly numeric_generator(std::size_t i) const;

  friend bool operator==(const BinomialFamily&, const BinomialFamily&) = default;

 private:
  std::vector<unsigned long> degrees_;
  std::vector<Monomial> tails_;
  CoeffAssignment coeffs_;
};

/// Parses the text front end:
///   f1 = a1*x1^2 - b1*x1*x3 ; f2 = ...
/// Generators are separated by ';' or newlines.
BinomialFamily parse_family(std::string_view text);

/// Canonical text form; parse_family(to_text(f)) == f.
std::string to_text(const BinomialFamily& fam);

/// Replaces the assigned symbols; throws ValidationError if some a_i gets 0.
BinomialFamily specialize(const BinomialFamily& fam, const CoeffAssignment& assign);

/// Parses "a1=1,b3=2/3" or "a=1" (all a's), "b=0"; entries separated by ','.
CoeffAssignment parse_assignment(std::string_view text, std::size_t n);

}  // namespace bci
