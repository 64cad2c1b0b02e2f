#pragma once

#include "bci/arith.hpp"
#include "bci/coeff_monomial.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bci {

/// Graded lex, descending: higher total degree first, then the earlier symbol
/// index (a_1, ..., a_n, b_1, ..., b_n) is the more significant one.
struct GrlexDescending {
  bool operator()(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const;
};

/// Sparse polynomial over Q in the symbols a_1..a_n, b_1..b_n.
class SparsePoly {
 public:
  /// Exponent vector: a-part then b-part, 2n nonnegative entries.
  using Exponent = std::vector<std::int64_t>;
  using TermMap = std::map<Exponent, Rational, GrlexDescending>;

  SparsePoly() = default;
  /// The zero polynomial over n symbol pairs.
  explicit SparsePoly(std::size_t n) : n_(n) {}

  static SparsePoly constant(std::size_t n, const Rational& c);
  static SparsePoly a(std::size_t n, std::size_t i, std::int64_t e = 1);
  static SparsePoly b(std::size_t n, std::size_t i, std::int64_t e = 1);
  /// Throws DomainError if the coefficient monomial has a negative exponent.
  static SparsePoly from(const CoeffMonomial& m);
  /// a^r - b^r for a label-count vector r.
  static SparsePoly binomial_difference(const std::vector<std::int64_t>& r);

  std::size_t num_pairs() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of a given exponent (0 if absent).
  Rational coefficient(const Exponent& e) const;
  /// Leading term under GrlexDescending; throws on zero.
  std::pair<Exponent, Rational> leading_term() const;
  std::int64_t total_degree() const;

  void add_term(const Exponent& e, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const SparsePoly& rhs);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
  friend SparsePoly operator*(SparsePoly lhs, const Rational& c) { return lhs *= c; }
  SparsePoly operator-() const;
  SparsePoly pow(unsigned long k) const;

  SparsePoly substitute(const CoeffAssignment& assign) const;
  /// Throws DomainError when some symbol in the support is unassigned.
  Rational evaluate(const CoeffAssignment& assign) const;

  /// q / *this when the division is exact; nullopt otherwise.
  std::optional<SparsePoly> divide_exact_into(const SparsePoly& q) const;
  /// Every term carries a positive power of a_i (is_b=false) or b_i.
  bool divisible_by_symbol(bool is_b, std::size_t i) const;
  /// Some rational c with *this == c * other.
  std::optional<Rational> scalar_ratio(const SparsePoly& other) const;

  std::string to_string() const;

  friend bool operator==(const SparsePoly& x, const SparsePoly& y) { return x.n_ == y.n_ && x.terms_ == y.terms_; }

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

/// True iff q = p * h for a polynomial h. Throws DomainError when p == 0.
bool poly_divides(const SparsePoly& p, const SparsePoly& q);

}  // namespace bci
