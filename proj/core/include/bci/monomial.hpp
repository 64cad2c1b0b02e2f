#pragma once

#include "bci/arith.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bci {

/// x_1^{e_1} ... x_n^{e_n} with arbitrary-precision exponents.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial in n variables.
  explicit Monomial(std::size_t n) : exps_(n, Integer(0)) {}
  explicit Monomial(std::vector<Integer> exps);
  static Monomial from_ints(const std::vector<long>& exps);
  /// x_i^e with a 1-based variable index.
  static Monomial power(std::size_t n, std::size_t i, const Integer& e);

  std::size_t num_vars() const { return exps_.size(); }
  const std::vector<Integer>& exponents() const { return exps_; }
  /// 1-based access.
  const Integer& exp(std::size_t i) const { return exps_.at(i - 1); }
  Integer degree() const;

  bool divides(const Monomial& other) const;
  /// True iff the monomial is x_i^e for some i and e >= 1.
  bool is_pure_power() const;
  std::optional<std::size_t> pure_power_variable() const;

  Monomial operator*(const Monomial& rhs) const;
  /// Exact quotient; throws DomainError when rhs does not divide *this.
  Monomial operator/(const Monomial& rhs) const;

  /// "x1^2*x3"; the unit monomial renders as "1".
  std::string to_string(char var = 'x') const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic comparison of exponent vectors (x_1 most significant).
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::vector<Integer> exps_;
};

/// All monomials of degree d in n variables, graded-lex descending with
/// x_1 > ... > x_n (x_1^d first, x_n^d last).
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned long d);

/// Monomials of degree d with exponent i strictly below degrees[i] for all i.
std::vector<Monomial> bounded_monomials_of_degree(const std::vector<unsigned long>& degrees, unsigned long d);

/// Maps the monomials of one degree to their position in canonical order.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const Monomial& at(std::size_t i) const { return monomials_.at(i); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::optional<std::size_t> find(const Monomial& m) const;
  std::size_t index_of(const Monomial& m) const;

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace bci
