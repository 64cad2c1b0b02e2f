#pragma once

#include "bci/arith.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bci {

/// Per-symbol values for a_1..a_n, b_1..b_n; nullopt keeps a symbol free.
struct CoeffAssignment {
  std::vector<std::optional<Rational>> a;
  std::vector<std::optional<Rational>> b;

  static CoeffAssignment symbolic(std::size_t n);
  static CoeffAssignment numeric(std::vector<Rational> a, std::vector<Rational> b);

  std::size_t size() const { return a.size(); }
  bool fully_numeric() const;
  bool fully_symbolic() const;

  friend bool operator==(const CoeffAssignment&, const CoeffAssignment&) = default;
};

/// scalar * prod a_i^{aExp_i} * prod b_i^{bExp_i}, exponents may be negative.
class CoeffMonomial {
 public:
  CoeffMonomial() = default;
  /// The constant 1 over n symbol pairs.
  explicit CoeffMonomial(std::size_t n);
  CoeffMonomial(Rational scalar, std::vector<std::int64_t> a_exp, std::vector<std::int64_t> b_exp);

  static CoeffMonomial constant(std::size_t n, const Rational& c);
  /// a_i (1-based).
  static CoeffMonomial a(std::size_t n, std::size_t i, std::int64_t e = 1);
  static CoeffMonomial b(std::size_t n, std::size_t i, std::int64_t e = 1);
  /// prod b_i^{r_i} / prod a_i^{r_i}.
  static CoeffMonomial path_ratio(const std::vector<std::int64_t>& r);

  std::size_t num_pairs() const { return a_exp_.size(); }
  const Rational& scalar() const { return scalar_; }
  const std::vector<std::int64_t>& a_exp() const { return a_exp_; }
  const std::vector<std::int64_t>& b_exp() const { return b_exp_; }

  bool is_zero() const { return scalar_ == 0; }
  /// True when no exponent is negative.
  bool is_polynomial() const;

  CoeffMonomial operator*(const CoeffMonomial& rhs) const;
  CoeffMonomial operator/(const CoeffMonomial& rhs) const;
  CoeffMonomial operator-() const;
  CoeffMonomial inverse() const;

  /// Substitutes the assigned symbols; free symbols keep their exponents.
  CoeffMonomial substitute(const CoeffAssignment& assign) const;
  /// Full evaluation; throws DomainError when a symbol is unassigned.
  Rational evaluate(const CoeffAssignment& assign) const;

  /// "b1^2*b2/(a1^2*a2)", "3*a1", "-1", "0".
  std::string to_string() const;

  friend bool operator==(const CoeffMonomial&, const CoeffMonomial&) = default;

 private:
  void canonicalize();

  Rational scalar_{0};
  std::vector<std::int64_t> a_exp_;
  std::vector<std::int64_t> b_exp_;
};

}  // namespace bci
