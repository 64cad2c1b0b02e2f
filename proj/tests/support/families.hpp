#pragma once

// Families and random generators shared by the unit and acceptance tests.

#include <bci/dual.hpp>
#include <bci/family.hpp>
#include <bci/oracle.hpp>

#include <random>
#include <string>
#include <vector>

namespace bci::testing {

inline const char* kCycle3 = "f1 = a1*x1^2 - b1*x1*x3 ; f2 = a2*x2^2 - b2*x2*x3 ; f3 = a3*x3^2 - b3*x2*x3";
inline const char* kChain3 = "f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x3 ; f3 = a3*x3^2 - b3*x1^2";
inline const char* kPair2 = "f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x2";
inline const char* kRing5 =
    "f1 = x1^2 - b1*x2*x3; f2 = x2^2 - b2*x3*x4; f3 = x3^2 - b3*x4*x5; f4 = x4^2 - b4*x1*x5; f5 = x5^2 - b5*x1*x2";
inline const char* kTwisted5 =
    "f1 = x1^2 - b1*x2*x5; f2 = x2^2 - b2*x1*x3; f3 = x3^2 - b3*x2*x4; f4 = x4^2 - b4*x3*x5; f5 = x5^2 - b5*x1*x4";
/// Dual generator of the five-variable ring as printed in the literature (differentiation convention).
inline const char* kRing5Dual =
    "b1*b3*X1^3*X3^2 + 2*b3*X1*X2*X3^3 + b2*b4*X2^3*X4^2 + b1*b4*X1^2*X4^3 + 2*b4*X2*X3*X4^3"
    " + 2*b2*X1*X2^3*X5 + 2*b1*X1^3*X4*X5 + 12*X1*X2*X3*X4*X5 + b3*b5*X3^3*X5^2 + b2*b5*X2^2*X5^3 + 2*b5*X3*X4*X5^3";
/// A Gorenstein form with h = (1,5,10,10,5,1) that is not a complete intersection.
inline const char* kWlpFailure = "X1*X3^3*X4 + X2*X3*X4^3 + X2^2*X5^3";

/// Polynomial in the coefficient symbols, e.g. "a2*a3 - b2*b3".
inline SparsePoly sym(const std::string& text, std::size_t n) {
  SymPoly p = parse_dual_poly(text, n);
  if (p.is_zero()) return SparsePoly(n);
  return p.terms().begin()->second;
}

inline QPoly xpoly(const std::string& text, std::size_t n) { return parse_x_poly(text, n); }

inline QPoly numeric_dual(const std::string& text, std::size_t n) { return parse_numeric_dual_poly(text, n); }

/// Nonzero rational with small numerator and denominator.
inline Rational random_nonzero(std::mt19937_64& rng, long num = 9, long den = 5) {
  std::uniform_int_distribution<long> p(1, num), q(1, den), s(0, 1);
  Rational r(p(rng), q(rng));
  r.canonicalize();
  return s(rng) ? Rational(-r) : r;
}

inline CoeffAssignment random_assignment(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> a, b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(random_nonzero(rng));
    b.push_back(random_nonzero(rng));
  }
  return CoeffAssignment::numeric(a, b);
}

inline CoeffAssignment b_only(const std::vector<Rational>& b) {
  CoeffAssignment c = CoeffAssignment::symbolic(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c.b[i] = b[i];
  return c;
}

/// Symbolic family with n in [2, max_n], d_i in [1, max_d] and uniformly random tails.
inline BinomialFamily random_family(std::mt19937_64& rng, std::size_t max_n = 4, unsigned long max_d = 3) {
  std::uniform_int_distribution<std::size_t> pick_n(2, max_n);
  std::uniform_int_distribution<unsigned long> pick_d(1, max_d);
  std::size_t n = pick_n(rng);
  std::vector<unsigned long> degrees;
  std::vector<Monomial> tails;
  for (std::size_t i = 1; i <= n; ++i) {
    unsigned long d = pick_d(rng);
    auto candidates = monomials_of_degree(n, d);
    std::erase(candidates, Monomial::power(n, i, Integer(d)));
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    degrees.push_back(d);
    tails.push_back(candidates[pick(rng)]);
  }
  return BinomialFamily::symbolic(degrees, tails);
}

/// Random numeric families certified CI by the oracle.
inline std::vector<BinomialFamily> random_ci_corpus(std::mt19937_64& rng, std::size_t count, std::size_t max_n = 4,
                                                    unsigned long max_d = 3) {
  std::vector<BinomialFamily> out;
  while (out.size() < count) {
    BinomialFamily fam = random_family(rng, max_n, max_d);
    BinomialFamily num = specialize(fam, random_assignment(rng, fam.n()));
    if (is_complete_intersection(num)) out.push_back(num);
  }
  return out;
}

}  // namespace bci::testing
