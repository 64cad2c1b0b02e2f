#include "families.hpp"

#include <bci/arith.hpp>
#include <bci/coeff_monomial.hpp>
#include <bci/linalg.hpp>
#include <bci/monomial.hpp>
#include <bci/sparse_poly.hpp>
#include <bci/univariate.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace bci;
using bci::testing::sym;

TEST(Arith, ParseRational) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Arith, MultinomialMatchesFactorialRatio) {
  std::vector<Integer> alpha{Integer(1), Integer(1), Integer(1)};
  EXPECT_EQ(multinomial(Integer(3), alpha), 6);
  std::vector<Integer> beta{Integer(2), Integer(0), Integer(1)};
  EXPECT_EQ(multinomial(Integer(3), beta), 3);
  EXPECT_THROW(multinomial(Integer(4), beta), DomainError);
  // Pascal's rule as an independent check of binomial().
  for (unsigned long n = 1; n < 20; ++n)
    for (unsigned long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Arith, BigExponentsStayExact) {
  Monomial m = Monomial::power(2, 1, Integer("100000000000000000000"));
  EXPECT_EQ(m.degree(), Integer("100000000000000000000"));
  EXPECT_EQ(m.to_string(), "x1^100000000000000000000");
}

TEST(Monomial, CanonicalOrderAndPrinting) {
  auto ms = monomials_of_degree(3, 2);
  ASSERT_EQ(ms.size(), 6u);
  EXPECT_EQ(ms.front().to_string(), "x1^2");
  EXPECT_EQ(ms[1].to_string(), "x1*x2");
  EXPECT_EQ(ms.back().to_string(), "x3^2");
  EXPECT_EQ(Monomial(3).to_string(), "1");
  EXPECT_EQ(Monomial::from_ints({2, 0, 1}).to_string(), "x1^2*x3");
  EXPECT_THROW(Monomial::from_ints({1, 0}) / Monomial::from_ints({0, 1}), DomainError);
}

TEST(Monomial, CountsMatchStarsAndBars) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (unsigned long d = 0; d <= 6; ++d) EXPECT_EQ(monomials_of_degree(n, d).size(), binomial(d + n - 1, n - 1).get_ui());
}

TEST(Monomial, BoundedMonomialsAreTheBox) {
  std::vector<unsigned long> deg{2, 3, 2};
  std::size_t total = 0;
  for (unsigned long d = 0; d <= 5; ++d) {
    for (const auto& m : bounded_monomials_of_degree(deg, d)) {
      EXPECT_LT(m.exp(1), 2);
      EXPECT_LT(m.exp(2), 3);
      EXPECT_LT(m.exp(3), 2);
    }
    total += bounded_monomials_of_degree(deg, d).size();
  }
  EXPECT_EQ(total, 12u);
}

TEST(CoeffMonomial, PrintingAndArithmetic) {
  auto r = CoeffMonomial::path_ratio({2, 1, 0});
  EXPECT_EQ(r.to_string(), "b1^2*b2/(a1^2*a2)");
  EXPECT_EQ(CoeffMonomial::path_ratio({0, 0, 1}).to_string(), "b3/a3");
  EXPECT_EQ((r * r.inverse()).to_string(), "1");
  EXPECT_EQ(CoeffMonomial::constant(3, Rational(0)).to_string(), "0");
  EXPECT_FALSE(r.is_polynomial());
  CoeffAssignment c = CoeffAssignment::symbolic(3);
  c.b[0] = Rational(0);
  EXPECT_TRUE(r.substitute(c).is_zero());
}

TEST(SparsePoly, CanonicalPrinting) {
  SparsePoly p = SparsePoly::binomial_difference({0, 1, 1});
  EXPECT_EQ(p.to_string(), "a2*a3 - b2*b3");
  EXPECT_EQ((p * p).to_string(), "a2^2*a3^2 - 2*a2*a3*b2*b3 + b2^2*b3^2");
  EXPECT_EQ(SparsePoly(3).to_string(), "0");
  EXPECT_EQ((SparsePoly::constant(3, Rational(1)) - SparsePoly::b(3, 1)).to_string(), "-b1 + 1");
}

TEST(SparsePoly, ExactDivision) {
  SparsePoly p = sym("a1*a2 - b1*b2", 2);
  SparsePoly q = sym("a1^2*a2^2 - b1^2*b2^2", 2);
  auto h = p.divide_exact_into(q);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, sym("a1*a2 + b1*b2", 2));
  EXPECT_FALSE(sym("a1 + b1", 2).divide_exact_into(sym("a1 + b2", 2)).has_value());
  EXPECT_TRUE(poly_divides(p, q));
  EXPECT_THROW(poly_divides(SparsePoly(2), q), DomainError);
}

TEST(SparsePoly, DivisionRoundTripOnRandomProducts) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
  for (int t = 0; t < 40; ++t) {
    SparsePoly x(2), y(2);
    for (int k = 0; k < 3; ++k) {
      SparsePoly::Exponent ex{e(rng), e(rng), e(rng), e(rng)}, ey{e(rng), e(rng), e(rng), e(rng)};
      x.add_term(ex, Rational(c(rng)));
      y.add_term(ey, Rational(c(rng)));
    }
    if (x.is_zero() || y.is_zero()) continue;
    auto q = x.divide_exact_into(x * y);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, y);
  }
}

TEST(Univariate, CyclotomicProductIsXnMinusOne) {
  for (unsigned long e = 1; e <= 30; ++e) {
    IntPoly prod(std::vector<Integer>{Integer(1)});
    for (unsigned long d : divisors(e)) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, IntPoly::x_pow_minus_one(e)) << e;
  }
  EXPECT_EQ(cyclotomic(1).to_string(), "x - 1");
  EXPECT_EQ(cyclotomic(6).to_string(), "x^2 - x + 1");
  // Known degrees are Euler's totient.
  auto phi = [](unsigned long e) {
    unsigned long c = 0;
    for (unsigned long k = 1; k <= e; ++k) c += std::gcd(k, e) == 1;
    return c;
  };
  for (unsigned long e = 1; e <= 40; ++e) EXPECT_EQ(cyclotomic(e).degree(), static_cast<long>(phi(e)));
}

TEST(Univariate, HomogenizedCyclotomic) {
  SparsePoly A = SparsePoly::a(2, 1) * SparsePoly::a(2, 2), B = SparsePoly::b(2, 1) * SparsePoly::b(2, 2);
  EXPECT_EQ(homogenized_cyclotomic(1, A, B), A - B);
  EXPECT_EQ(homogenized_cyclotomic(2, A, B), A + B);
  SparsePoly prod = SparsePoly::constant(2, Rational(1));
  for (unsigned long d : divisors(6)) prod *= homogenized_cyclotomic(d, A, B);
  EXPECT_EQ(prod, A.pow(6) - B.pow(6));
}

namespace {

// Leibniz expansion; the independent oracle for small determinants.
Rational leibniz(const RationalMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational sum(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    sum += inversions % 2 ? Rational(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

TEST(Linalg, BareissMatchesLeibniz) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> v(-4, 4), den(1, 3), size(1, 6), zero(0, 3);
  for (int t = 0; t < 60; ++t) {
    std::size_t N = size(rng);
    RationalMatrix m(N, N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Rational x(v(rng), den(rng));
        x.canonicalize();
        m(i, j) = zero(rng) == 0 ? Rational(0) : x;
      }
    EXPECT_EQ(determinant(m), leibniz(m));
    EXPECT_EQ(rank(m) == N, leibniz(m) != 0);
  }
}

TEST(Linalg, RankOfKnownMatrices) {
  RationalMatrix m(3, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  m(2, 0) = 1, m(2, 1) = 0, m(2, 2) = 1;
  EXPECT_EQ(rank(m), 2u);
  RowEchelon e;
  EXPECT_TRUE(e.add({{0, Rational(1)}, {2, Rational(1)}}));
  EXPECT_FALSE(e.add({{0, Rational(3)}, {2, Rational(3)}}));
  EXPECT_TRUE(e.in_span({{0, Rational(-1, 2)}, {2, Rational(-1, 2)}}));
  EXPECT_FALSE(e.in_span({{1, Rational(1)}}));
}
