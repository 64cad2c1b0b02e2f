#include "families.hpp"

#include <bci/dual.hpp>
#include <bci/oracle.hpp>
#include <bci/reduction_graph.hpp>
#include <bci/rewrite.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bci;
using namespace bci::testing;

TEST(Rewrite, ChainPathToBasis) {
  BinomialFamily fam = parse_family(kChain3);
  ReductionOutcome r = reduce_monomial(fam, Monomial::from_ints({2, 1, 0}));
  ASSERT_EQ(r.kind, OutcomeKind::ToBasis);
  EXPECT_EQ(r.endpoint().to_string(), "x1*x2*x3");
  EXPECT_EQ(r.labels, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(r.coeff.to_string(), "b1^2*b2/(a1^2*a2)");
  ASSERT_EQ(r.path.size(), 4u);
  EXPECT_EQ(r.path[1].to_string(), "x1*x2^2");
  EXPECT_EQ(r.path[2].to_string(), "x1^2*x3");

  Certificate cert = certificate(fam, Monomial::from_ints({2, 1, 0}));
  EXPECT_EQ(cert.steps.size(), 3u);
  EXPECT_TRUE(certificate_residual(fam, cert).is_zero());
  EXPECT_EQ(cert.a_product.to_string(), "a1^2*a2");
  EXPECT_EQ(cert.rhs_coeff.to_string(), "b1^2*b2");
}

TEST(Rewrite, TamperedCertificateFails) {
  BinomialFamily fam = parse_family(kChain3);
  Certificate cert = certificate(fam, Monomial::from_ints({2, 1, 0}));
  cert.steps[1].scalar = cert.steps[1].scalar * CoeffMonomial::constant(3, Rational(2));
  EXPECT_FALSE(verify_certificate(fam, cert));
}

TEST(Rewrite, CycleMonomialIsConditionalZero) {
  BinomialFamily fam = specialize(parse_family(kCycle3), CoeffAssignment::numeric({1, 1, 1}, {1, 1, 2}));
  Monomial m = Monomial::from_ints({0, 2, 2});
  ReductionOutcome r = reduce_monomial(fam, m);
  EXPECT_EQ(r.kind, OutcomeKind::ToCycle);
  EXPECT_TRUE(r.conditional_zero());
  EXPECT_TRUE(r.coeff.is_zero());
  EXPECT_EQ(r.cycle_label_counts, (std::vector<std::int64_t>{0, 1, 1}));
  EXPECT_TRUE(is_complete_intersection(fam));
  EXPECT_TRUE(ideal_membership(fam, m));
  QPoly p(3);
  p.add_term(m, Rational(5));
  ReducedPolynomial red = reduce_polynomial(fam, p);
  EXPECT_TRUE(red.value.is_zero());
  EXPECT_TRUE(red.used_conditional_zero());
  // On the cycle the certificate reads p(C) m = sum h_i f_i.
  BinomialFamily sym3 = parse_family(kCycle3);
  Certificate cert = certificate(sym3, m);
  EXPECT_TRUE(cert.ends_in_cycle);
  EXPECT_TRUE(verify_certificate(sym3, cert));
}

TEST(Rewrite, PartialReductionStopsInPartialBox) {
  BinomialFamily fam = parse_family(kChain3);
  for (const Monomial& m : monomials_of_degree(3, 4)) {
    ReductionOutcome r = reduce_monomial(fam, m, 1);
    if (r.kind == OutcomeKind::ToBasis) EXPECT_TRUE(fam.in_basis_set(r.endpoint(), 1));
    for (auto l : r.labels) EXPECT_EQ(l, 1u);
  }
}

TEST(Rewrite, AgreesWithGraphAndVerifiesCertificates) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    BinomialFamily fam = random_family(rng, 3, 3);
    for (unsigned long d = 1; d <= fam.resultant_degree(); ++d) {
      ReductionGraph g(fam, d);
      std::size_t bound = binomial(d + fam.n() - 1, fam.n() - 1).get_ui();
      for (std::size_t v = 0; v < g.size(); ++v) {
        ReductionOutcome r = reduce_monomial(fam, g.vertex(v));
        // Graph oracle: iterate successors until a sink or a repeat.
        std::size_t w = v, steps = 0;
        while (g.successor(w) != ReductionGraph::npos && steps <= g.size()) {
          w = g.successor(w);
          ++steps;
        }
        bool reaches_sink = g.successor(w) == ReductionGraph::npos;
        EXPECT_EQ(r.kind == OutcomeKind::ToBasis, reaches_sink);
        EXPECT_LE(r.labels.size(), bound);
        Certificate cert = certificate(fam, g.vertex(v));
        EXPECT_TRUE(verify_certificate(fam, cert)) << to_text(cert);
      }
    }
  }
}

TEST(Rewrite, NormalFormsAgreeWithOracleAtCiPoints) {
  std::mt19937_64 rng(37);
  auto corpus = random_ci_corpus(rng, 8, 3, 3);
  for (const BinomialFamily& fam : corpus) {
    MembershipOracle oracle(numeric_generators(fam));
    for (unsigned long d = 0; d <= fam.socle_degree() + 1; ++d) {
      for (const Monomial& m : monomials_of_degree(fam.n(), d)) {
        QPoly p(fam.n());
        p.add_term(m, Rational(1));
        ReducedPolynomial red = reduce_polynomial(fam, p);
        EXPECT_TRUE(oracle.contains(p - red.value)) << m.to_string();
      }
    }
  }
}

TEST(Rewrite, ReductionIsMultiplicativeAtCiPoints) {
  std::mt19937_64 rng(41);
  auto corpus = random_ci_corpus(rng, 6, 3, 2);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const BinomialFamily& fam : corpus) {
    for (int t = 0; t < 5; ++t) {
      QPoly p(fam.n()), q(fam.n());
      for (unsigned long d = 0; d <= 2; ++d)
        for (const Monomial& m : monomials_of_degree(fam.n(), d)) {
          p.add_term(m, Rational(c(rng)));
          q.add_term(m, Rational(c(rng)));
        }
      QPoly lhs = reduce_polynomial(fam, p * q).value;
      QPoly rhs = reduce_polynomial(fam, reduce_polynomial(fam, p).value * reduce_polynomial(fam, q).value).value;
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Dual, ActionRules) {
  auto r = act(Monomial::from_ints({1, 0}), Monomial::from_ints({2, 1}), Convention::Contraction);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first.to_string(), "x1*x2");
  EXPECT_EQ(r->second, 1);
  auto s = act(Monomial::from_ints({2}), Monomial::from_ints({3}), Convention::Differentiation);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first.to_string(), "x1");
  EXPECT_EQ(s->second, 6);
  EXPECT_FALSE(act(Monomial::from_ints({2, 0}), Monomial::from_ints({1, 3}), Convention::Contraction));
  EXPECT_EQ(parse_convention("differentiation"), Convention::Differentiation);
  EXPECT_THROW(parse_convention("integration"), DomainError);
}

TEST(Dual, CycleFamilyBothConventions) {
  BinomialFamily fam = parse_family(kCycle3);
  EXPECT_EQ(s_vector(fam), (std::vector<std::int64_t>{2, 1, 1}));
  DualGenerator C = dual_generator(fam, Convention::Contraction);
  EXPECT_EQ(C.as_poly(), parse_dual_poly("b1^2*a2*b3*X1^3 + a1*b1*a2*b3*X1^2*X3 + a1*b1*a2*a3*X1^2*X2 + "
                                         "a1^2*a2*b3*X1*X3^2 + a1^2*b2*a3*X1*X2^2 + a1^2*a2*a3*X1*X2*X3",
                                         3));
  DualGenerator D = dual_generator(fam, Convention::Differentiation);
  EXPECT_EQ(D.as_poly(), parse_dual_poly("b1^2*a2*b3*X1^3 + 3*a1*b1*a2*b3*X1^2*X3 + 3*a1*b1*a2*a3*X1^2*X2 + "
                                         "3*a1^2*a2*b3*X1*X3^2 + 3*a1^2*b2*a3*X1*X2^2 + 6*a1^2*a2*a3*X1*X2*X3",
                                         3));
  EXPECT_TRUE(verify_annihilation(fam, C).annihilated);
  EXPECT_TRUE(verify_annihilation(fam, D).annihilated);
  // Mixing conventions breaks annihilation.
  EXPECT_FALSE(verify_annihilation(fam, C.as_poly(), Convention::Differentiation).annihilated);
}

TEST(Dual, IncompleteFormLeavesResidual) {
  BinomialFamily fam = parse_family(kCycle3);
  auto rep = verify_annihilation(fam, parse_dual_poly("X1*X2*X3", 3), Convention::Contraction);
  EXPECT_FALSE(rep.annihilated);
  bool some_nonzero = false;
  for (const auto& r : rep.residuals) some_nonzero = some_nonzero || !r.is_zero();
  EXPECT_TRUE(some_nonzero);
}

TEST(Dual, PairFamilySVector) { EXPECT_EQ(s_vector(parse_family(kPair2)), (std::vector<std::int64_t>{1, 1})); }

TEST(Dual, ZeroTailsCollapseToOneTerm) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    BinomialFamily fam = random_family(rng);
    BinomialFamily zero = specialize(fam, parse_assignment("b=0", fam.n()));
    DualGenerator F = dual_generator(zero);
    ASSERT_EQ(F.terms.size(), 1u);
    std::vector<long> target;
    for (auto d : fam.degrees()) target.push_back(static_cast<long>(d) - 1);
    EXPECT_EQ(F.terms.begin()->first, Monomial::from_ints(target));
  }
}

TEST(Dual, PropertiesOnRandomFamilies) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 25; ++t) {
    BinomialFamily fam = random_family(rng, 4, 3);
    DualGenerator C = dual_generator(fam, Convention::Contraction);
    DualGenerator D = dual_generator(fam, Convention::Differentiation);
    EXPECT_TRUE(verify_annihilation(fam, C).annihilated) << to_text(fam);
    EXPECT_TRUE(verify_annihilation(fam, D).annihilated) << to_text(fam);
    ASSERT_EQ(C.terms.size(), D.terms.size());
    for (const auto& [alpha, c] : C.terms) {
      auto it = D.terms.find(alpha);
      ASSERT_NE(it, D.terms.end());
      Integer mult = multinomial(Integer(fam.socle_degree()), alpha.exponents());
      EXPECT_EQ(it->second, c * CoeffMonomial::constant(fam.n(), Rational(mult)));
    }
    // The target coefficient is the pure a-monomial a^s.
    std::vector<long> target;
    for (auto d : fam.degrees()) target.push_back(static_cast<long>(d) - 1);
    auto tc = C.terms.find(Monomial::from_ints(target));
    ASSERT_NE(tc, C.terms.end());
    EXPECT_EQ(tc->second, CoeffMonomial(Rational(1), C.s, std::vector<std::int64_t>(fam.n(), 0)));
    // Support is exactly the set of monomials with a path to the target.
    if (fam.socle_degree() == 0) continue;
    ReductionGraph g(fam, fam.socle_degree());
    for (std::size_t v = 0; v < g.size(); ++v) {
      ReductionOutcome r = reduce_monomial(fam, g.vertex(v));
      bool to_target = r.kind == OutcomeKind::ToBasis && r.endpoint() == Monomial::from_ints(target);
      EXPECT_EQ(C.terms.count(g.vertex(v)) == 1, to_target);
    }
  }
}

TEST(Dual, PrintedFiveVariableFormUsesDifferentiation) {
  BinomialFamily fam = parse_family(kRing5);
  SymPoly printed = parse_dual_poly(kRing5Dual, 5);
  EXPECT_TRUE(verify_annihilation(fam, printed, Convention::Differentiation).annihilated);
  EXPECT_FALSE(verify_annihilation(fam, printed, Convention::Contraction).annihilated);
  // Our normalization puts 5! a^s on X1...X5; the printed form is that divided by 10.
  SymPoly ours = dual_generator(fam, Convention::Differentiation).as_poly();
  SymPoly scaled(5);
  for (const auto& [m, c] : printed.terms()) scaled.add_term(m, c * Rational(10));
  EXPECT_EQ(ours, scaled);
}
