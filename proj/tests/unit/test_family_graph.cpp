#include "families.hpp"

#include <bci/family.hpp>
#include <bci/reduction_graph.hpp>
#include <bci/resultant.hpp>
#include <bci/serialize.hpp>
#include <bci/univariate.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

using namespace bci;
using namespace bci::testing;

TEST(Family, ParsesSymbolicText) {
  BinomialFamily f = parse_family(kCycle3);
  EXPECT_EQ(f.n(), 3u);
  EXPECT_TRUE(f.is_symbolic());
  EXPECT_EQ(f.tail(1).to_string(), "x1*x3");
  EXPECT_EQ(f.socle_degree(), 3u);
  EXPECT_EQ(f.resultant_degree(), 4u);
  EXPECT_EQ(f.generator(1).to_string(), "a1*x1^2 - b1*x1*x3");
}

TEST(Family, NewlinesAndLiteralCoefficients) {
  BinomialFamily f = parse_family("f2 = x2^2 - 3/2*x1*x2\nf1 = -2*x1^2 - b1*x1*x2\n");
  EXPECT_EQ(*f.coefficients().a[0], Rational(-2));
  EXPECT_EQ(*f.coefficients().a[1], Rational(1));
  EXPECT_EQ(*f.coefficients().b[1], Rational(3, 2));
  EXPECT_FALSE(f.coefficients().b[0].has_value());
  EXPECT_EQ(parse_family(to_text(f)), f);
}

TEST(Family, RejectsInvalidInput) {
  EXPECT_THROW(parse_family("f1 = a1*x1^2 - b1*x1^2"), ValidationError);
  EXPECT_THROW(parse_family("f1 = a1*x1^2 - b1*x1^3"), ValidationError);
  EXPECT_THROW(parse_family("f1 = a1*x1^2 - b1*x1*x2"), ValidationError);
  EXPECT_THROW(parse_family("f1 = a1*x1^2 - b1*x1*x2; f1 = a1*x1^2 - b1*x1*x2"), ValidationError);
  EXPECT_THROW(parse_family("f1 = 0*x1^2 - b1*x1*x2; f2 = x2 - x1"), ValidationError);
  EXPECT_THROW(parse_family("f1 = a1*x1^3"), ParseError);
  EXPECT_THROW(parse_family("f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x2*x3"), ValidationError);
  try {
    parse_family("f1 = a1*x1^2 ? b1*x1*x2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(Family, MonomialGeneratorWithZeroTail) {
  BinomialFamily f = parse_family("f1 = a1*x1^3 - 0*x1^2*x2 ; f2 = a2*x2 - b2*x1");
  EXPECT_EQ(*f.coefficients().b[0], Rational(0));
  EXPECT_EQ(f.generator(1).to_string(), "a1*x1^3");
}

TEST(Family, SpecializeAndAssignments) {
  BinomialFamily f = parse_family(kCycle3);
  EXPECT_EQ(specialize(f, CoeffAssignment::symbolic(3)), f);
  BinomialFamily g = specialize(f, parse_assignment("b2=0", 3));
  EXPECT_EQ(g.generator(2).to_string(), "a2*x2^2");
  EXPECT_THROW(specialize(f, parse_assignment("a1=0", 3)), ValidationError);
  BinomialFamily ring = specialize(parse_family("f1 = a1*x1^2 - b1*x2*x3; f2 = a2*x2^2 - b2*x3*x1; f3 = a3*x3^2 - b3*x1*x2"),
                                   parse_assignment("a=1", 3));
  EXPECT_EQ(ring.generator(1).to_string(), "x1^2 - b1*x2*x3");
}

TEST(Family, JsonRoundTripOverRandomFamilies) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    BinomialFamily f = random_family(rng);
    if (t % 3 == 1) f = specialize(f, random_assignment(rng, f.n()));
    if (t % 3 == 2) f = specialize(f, parse_assignment("a=1", f.n()));
    EXPECT_EQ(family_from_json(family_to_json(f)), f);
    EXPECT_EQ(parse_family(to_text(f)), f);
    EXPECT_EQ(parse_family_source(family_to_json(f)), f);
  }
  EXPECT_THROW(family_from_json("{\"n\": 1"), ParseError);
  EXPECT_THROW(family_from_json(R"({"n":2,"generators":[{"i":1,"d":2,"m":[1,1]}],"coefficients":{"mode":"symbolic"}})"),
               ValidationError);
}

TEST(Graph, CycleFamilyAtDegreeFour) {
  ReductionGraph g = build_graph(parse_family(kCycle3), 4);
  EXPECT_EQ(g.size(), 15u);
  ASSERT_EQ(g.cycles().size(), 2u);
  for (const Cycle& c : g.cycles()) EXPECT_EQ(c.label_counts, (std::vector<std::int64_t>{0, 1, 1}));
  EXPECT_EQ(graph_cycle_polynomial(g), sym("a2*a3 - b2*b3", 3).pow(2));
  auto rad = radical_of_cycle_product(g);
  ASSERT_EQ(rad.size(), 1u);
  EXPECT_EQ(rad[0].poly, sym("a2*a3 - b2*b3", 3));
}

TEST(Graph, ChainFamilyAtDegreeThree) {
  ReductionGraph g = build_graph(parse_family(kChain3), 3);
  EXPECT_EQ(g.size(), 10u);
  EXPECT_EQ(g.edge_count(), 9u);
  ASSERT_EQ(g.sinks().size(), 1u);
  EXPECT_EQ(g.vertex(g.sinks()[0]).to_string(), "x1*x2*x3");
  EXPECT_TRUE(g.cycles().empty());
  EXPECT_EQ(graph_cycle_polynomial(g), SparsePoly::constant(3, Rational(1)));
  EXPECT_TRUE(radical_of_cycle_product(g).empty());
}

TEST(Graph, PairFamilyAtDegreeThree) {
  ReductionGraph g = build_graph(parse_family(kPair2), 3);
  ASSERT_EQ(g.cycles().size(), 1u);
  const Cycle& c = g.cycles()[0];
  EXPECT_EQ(c.label_counts, (std::vector<std::int64_t>{1, 1}));
  std::set<std::string> vs;
  for (const auto& m : c.vertices) vs.insert(m.to_string());
  EXPECT_EQ(vs, (std::set<std::string>{"x1^2*x2", "x1*x2^2"}));
}

TEST(Graph, DotMarksCyclesAndSinks) {
  std::string dot = to_dot(build_graph(parse_family(kCycle3), 4));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("color=red"), std::string::npos);
  EXPECT_EQ(dot.find("shape=box]"), std::string::npos);  // no sinks at this degree
  std::string dot3 = to_dot(build_graph(parse_family(kChain3), 3));
  EXPECT_NE(dot3.find("\"x1*x2*x3\" [shape=box]"), std::string::npos);
}

TEST(Graph, CycleRadicalDeduplicatesCyclotomicFactors) {
  // r = (1,1) gives a1a2 - b1b2; r = (2,2) adds only a1a2 + b1b2.
  auto fs = radical_of_exponents({{1, 1}, {2, 2}});
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].poly, sym("a1*a2 - b1*b2", 2));
  EXPECT_EQ(fs[1].poly, sym("a1*a2 + b1*b2", 2));
  EXPECT_EQ(fs[1].order, 2u);
  EXPECT_TRUE(radical_of_exponents({{0, 0}}).empty());
  // r = (3,6): primitive (1,2) with orders 1 and 3.
  auto gs = radical_of_exponents({{3, 6}});
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0].poly * gs[1].poly, sym("a1^3*a2^6 - b1^3*b2^6", 2));
}

namespace {

// Brute-force oracle: follow successors from every vertex, a vertex is cyclic
// iff it returns to itself within size() steps.
bool brute_force_cyclic(const ReductionGraph& g, std::size_t v) {
  std::size_t w = v;
  for (std::size_t s = 0; s < g.size(); ++s) {
    w = g.successor(w);
    if (w == ReductionGraph::npos) return false;
    if (w == v) return true;
  }
  return false;
}

}  // namespace

TEST(Graph, PropertiesOnRandomFamilies) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    BinomialFamily fam = random_family(rng);
    for (unsigned long d = 1; d <= fam.resultant_degree(); ++d) {
      ReductionGraph g(fam, d);
      EXPECT_EQ(g.size(), monomials_of_degree(fam.n(), d).size());
      std::size_t label_total = 0;
      for (const Cycle& c : g.cycles())
        for (auto r : c.label_counts) label_total += r;
      std::size_t cyclic = 0;
      for (std::size_t v = 0; v < g.size(); ++v) {
        bool sink = g.successor(v) == ReductionGraph::npos;
        EXPECT_EQ(sink, fam.in_basis_set(g.vertex(v)));
        EXPECT_EQ(sink, g.vertex_class(v) == VertexClass::Sink);
        EXPECT_EQ(brute_force_cyclic(g, v), g.vertex_class(v) == VertexClass::Cyclic);
        if (g.vertex_class(v) == VertexClass::Cyclic) ++cyclic;
        if (!sink) {
          // The edge label is the least i with x_i^{d_i} | m.
          std::size_t i = g.label(v);
          EXPECT_TRUE(fam.leading_monomial(i).divides(g.vertex(v)));
          for (std::size_t j = 1; j < i; ++j) EXPECT_FALSE(fam.leading_monomial(j).divides(g.vertex(v)));
        }
      }
      // Every cycle edge is counted once in the label totals.
      EXPECT_EQ(label_total, cyclic);
      if (d == fam.resultant_degree()) EXPECT_TRUE(g.sinks().empty());
    }
  }
}

TEST(Graph, RejectsDegreeZero) { EXPECT_THROW(build_graph(parse_family(kCycle3), 0), DomainError); }
