#include "selftest.hpp"

#include <bci/dual.hpp>
#include <bci/family.hpp>
#include <bci/lefschetz.hpp>
#include <bci/oracle.hpp>
#include <bci/reduction_graph.hpp>
#include <bci/resultant.hpp>
#include <bci/rewrite.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace bci::cli {

namespace {

const char* kCycle3 = "f1 = a1*x1^2 - b1*x1*x3 ; f2 = a2*x2^2 - b2*x2*x3 ; f3 = a3*x3^2 - b3*x2*x3";
const char* kChain3 = "f1 = a1*x1^2 - b1*x1*x2 ; f2 = a2*x2^2 - b2*x1*x3 ; f3 = a3*x3^2 - b3*x1^2";
const char* kRing5 = "f1 = x1^2 - b1*x2*x3; f2 = x2^2 - b2*x3*x4; f3 = x3^2 - b3*x4*x5; f4 = x4^2 - b4*x1*x5; f5 = x5^2 - b5*x1*x2";
const char* kTwisted5 = "f1 = x1^2 - b1*x2*x5; f2 = x2^2 - b2*x1*x3; f3 = x3^2 - b3*x2*x4; f4 = x4^2 - b4*x3*x5; f5 = x5^2 - b5*x1*x4";
const char* kRing5Dual =
    "b1*b3*X1^3*X3^2 + 2*b3*X1*X2*X3^3 + b2*b4*X2^3*X4^2 + b1*b4*X1^2*X4^3 + 2*b4*X2*X3*X4^3"
    " + 2*b2*X1*X2^3*X5 + 2*b1*X1^3*X4*X5 + 12*X1*X2*X3*X4*X5 + b3*b5*X3^3*X5^2 + b2*b5*X2^2*X5^3 + 2*b5*X3*X4*X5^3";
const char* kWlpDual = "X1*X3^3*X4 + X2*X3*X4^3 + X2^2*X5^3";

SparsePoly sym(const std::string& text, std::size_t n) {
  // Coefficient polynomials are written as X-free dual polynomials.
  SymPoly p = parse_dual_poly(text, n);
  return p.terms().begin()->second;
}

std::vector<Rational> random_b(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(2, 50);
  return {Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
}

CoeffAssignment b_only(const std::vector<Rational>& b) {
  CoeffAssignment c = CoeffAssignment::symbolic(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c.b[i] = b[i];
  return c;
}

std::vector<std::pair<std::string, std::function<bool()>>> checks() {
  return {
      {"parse and print round trip",
       [] {
         auto f = parse_family(kCycle3);
         return parse_family(to_text(f)) == f;
       }},
      {"cycle polynomial of the three-variable cycle family",
       [] {
         auto g = build_graph(parse_family(kCycle3), 4);
         return g.size() == 15 && g.cycles().size() == 2 &&
                graph_cycle_polynomial(g) == sym("a2*a3 - b2*b3", 3).pow(2) &&
                radical_of_cycle_product(g).size() == 1 && radical_of_cycle_product(g)[0].poly == sym("a2*a3 - b2*b3", 3);
       }},
      {"chain reduction of x1^2*x2",
       [] {
         auto fam = parse_family(kChain3);
         auto r = reduce_monomial(fam, Monomial::from_ints({2, 1, 0}));
         auto cert = certificate(fam, Monomial::from_ints({2, 1, 0}));
         return r.kind == OutcomeKind::ToBasis && r.endpoint().to_string() == "x1*x2*x3" &&
                r.coeff.to_string() == "b1^2*b2/(a1^2*a2)" && cert.steps.size() == 3 && verify_certificate(fam, cert);
       }},
      {"s vector of the cycle family", [] { return s_vector(parse_family(kCycle3)) == std::vector<std::int64_t>{2, 1, 1}; }},
      {"dual generator under contraction",
       [] {
         auto fam = parse_family(kCycle3);
         auto F = dual_generator(fam, Convention::Contraction);
         auto expected = parse_dual_poly(
             "b1^2*a2*b3*X1^3 + a1*b1*a2*b3*X1^2*X3 + a1*b1*a2*a3*X1^2*X2 + a1^2*a2*b3*X1*X3^2 + a1^2*b2*a3*X1*X2^2 + "
             "a1^2*a2*a3*X1*X2*X3",
             3);
         return F.as_poly() == expected && verify_annihilation(fam, F).annihilated;
       }},
      {"dual generator under differentiation",
       [] {
         auto fam = parse_family(kCycle3);
         auto F = dual_generator(fam, Convention::Differentiation);
         auto expected = parse_dual_poly(
             "b1^2*a2*b3*X1^3 + 3*a1*b1*a2*b3*X1^2*X3 + 3*a1*b1*a2*a3*X1^2*X2 + 3*a1^2*a2*b3*X1*X3^2 + "
             "3*a1^2*b2*a3*X1*X2^2 + 6*a1^2*a2*a3*X1*X2*X3",
             3);
         return F.as_poly() == expected && verify_annihilation(fam, F).annihilated;
       }},
      {"structural determinant of the coefficient matrix",
       [] {
         auto fam = parse_family(kCycle3);
         auto m = build_c_matrix(fam);
         return m.size() == 15 && m.is_almost_binomial_type() &&
                det_structural(fam) == sym("a1^6*a2^3*a3^2", 3) * sym("a2*a3 - b2*b3", 3).pow(2);
       }},
      {"radical of the resultant",
       [] {
         auto r = resultant_radical(parse_family(kCycle3));
         return r.to_string() == "a1*a2*a3*(a2*a3 - b2*b3)" &&
                std::all_of(r.status.begin(), r.status.end(), [](TStatus s) { return s == TStatus::Certain; });
       }},
      {"radical of the five-variable ring with unit leading coefficients",
       [] { return resultant_radical(parse_family(kRing5)).product == sym("1 - b1*b2*b3*b4*b5", 5); }},
      {"complete intersection test at b = (1,1,2) and (1,1,1)",
       [] {
         auto fam = parse_family(kCycle3);
         auto at = [&](long b3) {
           return is_complete_intersection(specialize(fam, CoeffAssignment::numeric({1, 1, 1}, {1, 1, Rational(b3)})));
         };
         return at(2) && !at(1);
       }},
      {"monomial basis of the chain family at a = 1, b = (1,1,2)",
       [] {
         // At a = b = 1 the cycle factor a1^4*a2^2*a3 - b1^4*b2^2*b3 vanishes and the family is no CI.
         auto fam = specialize(parse_family(kChain3), CoeffAssignment::numeric({1, 1, 1}, {1, 1, 2}));
         auto top = bounded_monomials_of_degree(fam.degrees(), 3);
         return basis_check(fam) && top.size() == 1 && top[0] == Monomial::from_ints({1, 1, 1});
       }},
      {"five-variable ring: Hilbert function, annihilation and Hessian ranks",
       [] {
         std::mt19937_64 rng(7);
         auto fam = parse_family(kRing5);
         auto b = random_b(rng);
         auto spec = specialize(fam, b_only(b));
         if (hilbert_function(spec, 6).values != std::vector<std::size_t>{1, 5, 10, 10, 5, 1, 0}) return false;
         if (!verify_annihilation(fam, parse_dual_poly(kRing5Dual, 5), Convention::Differentiation).annihilated) return false;
         QPoly F = evaluate(parse_dual_poly(kRing5Dual, 5), b_only(b));
         auto v = slp_check(F, 3, rng, Convention::Differentiation);
         return std::all_of(v.begin(), v.end(), [](const LefschetzVerdict& x) { return x.maximal; });
       }},
      {"twisted five-variable ring at b = 1: inverse system dimensions",
       [] {
         auto fam = specialize(parse_family(kTwisted5), parse_assignment("b=1", 5));
         QPoly F = dual_generator(fam).evaluate(fam.coefficients());
         return inverse_system_dims(F).values == std::vector<std::size_t>{1, 5, 5, 5, 5, 1};
       }},
      {"weak Lefschetz failure and non-spanning squarefree set",
       [] {
         QPoly F = evaluate(parse_dual_poly(kWlpDual, 5), CoeffAssignment::symbolic(5));
         std::mt19937_64 rng(11);
         std::uniform_int_distribution<long> c(-100, 100);
         auto h = hessian(F, 2, Convention::Differentiation);
         for (int t = 0; t < 5; ++t) {
           std::vector<Rational> ell;
           for (int i = 0; i < 5; ++i) ell.emplace_back(c(rng));
           if (lefschetz_rank(h, ell) >= h.size()) return false;
         }
         return h.size() == 10 && !m_spans_ann_quotient({2, 2, 2, 2, 2}, F, Convention::Differentiation);
       }},
  };
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& [name, check] : checks()) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      out << "  error: " << e.what() << '\n';
    }
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
  return failures;
}

}  // namespace bci::cli
