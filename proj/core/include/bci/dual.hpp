#pragma once

#include "bci/coeff_monomial.hpp"
#include "bci/family.hpp"
#include "bci/monomial.hpp"
#include "bci/poly_over.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bci {

/// How x acts on X: x_i^a o X_i^b = X_i^{b-a} (contraction) or d^a/dX_i^a.
enum class Convention { Contraction, Differentiation };

const char* to_string(Convention c);
Convention parse_convention(std::string_view text);

/// x^a acting on X^b: the resulting monomial and its integer factor, or
/// nullopt when the result is zero.
std::optional<std::pair<Monomial, Integer>> act(const Monomial& x, const Monomial& X, Convention conv);

/// Bilinear extension of act().
template <class C>
PolyOver<C> apply_action(const PolyOver<C>& f, const PolyOver<C>& F, Convention conv) {
  PolyOver<C> out(F.num_vars());
  for (const auto& [xm, xc] : f.terms()) {
    for (const auto& [Xm, Xc] : F.terms()) {
      auto r = act(xm, Xm, conv);
      if (!r) continue;
      C c = xc * Xc;
      c *= Rational(r->second);
      out.add_term(r->first, c);
    }
  }
  return out;
}

/// Macaulay dual generator read off the reduction graph at the socle degree.
struct DualGenerator {
  std::size_t n = 0;
  unsigned long socle_degree = 0;
  Convention convention = Convention::Contraction;
  /// s_i = max number of i-labeled edges on a path into x^{d-1}.
  std::vector<std::int64_t> s;
  /// Nonzero coefficients only, keyed by the exponent vector alpha.
  std::map<Monomial, CoeffMonomial, MonomialGrlexDesc> terms;

  SymPoly as_poly() const;
  /// Substitutes a full assignment; throws DomainError if a symbol stays free.
  QPoly evaluate(const CoeffAssignment& assign) const;
  /// "a1^2*a2*a3*X1*X2*X3 + ..." in canonical order.
  std::string to_string() const;
};

/// Per-label maxima of edge counts over the in-tree of x_1^{d_1-1}...x_n^{d_n-1}
/// in the reduction graph at the socle degree.
std::vector<std::int64_t> s_vector(const BinomialFamily& fam);

/// c_alpha = [multinomial(D; alpha)] a^{s-r} b^r when x^alpha has a path with
/// label counts r to the target, else 0. Assigned coefficient values of the
/// family are substituted.
DualGenerator dual_generator(const BinomialFamily& fam, Convention conv = Convention::Contraction);

struct AnnihilationReport {
  bool annihilated = true;
  /// f_i o F for every i (all zero when annihilated).
  std::vector<SymPoly> residuals;
};

AnnihilationReport verify_annihilation(const BinomialFamily& fam, const SymPoly& F, Convention conv);
inline AnnihilationReport verify_annihilation(const BinomialFamily& fam, const DualGenerator& F) {
  return verify_annihilation(fam, F.as_poly(), F.convention);
}

/// Parses a polynomial in X_1..X_n with coefficients built from rationals and
/// the symbols a_i, b_i, e.g. "b1*b3*X1^3*X3^2 + 2*b3*X1*X2*X3^3".
SymPoly parse_dual_poly(std::string_view text, std::size_t n);
/// Same grammar with rational coefficients only.
QPoly parse_numeric_dual_poly(std::string_view text, std::size_t n);
/// Same grammar in x_1..x_n with rational coefficients, e.g. "x1^2*x2 - 3*x3^3".
QPoly parse_x_poly(std::string_view text, std::size_t n);

}  // namespace bci
