#pragma once

#include "bci/family.hpp"
#include "bci/linalg.hpp"
#include "bci/monomial.hpp"
#include "bci/reduction_graph.hpp"
#include "bci/sparse_poly.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bci {

/// Coefficient matrix of the system (x^alpha / x_i^{d_i}) f_i = 0, x^alpha in S_i,
/// over the monomials of degree sum(d_i - 1) + 1. Rows and columns share the
/// canonical monomial order, so a_i sits on the diagonal and -b_i in the
/// column of x^alpha * m_i / x_i^{d_i}.
class CMatrix {
 public:
  explicit CMatrix(const BinomialFamily& fam);

  unsigned long degree() const { return degree_; }
  std::size_t size() const { return index_.size(); }
  const MonomialIndex& index() const { return index_; }
  /// i with row r in S_i.
  std::size_t part(std::size_t r) const { return part_.at(r); }
  /// Column of the -b entry of row r.
  std::size_t off_column(std::size_t r) const { return off_col_.at(r); }
  /// Monomials of S_i in canonical order (1-based i).
  std::vector<Monomial> part_members(std::size_t i) const;

  /// Entry with the family's assigned values substituted.
  SparsePoly entry(std::size_t r, std::size_t c) const;
  /// Fully numeric matrix. Values in `assign` override the family's; a_i = 0 is allowed.
  RationalMatrix evaluate(const CoeffAssignment& assign) const;

  /// Rows hold exactly one a_i and one -b_i with the same i; each column one a.
  bool is_almost_binomial_type() const;

  /// Aligned text with the column monomials as a header line.
  std::string to_text() const;

 private:
  const BinomialFamily* fam_;
  unsigned long degree_;
  MonomialIndex index_;
  std::vector<std::size_t> part_;
  std::vector<std::size_t> off_col_;
};

CMatrix build_c_matrix(const BinomialFamily& fam);

/// prod over transient vertices of a_{label} times prod over cycles of p(C),
/// read off the reduction graph at the resultant degree; the family's
/// assigned values are substituted.
SparsePoly det_structural(const BinomialFamily& fam);

/// Exact Bareiss determinant of the specialized matrix. `assign` must
/// complete the family's own values to a full assignment.
Rational det_numeric_oracle(const BinomialFamily& fam, const CoeffAssignment& assign);

struct CycleFactor {
  /// Primitive exponent vector r / gcd(r).
  std::vector<std::int64_t> primitive;
  /// Index of the cyclotomic factor.
  unsigned long order;
  SparsePoly poly;
};

/// Distinct factors Psi_e(a^s, b^s) of prod (a^r - b^r) over the given
/// label-count vectors (zero vectors are skipped).
std::vector<CycleFactor> radical_of_exponents(const std::vector<std::vector<std::int64_t>>& rs);
/// Same for the cycles of a reduction graph.
std::vector<CycleFactor> radical_of_cycle_product(const ReductionGraph& g);

enum class TStatus { Certain, Probabilistic, Bounded };
const char* to_string(TStatus s);

struct RadicalResult {
  std::size_t n = 0;
  /// Exponent of a_i in the radical (Bounded entries report the upper bound 1).
  std::vector<int> t;
  std::vector<TStatus> status;
  /// Non-monomial factors after substituting the family's assigned values.
  std::vector<SparsePoly> factors;
  /// Symbols that divide the radical as monomial factors: (is_b, index).
  std::vector<std::pair<bool, std::size_t>> monomial_part;
  /// True when some factor specializes to 0 (never a complete intersection).
  bool vanishes = false;
  SparsePoly product;

  /// "a1*a2*a3*(a2*a3 - b2*b3)".
  std::string to_string() const;
};

struct ProbeOptions {
  unsigned trials = 5;
  /// Bound on numerator and denominator magnitudes of random values.
  long magnitude = 1000;
  std::uint64_t seed = 0x5eed;
};

/// Radical of the resultant: a^t * sqrt(p(G)) at the resultant degree, with t
/// decided by pure-power tails and cycle membership of labeled edges; undecided
/// t_i are probed numerically when `probe` is set.
RadicalResult resultant_radical(const BinomialFamily& fam, bool probe = false, const ProbeOptions& opts = {});

}  // namespace bci
