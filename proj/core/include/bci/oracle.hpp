#pragma once

// Brute-force checks by exact linear algebra on Macaulay and catalecticant
// matrices. Everything here works on plain generator lists as well, so
// systems that break family invariants (a_i = 0) can be examined too.

#include "bci/dual.hpp"
#include "bci/family.hpp"
#include "bci/monomial.hpp"
#include "bci/poly_over.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bci {

/// Raised when an oracle check is called outside its precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct HilbertFunction {
  std::vector<std::size_t> values;

  /// "1 + 5t + 10t^2 + 10t^3 + 5t^4 + t^5"; zero values are skipped.
  std::string to_series() const;
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Coefficients of prod_i (1 + t + ... + t^{d_i - 1}).
std::vector<std::size_t> ci_hilbert_series(const std::vector<unsigned long>& degrees);

/// Homogeneous generators over Q in a common number of variables.
using GeneratorList = std::vector<QPoly>;

GeneratorList numeric_generators(const BinomialFamily& fam);

/// h_j = #monomials of degree j - rank of the degree-j Macaulay matrix.
HilbertFunction hilbert_function(const GeneratorList& gens, unsigned long max_degree);
HilbertFunction hilbert_function(const BinomialFamily& fam, unsigned long max_degree);

/// Hilbert function through degree sum(d_i - 1) + 1 equals the CI series.
bool is_complete_intersection(const GeneratorList& gens, const std::vector<unsigned long>& degrees);
bool is_complete_intersection(const BinomialFamily& fam);

/// In every degree up to the socle degree, the M monomials are independent
/// modulo the ideal and their count is h_j. Throws PreconditionError unless
/// the family is a complete intersection.
bool basis_check(const BinomialFamily& fam);

/// Ideal membership with the degree pieces of the ideal cached.
class MembershipOracle {
 public:
  explicit MembershipOracle(GeneratorList gens);
  bool contains(const QPoly& p);
  bool contains(const Monomial& m);

 private:
  struct Piece;
  Piece& piece(unsigned long j);

  GeneratorList gens_;
  std::map<unsigned long, std::shared_ptr<Piece>> pieces_;
};

/// Membership of a polynomial in the ideal, one homogeneous component at a time.
bool ideal_membership(const GeneratorList& gens, const QPoly& p);
bool ideal_membership(const GeneratorList& gens, const Monomial& m);
bool ideal_membership(const BinomialFamily& fam, const QPoly& p);
bool ideal_membership(const BinomialFamily& fam, const Monomial& m);

/// Ranks of the catalecticant maps m -> m o F for deg m = 0..max_degree.
HilbertFunction inverse_system_dims(const QPoly& F, unsigned long max_degree, Convention conv = Convention::Contraction);
/// Same, through the degree of F.
HilbertFunction inverse_system_dims(const QPoly& F, Convention conv = Convention::Contraction);

/// Rank of {m o F : m in `monomials`}, all of one degree.
std::size_t catalecticant_rank(const QPoly& F, const std::vector<Monomial>& monomials, Convention conv);

/// For each degree j, the images of the M_{d_1..d_n} monomials of degree j
/// span the whole degree-j catalecticant image.
bool m_spans_ann_quotient(const std::vector<unsigned long>& degrees, const QPoly& F,
                          Convention conv = Convention::Contraction);

/// Homogeneous degree of F; throws DomainError on zero or mixed degrees.
unsigned long homogeneous_degree(const QPoly& F);

}  // namespace bci
