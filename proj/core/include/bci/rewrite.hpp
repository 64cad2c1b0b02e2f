#pragma once

#include "bci/coeff_monomial.hpp"
#include "bci/family.hpp"
#include "bci/monomial.hpp"
#include "bci/poly_over.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bci {

enum class OutcomeKind { ToBasis, ToCycle };

/// Result of following reduction edges from one monomial.
struct ReductionOutcome {
  OutcomeKind kind = OutcomeKind::ToBasis;
  /// Visited vertices m^(0), ..., m^(r). For ToCycle the last entry repeats
  /// an earlier one (the cycle entry).
  std::vector<Monomial> path;
  /// Edge labels i_1..i_r.
  std::vector<std::size_t> labels;
  /// Per-generator edge counts along the path.
  std::vector<std::int64_t> label_counts;
  /// ToBasis: prod b^r / prod a^r. ToCycle: zero, the monomial lies in (B)
  /// only when B is a regular sequence.
  CoeffMonomial coeff;
  /// Label counts of the cycle that was entered (ToCycle only).
  std::vector<std::int64_t> cycle_label_counts;

  const Monomial& endpoint() const { return path.back(); }
  bool conditional_zero() const { return kind == OutcomeKind::ToCycle; }
};

/// Follows edges with labels <= k until M_{d_1..d_k} (ToBasis) or the first
/// repeated vertex (ToCycle). 1 <= k <= n.
ReductionOutcome reduce_monomial(const BinomialFamily& fam, const Monomial& m, std::size_t k);
inline ReductionOutcome reduce_monomial(const BinomialFamily& fam, const Monomial& m) {
  return reduce_monomial(fam, m, fam.n());
}

struct ReducedPolynomial {
  /// Supported on M_{d_1..d_n}.
  QPoly value;
  /// Input monomials mapped to zero on the strength of a cycle; the result is
  /// valid modulo (B) only if B is a regular sequence.
  std::vector<Monomial> conditional_zeros;
  bool used_conditional_zero() const { return !conditional_zeros.empty(); }
};

/// Reduces each term independently and accumulates exactly. The family must be
/// fully numeric.
ReducedPolynomial reduce_polynomial(const BinomialFamily& fam, const QPoly& p);

struct CertificateStep {
  std::size_t generator;
  /// m^(s-1) / x_{i_s}^{d_{i_s}}.
  Monomial multiplier;
  /// p_s = prod_{l>s} a_{i_l} prod_{l<s} b_{i_l}.
  CoeffMonomial scalar;
  Monomial from, to;
};

/// aProduct * input - sum_s p_s * multiplier_s * f_{i_s} = rhsCoeff * rhsMonomial.
struct Certificate {
  Monomial input;
  CoeffMonomial a_product;
  std::vector<CertificateStep> steps;
  CoeffMonomial rhs_coeff;
  Monomial rhs_monomial;
  bool ends_in_cycle = false;
};

Certificate certificate(const BinomialFamily& fam, const Monomial& m);

/// Left side minus right side of the certificate identity, expanded with the
/// family's generators; zero for every valid certificate.
SymPoly certificate_residual(const BinomialFamily& fam, const Certificate& cert);
bool verify_certificate(const BinomialFamily& fam, const Certificate& cert);

/// Human-readable rendering of the identity, one step per line.
std::string to_text(const Certificate& cert);

}  // namespace bci
