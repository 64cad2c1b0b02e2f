#pragma once

#include "bci/dual.hpp"
#include "bci/linalg.hpp"
#include "bci/monomial.hpp"
#include "bci/poly_over.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace bci {

/// Hess^k of F: entry (i, j) = (g_i g_j) o F over a basis g of A_k = (R/Ann F)_k.
struct HessianMatrix {
  unsigned long k = 0;
  unsigned long socle_degree = 0;
  Convention convention = Convention::Contraction;
  std::vector<Monomial> basis;
  /// Row-major, polynomials in X of degree D - 2k.
  std::vector<std::vector<QPoly>> entries;

  std::size_t size() const { return basis.size(); }
};

/// Greedy monomial basis of A_k: squarefree monomials are tried first, then
/// the rest in canonical order, keeping each one that raises the catalecticant rank.
std::vector<Monomial> default_basis(const QPoly& F, unsigned long k, Convention conv = Convention::Contraction);

/// Throws DomainError when the basis has the wrong degree, size, or is dependent in A_k.
HessianMatrix hessian(const QPoly& F, unsigned long k, const std::vector<Monomial>& basis,
                      Convention conv = Convention::Contraction);
inline HessianMatrix hessian(const QPoly& F, unsigned long k, Convention conv = Convention::Contraction) {
  return hessian(F, k, default_basis(F, k, conv), conv);
}

/// Hessian at X = ell, scaled so the result is the matrix of multiplication by
/// ell^{D-2k} from A_k to A_{D-k}: under contraction each entry G becomes
/// ell^{D-2k} o G; under differentiation it is G(ell).
RationalMatrix substitute(const HessianMatrix& h, const std::vector<Rational>& ell);

std::size_t lefschetz_rank(const HessianMatrix& h, const std::vector<Rational>& ell);
std::size_t lefschetz_rank(const QPoly& F, unsigned long k, const std::vector<Rational>& ell,
                           Convention conv = Convention::Contraction);

struct LefschetzVerdict {
  unsigned long k = 0;
  std::size_t basis_size = 0;
  /// Best rank over all trials.
  std::size_t rank = 0;
  /// Full rank reached at some ell (a certificate).
  bool maximal = false;
  /// The ell of the best trial.
  std::vector<Rational> ell;
};

/// For k = 0..floor(D/2): rank of Hess^k at `trials` random integer points in [-100, 100].
std::vector<LefschetzVerdict> slp_check(const QPoly& F, unsigned trials, std::mt19937_64& rng,
                                        Convention conv = Convention::Contraction);

}  // namespace bci
