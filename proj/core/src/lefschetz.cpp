#include "bci/lefschetz.hpp"

#include "bci/oracle.hpp"

#include <algorithm>

namespace bci {

namespace {

bool squarefree(const Monomial& m) {
  return std::all_of(m.exponents().begin(), m.exponents().end(), [](const Integer& e) { return e <= 1; });
}

QPoly monomial_poly(const Monomial& m) {
  QPoly p(m.num_vars());
  p.add_term(m, Rational(1));
  return p;
}

}  // namespace

std::vector<Monomial> default_basis(const QPoly& F, unsigned long k, Convention conv) {
  auto all = monomials_of_degree(F.num_vars(), k);
  std::stable_partition(all.begin(), all.end(), squarefree);
  std::vector<Monomial> basis;
  std::size_t rank = 0;
  for (const Monomial& m : all) {
    basis.push_back(m);
    std::size_t r = catalecticant_rank(F, basis, conv);
    if (r == rank) basis.pop_back();
    else rank = r;
  }
  return basis;
}

HessianMatrix hessian(const QPoly& F, unsigned long k, const std::vector<Monomial>& basis, Convention conv) {
  unsigned long D = homogeneous_degree(F);
  if (2 * k > D) throw DomainError("Hessian order exceeds half the socle degree");
  for (const Monomial& g : basis)
    if (g.num_vars() != F.num_vars() || g.degree() != k) throw DomainError("basis element of wrong degree");
  std::size_t dim = catalecticant_rank(F, monomials_of_degree(F.num_vars(), k), conv);
  if (basis.size() != dim || catalecticant_rank(F, basis, conv) != dim)
    throw DomainError("basis is not a basis of the degree-" + std::to_string(k) + " piece");

  HessianMatrix h;
  h.k = k;
  h.socle_degree = D;
  h.convention = conv;
  h.basis = basis;
  h.entries.assign(basis.size(), std::vector<QPoly>(basis.size(), QPoly(F.num_vars())));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      h.entries[i][j] = apply_action(monomial_poly(basis[i] * basis[j]), F, conv);
      h.entries[j][i] = h.entries[i][j];
    }
  return h;
}

RationalMatrix substitute(const HessianMatrix& h, const std::vector<Rational>& ell) {
  std::size_t N = h.size();
  if (N > 0 && ell.size() != h.basis.front().num_vars()) throw DomainError("point has the wrong dimension");
  unsigned long e = h.socle_degree - 2 * h.k;
  Integer efact = factorial(e);
  auto value = [&](const QPoly& G) {
    Rational sum(0);
    for (const auto& [m, c] : G.terms()) {
      Rational t = c;
      Integer weight = efact;
      for (std::size_t v = 0; v < ell.size(); ++v) {
        unsigned long p = m.exponents()[v].get_ui();
        t *= pow(ell[v], static_cast<std::int64_t>(p));
        weight /= factorial(p);
      }
      // Contraction pairs X^beta with ell^e through the multinomial weight e!/beta!.
      if (h.convention == Convention::Contraction) t *= Rational(weight);
      sum += t;
    }
    return sum;
  };
  RationalMatrix out(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = value(h.entries[i][j]);
  return out;
}

std::size_t lefschetz_rank(const HessianMatrix& h, const std::vector<Rational>& ell) { return rank(substitute(h, ell)); }

std::size_t lefschetz_rank(const QPoly& F, unsigned long k, const std::vector<Rational>& ell, Convention conv) {
  return lefschetz_rank(hessian(F, k, conv), ell);
}

std::vector<LefschetzVerdict> slp_check(const QPoly& F, unsigned trials, std::mt19937_64& rng, Convention conv) {
  unsigned long D = homogeneous_degree(F);
  std::uniform_int_distribution<long> coord(-100, 100);
  std::vector<LefschetzVerdict> out;
  for (unsigned long k = 0; 2 * k <= D; ++k) {
    HessianMatrix h = hessian(F, k, conv);
    LefschetzVerdict v;
    v.k = k;
    v.basis_size = h.size();
    for (unsigned t = 0; t < trials && !v.maximal; ++t) {
      std::vector<Rational> ell;
      for (std::size_t i = 0; i < F.num_vars(); ++i) ell.emplace_back(coord(rng));
      std::size_t r = lefschetz_rank(h, ell);
      if (v.ell.empty() || r > v.rank) {
        v.rank = r;
        v.ell = ell;
      }
      v.maximal = r == h.size();
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace bci
