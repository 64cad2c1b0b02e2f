#include "bci/oracle.hpp"

#include "bci/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bci {

std::string HilbertFunction::to_series() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << values[j];
      continue;
    }
    if (values[j] != 1) os << values[j];
    os << 't';
    if (j > 1) os << '^' << j;
  }
  return first ? "0" : os.str();
}

std::vector<std::size_t> ci_hilbert_series(const std::vector<unsigned long>& degrees) {
  std::vector<std::size_t> h{1};
  for (unsigned long d : degrees) {
    std::vector<std::size_t> next(h.size() + d - 1, 0);
    for (std::size_t j = 0; j < h.size(); ++j)
      for (unsigned long k = 0; k < d; ++k) next[j + k] += h[j];
    h = std::move(next);
  }
  return h;
}

GeneratorList numeric_generators(const BinomialFamily& fam) {
  GeneratorList out;
  for (std::size_t i = 1; i <= fam.n(); ++i) out.push_back(fam.numeric_generator(i));
  return out;
}

unsigned long homogeneous_degree(const QPoly& F) {
  if (F.is_zero()) throw DomainError("zero polynomial has no degree");
  Integer d = F.terms().begin()->first.degree();
  for (const auto& [m, c] : F.terms())
    if (m.degree() != d) throw DomainError("polynomial is not homogeneous");
  return d.get_ui();
}

namespace {

std::size_t num_vars(const GeneratorList& gens) {
  if (gens.empty()) throw DomainError("empty generator list");
  return gens.front().num_vars();
}

SparseRow to_row(const QPoly& p, const MonomialIndex& idx) {
  SparseRow row;
  for (const auto& [m, c] : p.terms()) row.emplace_back(idx.index_of(m), c);
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

// Echelon form of the degree-j piece of the ideal.
RowEchelon ideal_piece(const GeneratorList& gens, unsigned long j, const MonomialIndex& idx) {
  std::size_t n = num_vars(gens);
  RowEchelon ech;
  for (const QPoly& f : gens) {
    if (f.is_zero()) continue;
    unsigned long d = homogeneous_degree(f);
    if (d > j) continue;
    for (const Monomial& mult : monomials_of_degree(n, j - d)) ech.add(to_row(f.times_term(mult, Rational(1)), idx));
  }
  return ech;
}

std::map<unsigned long, QPoly> components(const QPoly& p) {
  std::map<unsigned long, QPoly> out;
  for (const auto& [m, c] : p.terms()) {
    auto [it, _] = out.try_emplace(m.degree().get_ui(), p.num_vars());
    it->second.add_term(m, c);
  }
  return out;
}

}  // namespace

HilbertFunction hilbert_function(const GeneratorList& gens, unsigned long max_degree) {
  std::size_t n = num_vars(gens);
  HilbertFunction h;
  for (unsigned long j = 0; j <= max_degree; ++j) {
    MonomialIndex idx(monomials_of_degree(n, j));
    h.values.push_back(idx.size() - ideal_piece(gens, j, idx).rank());
  }
  return h;
}

HilbertFunction hilbert_function(const BinomialFamily& fam, unsigned long max_degree) {
  return hilbert_function(numeric_generators(fam), max_degree);
}

bool is_complete_intersection(const GeneratorList& gens, const std::vector<unsigned long>& degrees) {
  auto expected = ci_hilbert_series(degrees);
  expected.push_back(0);
  auto h = hilbert_function(gens, expected.size() - 1);
  return h.values == expected;
}

bool is_complete_intersection(const BinomialFamily& fam) {
  return is_complete_intersection(numeric_generators(fam), fam.degrees());
}

bool basis_check(const BinomialFamily& fam) {
  if (!is_complete_intersection(fam)) throw PreconditionError("basis_check needs a complete intersection");
  GeneratorList gens = numeric_generators(fam);
  auto h = ci_hilbert_series(fam.degrees());
  for (unsigned long j = 0; j < h.size(); ++j) {
    MonomialIndex idx(monomials_of_degree(fam.n(), j));
    RowEchelon ech = ideal_piece(gens, j, idx);
    std::size_t base = ech.rank();
    auto basis = bounded_monomials_of_degree(fam.degrees(), j);
    if (basis.size() != h[j]) return false;
    for (const Monomial& m : basis) ech.add({{idx.index_of(m), Rational(1)}});
    if (ech.rank() != base + basis.size()) return false;
  }
  return true;
}

struct MembershipOracle::Piece {
  MonomialIndex index;
  RowEchelon echelon;
};

MembershipOracle::MembershipOracle(GeneratorList gens) : gens_(std::move(gens)) { num_vars(gens_); }

MembershipOracle::Piece& MembershipOracle::piece(unsigned long j) {
  auto& slot = pieces_[j];
  if (!slot) {
    MonomialIndex idx(monomials_of_degree(num_vars(gens_), j));
    RowEchelon ech = ideal_piece(gens_, j, idx);
    slot = std::make_shared<Piece>(Piece{std::move(idx), std::move(ech)});
  }
  return *slot;
}

bool MembershipOracle::contains(const QPoly& p) {
  for (const auto& [j, part] : components(p)) {
    Piece& pc = piece(j);
    if (!pc.echelon.in_span(to_row(part, pc.index))) return false;
  }
  return true;
}

bool MembershipOracle::contains(const Monomial& m) {
  QPoly p(m.num_vars());
  p.add_term(m, Rational(1));
  return contains(p);
}

bool ideal_membership(const GeneratorList& gens, const QPoly& p) { return MembershipOracle(gens).contains(p); }

bool ideal_membership(const GeneratorList& gens, const Monomial& m) { return MembershipOracle(gens).contains(m); }

bool ideal_membership(const BinomialFamily& fam, const QPoly& p) { return ideal_membership(numeric_generators(fam), p); }
bool ideal_membership(const BinomialFamily& fam, const Monomial& m) { return ideal_membership(numeric_generators(fam), m); }

std::size_t catalecticant_rank(const QPoly& F, const std::vector<Monomial>& monomials, Convention conv) {
  if (monomials.empty()) return 0;
  unsigned long D = homogeneous_degree(F);
  unsigned long j = monomials.front().degree().get_ui();
  if (j > D) return 0;
  MonomialIndex idx(monomials_of_degree(F.num_vars(), D - j));
  RowEchelon ech;
  for (const Monomial& m : monomials) {
    QPoly g(F.num_vars());
    g.add_term(m, Rational(1));
    ech.add(to_row(apply_action(g, F, conv), idx));
  }
  return ech.rank();
}

HilbertFunction inverse_system_dims(const QPoly& F, unsigned long max_degree, Convention conv) {
  HilbertFunction h;
  for (unsigned long j = 0; j <= max_degree; ++j)
    h.values.push_back(catalecticant_rank(F, monomials_of_degree(F.num_vars(), j), conv));
  return h;
}

HilbertFunction inverse_system_dims(const QPoly& F, Convention conv) {
  return inverse_system_dims(F, homogeneous_degree(F), conv);
}

bool m_spans_ann_quotient(const std::vector<unsigned long>& degrees, const QPoly& F, Convention conv) {
  if (degrees.size() != F.num_vars()) throw DomainError("degree vector does not match the variable count");
  unsigned long D = homogeneous_degree(F);
  for (unsigned long j = 0; j <= D; ++j) {
    std::size_t full = catalecticant_rank(F, monomials_of_degree(F.num_vars(), j), conv);
    if (catalecticant_rank(F, bounded_monomials_of_degree(degrees, j), conv) != full) return false;
  }
  return true;
}

}  // namespace bci
