#include "bci/resultant.hpp"

#include "bci/oracle.hpp"
#include "bci/univariate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace bci {

CMatrix::CMatrix(const BinomialFamily& fam)
    : fam_(&fam), degree_(fam.resultant_degree()), index_(monomials_of_degree(fam.n(), degree_)) {
  part_.resize(index_.size());
  off_col_.resize(index_.size());
  for (std::size_t r = 0; r < index_.size(); ++r) {
    const Monomial& m = index_.at(r);
    std::size_t i = fam.reducing_index(m);
    // Pigeonhole: at this degree every monomial has some exponent >= d_i.
    if (i == 0) throw std::logic_error("basis monomial at the resultant degree");
    part_[r] = i;
    off_col_[r] = index_.index_of(m / fam.leading_monomial(i) * fam.tail(i));
  }
}

std::vector<Monomial> CMatrix::part_members(std::size_t i) const {
  std::vector<Monomial> out;
  for (std::size_t r = 0; r < size(); ++r)
    if (part_[r] == i) out.push_back(index_.at(r));
  return out;
}

SparsePoly CMatrix::entry(std::size_t r, std::size_t c) const {
  std::size_t n = fam_->n();
  SparsePoly out(n);
  if (c == r) out += fam_->coeff_a(part_[r]);
  if (c == off_col_[r]) out -= fam_->coeff_b(part_[r]);
  return out;
}

RationalMatrix CMatrix::evaluate(const CoeffAssignment& assign) const {
  std::size_t n = fam_->n();
  if (assign.size() != n) throw DomainError("assignment size mismatch");
  const auto& own = fam_->coefficients();
  auto value = [&](const std::vector<std::optional<Rational>>& over, const std::vector<std::optional<Rational>>& base,
                   std::size_t i, char sym) -> Rational {
    if (over[i - 1]) return *over[i - 1];
    if (base[i - 1]) return *base[i - 1];
    throw DomainError(std::string("symbol ") + sym + std::to_string(i) + " is unassigned");
  };
  RationalMatrix out(size(), size());
  for (std::size_t r = 0; r < size(); ++r) {
    std::size_t i = part_[r];
    out(r, r) += value(assign.a, own.a, i, 'a');
    out(r, off_col_[r]) -= value(assign.b, own.b, i, 'b');
  }
  return out;
}

bool CMatrix::is_almost_binomial_type() const {
  std::vector<int> a_per_column(size(), 0);
  for (std::size_t r = 0; r < size(); ++r) {
    const Monomial& m = index_.at(r);
    std::size_t i = part_[r];
    if (!fam_->leading_monomial(i).divides(m)) return false;
    for (std::size_t j = 1; j < i; ++j)
      if (fam_->leading_monomial(j).divides(m)) return false;
    // The tail differs from x_i^{d_i}, so the b entry never lands on the diagonal.
    if (off_col_[r] == r) return false;
    ++a_per_column[r];
  }
  return std::all_of(a_per_column.begin(), a_per_column.end(), [](int k) { return k == 1; });
}

std::string CMatrix::to_text() const {
  std::size_t N = size();
  std::vector<std::vector<std::string>> cells(N + 1, std::vector<std::string>(N + 1));
  for (std::size_t c = 0; c < N; ++c) cells[0][c + 1] = index_.at(c).to_string();
  for (std::size_t r = 0; r < N; ++r) {
    cells[r + 1][0] = index_.at(r).to_string();
    for (std::size_t c = 0; c < N; ++c) {
      std::string s = "0";
      if (c == r) s = "a" + std::to_string(part_[r]);
      else if (c == off_col_[r]) s = "-b" + std::to_string(part_[r]);
      cells[r + 1][c + 1] = s;
    }
  }
  std::vector<std::size_t> width(N + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= N; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c <= N; ++c) {
      if (c > 0) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

CMatrix build_c_matrix(const BinomialFamily& fam) { return CMatrix(fam); }

SparsePoly det_structural(const BinomialFamily& fam) {
  std::size_t n = fam.n();
  ReductionGraph g(fam, fam.resultant_degree());
  std::vector<std::int64_t> a_exp(n, 0);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.vertex_class(v) == VertexClass::Transient) ++a_exp[g.label(v) - 1];
  SparsePoly out = SparsePoly::constant(n, Rational(1));
  for (std::size_t i = 1; i <= n; ++i) out *= SparsePoly::a(n, i, a_exp[i - 1]);
  out *= graph_cycle_polynomial(g);
  return out.substitute(fam.coefficients());
}

Rational det_numeric_oracle(const BinomialFamily& fam, const CoeffAssignment& assign) {
  return determinant(CMatrix(fam).evaluate(assign));
}

std::vector<CycleFactor> radical_of_exponents(const std::vector<std::vector<std::int64_t>>& rs) {
  std::set<std::pair<std::vector<std::int64_t>, unsigned long>> seen;
  std::vector<CycleFactor> out;
  for (const auto& rv : rs) {
    std::size_t n = rv.size();
    std::int64_t gg = 0;
    for (auto r : rv) gg = std::gcd(gg, r);
    if (gg == 0) continue;
    std::vector<std::int64_t> s(rv);
    for (auto& x : s) x /= gg;
    SparsePoly A = SparsePoly::constant(n, Rational(1)), B = A;
    for (std::size_t i = 1; i <= n; ++i) {
      A *= SparsePoly::a(n, i, s[i - 1]);
      B *= SparsePoly::b(n, i, s[i - 1]);
    }
    for (unsigned long e : divisors(static_cast<unsigned long>(gg))) {
      if (!seen.insert({s, e}).second) continue;
      SparsePoly f = homogenized_cyclotomic(e, A, B);
      bool dup = std::any_of(out.begin(), out.end(), [&](const CycleFactor& x) { return x.poly == f; });
      if (!dup) out.push_back({s, e, std::move(f)});
    }
  }
  return out;
}

std::vector<CycleFactor> radical_of_cycle_product(const ReductionGraph& g) {
  std::vector<std::vector<std::int64_t>> rs;
  for (const Cycle& c : g.cycles()) rs.push_back(c.label_counts);
  return radical_of_exponents(rs);
}

const char* to_string(TStatus s) {
  switch (s) {
    case TStatus::Certain: return "certain";
    case TStatus::Probabilistic: return "probabilistic";
    case TStatus::Bounded: return "bounded";
  }
  return "?";
}

namespace {

std::string symbol_name(bool is_b, std::size_t i) { return (is_b ? "b" : "a") + std::to_string(i); }

// A nonzero rational with numerator and denominator magnitudes in [1, bound].
Rational random_nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(1, bound), den(1, bound), sign(0, 1);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return sign(rng) ? Rational(-q) : q;
}

// Generators with a_i forced to zero and every free symbol drawn at random.
std::vector<QPoly> probe_system(const BinomialFamily& fam, std::size_t zero_a, std::mt19937_64& rng, long bound) {
  std::size_t n = fam.n();
  const auto& own = fam.coefficients();
  std::vector<QPoly> gens;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational a = i == zero_a ? Rational(0) : (own.a[i - 1] ? *own.a[i - 1] : random_nonzero(rng, bound));
    Rational b = own.b[i - 1] ? *own.b[i - 1] : random_nonzero(rng, bound);
    QPoly f(n);
    f.add_term(fam.leading_monomial(i), a);
    f.add_term(fam.tail(i), -b);
    gens.push_back(std::move(f));
  }
  return gens;
}

// Splits factors that divide one another until no factor divides another.
void make_pairwise_coprime_candidates(std::vector<SparsePoly>& fs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < fs.size() && !changed; ++x) {
      for (std::size_t y = 0; y < fs.size() && !changed; ++y) {
        if (x == y) continue;
        if (fs[x].scalar_ratio(fs[y])) {
          fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(y));
          changed = true;
        } else if (fs[x].total_degree() < fs[y].total_degree()) {
          if (auto q = fs[x].divide_exact_into(fs[y])) {
            fs[y] = *q;
            changed = true;
          }
        }
      }
    }
    // A quotient can turn constant.
    std::erase_if(fs, [](const SparsePoly& p) { return p.is_constant(); });
  }
}

}  // namespace

std::string RadicalResult::to_string() const {
  if (vanishes) return "0";
  std::vector<std::string> parts;
  for (const auto& [is_b, i] : monomial_part) parts.push_back(symbol_name(is_b, i));
  bool alone = monomial_part.empty() && factors.size() == 1;
  for (const auto& f : factors) parts.push_back(f.term_count() > 1 && !alone ? "(" + f.to_string() + ")" : f.to_string());
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "*" : "") + parts[k];
  return out;
}

RadicalResult resultant_radical(const BinomialFamily& fam, bool probe, const ProbeOptions& opts) {
  std::size_t n = fam.n();
  RadicalResult res;
  res.n = n;
  res.t.assign(n, 1);
  res.status.assign(n, TStatus::Certain);

  ReductionGraph g(fam, fam.resultant_degree());
  bool any_pure = std::any_of(fam.tails().begin(), fam.tails().end(), [](const Monomial& m) { return m.is_pure_power(); });
  if (any_pure) {
    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 1; i <= n; ++i) {
      bool pure_in_i = std::any_of(fam.tails().begin(), fam.tails().end(),
                                   [&](const Monomial& m) { return m.pure_power_variable() == i; });
      if (g.all_edges_on_cycles(i)) {
        res.t[i - 1] = 0;
      } else if (!pure_in_i) {
        res.t[i - 1] = 1;
      } else if (probe) {
        bool ci = false;
        for (unsigned k = 0; k < opts.trials && !ci; ++k)
          ci = is_complete_intersection(probe_system(fam, i, rng, opts.magnitude), fam.degrees());
        res.t[i - 1] = ci ? 0 : 1;
        res.status[i - 1] = ci ? TStatus::Certain : TStatus::Probabilistic;
      } else {
        res.status[i - 1] = TStatus::Bounded;
      }
    }
  }

  const CoeffAssignment& own = fam.coefficients();
  std::set<std::pair<bool, std::size_t>> mono;
  for (std::size_t i = 1; i <= n; ++i)
    if (res.t[i - 1] == 1 && !own.a[i - 1]) mono.insert({false, i});

  std::vector<SparsePoly> rest;
  for (const CycleFactor& cf : radical_of_cycle_product(g)) {
    SparsePoly f = cf.poly.substitute(own);
    if (f.is_zero()) {
      res.vanishes = true;
      continue;
    }
    if (f.is_constant()) continue;
    if (f.term_count() == 1) {
      const auto& e = f.terms().begin()->first;
      for (std::size_t k = 0; k < 2 * n; ++k)
        if (e[k] > 0) mono.insert({k >= n, k % n + 1});
      continue;
    }
    rest.push_back(std::move(f));
  }
  make_pairwise_coprime_candidates(rest);

  res.monomial_part.assign(mono.begin(), mono.end());
  res.factors = std::move(rest);
  if (res.vanishes) {
    res.product = SparsePoly(n);
    return res;
  }
  res.product = SparsePoly::constant(n, Rational(1));
  for (const auto& [is_b, i] : res.monomial_part) res.product *= is_b ? SparsePoly::b(n, i) : SparsePoly::a(n, i);
  for (const auto& f : res.factors) res.product *= f;
  return res;
}

}  // namespace bci
