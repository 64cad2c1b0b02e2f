#include "bci/linalg.hpp"

#include <utility>

namespace bci {

RowEchelon::IntRow RowEchelon::to_integer_row(const SparseRow& row) {
  Integer lcm = 1;
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    Integer z = v.get_num() * (lcm / v.get_den());
    out.emplace_back(c, std::move(z));
  }
  return out;
}

namespace {

void make_primitive(std::vector<std::pair<std::size_t, Integer>>& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// p*x - q*y on sparse integer rows.
std::vector<std::pair<std::size_t, Integer>> combine(const Integer& p, const std::vector<std::pair<std::size_t, Integer>>& x,
                                                     const Integer& q, const std::vector<std::pair<std::size_t, Integer>>& y) {
  std::vector<std::pair<std::size_t, Integer>> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, p * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -q * y[j].second);
      ++j;
    } else {
      Integer v = p * x[i].second - q * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RowEchelon::IntRow RowEchelon::reduce(IntRow row) const {
  make_primitive(row);
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const IntRow& piv = it->second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    Integer p = piv.front().second / g;
    Integer q = row.front().second / g;
    row = combine(p, row, q, piv);
    make_primitive(row);
  }
  return row;
}

bool RowEchelon::add(const SparseRow& row) {
  IntRow r = reduce(to_integer_row(row));
  if (r.empty()) return false;
  std::size_t lead = r.front().first;
  pivots_.emplace(lead, std::move(r));
  return true;
}

bool RowEchelon::in_span(const SparseRow& row) const { return reduce(to_integer_row(row)).empty(); }

std::size_t rank(const std::vector<SparseRow>& rows) {
  RowEchelon ech;
  for (const auto& r : rows) ech.add(r);
  return ech.rank();
}

std::size_t rank(const RationalMatrix& m) {
  RowEchelon ech;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) row.emplace_back(c, m(r, c));
    ech.add(row);
  }
  return ech.rank();
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    scale *= Rational(lcm);
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return Rational(0);
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1]);
  if (sign < 0) det = -det;
  det /= scale;
  det.canonicalize();
  return det;
}

}  // namespace bci
