#include "bci/univariate.hpp"

#include <map>
#include <sstream>

namespace bci {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::x_pow_minus_one(unsigned long e) {
  std::vector<Integer> c(e + 1, Integer(0));
  c[0] = -1;
  c[e] += 1;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return IntPoly();
  std::vector<Integer> c(x.coeffs_.size() + y.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) throw DomainError("divide_exact: divisor must be monic");
  if (degree() < divisor.degree()) {
    if (is_zero()) return IntPoly();
    throw DomainError("divide_exact: nonzero remainder");
  }
  std::vector<Integer> rem = coeffs_;
  std::size_t dq = static_cast<std::size_t>(degree() - divisor.degree());
  std::vector<Integer> q(dq + 1, Integer(0));
  for (std::size_t k = dq + 1; k-- > 0;) {
    Integer lead = rem[k + divisor.coeffs_.size() - 1];
    q[k] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[k + j] -= lead * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw DomainError("divide_exact: nonzero remainder");
  return IntPoly(std::move(q));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer mag = abs(c);
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::vector<unsigned long> divisors(unsigned long e) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d <= e; ++d)
    if (e % d == 0) out.push_back(d);
  return out;
}

IntPoly cyclotomic(unsigned long e) {
  if (e == 0) throw DomainError("cyclotomic: index must be positive");
  std::map<unsigned long, IntPoly> cache;
  for (unsigned long d : divisors(e)) {
    IntPoly p = IntPoly::x_pow_minus_one(d);
    for (unsigned long c : divisors(d))
      if (c != d) p = p.divide_exact(cache.at(c));
    cache.emplace(d, std::move(p));
  }
  return cache.at(e);
}

SparsePoly homogenized_cyclotomic(unsigned long e, const SparsePoly& A, const SparsePoly& B) {
  IntPoly phi = cyclotomic(e);
  std::size_t n = A.num_pairs();
  long deg = phi.degree();
  SparsePoly out(n);
  for (long k = 0; k <= deg; ++k) {
    const Integer& c = phi.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    SparsePoly term = A.pow(static_cast<unsigned long>(k)) * B.pow(static_cast<unsigned long>(deg - k));
    out += term * Rational(c);
  }
  return out;
}

}  // namespace bci
