#include "bci/sparse_poly.hpp"

#include <numeric>
#include <sstream>

namespace bci {

bool GrlexDescending::operator()(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
  std::int64_t dx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
  std::int64_t dy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
  if (dx != dy) return dx > dy;
  return x > y;
}

SparsePoly SparsePoly::constant(std::size_t n, const Rational& c) {
  SparsePoly p(n);
  p.add_term(Exponent(2 * n, 0), c);
  return p;
}

SparsePoly SparsePoly::a(std::size_t n, std::size_t i, std::int64_t e) {
  if (i == 0 || i > n) throw DomainError("symbol index out of range");
  SparsePoly p(n);
  Exponent ex(2 * n, 0);
  ex[i - 1] = e;
  p.add_term(ex, Rational(1));
  return p;
}

SparsePoly SparsePoly::b(std::size_t n, std::size_t i, std::int64_t e) {
  if (i == 0 || i > n) throw DomainError("symbol index out of range");
  SparsePoly p(n);
  Exponent ex(2 * n, 0);
  ex[n + i - 1] = e;
  p.add_term(ex, Rational(1));
  return p;
}

SparsePoly SparsePoly::from(const CoeffMonomial& m) {
  std::size_t n = m.num_pairs();
  SparsePoly p(n);
  if (m.is_zero()) return p;
  if (!m.is_polynomial()) throw DomainError("coefficient " + m.to_string() + " is not a polynomial");
  Exponent ex(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ex[i] = m.a_exp()[i];
    ex[n + i] = m.b_exp()[i];
  }
  p.add_term(ex, m.scalar());
  return p;
}

SparsePoly SparsePoly::binomial_difference(const std::vector<std::int64_t>& r) {
  std::size_t n = r.size();
  Exponent ea(2 * n, 0), eb(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] < 0) throw DomainError("negative label count");
    ea[i] = r[i];
    eb[n + i] = r[i];
  }
  SparsePoly p(n);
  p.add_term(ea, Rational(1));
  p.add_term(eb, Rational(-1));
  return p;
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rational SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<SparsePoly::Exponent, Rational> SparsePoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return *terms_.begin();
}

std::int64_t SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != 2 * n_) throw DomainError("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  if (rhs.n_ != n_) throw DomainError("polynomial symbol counts differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  if (rhs.n_ != n_) throw DomainError("polynomial symbol counts differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
  if (rhs.n_ != lhs.n_) throw DomainError("polynomial symbol counts differ");
  SparsePoly out(lhs.n_);
  SparsePoly::Exponent e(2 * lhs.n_);
  for (const auto& [ex, cx] : lhs.terms_) {
    for (const auto& [ey, cy] : rhs.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ex[k] + ey[k];
      out.add_term(e, cx * cy);
    }
  }
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

SparsePoly SparsePoly::pow(unsigned long k) const {
  SparsePoly result = constant(n_, Rational(1));
  SparsePoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

SparsePoly SparsePoly::substitute(const CoeffAssignment& assign) const {
  if (assign.size() != n_) throw DomainError("assignment size mismatch");
  SparsePoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    Rational v = c;
    for (std::size_t i = 0; i < n_; ++i) {
      if (assign.a[i] && ne[i] != 0) {
        v *= bci::pow(*assign.a[i], ne[i]);
        ne[i] = 0;
      }
      if (assign.b[i] && ne[n_ + i] != 0) {
        v *= bci::pow(*assign.b[i], ne[n_ + i]);
        ne[n_ + i] = 0;
      }
    }
    out.add_term(ne, v);
  }
  return out;
}

Rational SparsePoly::evaluate(const CoeffAssignment& assign) const {
  SparsePoly s = substitute(assign);
  if (!s.is_constant()) throw DomainError("evaluate: unassigned symbols remain in " + to_string());
  return s.is_zero() ? Rational(0) : s.terms_.begin()->second;
}

std::optional<SparsePoly> SparsePoly::divide_exact_into(const SparsePoly& q) const {
  if (is_zero()) throw DomainError("division by the zero polynomial");
  if (q.n_ != n_) throw DomainError("polynomial symbol counts differ");
  const auto [lead_e, lead_c] = leading_term();
  SparsePoly rem = q;
  SparsePoly quot(n_);
  Exponent te(2 * n_);
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.leading_term();
    for (std::size_t k = 0; k < te.size(); ++k) {
      te[k] = re[k] - lead_e[k];
      // With a single divisor, a stuck leading term proves non-divisibility:
      // any multiple of *this has a leading term divisible by lead_e.
      if (te[k] < 0) return std::nullopt;
    }
    SparsePoly t(n_);
    t.add_term(te, rc / lead_c);
    rem -= t * *this;
    quot += t;
  }
  return quot;
}

bool SparsePoly::divisible_by_symbol(bool is_b, std::size_t i) const {
  if (i == 0 || i > n_) throw DomainError("symbol index out of range");
  std::size_t idx = (is_b ? n_ : 0) + i - 1;
  for (const auto& [e, c] : terms_)
    if (e[idx] == 0) return false;
  return true;
}

std::optional<Rational> SparsePoly::scalar_ratio(const SparsePoly& other) const {
  if (other.n_ != n_ || other.terms_.size() != terms_.size()) return std::nullopt;
  if (terms_.empty()) return Rational(1);
  std::optional<Rational> ratio;
  auto it = terms_.begin();
  for (auto jt = other.terms_.begin(); jt != other.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return std::nullopt;
    Rational r = it->second / jt->second;
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += (k < n_ ? 'a' : 'b');
      mono += std::to_string(k < n_ ? k + 1 : k - n_ + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << mono;
    }
  }
  return os.str();
}

bool poly_divides(const SparsePoly& p, const SparsePoly& q) { return p.divide_exact_into(q).has_value(); }

}  // namespace bci
