#include "bci/monomial.hpp"

#include <sstream>

namespace bci {

Monomial::Monomial(std::vector<Integer> exps) : exps_(std::move(exps)) {
  for (const auto& e : exps_)
    if (e < 0) throw DomainError("monomial exponents must be nonnegative");
}

Monomial Monomial::from_ints(const std::vector<long>& exps) {
  std::vector<Integer> v;
  v.reserve(exps.size());
  for (long e : exps) v.emplace_back(e);
  return Monomial(std::move(v));
}

Monomial Monomial::power(std::size_t n, std::size_t i, const Integer& e) {
  if (i == 0 || i > n) throw DomainError("variable index out of range");
  Monomial m(n);
  m.exps_[i - 1] = e;
  return m;
}

Integer Monomial::degree() const {
  Integer d = 0;
  for (const auto& e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (var) return std::nullopt;
    var = i + 1;
  }
  return var;
}

bool Monomial::is_pure_power() const { return pure_power_variable().has_value(); }

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (rhs.exps_.size() != exps_.size()) throw DomainError("monomial variable counts differ");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += rhs.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  if (!rhs.divides(*this)) throw DomainError(rhs.to_string() + " does not divide " + to_string());
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= rhs.exps_[i];
  return r;
}

std::string Monomial::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << var << (i + 1);
    if (exps_[i] != 1) os << '^' << exps_[i].get_str();
  }
  if (first) return "1";
  return os.str();
}

namespace {

void enumerate(std::size_t n, std::size_t pos, unsigned long remaining, std::vector<long>& cur,
               std::vector<Monomial>& out, const std::vector<unsigned long>* bounds) {
  if (pos + 1 == n) {
    if (bounds && remaining >= (*bounds)[pos]) return;
    cur[pos] = static_cast<long>(remaining);
    out.push_back(Monomial::from_ints(cur));
    return;
  }
  unsigned long top = remaining;
  if (bounds && (*bounds)[pos] > 0 && top >= (*bounds)[pos]) top = (*bounds)[pos] - 1;
  if (bounds && (*bounds)[pos] == 0) return;
  for (unsigned long e = top + 1; e-- > 0;) {
    cur[pos] = static_cast<long>(e);
    enumerate(n, pos + 1, remaining - e, cur, out, bounds);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned long d) {
  if (n == 0) throw DomainError("monomials_of_degree: need at least one variable");
  std::vector<Monomial> out;
  std::vector<long> cur(n, 0);
  enumerate(n, 0, d, cur, out, nullptr);
  return out;
}

std::vector<Monomial> bounded_monomials_of_degree(const std::vector<unsigned long>& degrees, unsigned long d) {
  if (degrees.empty()) throw DomainError("bounded_monomials_of_degree: need at least one variable");
  std::vector<Monomial> out;
  std::vector<long> cur(degrees.size(), 0);
  enumerate(degrees.size(), 0, d, cur, out, &degrees);
  return out;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MonomialIndex::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw DomainError("monomial " + m.to_string() + " not indexed");
  return it->second;
}

}  // namespace bci
