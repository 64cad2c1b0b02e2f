#include "bci/coeff_monomial.hpp"

#include <algorithm>
#include <sstream>

namespace bci {

CoeffAssignment CoeffAssignment::symbolic(std::size_t n) {
  return CoeffAssignment{std::vector<std::optional<Rational>>(n), std::vector<std::optional<Rational>>(n)};
}

CoeffAssignment CoeffAssignment::numeric(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.size() != b.size()) throw DomainError("assignment: a and b lengths differ");
  CoeffAssignment out;
  for (auto& v : a) out.a.emplace_back(std::move(v));
  for (auto& v : b) out.b.emplace_back(std::move(v));
  return out;
}

bool CoeffAssignment::fully_numeric() const {
  auto has = [](const auto& v) { return v.has_value(); };
  return std::all_of(a.begin(), a.end(), has) && std::all_of(b.begin(), b.end(), has);
}

bool CoeffAssignment::fully_symbolic() const {
  auto none = [](const auto& v) { return !v.has_value(); };
  return std::all_of(a.begin(), a.end(), none) && std::all_of(b.begin(), b.end(), none);
}

CoeffMonomial::CoeffMonomial(std::size_t n) : scalar_(1), a_exp_(n, 0), b_exp_(n, 0) {}

CoeffMonomial::CoeffMonomial(Rational scalar, std::vector<std::int64_t> a_exp, std::vector<std::int64_t> b_exp)
    : scalar_(std::move(scalar)), a_exp_(std::move(a_exp)), b_exp_(std::move(b_exp)) {
  if (a_exp_.size() != b_exp_.size()) throw DomainError("coefficient monomial: a and b lengths differ");
  canonicalize();
}

CoeffMonomial CoeffMonomial::constant(std::size_t n, const Rational& c) {
  CoeffMonomial m(n);
  m.scalar_ = c;
  m.canonicalize();
  return m;
}

CoeffMonomial CoeffMonomial::a(std::size_t n, std::size_t i, std::int64_t e) {
  if (i == 0 || i > n) throw DomainError("symbol index out of range");
  CoeffMonomial m(n);
  m.a_exp_[i - 1] = e;
  return m;
}

CoeffMonomial CoeffMonomial::b(std::size_t n, std::size_t i, std::int64_t e) {
  if (i == 0 || i > n) throw DomainError("symbol index out of range");
  CoeffMonomial m(n);
  m.b_exp_[i - 1] = e;
  return m;
}

CoeffMonomial CoeffMonomial::path_ratio(const std::vector<std::int64_t>& r) {
  std::vector<std::int64_t> neg(r.size());
  std::transform(r.begin(), r.end(), neg.begin(), [](std::int64_t v) { return -v; });
  return CoeffMonomial(Rational(1), neg, r);
}

void CoeffMonomial::canonicalize() {
  scalar_.canonicalize();
  if (scalar_ == 0) {
    std::fill(a_exp_.begin(), a_exp_.end(), 0);
    std::fill(b_exp_.begin(), b_exp_.end(), 0);
  }
}

bool CoeffMonomial::is_polynomial() const {
  auto nonneg = [](std::int64_t e) { return e >= 0; };
  return std::all_of(a_exp_.begin(), a_exp_.end(), nonneg) && std::all_of(b_exp_.begin(), b_exp_.end(), nonneg);
}

CoeffMonomial CoeffMonomial::operator*(const CoeffMonomial& rhs) const {
  if (rhs.num_pairs() != num_pairs()) throw DomainError("coefficient monomial sizes differ");
  CoeffMonomial r(*this);
  r.scalar_ *= rhs.scalar_;
  for (std::size_t i = 0; i < a_exp_.size(); ++i) {
    r.a_exp_[i] += rhs.a_exp_[i];
    r.b_exp_[i] += rhs.b_exp_[i];
  }
  r.canonicalize();
  return r;
}

CoeffMonomial CoeffMonomial::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero coefficient");
  CoeffMonomial r(*this);
  r.scalar_ = 1 / scalar_;
  for (auto& e : r.a_exp_) e = -e;
  for (auto& e : r.b_exp_) e = -e;
  return r;
}

CoeffMonomial CoeffMonomial::operator/(const CoeffMonomial& rhs) const { return *this * rhs.inverse(); }

CoeffMonomial CoeffMonomial::operator-() const {
  CoeffMonomial r(*this);
  r.scalar_ = -r.scalar_;
  return r;
}

CoeffMonomial CoeffMonomial::substitute(const CoeffAssignment& assign) const {
  if (assign.size() != num_pairs()) throw DomainError("assignment size mismatch");
  CoeffMonomial r(*this);
  for (std::size_t i = 0; i < a_exp_.size(); ++i) {
    if (assign.a[i] && r.a_exp_[i] != 0) {
      r.scalar_ *= pow(*assign.a[i], r.a_exp_[i]);
      r.a_exp_[i] = 0;
    }
    if (assign.b[i] && r.b_exp_[i] != 0) {
      r.scalar_ *= pow(*assign.b[i], r.b_exp_[i]);
      r.b_exp_[i] = 0;
    }
  }
  r.canonicalize();
  return r;
}

Rational CoeffMonomial::evaluate(const CoeffAssignment& assign) const {
  if (is_zero()) return Rational(0);
  CoeffMonomial r = substitute(assign);
  for (std::size_t i = 0; i < a_exp_.size(); ++i)
    if (r.a_exp_[i] != 0 || r.b_exp_[i] != 0)
      throw DomainError("evaluate: symbol left unassigned in " + to_string());
  return r.scalar_;
}

namespace {

// Appends "sym^e" factors for exponents of the requested sign.
void append_factors(std::vector<std::string>& out, const std::vector<std::int64_t>& a,
                    const std::vector<std::int64_t>& b, int sign) {
  auto emit = [&](char sym, std::size_t i, std::int64_t e) {
    std::int64_t mag = sign * e;
    if (mag <= 0) return;
    std::string f = sym + std::to_string(i + 1);
    if (mag != 1) f += "^" + std::to_string(mag);
    out.push_back(std::move(f));
  };
  for (std::size_t i = 0; i < a.size(); ++i) emit('a', i, a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) emit('b', i, b[i]);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '*';
    s += parts[i];
  }
  return s;
}

}  // namespace

std::string CoeffMonomial::to_string() const {
  if (scalar_ == 0) return "0";
  std::vector<std::string> num, den;
  Integer snum = abs(scalar_.get_num());
  const Integer& sden = scalar_.get_den();
  if (snum != 1) num.push_back(snum.get_str());
  if (sden != 1) den.push_back(sden.get_str());
  append_factors(num, a_exp_, b_exp_, +1);
  append_factors(den, a_exp_, b_exp_, -1);
  std::string s = scalar_ < 0 ? "-" : "";
  s += num.empty() ? "1" : join(num);
  if (!den.empty()) {
    s += '/';
    s += den.size() == 1 ? den.front() : "(" + join(den) + ")";
  }
  return s;
}

}  // namespace bci
