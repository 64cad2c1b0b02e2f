#pragma once

// Polynomials in x_1..x_n (or X_1..X_n) with coefficients in Q or in the
// coefficient-symbol ring.

#include "bci/arith.hpp"
#include "bci/monomial.hpp"
#include "bci/sparse_poly.hpp"

#include <map>
#include <sstream>
#include <string>

namespace bci {

struct MonomialGrlexDesc {
  bool operator()(const Monomial& x, const Monomial& y) const {
    Integer dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx > dy;
    return y < x;
  }
};

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const SparsePoly& c) { return c.is_zero(); }

namespace detail {

struct CoeffText {
  bool negative = false;
  bool unit = false;
  std::string magnitude;
};

inline CoeffText coeff_text(const Rational& c) {
  Rational mag = abs(c);
  return {c < 0, mag == 1, mag.get_str()};
}

inline CoeffText coeff_text(const SparsePoly& c) {
  if (c.term_count() == 1) {
    bool neg = c.terms().begin()->second < 0;
    SparsePoly mag = neg ? -c : c;
    return {neg, mag.is_constant() && mag.terms().begin()->second == 1, mag.to_string()};
  }
  return {false, false, "(" + c.to_string() + ")"};
}

}  // namespace detail

template <class Coeff>
class PolyOver {
 public:
  using TermMap = std::map<Monomial, Coeff, MonomialGrlexDesc>;

  PolyOver() = default;
  explicit PolyOver(std::size_t num_vars) : n_(num_vars) {}

  std::size_t num_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Coeff* coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (m.num_vars() != n_) throw DomainError("polynomial variable count mismatch");
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  PolyOver& operator+=(const PolyOver& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  PolyOver& operator-=(const PolyOver& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  friend PolyOver operator+(PolyOver x, const PolyOver& y) { return x += y; }
  friend PolyOver operator-(PolyOver x, const PolyOver& y) { return x -= y; }

  /// (coeff * mono) * this.
  PolyOver times_term(const Monomial& mono, const Coeff& coeff) const {
    PolyOver out(n_);
    for (const auto& [m, c] : terms_) out.add_term(m * mono, c * coeff);
    return out;
  }

  friend PolyOver operator*(const PolyOver& x, const PolyOver& y) {
    PolyOver out(x.n_);
    for (const auto& [m, c] : y.terms_) out += x.times_term(m, c);
    return out;
  }

  /// Homogeneous components are kept together; "x1^2*x3 - 3*x2^3".
  std::string to_string(char var = 'x') const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      auto t = detail::coeff_text(c);
      if (first) {
        if (t.negative) os << '-';
      } else {
        os << (t.negative ? " - " : " + ");
      }
      first = false;
      bool unit_mono = m.degree() == 0;
      if (unit_mono) {
        os << t.magnitude;
      } else {
        if (!t.unit) os << t.magnitude << '*';
        os << m.to_string(var);
      }
    }
    return os.str();
  }

  friend bool operator==(const PolyOver& x, const PolyOver& y) { return x.n_ == y.n_ && x.terms_ == y.terms_; }

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

using QPoly = PolyOver<Rational>;
using SymPoly = PolyOver<SparsePoly>;

}  // namespace bci

namespace bci {

/// Evaluates every coefficient at a full assignment.
inline QPoly evaluate(const SymPoly& p, const CoeffAssignment& assign) {
  QPoly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, c.evaluate(assign));
  return out;
}

/// Embeds a rational polynomial into the symbol ring over n symbol pairs.
inline SymPoly lift(const QPoly& p, std::size_t pairs) {
  SymPoly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, SparsePoly::constant(pairs, c));
  return out;
}

}  // namespace bci
