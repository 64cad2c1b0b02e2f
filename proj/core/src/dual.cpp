#include "bci/dual.hpp"

#include "bci/reduction_graph.hpp"

#include <cctype>
#include <deque>
#include <sstream>

namespace bci {

const char* to_string(Convention c) {
  return c == Convention::Contraction ? "contraction" : "differentiation";
}

Convention parse_convention(std::string_view text) {
  if (text == "contraction") return Convention::Contraction;
  if (text == "differentiation") return Convention::Differentiation;
  throw DomainError("unknown convention '" + std::string(text) + "' (expected contraction|differentiation)");
}

std::optional<std::pair<Monomial, Integer>> act(const Monomial& x, const Monomial& X, Convention conv) {
  if (!x.divides(X)) return std::nullopt;
  Monomial rest = X / x;
  Integer factor = 1;
  if (conv == Convention::Differentiation) {
    for (std::size_t i = 1; i <= X.num_vars(); ++i) {
      // b! / (b - a)! as a falling factorial.
      for (Integer k = X.exp(i); k > rest.exp(i); --k) factor *= k;
    }
  }
  return std::make_pair(std::move(rest), std::move(factor));
}

SymPoly DualGenerator::as_poly() const {
  SymPoly p(n);
  for (const auto& [alpha, c] : terms) p.add_term(alpha, SparsePoly::from(c));
  return p;
}

QPoly DualGenerator::evaluate(const CoeffAssignment& assign) const {
  QPoly p(n);
  for (const auto& [alpha, c] : terms) p.add_term(alpha, c.evaluate(assign));
  return p;
}

std::string DualGenerator::to_string() const { return as_poly().to_string('X'); }

namespace {

struct InTree {
  std::vector<std::size_t> members;
  /// Label counts of the unique path to the target, indexed by vertex.
  std::vector<std::vector<std::int64_t>> r;
};

InTree in_tree(const ReductionGraph& g, std::size_t target) {
  const std::size_t n = g.num_vars();
  InTree t;
  t.r.assign(g.size(), {});
  auto pred = g.predecessors();
  std::deque<std::size_t> queue{target};
  t.r[target].assign(n, 0);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    t.members.push_back(v);
    for (std::size_t u : pred[v]) {
      // One outgoing edge per vertex, so the path u -> target is unique.
      if (!t.r[u].empty()) throw std::logic_error("reduction graph vertex reached twice in the in-tree");
      t.r[u] = t.r[v];
      t.r[u][g.label(u) - 1] += 1;
      queue.push_back(u);
    }
  }
  return t;
}

Monomial target_monomial(const BinomialFamily& fam) {
  std::vector<Integer> e;
  for (auto d : fam.degrees()) e.emplace_back(d - 1);
  return Monomial(std::move(e));
}

}  // namespace

std::vector<std::int64_t> s_vector(const BinomialFamily& fam) {
  const std::size_t n = fam.n();
  const unsigned long D = fam.socle_degree();
  std::vector<std::int64_t> s(n, 0);
  if (D == 0) return s;
  ReductionGraph g(fam, D);
  std::size_t target = g.index().index_of(target_monomial(fam));
  if (g.vertex_class(target) != VertexClass::Sink) throw std::logic_error("socle target is not a sink");
  InTree t = in_tree(g, target);
  for (std::size_t v : t.members)
    for (std::size_t i = 0; i < n; ++i) s[i] = std::max(s[i], t.r[v][i]);
  return s;
}

DualGenerator dual_generator(const BinomialFamily& fam, Convention conv) {
  const std::size_t n = fam.n();
  DualGenerator F;
  F.n = n;
  F.socle_degree = fam.socle_degree();
  F.convention = conv;
  F.s.assign(n, 0);
  const Monomial target = target_monomial(fam);
  if (F.socle_degree == 0) {
    F.terms.emplace(target, CoeffMonomial(n).substitute(fam.coefficients()));
    return F;
  }
  ReductionGraph g(fam, F.socle_degree);
  std::size_t t_id = g.index().index_of(target);
  if (g.vertex_class(t_id) != VertexClass::Sink) throw std::logic_error("socle target is not a sink");
  InTree tree = in_tree(g, t_id);
  for (std::size_t v : tree.members)
    for (std::size_t i = 0; i < n; ++i) F.s[i] = std::max(F.s[i], tree.r[v][i]);
  for (std::size_t v : tree.members) {
    const auto& r = tree.r[v];
    std::vector<std::int64_t> a_exp(n), b_exp(n);
    for (std::size_t i = 0; i < n; ++i) {
      a_exp[i] = F.s[i] - r[i];
      b_exp[i] = r[i];
    }
    Rational scalar = 1;
    if (conv == Convention::Differentiation)
      scalar = Rational(multinomial(Integer(F.socle_degree), g.vertex(v).exponents()));
    CoeffMonomial c = CoeffMonomial(scalar, a_exp, b_exp).substitute(fam.coefficients());
    if (!c.is_zero()) F.terms.emplace(g.vertex(v), std::move(c));
  }
  return F;
}

AnnihilationReport verify_annihilation(const BinomialFamily& fam, const SymPoly& F, Convention conv) {
  AnnihilationReport rep;
  for (std::size_t i = 1; i <= fam.n(); ++i) {
    SymPoly r = apply_action(fam.generator(i), F, conv);
    if (!r.is_zero()) rep.annihilated = false;
    rep.residuals.push_back(std::move(r));
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

class DualPolyParser {
 public:
  DualPolyParser(std::string_view text, std::size_t n, char var) : n_(n), var_(var) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
  }

  SymPoly parse() {
    SymPoly out(n_);
    if (src_.empty()) throw DomainError("empty polynomial");
    bool first = true;
    while (pos_ < src_.size()) {
      Rational sign = 1;
      if (src_[pos_] == '+' || src_[pos_] == '-') {
        if (src_[pos_] == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [mono, coeff] = term();
      out.add_term(mono, coeff * sign);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("polynomial, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  Integer number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(src_.substr(start, pos_ - start));
  }

  std::int64_t exponent() {
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      Integer e = number();
      if (!e.fits_slong_p()) fail("exponent too large");
      return e.get_si();
    }
    return 1;
  }

  std::pair<Monomial, SparsePoly> term() {
    Monomial mono(n_);
    SparsePoly coeff = SparsePoly::constant(n_, Rational(1));
    bool need = true;
    while (need) {
      need = false;
      if (pos_ >= src_.size()) fail("unexpected end of input");
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Rational q(number());
        if (pos_ < src_.size() && src_[pos_] == '/') {
          ++pos_;
          Integer den = number();
          if (den == 0) fail("zero denominator");
          q /= Rational(den);
        }
        coeff *= q;
      } else if (c == var_ || c == 'a' || c == 'b') {
        ++pos_;
        Integer idx = number();
        if (idx == 0 || idx > n_) fail(std::string("index out of range for ") + c);
        std::int64_t e = exponent();
        std::size_t i = idx.get_ui();
        if (c == var_) {
          mono = mono * Monomial::power(n_, i, Integer(e));
        } else {
          coeff *= (c == 'a' ? SparsePoly::a(n_, i, e) : SparsePoly::b(n_, i, e));
        }
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      if (pos_ < src_.size() && src_[pos_] == '*') {
        ++pos_;
        need = true;
      }
    }
    return {mono, coeff};
  }

  std::size_t n_;
  char var_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

SymPoly parse_dual_poly(std::string_view text, std::size_t n) { return DualPolyParser(text, n, 'X').parse(); }

QPoly parse_x_poly(std::string_view text, std::size_t n) {
  SymPoly p = DualPolyParser(text, n, 'x').parse();
  QPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_constant()) throw DomainError("coefficient symbols are not allowed here: " + c.to_string());
    out.add_term(m, c.terms().begin()->second);
  }
  return out;
}

QPoly parse_numeric_dual_poly(std::string_view text, std::size_t n) {
  SymPoly p = parse_dual_poly(text, n);
  QPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_constant()) throw DomainError("coefficient symbols are not allowed here: " + c.to_string());
    out.add_term(m, c.terms().begin()->second);
  }
  return out;
}

}  // namespace bci
