#include "bci/family.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace bci {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

BinomialFamily::BinomialFamily(std::vector<unsigned long> degrees, std::vector<Monomial> tails, CoeffAssignment coeffs)
    : degrees_(std::move(degrees)), tails_(std::move(tails)), coeffs_(std::move(coeffs)) {
  const std::size_t n = degrees_.size();
  if (n == 0) throw ValidationError("family needs at least one generator");
  if (tails_.size() != n) throw ValidationError("expected " + std::to_string(n) + " tails, got " + std::to_string(tails_.size()));
  if (coeffs_.a.size() != n || coeffs_.b.size() != n)
    throw ValidationError("coefficient assignment must cover " + std::to_string(n) + " generators");
  for (std::size_t i = 1; i <= n; ++i) {
    const auto d = degrees_[i - 1];
    const auto& m = tails_[i - 1];
    if (d == 0) throw ValidationError("f" + std::to_string(i) + ": degree must be positive");
    if (m.num_vars() != n)
      throw ValidationError("f" + std::to_string(i) + ": tail has " + std::to_string(m.num_vars()) + " variables, expected " +
                            std::to_string(n));
    if (m.degree() != d)
      throw ValidationError("f" + std::to_string(i) + ": tail " + m.to_string() + " has degree " + m.degree().get_str() +
                            ", expected " + std::to_string(d) + " (inhomogeneous tail)");
    if (m == leading_monomial(i))
      throw ValidationError("f" + std::to_string(i) + ": tail equals x" + std::to_string(i) + "^" + std::to_string(d));
    if (coeffs_.a[i - 1] && *coeffs_.a[i - 1] == 0)
      throw ValidationError("f" + std::to_string(i) + ": a" + std::to_string(i) + " must be nonzero");
  }
}

BinomialFamily BinomialFamily::symbolic(std::vector<unsigned long> degrees, std::vector<Monomial> tails) {
  std::size_t n = degrees.size();
  return BinomialFamily(std::move(degrees), std::move(tails), CoeffAssignment::symbolic(n));
}

Monomial BinomialFamily::leading_monomial(std::size_t i) const { return Monomial::power(n(), i, Integer(degree(i))); }

unsigned long BinomialFamily::socle_degree() const {
  unsigned long D = 0;
  for (auto d : degrees_) D += d - 1;
  return D;
}

bool BinomialFamily::in_basis_set(const Monomial& m, std::size_t k) const {
  for (std::size_t i = 1; i <= k; ++i)
    if (m.exp(i) >= degree(i)) return false;
  return true;
}

std::size_t BinomialFamily::reducing_index(const Monomial& m) const {
  for (std::size_t i = 1; i <= n(); ++i)
    if (m.exp(i) >= degree(i)) return i;
  return 0;
}

SparsePoly BinomialFamily::coeff_a(std::size_t i) const {
  const auto& v = coeffs_.a.at(i - 1);
  return v ? SparsePoly::constant(n(), *v) : SparsePoly::a(n(), i);
}

SparsePoly BinomialFamily::coeff_b(std::size_t i) const {
  const auto& v = coeffs_.b.at(i - 1);
  return v ? SparsePoly::constant(n(), *v) : SparsePoly::b(n(), i);
}

SymPoly BinomialFamily::generator(std::size_t i) const {
  SymPoly f(n());
  f.add_term(leading_monomial(i), coeff_a(i));
  f.add_term(tail(i), -coeff_b(i));
  return f;
}

QPoly BinomialFamily::numeric_generator(std::size_t i) const {
  if (!is_numeric()) throw DomainError("numeric generator requested for a family with free symbols");
  QPoly f(n());
  f.add_term(leading_monomial(i), *coeffs_.a[i - 1]);
  f.add_term(tail(i), -*coeffs_.b[i - 1]);
  return f;
}

// ---------------------------------------------------------------------------
// Text front end

namespace {

enum class Tok { Ident, Number, Slash, Star, Caret, Equals, Minus, Sep, End };

struct Token {
  Tok kind;
  char letter = 0;
  std::string text;
  std::size_t line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') break;
      if (!std::isspace(static_cast<unsigned char>(c))) break;
      advance();
    }
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Tok::Ident;
      t.letter = c;
      advance();
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text.push_back(src_[pos_]);
        advance();
      }
      if (t.text.empty()) throw ParseError(std::string("expected an index after '") + c + "'", t.line, t.column);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text.push_back(src_[pos_]);
        advance();
      }
      return t;
    }
    advance();
    switch (c) {
      case '/': t.kind = Tok::Slash; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '=': t.kind = Tok::Equals; break;
      case '-': t.kind = Tok::Minus; break;
      case ';':
      case '\n': t.kind = Tok::Sep; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }
    t.text = std::string(1, c);
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

enum class CoeffKind { None, A, B, Literal };

struct ParsedTerm {
  CoeffKind kind = CoeffKind::None;
  std::size_t index = 0;
  Rational value{1};
  std::map<std::size_t, Integer> factors;
  std::size_t line = 1, column = 1;
};

struct ParsedGenerator {
  std::size_t index = 0;
  ParsedTerm lead, tail;
  std::size_t line = 1, column = 1;
};

std::size_t to_index(const Token& t) {
  Integer v(t.text);
  if (v == 0 || !v.fits_ulong_p()) throw ParseError("index must be a positive integer", t.line, t.column);
  return v.get_ui();
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  std::vector<ParsedGenerator> parse() {
    std::vector<ParsedGenerator> out;
    for (;;) {
      while (tok_.kind == Tok::Sep) shift();
      if (tok_.kind == Tok::End) break;
      out.push_back(generator());
      if (tok_.kind != Tok::Sep && tok_.kind != Tok::End) fail("expected ';' or newline after generator");
    }
    if (out.empty()) throw ParseError("no generators found", tok_.line, tok_.column);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, tok_.line, tok_.column); }
  void shift() { tok_ = lex_.next(); }
  void expect(Tok k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what);
    shift();
  }

  ParsedGenerator generator() {
    ParsedGenerator g;
    g.line = tok_.line;
    g.column = tok_.column;
    if (tok_.kind != Tok::Ident || tok_.letter != 'f') fail("expected generator name 'f<index>'");
    g.index = to_index(tok_);
    shift();
    expect(Tok::Equals, "'='");
    g.lead = term();
    expect(Tok::Minus, "'-' between the two terms");
    g.tail = term();
    return g;
  }

  ParsedTerm term() {
    ParsedTerm t;
    t.line = tok_.line;
    t.column = tok_.column;
    bool have_coeff = false;
    if (tok_.kind == Tok::Ident && (tok_.letter == 'a' || tok_.letter == 'b')) {
      t.kind = tok_.letter == 'a' ? CoeffKind::A : CoeffKind::B;
      t.index = to_index(tok_);
      shift();
      have_coeff = true;
    } else if (tok_.kind == Tok::Number || tok_.kind == Tok::Minus) {
      t.kind = CoeffKind::Literal;
      t.value = rational();
      have_coeff = true;
    }
    bool need_factor = !have_coeff;
    while (true) {
      if (need_factor) {
        factor(t);
      } else if (tok_.kind == Tok::Star) {
        shift();
        factor(t);
      } else {
        break;
      }
      need_factor = false;
    }
    return t;
  }

  Rational rational() {
    std::string s;
    if (tok_.kind == Tok::Minus) {
      s.push_back('-');
      shift();
    }
    if (tok_.kind != Tok::Number) fail("expected a number");
    s += tok_.text;
    shift();
    if (tok_.kind == Tok::Slash) {
      shift();
      if (tok_.kind != Tok::Number) fail("expected a denominator");
      if (Integer(tok_.text) == 0) fail("zero denominator");
      s += "/" + tok_.text;
      shift();
    }
    return parse_rational(s);
  }

  void factor(ParsedTerm& t) {
    if (tok_.kind != Tok::Ident || tok_.letter != 'x') fail("expected a variable 'x<index>'");
    std::size_t var = to_index(tok_);
    shift();
    Integer e = 1;
    if (tok_.kind == Tok::Caret) {
      shift();
      if (tok_.kind != Tok::Number) fail("expected an exponent");
      e = Integer(tok_.text);
      shift();
    }
    t.factors[var] += e;
  }

  Lexer lex_;
  Token tok_;
};

Monomial build_monomial(const ParsedTerm& t, std::size_t n, std::size_t gen) {
  std::vector<Integer> exps(n, Integer(0));
  for (const auto& [var, e] : t.factors) {
    if (var > n)
      throw ValidationError("f" + std::to_string(gen) + ": variable x" + std::to_string(var) + " exceeds the " +
                            std::to_string(n) + " generators");
    exps[var - 1] += e;
  }
  return Monomial(std::move(exps));
}

}  // namespace

BinomialFamily parse_family(std::string_view text) {
  auto gens = Parser(text).parse();
  const std::size_t n = gens.size();
  std::vector<const ParsedGenerator*> by_index(n, nullptr);
  for (const auto& g : gens) {
    if (g.index > n) throw ValidationError("missing generator index: f" + std::to_string(g.index) + " given but only " +
                                           std::to_string(n) + " generators");
    if (by_index[g.index - 1]) throw ValidationError("duplicate generator index f" + std::to_string(g.index));
    by_index[g.index - 1] = &g;
  }
  std::vector<unsigned long> degrees(n);
  std::vector<Monomial> tails(n);
  CoeffAssignment coeffs = CoeffAssignment::symbolic(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto* g = by_index[i - 1];
    if (!g) throw ValidationError("missing generator index f" + std::to_string(i));
    const std::string name = "f" + std::to_string(i);
    Monomial lead = build_monomial(g->lead, n, i);
    auto var = lead.pure_power_variable();
    if (!var || *var != i)
      throw ValidationError(name + ": leading term must be a power of x" + std::to_string(i) + ", got " + lead.to_string());
    if (!lead.exp(i).fits_ulong_p()) throw ValidationError(name + ": degree too large");
    degrees[i - 1] = lead.exp(i).get_ui();
    tails[i - 1] = build_monomial(g->tail, n, i);
    switch (g->lead.kind) {
      case CoeffKind::A:
        if (g->lead.index != i) throw ValidationError(name + ": leading coefficient must be a" + std::to_string(i));
        break;
      case CoeffKind::B: throw ValidationError(name + ": leading coefficient cannot be a b-symbol");
      case CoeffKind::Literal: coeffs.a[i - 1] = g->lead.value; break;
      case CoeffKind::None: coeffs.a[i - 1] = Rational(1); break;
    }
    switch (g->tail.kind) {
      case CoeffKind::B:
        if (g->tail.index != i) throw ValidationError(name + ": tail coefficient must be b" + std::to_string(i));
        break;
      case CoeffKind::A: throw ValidationError(name + ": tail coefficient cannot be an a-symbol");
      case CoeffKind::Literal: coeffs.b[i - 1] = g->tail.value; break;
      case CoeffKind::None: coeffs.b[i - 1] = Rational(1); break;
    }
  }
  return BinomialFamily(std::move(degrees), std::move(tails), std::move(coeffs));
}

std::string to_text(const BinomialFamily& fam) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= fam.n(); ++i) {
    if (i > 1) os << '\n';
    os << 'f' << i << " = ";
    const auto& a = fam.coefficients().a[i - 1];
    if (!a) {
      os << 'a' << i << '*';
    } else if (*a != 1) {
      os << a->get_str() << '*';
    }
    os << fam.leading_monomial(i).to_string() << " - ";
    const auto& b = fam.coefficients().b[i - 1];
    if (!b) {
      os << 'b' << i << '*';
    } else if (*b != 1) {
      os << b->get_str() << '*';
    }
    os << fam.tail(i).to_string();
  }
  return os.str();
}

BinomialFamily specialize(const BinomialFamily& fam, const CoeffAssignment& assign) {
  if (assign.size() != fam.n() || assign.b.size() != fam.n())
    throw ValidationError("assignment covers " + std::to_string(assign.size()) + " generators, family has " +
                          std::to_string(fam.n()));
  CoeffAssignment merged = fam.coefficients();
  for (std::size_t i = 0; i < fam.n(); ++i) {
    if (assign.a[i]) {
      if (*assign.a[i] == 0) throw ValidationError("cannot assign a" + std::to_string(i + 1) + " = 0");
      merged.a[i] = assign.a[i];
    }
    if (assign.b[i]) merged.b[i] = assign.b[i];
  }
  return BinomialFamily(fam.degrees(), fam.tails(), std::move(merged));
}

CoeffAssignment parse_assignment(std::string_view text, std::size_t n) {
  CoeffAssignment out = CoeffAssignment::symbolic(n);
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(start, end - start);
    start = end + 1;
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) {
      if (end == s.size()) break;
      continue;
    }
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("assignment entry '" + item + "' must look like a1=3/2");
    std::string lhs = item.substr(0, eq);
    Rational value = parse_rational(item.substr(eq + 1));
    char sym = lhs[0];
    if (sym != 'a' && sym != 'b') throw DomainError("assignment symbol must start with 'a' or 'b': " + lhs);
    auto& target = sym == 'a' ? out.a : out.b;
    if (lhs.size() == 1) {
      for (auto& v : target) v = value;
    } else {
      std::string idx = lhs.substr(1);
      if (!std::all_of(idx.begin(), idx.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw DomainError("bad symbol '" + lhs + "'");
      unsigned long i = std::stoul(idx);
      if (i == 0 || i > n) throw DomainError("symbol " + lhs + " out of range 1.." + std::to_string(n));
      target[i - 1] = value;
    }
    if (end == s.size()) break;
  }
  return out;
}

}  // namespace bci
