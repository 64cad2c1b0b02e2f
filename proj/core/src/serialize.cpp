#include "bci/serialize.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace bci {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json exponents(const Monomial& m) {
  json out = json::array();
  for (const Integer& e : m.exponents()) {
    if (e.fits_slong_p()) out.push_back(e.get_si());
    else out.push_back(e.get_str());
  }
  return out;
}

json monomial_list(const std::vector<Monomial>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

json coeff_values(const std::vector<std::optional<Rational>>& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x) out.push_back(to_string(*x));
    else out.push_back(nullptr);
  }
  return out;
}

Integer read_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ValidationError(what + " must be an integer");
}

std::optional<Rational> read_coeff(const json& j, const std::string& what) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw ValidationError(what + " must be a rational string or null");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const DomainError& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

}  // namespace

std::string family_to_json(const BinomialFamily& fam) {
  json j;
  j["n"] = fam.n();
  json gens = json::array();
  for (std::size_t i = 1; i <= fam.n(); ++i) gens.push_back({{"i", i}, {"d", fam.degree(i)}, {"m", exponents(fam.tail(i))}});
  j["generators"] = gens;
  const auto& c = fam.coefficients();
  json coeffs;
  if (c.fully_symbolic()) {
    coeffs["mode"] = "symbolic";
  } else {
    coeffs["mode"] = c.fully_numeric() ? "numeric" : "mixed";
    coeffs["a"] = coeff_values(c.a);
    coeffs["b"] = coeff_values(c.b);
  }
  j["coefficients"] = coeffs;
  return dump(j);
}

BinomialFamily family_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  try {
    if (!j.is_object()) throw ValidationError("family JSON must be an object");
    std::size_t n = j.at("n").get<std::size_t>();
    if (n == 0) throw ValidationError("family needs at least one generator");
    std::vector<std::optional<unsigned long>> degrees(n);
    std::vector<Monomial> tails(n);
    for (const json& g : j.at("generators")) {
      std::size_t i = g.at("i").get<std::size_t>();
      if (i == 0 || i > n) throw ValidationError("generator index " + std::to_string(i) + " out of range");
      if (degrees[i - 1]) throw ValidationError("duplicate generator index f" + std::to_string(i));
      degrees[i - 1] = g.at("d").get<unsigned long>();
      const json& m = g.at("m");
      if (!m.is_array() || m.size() != n)
        throw ValidationError("f" + std::to_string(i) + ": tail must list " + std::to_string(n) + " exponents");
      std::vector<Integer> e;
      for (const json& x : m) {
        e.push_back(read_integer(x, "f" + std::to_string(i) + " exponent"));
        if (e.back() < 0) throw ValidationError("f" + std::to_string(i) + ": negative exponent");
      }
      tails[i - 1] = Monomial(std::move(e));
    }
    std::vector<unsigned long> ds;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!degrees[i - 1]) throw ValidationError("missing generator f" + std::to_string(i));
      ds.push_back(*degrees[i - 1]);
    }
    CoeffAssignment coeffs = CoeffAssignment::symbolic(n);
    const json& c = j.at("coefficients");
    std::string mode = c.at("mode").get<std::string>();
    if (mode == "numeric" || mode == "mixed") {
      const json& a = c.at("a");
      const json& b = c.at("b");
      if (!a.is_array() || !b.is_array() || a.size() != n || b.size() != n)
        throw ValidationError("coefficient arrays must have length " + std::to_string(n));
      for (std::size_t i = 0; i < n; ++i) {
        coeffs.a[i] = read_coeff(a[i], "a" + std::to_string(i + 1));
        coeffs.b[i] = read_coeff(b[i], "b" + std::to_string(i + 1));
      }
      if (mode == "numeric" && !coeffs.fully_numeric()) throw ValidationError("numeric mode needs every coefficient");
    } else if (mode != "symbolic") {
      throw ValidationError("unknown coefficient mode '" + mode + "'");
    }
    return BinomialFamily(std::move(ds), std::move(tails), std::move(coeffs));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("family JSON: ") + e.what());
  }
}

BinomialFamily parse_family_source(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return family_from_json(text);
  return parse_family(text);
}

BinomialFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open family file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family_source(ss.str());
}

std::string graph_to_json(const ReductionGraph& g) {
  json j;
  j["d"] = g.degree();
  j["vertices"] = monomial_list(g.vertices());
  json classes = json::array();
  for (std::size_t v = 0; v < g.size(); ++v) classes.push_back(to_string(g.vertex_class(v)));
  j["classes"] = classes;
  json edges = json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.successor(v) == ReductionGraph::npos) continue;
    edges.push_back({{"from", g.vertex(v).to_string()}, {"to", g.vertex(g.successor(v)).to_string()}, {"label", g.label(v)}});
  }
  j["edges"] = edges;
  json cycles = json::array();
  for (const Cycle& c : g.cycles()) cycles.push_back({{"vertices", monomial_list(c.vertices)}, {"r", c.label_counts}});
  j["cycles"] = cycles;
  return dump(j);
}

namespace {

json outcome_json(const ReductionOutcome& r) {
  json j;
  j["kind"] = r.kind == OutcomeKind::ToBasis ? "to_basis" : "to_cycle";
  j["path"] = monomial_list(r.path);
  j["labels"] = r.labels;
  j["label_counts"] = r.label_counts;
  j["endpoint"] = r.endpoint().to_string();
  j["coefficient"] = r.coeff.to_string();
  j["conditional_zero"] = r.conditional_zero();
  if (r.conditional_zero()) j["cycle_label_counts"] = r.cycle_label_counts;
  return j;
}

}  // namespace

std::string outcome_to_json(const ReductionOutcome& r) { return dump(outcome_json(r)); }

std::string reduced_to_json(const ReducedPolynomial& r) {
  json j;
  j["value"] = r.value.to_string();
  j["conditional_zeros"] = monomial_list(r.conditional_zeros);
  return dump(j);
}

std::string certificate_to_json(const Certificate& c) {
  json j;
  j["input"] = c.input.to_string();
  j["a_product"] = c.a_product.to_string();
  json steps = json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"generator", s.generator},
                     {"multiplier", s.multiplier.to_string()},
                     {"scalar", s.scalar.to_string()},
                     {"from", s.from.to_string()},
                     {"to", s.to.to_string()}});
  j["steps"] = steps;
  j["rhs_coeff"] = c.rhs_coeff.to_string();
  j["rhs_monomial"] = c.rhs_monomial.to_string();
  j["ends_in_cycle"] = c.ends_in_cycle;
  return dump(j);
}

std::string dual_to_json(const DualGenerator& F) {
  json j;
  j["D"] = F.socle_degree;
  j["convention"] = to_string(F.convention);
  j["s"] = F.s;
  json terms = json::array();
  for (const auto& [alpha, c] : F.terms) terms.push_back({{"alpha", exponents(alpha)}, {"coeff", c.to_string()}});
  j["terms"] = terms;
  return dump(j);
}

std::string matrix_to_json(const CMatrix& m) {
  json j;
  j["d"] = m.degree();
  j["size"] = m.size();
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r)
    rows.push_back({{"row", m.index().at(r).to_string()},
                    {"i", m.part(r)},
                    {"successor", m.index().at(m.off_column(r)).to_string()}});
  j["rows"] = rows;
  return dump(j);
}

std::string radical_to_json(const RadicalResult& r) {
  json j;
  json t = json::array();
  for (std::size_t i = 0; i < r.n; ++i) t.push_back({{"i", i + 1}, {"t", r.t[i]}, {"status", to_string(r.status[i])}});
  j["a_exponents"] = t;
  json mono = json::array();
  for (const auto& [is_b, i] : r.monomial_part) mono.push_back((is_b ? "b" : "a") + std::to_string(i));
  j["monomial_part"] = mono;
  json factors = json::array();
  for (const auto& f : r.factors) factors.push_back(f.to_string());
  j["factors"] = factors;
  j["vanishes"] = r.vanishes;
  j["radical"] = r.to_string();
  j["product"] = r.product.to_string();
  return dump(j);
}

std::string hilbert_to_json(const HilbertFunction& h) {
  json j;
  j["values"] = h.values;
  j["series"] = h.to_series();
  return dump(j);
}

std::string lefschetz_to_json(const std::vector<LefschetzVerdict>& verdicts) {
  json out = json::array();
  for (const auto& v : verdicts) {
    json ell = json::array();
    for (const auto& c : v.ell) ell.push_back(to_string(c));
    out.push_back({{"k", v.k},
                   {"basis_size", v.basis_size},
                   {"rank", v.rank},
                   {"verdict", v.maximal ? "maximal" : "probably fails"},
                   {"ell", ell}});
  }
  return dump(out);
}

}  // namespace bci
