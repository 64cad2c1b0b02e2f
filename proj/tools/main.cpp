// bci: command-line front end for binomial complete intersections.

#include "selftest.hpp"

#include <bci/dual.hpp>
#include <bci/family.hpp>
#include <bci/lefschetz.hpp>
#include <bci/oracle.hpp>
#include <bci/reduction_graph.hpp>
#include <bci/resultant.hpp>
#include <bci/rewrite.hpp>
#include <bci/serialize.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

namespace {

using namespace bci;

enum class Format { Text, Json, Dot };

struct Common {
  std::string family;
  std::string spec;
  std::string format = "text";
  std::uint64_t seed = 0x5eed;
};

// Exit statuses.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  throw UsageError("unknown format '" + s + "'");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ValidationError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path when it names a file, inline source otherwise.
BinomialFamily family_of(const Common& c) {
  if (c.family.empty()) throw UsageError("--family is required");
  BinomialFamily fam = std::filesystem::exists(c.family) ? load_family(c.family) : parse_family_source(c.family);
  if (!c.spec.empty()) fam = specialize(fam, parse_assignment(c.spec, fam.n()));
  return fam;
}

void add_common(CLI::App* sub, Common& c, bool need_family = true) {
  auto* f = sub->add_option("--family", c.family, "family file (.json or text) or inline generator text");
  if (need_family) f->required();
  sub->add_option("--spec", c.spec, "coefficient values, e.g. \"a=1,b3=2/3\"");
  sub->add_option("--format", c.format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));
  sub->add_option("--seed", c.seed, "seed for random choices");
}

Monomial parse_monomial(const std::string& text, std::size_t n) {
  QPoly p = parse_x_poly(text, n);
  if (p.term_count() != 1 || p.terms().begin()->second != 1) throw ValidationError("'" + text + "' is not a monomial");
  return p.terms().begin()->first;
}

std::string path_text(const ReductionOutcome& r) {
  std::string s = r.path.front().to_string();
  for (std::size_t k = 0; k < r.labels.size(); ++k)
    s += " --" + std::to_string(r.labels[k]) + "--> " + r.path[k + 1].to_string();
  return s;
}

int cmd_graph(const Common& c, std::optional<unsigned long> degree) {
  BinomialFamily fam = family_of(c);
  ReductionGraph g(fam, degree.value_or(fam.resultant_degree()));
  switch (parse_format(c.format)) {
    case Format::Dot: std::cout << to_dot(g); break;
    case Format::Json: std::cout << graph_to_json(g); break;
    case Format::Text:
      std::cout << "degree " << g.degree() << ": " << g.size() << " vertices, " << g.edge_count() << " edges, "
                << g.sinks().size() << " sinks, " << g.cycles().size() << " cycles\n";
      for (std::size_t v = 0; v < g.size(); ++v) {
        std::cout << "  " << g.vertex(v).to_string() << " [" << to_string(g.vertex_class(v)) << "]";
        if (g.successor(v) != ReductionGraph::npos)
          std::cout << " --" << g.label(v) << "--> " << g.vertex(g.successor(v)).to_string();
        std::cout << '\n';
      }
      for (const Cycle& cy : g.cycles()) {
        std::cout << "cycle";
        for (const auto& m : cy.vertices) std::cout << ' ' << m.to_string();
        std::cout << "  p = " << cycle_polynomial(cy).to_string() << '\n';
      }
      std::cout << "p(G) = " << graph_cycle_polynomial(g).to_string() << '\n';
      break;
  }
  return kOk;
}

int cmd_reduce(const Common& c, const std::string& monomial, const std::string& polynomial, bool with_cert,
               std::optional<std::size_t> k) {
  BinomialFamily fam = family_of(c);
  Format fmt = parse_format(c.format);
  if (monomial.empty() == polynomial.empty()) throw UsageError("give exactly one of --monomial and --polynomial");
  if (!polynomial.empty()) {
    if (with_cert) throw UsageError("--certificate needs --monomial");
    ReducedPolynomial r = reduce_polynomial(fam, parse_x_poly(polynomial, fam.n()));
    if (fmt == Format::Json) {
      std::cout << reduced_to_json(r);
    } else {
      std::cout << r.value.to_string() << '\n';
      for (const auto& m : r.conditional_zeros)
        std::cout << "# " << m.to_string() << " enters a cycle; zero only if the family is a complete intersection\n";
    }
    return kOk;
  }
  Monomial m = parse_monomial(monomial, fam.n());
  std::size_t kk = k.value_or(fam.n());
  if (kk < 1 || kk > fam.n()) throw UsageError("--k must lie in 1.." + std::to_string(fam.n()));
  ReductionOutcome r = reduce_monomial(fam, m, kk);
  if (fmt == Format::Json) {
    std::cout << outcome_to_json(r);
    if (with_cert) std::cout << certificate_to_json(certificate(fam, m));
    return kOk;
  }
  if (r.kind == OutcomeKind::ToBasis) {
    std::cout << "coefficient: " << r.coeff.to_string() << '\n' << "basis: " << r.endpoint().to_string() << '\n';
  } else {
    std::cout << "enters a cycle at " << r.endpoint().to_string()
              << "; zero only if the family is a complete intersection\n";
  }
  std::cout << "path: " << path_text(r) << '\n';
  if (with_cert) {
    Certificate cert = certificate(fam, m);
    std::cout << "certificate (" << cert.steps.size() << " steps, "
              << (verify_certificate(fam, cert) ? "verified" : "FAILED verification") << "):\n"
              << to_text(cert) << '\n';
  }
  return kOk;
}

int cmd_dual(const Common& c, const std::string& convention) {
  BinomialFamily fam = family_of(c);
  DualGenerator F = dual_generator(fam, parse_convention(convention));
  if (parse_format(c.format) == Format::Json) {
    std::cout << dual_to_json(F);
    return kOk;
  }
  std::cout << "F = " << F.to_string() << '\n';
  std::cout << "s = (";
  for (std::size_t i = 0; i < F.s.size(); ++i) std::cout << (i ? "," : "") << F.s[i];
  std::cout << ")\n";
  return kOk;
}

int cmd_resultant(const Common& c, bool matrix, bool det, bool radical, bool probe, unsigned trials) {
  BinomialFamily fam = family_of(c);
  Format fmt = parse_format(c.format);
  if (!matrix && !det && !radical) radical = true;
  if (matrix) {
    CMatrix m = build_c_matrix(fam);
    std::cout << (fmt == Format::Json ? matrix_to_json(m) : m.to_text());
  }
  if (det) {
    SparsePoly d = det_structural(fam);
    if (fmt == Format::Json) std::cout << "{\n  \"det\": \"" << d.to_string() << "\"\n}\n";
    else std::cout << d.to_string() << '\n';
  }
  if (radical) {
    ProbeOptions opts;
    opts.trials = trials;
    opts.seed = c.seed;
    RadicalResult r = resultant_radical(fam, probe, opts);
    if (fmt == Format::Json) {
      std::cout << radical_to_json(r);
    } else {
      std::cout << r.to_string() << '\n';
      bool all_certain = std::all_of(r.status.begin(), r.status.end(), [](TStatus s) { return s == TStatus::Certain; });
      if (!all_certain) {
        std::cout << "# exponents of a:";
        for (std::size_t i = 0; i < r.n; ++i) std::cout << " t" << i + 1 << "=" << r.t[i] << " (" << to_string(r.status[i]) << ")";
        std::cout << '\n';
      }
    }
  }
  return kOk;
}

int cmd_hilbert(const Common& c, std::optional<unsigned long> max_degree) {
  BinomialFamily fam = family_of(c);
  if (!fam.is_numeric()) throw ValidationError("hilbert needs numeric coefficients; use --spec");
  HilbertFunction h = hilbert_function(fam, max_degree.value_or(fam.resultant_degree()));
  if (parse_format(c.format) == Format::Json) {
    std::cout << hilbert_to_json(h);
    return kOk;
  }
  std::cout << h.to_series() << '\n' << "values:";
  for (auto v : h.values) std::cout << ' ' << v;
  std::cout << '\n' << "complete intersection: " << (is_complete_intersection(fam) ? "yes" : "no") << '\n';
  return kOk;
}

std::size_t max_variable_index(const std::string& text) {
  static const std::regex var("X([0-9]+)");
  std::size_t n = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it)
    n = std::max<std::size_t>(n, std::stoul((*it)[1]));
  return n;
}

int cmd_lefschetz(const Common& c, const std::string& dual_file, unsigned trials, const std::string& convention) {
  Convention conv = parse_convention(convention);
  QPoly F;
  if (!dual_file.empty()) {
    std::string text = slurp(dual_file);
    std::size_t n = c.family.empty() ? max_variable_index(text) : family_of(c).n();
    if (n == 0) throw ValidationError("no variables in " + dual_file);
    SymPoly sym = parse_dual_poly(text, n);
    CoeffAssignment assign = c.spec.empty() ? CoeffAssignment::symbolic(n) : parse_assignment(c.spec, n);
    F = evaluate(sym, assign);
  } else {
    BinomialFamily fam = family_of(c);
    if (!fam.is_numeric()) throw ValidationError("lefschetz needs numeric coefficients; use --spec");
    F = dual_generator(fam, conv).evaluate(fam.coefficients());
  }
  std::mt19937_64 rng(c.seed);
  auto verdicts = slp_check(F, trials, rng, conv);
  if (parse_format(c.format) == Format::Json) {
    std::cout << lefschetz_to_json(verdicts);
    return kOk;
  }
  bool all = true;
  for (const auto& v : verdicts) {
    std::cout << "k=" << v.k << " basis=" << v.basis_size << " rank=" << v.rank << ' '
              << (v.maximal ? "maximal" : "probably fails") << '\n';
    all = all && v.maximal;
  }
  std::cout << "SLP: " << (all ? "holds" : "probably fails") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial complete intersections: reduction graphs, dual generators, resultants"};
  app.require_subcommand(1, 1);

  Common common;

  auto* graph = app.add_subcommand("graph", "build and export the reduction graph");
  add_common(graph, common);
  std::optional<unsigned long> degree;
  graph->add_option("--degree,-d", degree, "monomial degree (default: resultant degree)");

  auto* reduce = app.add_subcommand("reduce", "reduce a monomial or polynomial to the monomial basis");
  add_common(reduce, common);
  std::string monomial, polynomial;
  bool with_cert = false;
  std::optional<std::size_t> k;
  reduce->add_option("--monomial", monomial, "e.g. \"x1^2*x2\"");
  reduce->add_option("--polynomial", polynomial, "rational polynomial in x1..xn (numeric families)");
  reduce->add_flag("--certificate", with_cert, "print the rewriting certificate");
  reduce->add_option("--k", k, "only use the first k generators");

  auto* dual = app.add_subcommand("dual", "Macaulay dual generator");
  add_common(dual, common);
  std::string convention = "contraction";
  dual->add_option("--convention", convention, "contraction | differentiation")
      ->check(CLI::IsMember({"contraction", "differentiation"}));

  auto* resultant = app.add_subcommand("resultant", "coefficient matrix, determinant and resultant radical");
  add_common(resultant, common);
  bool matrix = false, det = false, radical = false, probe = false;
  unsigned probe_trials = 5;
  resultant->add_flag("--matrix", matrix, "print the coefficient matrix");
  resultant->add_flag("--det", det, "print its determinant");
  resultant->add_flag("--radical", radical, "print the radical of the resultant (default)");
  resultant->add_flag("--probe", probe, "decide undetermined a-exponents by random specialization");
  resultant->add_option("--probe-trials", probe_trials, "random trials per undetermined exponent");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a numeric family");
  add_common(hilbert, common);
  std::optional<unsigned long> max_degree;
  hilbert->add_option("--max-degree", max_degree, "last degree (default: socle degree + 1)");

  auto* lefschetz = app.add_subcommand("lefschetz", "Hessian ranks of a dual generator");
  add_common(lefschetz, common, false);
  std::string dual_file;
  unsigned trials = 5;
  std::string lconv = "contraction";
  lefschetz->add_option("--dual-file", dual_file, "file holding F in X1..Xn")->check(CLI::ExistingFile);
  lefschetz->add_option("--trials", trials, "random linear forms per order");
  lefschetz->add_option("--convention", lconv, "contraction | differentiation")
      ->check(CLI::IsMember({"contraction", "differentiation"}));

  auto* selftest = app.add_subcommand("selftest", "run the golden example suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e);
    return status == 0 ? kOk : kUsage;
  }

  try {
    if (*graph) return cmd_graph(common, degree);
    if (*reduce) return cmd_reduce(common, monomial, polynomial, with_cert, k);
    if (*dual) return cmd_dual(common, convention);
    if (*resultant) return cmd_resultant(common, matrix, det, radical, probe, probe_trials);
    if (*hilbert) return cmd_hilbert(common, max_degree);
    if (*lefschetz) {
      if (dual_file.empty() && common.family.empty()) throw UsageError("give --dual-file or --family");
      return cmd_lefschetz(common, dual_file, trials, lconv);
    }
    if (*selftest) return bci::cli::run_selftest(std::cout) == 0 ? kOk : kInvalid;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const bci::ParseError& e) {
    std::cerr << "family: " << e.what() << '\n';
    return kInvalid;
  } catch (const bci::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kInvalid;
  } catch (const bci::PreconditionError& e) {
    std::cerr << "oracle: " << e.what() << '\n';
    return kInvalid;
  } catch (const bci::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}
