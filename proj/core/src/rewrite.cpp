#include "bci/rewrite.hpp"

#include <map>
#include <sstream>

namespace bci {

ReductionOutcome reduce_monomial(const BinomialFamily& fam, const Monomial& m, std::size_t k) {
  const std::size_t n = fam.n();
  if (k == 0 || k > n) throw DomainError("cutoff index must lie in 1.." + std::to_string(n));
  if (m.num_vars() != n) throw DomainError("monomial has the wrong number of variables");
  ReductionOutcome out;
  out.label_counts.assign(n, 0);
  std::map<Monomial, std::size_t> seen;
  Monomial cur = m;
  for (;;) {
    auto [it, fresh] = seen.emplace(cur, out.path.size());
    out.path.push_back(cur);
    if (!fresh) {
      out.kind = OutcomeKind::ToCycle;
      out.coeff = CoeffMonomial::constant(n, Rational(0));
      out.cycle_label_counts.assign(n, 0);
      for (std::size_t s = it->second; s < out.labels.size(); ++s) out.cycle_label_counts[out.labels[s] - 1] += 1;
      return out;
    }
    if (fam.in_basis_set(cur, k)) {
      out.kind = OutcomeKind::ToBasis;
      out.coeff = CoeffMonomial::path_ratio(out.label_counts);
      return out;
    }
    // Outside M_{d_1..d_k} the least reducing index is at most k.
    std::size_t i = fam.reducing_index(cur);
    out.labels.push_back(i);
    out.label_counts[i - 1] += 1;
    cur = cur / fam.leading_monomial(i) * fam.tail(i);
  }
}

ReducedPolynomial reduce_polynomial(const BinomialFamily& fam, const QPoly& p) {
  if (!fam.is_numeric()) throw DomainError("reduce_polynomial needs a fully numeric family");
  ReducedPolynomial out{QPoly(fam.n()), {}};
  for (const auto& [m, c] : p.terms()) {
    ReductionOutcome r = reduce_monomial(fam, m);
    if (r.kind == OutcomeKind::ToCycle) {
      out.conditional_zeros.push_back(m);
      continue;
    }
    out.value.add_term(r.endpoint(), c * r.coeff.evaluate(fam.coefficients()));
  }
  return out;
}

Certificate certificate(const BinomialFamily& fam, const Monomial& m) {
  const std::size_t n = fam.n();
  ReductionOutcome r = reduce_monomial(fam, m);
  Certificate cert;
  cert.input = m;
  cert.ends_in_cycle = r.kind == OutcomeKind::ToCycle;
  cert.rhs_monomial = r.endpoint();
  const auto& labels = r.labels;
  cert.a_product = CoeffMonomial(n);
  cert.rhs_coeff = CoeffMonomial(n);
  for (std::size_t i : labels) {
    cert.a_product = cert.a_product * CoeffMonomial::a(n, i);
    cert.rhs_coeff = cert.rhs_coeff * CoeffMonomial::b(n, i);
  }
  for (std::size_t s = 0; s < labels.size(); ++s) {
    CoeffMonomial ps(n);
    for (std::size_t l = s + 1; l < labels.size(); ++l) ps = ps * CoeffMonomial::a(n, labels[l]);
    for (std::size_t l = 0; l < s; ++l) ps = ps * CoeffMonomial::b(n, labels[l]);
    const std::size_t i = labels[s];
    cert.steps.push_back(CertificateStep{i, r.path[s] / fam.leading_monomial(i), ps, r.path[s], r.path[s + 1]});
  }
  return cert;
}

SymPoly certificate_residual(const BinomialFamily& fam, const Certificate& cert) {
  const auto& assign = fam.coefficients();
  auto lift = [&](const CoeffMonomial& c) { return SparsePoly::from(c.substitute(assign)); };
  const Monomial one(fam.n());
  SymPoly lhs(fam.n());
  lhs.add_term(cert.input, lift(cert.a_product));
  for (const auto& step : cert.steps) lhs -= fam.generator(step.generator).times_term(step.multiplier, lift(step.scalar));
  SymPoly rhs(fam.n());
  rhs.add_term(cert.rhs_monomial, lift(cert.rhs_coeff));
  return lhs - rhs;
}

bool verify_certificate(const BinomialFamily& fam, const Certificate& cert) {
  return certificate_residual(fam, cert).is_zero();
}

std::string to_text(const Certificate& cert) {
  std::ostringstream os;
  auto scaled = [](const CoeffMonomial& c, const Monomial& m) {
    std::string s = c.to_string();
    if (s == "1") return m.to_string();
    return s + "*" + m.to_string();
  };
  os << scaled(cert.a_product, cert.input);
  for (const auto& step : cert.steps) {
    os << "\n  - " << step.scalar.to_string() << " * " << step.multiplier.to_string() << " * f" << step.generator
       << "    [" << step.from.to_string() << " --" << step.generator << "--> " << step.to.to_string() << "]";
  }
  os << "\n  = " << scaled(cert.rhs_coeff, cert.rhs_monomial);
  if (cert.ends_in_cycle) {
    os << "\n  (path enters a cycle at " << cert.rhs_monomial.to_string() << ")";
  }
  return os.str();
}

}  // namespace bci
