#pragma once

#include "bci/family.hpp"
#include "bci/monomial.hpp"
#include "bci/sparse_poly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bci {

enum class VertexClass { Sink, Transient, Cyclic };

const char* to_string(VertexClass c);

/// A directed cycle, listed from its lex-smallest vertex.
struct Cycle {
  std::vector<std::size_t> vertex_ids;
  std::vector<Monomial> vertices;
  /// r_i = number of i-labeled edges on the cycle.
  std::vector<std::int64_t> label_counts;
};

/// The reduction graph on all degree-d monomials. Each vertex outside
/// M_{d_1..d_n} has one edge m -> m * m_i / x_i^{d_i}, labeled by the least i
/// with x_i^{d_i} | m. Structure depends only on the degrees and tails.
class ReductionGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ReductionGraph(const BinomialFamily& fam, unsigned long d);

  unsigned long degree() const { return degree_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return index_.size(); }
  const MonomialIndex& index() const { return index_; }
  const std::vector<Monomial>& vertices() const { return index_.monomials(); }
  const Monomial& vertex(std::size_t v) const { return index_.at(v); }

  /// npos for sinks.
  std::size_t successor(std::size_t v) const { return succ_.at(v); }
  /// 1-based generator index; 0 for sinks.
  std::size_t label(std::size_t v) const { return label_.at(v); }
  VertexClass vertex_class(std::size_t v) const { return class_.at(v); }
  /// Index into cycles() for cyclic vertices.
  std::optional<std::size_t> cycle_of(std::size_t v) const;
  const std::vector<Cycle>& cycles() const { return cycles_; }

  std::size_t edge_count() const;
  std::vector<std::size_t> sinks() const;
  /// Reverse adjacency, each list in increasing vertex order.
  std::vector<std::vector<std::size_t>> predecessors() const;
  /// True iff every edge labeled i starts at a cyclic vertex.
  bool all_edges_on_cycles(std::size_t i) const;

 private:
  void classify();

  unsigned long degree_;
  std::size_t num_vars_;
  MonomialIndex index_;
  std::vector<std::size_t> succ_;
  std::vector<std::size_t> label_;
  std::vector<VertexClass> class_;
  std::vector<std::size_t> cycle_id_;
  std::vector<Cycle> cycles_;
};

ReductionGraph build_graph(const BinomialFamily& fam, unsigned long d);

/// a^r - b^r for the cycle's label counts.
SparsePoly cycle_polynomial(const Cycle& c);
SparsePoly cycle_polynomial(const std::vector<std::int64_t>& label_counts);

/// Product of cycle_polynomial over all cycles; 1 for an acyclic graph.
SparsePoly graph_cycle_polynomial(const ReductionGraph& g);

/// Graphviz digraph; cyclic vertices drawn red, sinks boxed.
std::string to_dot(const ReductionGraph& g);

}  // namespace bci
