#include "bci/reduction_graph.hpp"

#include <algorithm>
#include <sstream>

namespace bci {

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Sink: return "sink";
    case VertexClass::Transient: return "transient";
    case VertexClass::Cyclic: return "cyclic";
  }
  return "?";
}

ReductionGraph::ReductionGraph(const BinomialFamily& fam, unsigned long d)
    : degree_(d), num_vars_(fam.n()), index_(monomials_of_degree(fam.n(), d)) {
  if (d == 0) throw DomainError("reduction graph degree must be positive");
  const std::size_t N = index_.size();
  succ_.assign(N, npos);
  label_.assign(N, 0);
  for (std::size_t v = 0; v < N; ++v) {
    const Monomial& m = index_.at(v);
    std::size_t i = fam.reducing_index(m);
    if (i == 0) continue;
    label_[v] = i;
    succ_[v] = index_.index_of(m / fam.leading_monomial(i) * fam.tail(i));
  }
  classify();
}

void ReductionGraph::classify() {
  enum Color : unsigned char { White, Gray, Black };
  const std::size_t N = succ_.size();
  std::vector<Color> color(N, White);
  class_.assign(N, VertexClass::Transient);
  cycle_id_.assign(N, npos);
  std::vector<std::size_t> walk;
  for (std::size_t start = 0; start < N; ++start) {
    if (color[start] != White) continue;
    walk.clear();
    std::size_t v = start;
    while (v != npos && color[v] == White) {
      color[v] = Gray;
      walk.push_back(v);
      v = succ_[v];
    }
    if (v != npos && color[v] == Gray) {
      // The walk closed on itself: the suffix starting at v is a new cycle.
      auto first = std::find(walk.begin(), walk.end(), v);
      std::vector<std::size_t> ids(first, walk.end());
      auto smallest = std::min_element(ids.begin(), ids.end(),
                                       [&](std::size_t x, std::size_t y) { return index_.at(x) < index_.at(y); });
      std::rotate(ids.begin(), smallest, ids.end());
      Cycle c;
      c.label_counts.assign(num_vars_, 0);
      for (std::size_t id : ids) {
        c.vertex_ids.push_back(id);
        c.vertices.push_back(index_.at(id));
        c.label_counts[label_[id] - 1] += 1;
        class_[id] = VertexClass::Cyclic;
        cycle_id_[id] = cycles_.size();
      }
      cycles_.push_back(std::move(c));
    }
    for (std::size_t w : walk) color[w] = Black;
  }
  for (std::size_t v = 0; v < N; ++v)
    if (succ_[v] == npos) class_[v] = VertexClass::Sink;

  // Order cycles by the canonical position of their first vertex.
  std::vector<std::size_t> order(cycles_.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return cycles_[x].vertex_ids.front() < cycles_[y].vertex_ids.front(); });
  std::vector<Cycle> sorted;
  std::vector<std::size_t> remap(cycles_.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    sorted.push_back(std::move(cycles_[order[k]]));
  }
  cycles_ = std::move(sorted);
  for (auto& id : cycle_id_)
    if (id != npos) id = remap[id];
}

std::optional<std::size_t> ReductionGraph::cycle_of(std::size_t v) const {
  std::size_t id = cycle_id_.at(v);
  if (id == npos) return std::nullopt;
  return id;
}

std::size_t ReductionGraph::edge_count() const {
  return static_cast<std::size_t>(std::count_if(succ_.begin(), succ_.end(), [](std::size_t s) { return s != npos; }));
}

std::vector<std::size_t> ReductionGraph::sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < succ_.size(); ++v)
    if (succ_[v] == npos) out.push_back(v);
  return out;
}

std::vector<std::vector<std::size_t>> ReductionGraph::predecessors() const {
  std::vector<std::vector<std::size_t>> pred(succ_.size());
  for (std::size_t v = 0; v < succ_.size(); ++v)
    if (succ_[v] != npos) pred[succ_[v]].push_back(v);
  return pred;
}

bool ReductionGraph::all_edges_on_cycles(std::size_t i) const {
  for (std::size_t v = 0; v < succ_.size(); ++v)
    if (label_[v] == i && class_[v] != VertexClass::Cyclic) return false;
  return true;
}

ReductionGraph build_graph(const BinomialFamily& fam, unsigned long d) { return ReductionGraph(fam, d); }

SparsePoly cycle_polynomial(const std::vector<std::int64_t>& label_counts) {
  return SparsePoly::binomial_difference(label_counts);
}

SparsePoly cycle_polynomial(const Cycle& c) { return cycle_polynomial(c.label_counts); }

SparsePoly graph_cycle_polynomial(const ReductionGraph& g) {
  SparsePoly p = SparsePoly::constant(g.num_vars(), Rational(1));
  for (const auto& c : g.cycles()) p *= cycle_polynomial(c);
  return p;
}

std::string to_dot(const ReductionGraph& g) {
  std::ostringstream os;
  os << "digraph G_" << g.degree() << " {\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << "  \"" << g.vertex(v).to_string() << '"';
    switch (g.vertex_class(v)) {
      case VertexClass::Cyclic: os << " [color=red, fontcolor=red, penwidth=2]"; break;
      case VertexClass::Sink: os << " [shape=box]"; break;
      case VertexClass::Transient: break;
    }
    os << ";\n";
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::size_t w = g.successor(v);
    if (w == ReductionGraph::npos) continue;
    os << "  \"" << g.vertex(v).to_string() << "\" -> \"" << g.vertex(w).to_string() << "\" [label=\"" << g.label(v)
       << '"';
    if (g.vertex_class(v) == VertexClass::Cyclic) os << ", color=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bci
