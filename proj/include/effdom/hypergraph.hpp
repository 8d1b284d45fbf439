#pragma once

#include <span>
#include <vector>

#include "effdom/graph.hpp"

namespace effdom {

// Hypergraph on vertices 1..n with hyperedges stored as sorted vertex lists.
// Hyperedges are a multiset (duplicates allowed, kept, and indexable);
// empty hyperedges are forbidden.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n) : n_(n) {}

  // Validates ranges, sorts each hyperedge, rejects empty hyperedges and
  // repeated vertices within one hyperedge.
  static Hypergraph from_edges(int n, std::vector<std::vector<int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const int> edge(int i) const;  // 1-based
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  // Hyperedge indices containing v, ascending (1-based vertex and indices).
  std::vector<std::vector<int>> incidence() const;

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
};

// Dual hypergraph: one vertex per hyperedge index of h, one hyperedge per
// vertex v of h (the set of indices of hyperedges containing v). Throws if
// some vertex of h lies in no hyperedge (its dual hyperedge would be empty).
Hypergraph dual(const Hypergraph& h);

// 2-section: graph on the same vertices, u~v iff some hyperedge contains both.
Graph two_section(const Hypergraph& h);

// Line graph L(h): graph on hyperedge indices 1..m, i~j iff the hyperedges
// intersect. Vertex i of the result corresponds to hyperedge i of h.
Graph hyper_line_graph(const Hypergraph& h);

// N(G): hyperedge i = N[v_i], index-aligned with the vertices of g.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

// C(G): all inclusion-maximal cliques, each listed once. Defined for chordal
// inputs only (clique extraction walks a perfect elimination ordering);
// throws std::invalid_argument otherwise.
Hypergraph clique_hypergraph(const Graph& g);

// A graph viewed as a hypergraph with its 2-element edges (lexicographic
// order, matching line_graph's edge numbering).
Hypergraph as_hypergraph(const Graph& g);

}  // namespace effdom
