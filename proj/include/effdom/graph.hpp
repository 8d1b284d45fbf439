#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace effdom {

// Normalized undirected edge: first < second.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 1..n with sorted adjacency lists.
// No self-loops; duplicate edges are collapsed at construction (with a flag).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Normalizing constructor: validates ranges, rejects self-loops, collapses
  // duplicates. Throws std::invalid_argument on bad input.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  int degree(int v) const;
  std::span<const int> neighbors(int v) const;
  bool adjacent(int u, int v) const;
  bool collapsed_duplicates() const { return collapsed_duplicates_; }

  // All edges in lexicographic order.
  std::vector<Edge> edges() const;

  // Connected components as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::int64_t m_ = 0;
  bool collapsed_duplicates_ = false;
  std::vector<std::vector<int>> adj_;  // index 0 unused
};

// Spec-facing builder name.
Graph build_graph(int n, std::span<const Edge> edges);

// G^2: same vertices, u~v iff 1 <= dist_G(u,v) <= 2.
Graph square(const Graph& g);

// Line graph with labels: vertex i of `graph` corresponds to edge_label[i-1]
// of the source graph; source edges are numbered 1..m in lexicographic order.
struct LabeledLineGraph {
  Graph graph;
  std::vector<Edge> edge_label;
};
LabeledLineGraph line_graph(const Graph& g);

// Vertex weights, 1-based (index 0 unused).
using WeightMap = std::vector<std::int64_t>;

// w(v) = |N[v]| = deg(v) + 1.
WeightMap neighborhood_weights(const Graph& g);

// True iff no two members of s are adjacent. Throws on out-of-range or
// duplicate members.
bool is_independent_set(const Graph& g, std::span<const int> s);

// Subgraph induced by `vertices` (must be valid, duplicate-free). New vertex
// i+1 corresponds to vertices[i] after sorting; the sorted original labels are
// written to *to_original when given.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices,
                       std::vector<int>* to_original = nullptr);

}  // namespace effdom
