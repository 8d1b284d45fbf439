#include "effdom/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace effdom {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range 1.." + std::to_string(n_));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.check_vertex(u);
    g.check_vertex(v);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 1; v <= n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    auto last = std::unique(nb.begin(), nb.end());
    if (last != nb.end()) {
      g.collapsed_duplicates_ = true;
      nb.erase(last, nb.end());
    }
    g.m_ += static_cast<std::int64_t>(nb.size());
  }
  g.m_ /= 2;
  return g;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(static_cast<size_t>(m_));
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
  std::vector<int> stack;
  for (int s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

Graph square(const Graph& g) {
  int n = g.vertex_count();
  Graph result(n);
  std::vector<int> stamp(static_cast<size_t>(n) + 1, 0);
  std::vector<Edge> sq_edges;
  for (int v = 1; v <= n; ++v) {
    stamp[v] = v;
    std::vector<int> reach;
    for (int u : g.neighbors(v)) {
      if (stamp[u] != v) {
        stamp[u] = v;
        if (u > v) reach.push_back(u);
      }
      for (int w : g.neighbors(u)) {
        if (stamp[w] != v) {
          stamp[w] = v;
          if (w > v) reach.push_back(w);
        }
      }
    }
    for (int u : reach) sq_edges.emplace_back(v, u);
  }
  return Graph::from_edges(n, sq_edges);
}

LabeledLineGraph line_graph(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> labels = g.edges();  // lexicographic, 1-based index i -> labels[i-1]
  int m = static_cast<int>(labels.size());
  // Incident edge indices per vertex.
  std::vector<std::vector<int>> incident(static_cast<size_t>(n) + 1);
  for (int i = 0; i < m; ++i) {
    incident[labels[i].first].push_back(i + 1);
    incident[labels[i].second].push_back(i + 1);
  }
  std::vector<Edge> lg_edges;
  for (int v = 1; v <= n; ++v) {
    const auto& inc = incident[v];
    for (size_t a = 0; a < inc.size(); ++a)
      for (size_t b = a + 1; b < inc.size(); ++b)
        lg_edges.emplace_back(std::min(inc[a], inc[b]), std::max(inc[a], inc[b]));
  }
  // Two distinct edges share at most one endpoint, so no duplicates arise.
  LabeledLineGraph result{Graph::from_edges(m, lg_edges), std::move(labels)};
  return result;
}

WeightMap neighborhood_weights(const Graph& g) {
  WeightMap w(static_cast<size_t>(g.vertex_count()) + 1, 0);
  for (int v = 1; v <= g.vertex_count(); ++v) w[v] = g.degree(v) + 1;
  return w;
}

bool is_independent_set(const Graph& g, std::span<const int> s) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()) + 1, 0);
  for (int v : s) {
    if (v < 1 || v > g.vertex_count())
      throw std::invalid_argument("set member " + std::to_string(v) +
                                  " out of range");
    if (in[v])
      throw std::invalid_argument("duplicate set member " + std::to_string(v));
    in[v] = 1;
  }
  for (int v : s)
    for (int u : g.neighbors(v))
      if (in[u]) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices,
                       std::vector<int>* to_original) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> new_index(static_cast<size_t>(g.vertex_count()) + 1, 0);
  for (size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 1 || v > g.vertex_count())
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range");
    if (new_index[v])
      throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    new_index[v] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> sub_edges;
  for (int v : sorted)
    for (int u : g.neighbors(v))
      if (new_index[u] && u > v)
        sub_edges.emplace_back(new_index[v], new_index[u]);
  if (to_original) *to_original = sorted;
  return Graph::from_edges(static_cast<int>(sorted.size()), sub_edges);
}

}  // namespace effdom
