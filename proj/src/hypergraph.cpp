#include "effdom/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "effdom/orderings.hpp"

namespace effdom {

Hypergraph Hypergraph::from_edges(int n, std::vector<std::vector<int>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Hypergraph h(n);
  for (size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    if (e.empty())
      throw std::invalid_argument("hyperedge " + std::to_string(i + 1) +
                                  " is empty");
    std::sort(e.begin(), e.end());
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 1 || e[k] > n)
        throw std::invalid_argument("hyperedge " + std::to_string(i + 1) +
                                    ": vertex " + std::to_string(e[k]) +
                                    " out of range 1.." + std::to_string(n));
      if (k > 0 && e[k] == e[k - 1])
        throw std::invalid_argument("hyperedge " + std::to_string(i + 1) +
                                    ": repeated vertex " +
                                    std::to_string(e[k]));
    }
  }
  h.edges_ = std::move(edges);
  return h;
}

std::span<const int> Hypergraph::edge(int i) const {
  if (i < 1 || i > edge_count())
    throw std::invalid_argument("hyperedge index " + std::to_string(i) +
                                " out of range");
  return edges_[static_cast<size_t>(i) - 1];
}

std::vector<std::vector<int>> Hypergraph::incidence() const {
  std::vector<std::vector<int>> inc(static_cast<size_t>(n_) + 1);
  for (int i = 1; i <= edge_count(); ++i)
    for (int v : edges_[static_cast<size_t>(i) - 1]) inc[v].push_back(i);
  return inc;
}

Hypergraph dual(const Hypergraph& h) {
  auto inc = h.incidence();
  std::vector<std::vector<int>> dual_edges;
  dual_edges.reserve(static_cast<size_t>(h.vertex_count()));
  for (int v = 1; v <= h.vertex_count(); ++v) {
    if (inc[v].empty())
      throw std::invalid_argument(
          "dual undefined: vertex " + std::to_string(v) +
          " lies in no hyperedge");
    dual_edges.push_back(inc[v]);
  }
  return Hypergraph::from_edges(h.edge_count(), std::move(dual_edges));
}

Graph two_section(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<Edge> edges;
  for (const auto& e : h.edges())
    for (size_t a = 0; a < e.size(); ++a)
      for (size_t b = a + 1; b < e.size(); ++b) edges.emplace_back(e[a], e[b]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

Graph hyper_line_graph(const Hypergraph& h) {
  int m = h.edge_count();
  auto inc = h.incidence();
  std::vector<Edge> edges;
  for (int v = 1; v <= h.vertex_count(); ++v) {
    const auto& lst = inc[v];
    for (size_t a = 0; a < lst.size(); ++a)
      for (size_t b = a + 1; b < lst.size(); ++b)
        edges.emplace_back(lst[a], lst[b]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(m, edges);
}

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::vector<int> e(g.neighbors(v).begin(), g.neighbors(v).end());
    e.push_back(v);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_edges(g.vertex_count(), std::move(edges));
}

Hypergraph clique_hypergraph(const Graph& g) {
  auto chordal = is_chordal_ordering(g);
  if (!chordal.valid)
    throw std::invalid_argument(
        "clique hypergraph is defined for chordal graphs only");
  const auto& sigma = chordal.order;
  int n = g.vertex_count();
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[sigma[static_cast<size_t>(i)]] = i;
  // Candidate clique of v = {v} + later neighbors. A candidate is maximal
  // unless some earlier u whose first later neighbor is v satisfies
  // |RN(u)| - 1 >= |RN(v)|.
  std::vector<int> rn_size(static_cast<size_t>(n) + 1, 0);
  std::vector<int> absorb(static_cast<size_t>(n) + 1, -1);  // max |RN(u)|-1 over u with f(u)=v
  std::vector<std::vector<int>> rn(static_cast<size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) {
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) rn[v].push_back(w);
    std::sort(rn[v].begin(), rn[v].end(),
              [&](int a, int b) { return pos[a] < pos[b]; });
    rn_size[v] = static_cast<int>(rn[v].size());
  }
  for (int v = 1; v <= n; ++v)
    if (!rn[v].empty()) {
      int f = rn[v][0];
      absorb[f] = std::max(absorb[f], rn_size[v] - 1);
    }
  std::vector<std::vector<int>> cliques;
  for (int i = 0; i < n; ++i) {
    int v = sigma[static_cast<size_t>(i)];
    if (absorb[v] >= rn_size[v]) continue;  // contained in an earlier candidate
    std::vector<int> c = rn[v];
    c.push_back(v);
    std::sort(c.begin(), c.end());
    cliques.push_back(std::move(c));
  }
  return Hypergraph::from_edges(n, std::move(cliques));
}

Hypergraph as_hypergraph(const Graph& g) {
  std::vector<std::vector<int>> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph::from_edges(g.vertex_count(), std::move(edges));
}

}  // namespace effdom
