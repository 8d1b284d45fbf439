#include "effdom/recognition.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace effdom {

namespace {

// --- small dynamic bitset helpers -----------------------------------------

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int nbits) {
  return Bits(static_cast<size_t>((nbits + 63) / 64), 0);
}

void set_bit(Bits& b, int i) { b[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }

bool any_bit(const Bits& b) {
  for (auto w : b)
    if (w) return true;
  return false;
}

template <typename Fn>
void for_each_bit(const Bits& b, Fn fn) {
  for (size_t k = 0; k < b.size(); ++k) {
    std::uint64_t w = b[k];
    while (w) {
      int bit = std::countr_zero(w);
      w &= w - 1;
      fn(static_cast<int>(k * 64) + bit);
    }
  }
}

// --- hole extraction --------------------------------------------------------

// Chordless cycle through center v and its nonadjacent neighbors a, b, closed
// by a shortest a-b path avoiding N[v] \ {a,b}.
std::optional<std::vector<int>> hole_through(const Graph& g, int v, int a,
                                             int b) {
  int n = g.vertex_count();
  std::vector<char> blocked(static_cast<size_t>(n) + 1, 0);
  blocked[v] = 1;
  for (int w : g.neighbors(v)) blocked[w] = 1;
  blocked[a] = blocked[b] = 0;
  std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
  std::queue<int> q;
  parent[a] = a;
  q.push(a);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == b) break;
    for (int y : g.neighbors(x)) {
      if (blocked[y] || parent[y]) continue;
      parent[y] = x;
      q.push(y);
    }
  }
  if (!parent[b]) return std::nullopt;
  std::vector<int> path;
  for (int x = b; x != a; x = parent[x]) path.push_back(x);
  path.push_back(a);
  path.push_back(v);  // cycle order: v, a, ..., b
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> find_hole(const Graph& g, std::array<int, 3> hint) {
  auto [u, x, y] = hint;
  if (u != 0) {
    if (auto hole = hole_through(g, u, x, y)) return *hole;
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto hole = hole_through(g, v, nb[i], nb[j])) return *hole;
      }
  }
  throw std::logic_error("no chordless cycle found in a non-chordal graph");
}

}  // namespace

bool verify_hole(const Graph& g, const std::vector<int>& cycle) {
  size_t k = cycle.size();
  if (k < 4) return false;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()) + 1, 0);
  for (int v : cycle) {
    if (v < 1 || v > g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

ClassReport is_chordal(const Graph& g) {
  ChordalOrdering ord = is_chordal_ordering(g);
  if (ord.valid) return {true, PeoWitness{std::move(ord.order)}};
  std::vector<int> hole = find_hole(g, ord.failure);
  if (!verify_hole(g, hole))
    throw std::logic_error("extracted cycle is not chordless");
  return {false, HoleWitness{std::move(hole)}};
}

ClassReport is_dually_chordal(const Graph& g) {
  MnoOutcome out = compute_mno(g);
  if (out.ok()) return {true, MnoWitness{std::move(*out.result)}};
  return {false, StuckWitness{std::move(out.remaining)}};
}

ClassReport is_helly(const Hypergraph& h) {
  int n = h.vertex_count();
  int m = h.edge_count();
  std::vector<Bits> edge_bits(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    edge_bits[static_cast<size_t>(i) - 1] = make_bits(n + 1);
    for (int v : h.edge(i)) set_bit(edge_bits[static_cast<size_t>(i) - 1], v);
  }
  std::vector<Bits> inc(static_cast<size_t>(n) + 1, make_bits(m));
  for (int i = 1; i <= m; ++i)
    for (int v : h.edge(i)) set_bit(inc[static_cast<size_t>(v)], i - 1);
  size_t words = inc.empty() ? 0 : inc[0].size();
  Bits family = make_bits(m);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        bool nonempty = false;
        for (size_t k = 0; k < words; ++k) {
          std::uint64_t ab = inc[static_cast<size_t>(a)][k] & inc[static_cast<size_t>(b)][k];
          std::uint64_t ac = inc[static_cast<size_t>(a)][k] & inc[static_cast<size_t>(c)][k];
          std::uint64_t bc = inc[static_cast<size_t>(b)][k] & inc[static_cast<size_t>(c)][k];
          family[k] = ab | ac | bc;
          nonempty = nonempty || family[k];
        }
        if (!nonempty) continue;
        Bits inter = make_bits(n + 1);
        for (auto& w : inter) w = ~0ull;
        bool empty = false;
        for_each_bit(family, [&](int idx) {
          if (empty) return;
          bool still = false;
          const Bits& eb = edge_bits[static_cast<size_t>(idx)];
          for (size_t k = 0; k < inter.size(); ++k) {
            inter[k] &= eb[k];
            still = still || inter[k];
          }
          empty = !still;
        });
        if (empty) return {false, TripleWitness{{a, b, c}}};
      }
  return {true, {}};
}

ClassReport is_conformal(const Hypergraph& h) {
  return is_helly(dual(h));  // dual() rejects isolated vertices
}

ReductionResidue acyclicity_reduce(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<std::vector<int>> edges = h.edges();
  std::vector<char> alive(edges.size(), 1);
  std::vector<int> occ(static_cast<size_t>(n) + 1, 0);
  auto recount = [&]() {
    std::fill(occ.begin(), occ.end(), 0);
    for (size_t i = 0; i < edges.size(); ++i)
      if (alive[i])
        for (int v : edges[i]) ++occ[v];
  };
  bool changed = true;
  while (changed) {
    changed = false;
    recount();
    // Rule 1: a vertex lying in exactly one hyperedge leaves it.
    for (size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i]) continue;
      auto& e = edges[i];
      size_t kept = 0;
      for (size_t k = 0; k < e.size(); ++k) {
        if (occ[e[k]] == 1)
          changed = true;
        else
          e[kept++] = e[k];
      }
      e.resize(kept);
      if (e.empty()) {
        alive[i] = 0;
        changed = true;
      }
    }
    // Rule 2: a hyperedge contained in another (duplicates: the larger index
    // yields) disappears.
    for (size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i]) continue;
      for (size_t j = 0; j < edges.size(); ++j) {
        if (i == j || !alive[j]) continue;
        if (edges[i].size() > edges[j].size()) continue;
        if (edges[i].size() == edges[j].size() && i < j) continue;
        if (std::includes(edges[j].begin(), edges[j].end(), edges[i].begin(),
                          edges[i].end())) {
          alive[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  ReductionResidue out;
  std::vector<std::vector<int>> rest;
  for (size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) {
      rest.push_back(edges[i]);
      out.edge_index.push_back(static_cast<int>(i) + 1);
    }
  out.empty = rest.empty();
  out.residue = Hypergraph::from_edges(n, std::move(rest));
  return out;
}

std::optional<JoinTree> join_tree(const Hypergraph& h) {
  int m = h.edge_count();
  if (m == 0) return JoinTree{0, {}};
  // Pairwise intersection sizes via shared vertices.
  auto inc = h.incidence();
  std::unordered_map<std::int64_t, int> weight;
  for (int v = 1; v <= h.vertex_count(); ++v) {
    const auto& lst = inc[v];
    for (size_t a = 0; a < lst.size(); ++a)
      for (size_t b = a + 1; b < lst.size(); ++b)
        ++weight[static_cast<std::int64_t>(lst[a]) * (m + 1) + lst[b]];
  }
  struct Cand {
    int w, i, j;
  };
  std::vector<Cand> cands;
  cands.reserve(weight.size());
  for (auto [key, w] : weight)
    cands.push_back({w, static_cast<int>(key / (m + 1)),
                     static_cast<int>(key % (m + 1))});
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    if (x.w != y.w) return x.w > y.w;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  });
  std::vector<int> uf(static_cast<size_t>(m) + 1);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  JoinTree t{m, {}};
  for (const auto& c : cands) {
    int ri = find(c.i), rj = find(c.j);
    if (ri == rj) continue;
    uf[ri] = rj;
    t.edges.emplace_back(c.i, c.j);
  }
  // Hyperedges in different line-graph components are disjoint; link the
  // component representatives (smallest indices) arbitrarily.
  {
    std::unordered_map<int, int> smallest;
    for (int i = 1; i <= m; ++i) smallest.try_emplace(find(i), i);
    std::vector<int> reps;
    for (auto [root, mem] : smallest) reps.push_back(mem);
    std::sort(reps.begin(), reps.end());
    for (size_t k = 1; k < reps.size(); ++k) {
      t.edges.emplace_back(reps[0], reps[k]);
      uf[find(reps[k])] = find(reps[0]);
    }
  }
  if (!verify_join_tree(h, t)) return std::nullopt;
  return t;
}

namespace {

bool is_tree(int node_count, const std::vector<Edge>& edges,
             std::vector<std::vector<int>>* adj_out) {
  if (node_count == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != node_count - 1) return false;
  std::vector<int> uf(static_cast<size_t>(node_count) + 1);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::vector<int>> adj(static_cast<size_t>(node_count) + 1);
  for (auto [u, v] : edges) {
    if (u < 1 || u > node_count || v < 1 || v > node_count || u == v)
      return false;
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    uf[ru] = rv;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (adj_out) *adj_out = std::move(adj);
  return true;
}

// Do the given tree nodes induce a connected subgraph?
bool connected_in_tree(const std::vector<std::vector<int>>& adj,
                       const std::vector<int>& nodes, std::vector<int>& mark,
                       int token) {
  if (nodes.empty()) return true;
  for (int x : nodes) mark[x] = token;
  std::vector<int> stack{nodes[0]};
  mark[nodes[0]] = token + 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (mark[y] == token) {
        mark[y] = token + 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == nodes.size();
}

}  // namespace

bool verify_join_tree(const Hypergraph& h, const JoinTree& t) {
  if (t.node_count != h.edge_count()) return false;
  std::vector<std::vector<int>> adj;
  if (!is_tree(t.node_count, t.edges, &adj)) return false;
  auto inc = h.incidence();
  std::vector<int> mark(static_cast<size_t>(t.node_count) + 1, 0);
  int token = 1;
  for (int v = 1; v <= h.vertex_count(); ++v, token += 2)
    if (!connected_in_tree(adj, inc[v], mark, token)) return false;
  return true;
}

bool verify_underlying_tree(const Hypergraph& h, const VertexTree& t) {
  if (t.node_count != h.vertex_count()) return false;
  std::vector<std::vector<int>> adj;
  if (!is_tree(t.node_count, t.edges, &adj)) return false;
  std::vector<int> mark(static_cast<size_t>(t.node_count) + 1, 0);
  int token = 1;
  for (int i = 1; i <= h.edge_count(); ++i, token += 2) {
    std::vector<int> nodes(h.edge(i).begin(), h.edge(i).end());
    if (!connected_in_tree(adj, nodes, mark, token)) return false;
  }
  return true;
}

ClassReport is_alpha_acyclic(const Hypergraph& h) {
  // Route 1: conformal (isolated vertices as trivial singleton hyperedges)
  // and chordal 2-section.
  std::vector<std::vector<int>> augmented = h.edges();
  {
    std::vector<char> covered(static_cast<size_t>(h.vertex_count()) + 1, 0);
    for (const auto& e : h.edges())
      for (int v : e) covered[v] = 1;
    for (int v = 1; v <= h.vertex_count(); ++v)
      if (!covered[v]) augmented.push_back({v});
  }
  Hypergraph aug = Hypergraph::from_edges(h.vertex_count(), std::move(augmented));
  bool conformal = is_helly(dual(aug)).verdict;
  bool chordal_2sec = is_chordal_ordering(two_section(h)).valid;
  bool route1 = conformal && chordal_2sec;
  // Route 2: reduction to the empty residue.
  ReductionResidue red = acyclicity_reduce(h);
  if (route1 != red.empty)
    throw std::logic_error(
        "acyclicity tests disagree (conformal+chordal vs reduction)");
  if (!red.empty) return {false, ResidueWitness{std::move(red.residue)}};
  auto jt = join_tree(h);
  if (!jt)
    throw std::logic_error("join tree construction failed on an acyclic input");
  return {true, JoinTreeWitness{std::move(*jt)}};
}

ClassReport is_hypertree(const Hypergraph& h) {
  ClassReport helly = is_helly(h);
  if (!helly.verdict) return helly;
  ClassReport line_chordal = is_chordal(hyper_line_graph(h));
  if (!line_chordal.verdict)
    return {false, std::move(line_chordal.witness)};  // hole over edge indices
  // Underlying tree: join tree of the dual of the covered part, reindexed to
  // vertices; isolated vertices attach as leaves.
  int n = h.vertex_count();
  VertexTree tree{n, {}};
  std::vector<int> covered;
  {
    std::vector<char> cov(static_cast<size_t>(n) + 1, 0);
    for (const auto& e : h.edges())
      for (int v : e) cov[v] = 1;
    for (int v = 1; v <= n; ++v)
      if (cov[v]) covered.push_back(v);
  }
  if (covered.empty()) {
    for (int v = 2; v <= n; ++v) tree.edges.emplace_back(v - 1, v);
  } else {
    std::vector<int> local(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < covered.size(); ++i)
      local[covered[i]] = static_cast<int>(i) + 1;
    std::vector<std::vector<int>> sub_edges;
    for (const auto& e : h.edges()) {
      std::vector<int> se;
      se.reserve(e.size());
      for (int v : e) se.push_back(local[v]);
      sub_edges.push_back(std::move(se));
    }
    Hypergraph sub = Hypergraph::from_edges(static_cast<int>(covered.size()),
                                            std::move(sub_edges));
    auto jt = join_tree(dual(sub));
    if (!jt)
      throw std::logic_error(
          "underlying tree construction failed on a verified input");
    for (auto [a, b] : jt->edges)
      tree.edges.emplace_back(
          std::min(covered[static_cast<size_t>(a) - 1],
                   covered[static_cast<size_t>(b) - 1]),
          std::max(covered[static_cast<size_t>(a) - 1],
                   covered[static_cast<size_t>(b) - 1]));
    for (int v = 1; v <= n; ++v)
      if (!local[v])
        tree.edges.emplace_back(std::min(v, covered[0]),
                                std::max(v, covered[0]));
  }
  if (!verify_underlying_tree(h, tree))
    throw std::logic_error("underlying tree fails verification");
  return {true, TreeWitness{std::move(tree)}};
}

}  // namespace effdom
