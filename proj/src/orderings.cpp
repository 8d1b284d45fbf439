#include "effdom/orderings.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace effdom {

std::vector<int> mcs(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<int> weight(static_cast<size_t>(n) + 1, 0);
  std::vector<char> numbered(static_cast<size_t>(n) + 1, 0);
  for (const auto& comp : g.components()) {
    std::vector<std::set<int>> buckets(comp.size() + 1);
    for (int v : comp) buckets[0].insert(v);
    int maxw = 0;
    for (size_t step = 0; step < comp.size(); ++step) {
      while (buckets[static_cast<size_t>(maxw)].empty()) --maxw;
      int v = *buckets[static_cast<size_t>(maxw)].begin();
      buckets[static_cast<size_t>(maxw)].erase(
          buckets[static_cast<size_t>(maxw)].begin());
      numbered[v] = 1;
      order.push_back(v);
      for (int w : g.neighbors(v)) {
        if (numbered[w]) continue;
        buckets[static_cast<size_t>(weight[w])].erase(w);
        ++weight[w];
        buckets[static_cast<size_t>(weight[w])].insert(w);
        maxw = std::max(maxw, weight[w]);
      }
    }
  }
  return order;
}

PeoResult is_peo(const Graph& g, std::span<const int> sigma) {
  int n = g.vertex_count();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("ordering length differs from vertex count");
  std::vector<int> pos(static_cast<size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    int v = sigma[static_cast<size_t>(i)];
    if (v < 1 || v > n || pos[v] != -1)
      throw std::invalid_argument("ordering is not a permutation of 1..n");
    pos[v] = i;
  }
  // Tarjan–Yannakakis style: each v sends its later neighbors (minus the
  // first one f) to f; when f's turn comes, the received vertices must all
  // be neighbors of f.
  std::vector<std::vector<std::pair<int, int>>> pending(
      static_cast<size_t>(n) + 1);  // at f: (w, sender)
  std::vector<int> stamp(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = sigma[static_cast<size_t>(i)];
    if (!pending[v].empty()) {
      for (int u : g.neighbors(v)) stamp[u] = i + 1;
      for (auto [w, sender] : pending[v])
        if (stamp[w] != i + 1) return {false, {sender, v, w}};
    }
    int f = 0;
    for (int w : g.neighbors(v))
      if (pos[w] > i && (f == 0 || pos[w] < pos[f])) f = w;
    if (f == 0) continue;
    for (int w : g.neighbors(v))
      if (pos[w] > i && w != f) pending[f].emplace_back(w, v);
  }
  return {true, {0, 0, 0}};
}

ChordalOrdering is_chordal_ordering(const Graph& g) {
  std::vector<int> order = mcs(g);
  std::reverse(order.begin(), order.end());
  PeoResult peo = is_peo(g, order);
  return {peo.valid, std::move(order), peo.failure};
}

namespace {

// Greedy strict maximum-neighborhood elimination on one connected component,
// expressed in local indices 1..n.
class MnoSolver {
 public:
  explicit MnoSolver(const Graph& g)
      : n_(g.vertex_count()),
        adj_(static_cast<size_t>(n_) + 1),
        live_deg_(static_cast<size_t>(n_) + 1, 0),
        alive_(static_cast<size_t>(n_) + 1, 1),
        in_dirty_(static_cast<size_t>(n_) + 1, 0),
        stamp_(static_cast<size_t>(n_) + 1, 0) {
    for (int v = 1; v <= n_; ++v) {
      adj_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
      live_deg_[v] = static_cast<int>(adj_[v].size());
    }
  }

  // Returns true with a full elimination on success; false leaves the stuck
  // residue alive.
  bool run(std::vector<int>& sigma, std::vector<int>& max_nb) {
    for (int v = 1; v <= n_; ++v) {
      in_dirty_[v] = 1;
      heap_.push(v);
    }
    int remaining = n_;
    while (remaining > 1) {
      int v = pop_dirty();
      if (v == 0) return false;
      int mate = find_max_neighbor(v);
      if (mate == 0) continue;
      mark_dirty_around(v);
      sigma.push_back(v);
      max_nb.push_back(mate);
      remove_vertex(v);
      --remaining;
    }
    for (int v = 1; v <= n_; ++v)
      if (alive_[v]) {
        sigma.push_back(v);
        max_nb.push_back(v);
        alive_[v] = 0;
      }
    return true;
  }

  std::vector<int> residue() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
      if (alive_[v]) out.push_back(v);
    return out;
  }

 private:
  int pop_dirty() {
    while (!heap_.empty()) {
      int v = heap_.top();
      heap_.pop();
      if (alive_[v] && in_dirty_[v]) {
        in_dirty_[v] = 0;
        return v;
      }
    }
    return 0;
  }

  void push_dirty(int v) {
    if (!in_dirty_[v]) {
      in_dirty_[v] = 1;
      heap_.push(v);
    }
  }

  // Live neighbors, compacting the list when mostly dead.
  const std::vector<int>& live_neighbors(int v) {
    auto& lst = adj_[v];
    if (static_cast<int>(lst.size()) > 2 * live_deg_[v] + 4) {
      std::vector<int> keep;
      keep.reserve(static_cast<size_t>(live_deg_[v]));
      for (int w : lst)
        if (alive_[w]) keep.push_back(w);
      lst = std::move(keep);
    }
    return lst;
  }

  // Smallest valid maximum neighbor of v distinct from v, or 0.
  int find_max_neighbor(int v) {
    if (live_deg_[v] == 0) return 0;
    const auto& nb = live_neighbors(v);
    int dmax = live_deg_[v];  // closed degrees minus one, uniformly
    for (int u : nb)
      if (alive_[u]) dmax = std::max(dmax, live_deg_[u]);
    for (int u : nb) {
      if (!alive_[u] || live_deg_[u] != dmax) continue;
      if (covers_neighborhood(v, u)) return u;
    }
    return 0;
  }

  // Does N_R[u] contain N_R[w] for every live w in N_R[v]?
  bool covers_neighborhood(int v, int u) {
    ++cur_;
    stamp_[u] = cur_;
    for (int x : live_neighbors(u))
      if (alive_[x]) stamp_[x] = cur_;
    if (stamp_[v] != cur_) return false;
    for (int x : adj_[v]) {
      if (!alive_[x]) continue;
      if (stamp_[x] != cur_) return false;
      for (int y : live_neighbors(x))
        if (alive_[y] && stamp_[y] != cur_) return false;
    }
    return true;
  }

  void mark_dirty_around(int v) {
    for (int w : live_neighbors(v)) {
      if (!alive_[w]) continue;
      push_dirty(w);
      for (int x : adj_[w])
        if (alive_[x] && x != v) push_dirty(x);
    }
  }

  void remove_vertex(int v) {
    alive_[v] = 0;
    for (int w : adj_[v])
      if (alive_[w]) --live_deg_[w];
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> live_deg_;
  std::vector<char> alive_;
  std::vector<char> in_dirty_;
  std::vector<int> stamp_;
  int cur_ = 0;
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap_;
};

}  // namespace

MnoOutcome compute_mno(const Graph& g) {
  MnoResult result;
  result.sigma.reserve(static_cast<size_t>(g.vertex_count()));
  result.max_neighbor.reserve(static_cast<size_t>(g.vertex_count()));
  for (const auto& comp : g.components()) {
    std::vector<int> labels;
    Graph sub = induced_subgraph(g, comp, &labels);
    MnoSolver solver(sub);
    std::vector<int> sigma, max_nb;
    if (!solver.run(sigma, max_nb)) {
      MnoOutcome out;
      for (int v : solver.residue())
        out.remaining.push_back(labels[static_cast<size_t>(v) - 1]);
      return out;
    }
    for (size_t i = 0; i < sigma.size(); ++i) {
      result.sigma.push_back(labels[static_cast<size_t>(sigma[i]) - 1]);
      result.max_neighbor.push_back(
          labels[static_cast<size_t>(max_nb[i]) - 1]);
    }
  }
  verify_mno(g, result);
  return {std::move(result), {}, };
}

void verify_mno(const Graph& g, const MnoResult& mno) {
  int n = g.vertex_count();
  if (static_cast<int>(mno.sigma.size()) != n ||
      mno.max_neighbor.size() != mno.sigma.size())
    throw std::logic_error("maximum neighborhood ordering has wrong length");
  std::vector<int> pos(static_cast<size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    int v = mno.sigma[static_cast<size_t>(i)];
    if (v < 1 || v > n || pos[v] != -1)
      throw std::logic_error("ordering is not a permutation of 1..n");
    pos[v] = i;
  }
  std::vector<int> stamp(static_cast<size_t>(n) + 1, 0);
  int cur = 0;
  for (int i = 0; i < n; ++i) {
    int v = mno.sigma[static_cast<size_t>(i)];
    int m = mno.max_neighbor[static_cast<size_t>(i)];
    bool has_later_neighbor = false;
    for (int w : g.neighbors(v))
      if (pos[w] > i) {
        has_later_neighbor = true;
        break;
      }
    if (m == v) {
      if (has_later_neighbor)
        throw std::logic_error(
            "vertex " + std::to_string(v) +
            " is its own maximum neighbor but is not last in its component");
      continue;
    }
    if (pos[m] < i || !g.adjacent(v, m))
      throw std::logic_error("maximum neighbor of " + std::to_string(v) +
                             " is not a later closed neighbor");
    // Stamp N_i[m], then require N_i[w] inside it for each w in N_i[v].
    ++cur;
    stamp[m] = cur;
    for (int x : g.neighbors(m))
      if (pos[x] >= i) stamp[x] = cur;
    auto check_member = [&](int w) {
      if (stamp[w] != cur)
        throw std::logic_error("maximum neighbor property fails at vertex " +
                               std::to_string(v) + ": " + std::to_string(w) +
                               " escapes N[" + std::to_string(m) + "]");
      for (int y : g.neighbors(w))
        if (pos[y] >= i && stamp[y] != cur)
          throw std::logic_error("maximum neighbor property fails at vertex " +
                                 std::to_string(v) + ": neighbor " +
                                 std::to_string(y) + " of " +
                                 std::to_string(w) + " escapes N[" +
                                 std::to_string(m) + "]");
    };
    check_member(v);
    for (int w : g.neighbors(v))
      if (pos[w] >= i) check_member(w);
  }
}

}  // namespace effdom
