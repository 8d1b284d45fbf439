#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "effdom/graph.hpp"

namespace effdom {

// Maximum cardinality search visit order, computed per connected component
// (components ordered by smallest vertex) and concatenated. Ties broken by
// smallest vertex index. On chordal inputs the reverse is a perfect
// elimination ordering.
std::vector<int> mcs(const Graph& g);

// Perfect elimination ordering check. On failure, `failure` holds a triple
// (v, a, b): a and b are nonadjacent neighbors of v appearing after v.
struct PeoResult {
  bool valid = false;
  std::array<int, 3> failure{0, 0, 0};
};
PeoResult is_peo(const Graph& g, std::span<const int> sigma);

// MCS + reversal + PEO check. `order` is the candidate PEO (reverse MCS);
// `failure` is set when invalid.
struct ChordalOrdering {
  bool valid = false;
  std::vector<int> order;
  std::array<int, 3> failure{0, 0, 0};
};
ChordalOrdering is_chordal_ordering(const Graph& g);

// Maximum neighborhood ordering: sigma[i] is eliminated i-th and
// max_neighbor[i] is a vertex u in the closed neighborhood of sigma[i]
// (within the graph induced by sigma[i..]) whose closed neighborhood contains
// the closed neighborhood of every member of N[sigma[i]] there.
// max_neighbor[i] == sigma[i] occurs exactly when sigma[i] has no neighbor
// later in sigma (it is the last remaining vertex of its component).
struct MnoResult {
  std::vector<int> sigma;
  std::vector<int> max_neighbor;
};

// Greedy construction, per component (components ordered by smallest vertex,
// results concatenated). Within a component, the smallest-index vertex
// possessing a maximum neighbor distinct from itself is eliminated first;
// among valid maximum neighbors the smallest index is recorded. On failure,
// `remaining` lists the vertices of the stuck residual subgraph.
struct MnoOutcome {
  std::optional<MnoResult> result;
  std::vector<int> remaining;
  bool ok() const { return result.has_value(); }
};
MnoOutcome compute_mno(const Graph& g);

// Independent re-check of the MnoResult invariant (quadratic in degrees).
// Throws std::logic_error on any violation.
void verify_mno(const Graph& g, const MnoResult& mno);

}  // namespace effdom
