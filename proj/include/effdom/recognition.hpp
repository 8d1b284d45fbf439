#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "effdom/graph.hpp"
#include "effdom/hypergraph.hpp"
#include "effdom/orderings.hpp"

namespace effdom {

// Tree over hyperedge indices 1..node_count.
struct JoinTree {
  int node_count = 0;
  std::vector<Edge> edges;
};

// Tree over vertices 1..node_count.
struct VertexTree {
  int node_count = 0;
  std::vector<Edge> edges;
};

// Witness payloads carried by ClassReport.
struct PeoWitness { std::vector<int> order; };
struct MnoWitness { MnoResult mno; };
struct HoleWitness { std::vector<int> cycle; };  // induced cycle >= 4, cyclic order
struct TripleWitness { std::array<int, 3> triple; };  // Helly-violating triple
struct StuckWitness { std::vector<int> remaining; };  // residual vertices, no elimination applies
struct ResidueWitness { Hypergraph residue; };        // irreducible reduction residue
struct TreeWitness { VertexTree tree; };              // underlying vertex tree
struct JoinTreeWitness { JoinTree tree; };

using Witness =
    std::variant<std::monostate, PeoWitness, MnoWitness, HoleWitness,
                 TripleWitness, StuckWitness, ResidueWitness, TreeWitness,
                 JoinTreeWitness>;

struct ClassReport {
  bool verdict = false;
  Witness witness;
};

// Chordality via maximum cardinality search; negative witness is an induced
// cycle of length >= 4 extracted from the elimination failure.
ClassReport is_chordal(const Graph& g);

// Dual chordality via greedy maximum neighborhood elimination per component.
ClassReport is_dually_chordal(const Graph& g);

// Helly property of the hyperedge family (triple test). Negative witness:
// a vertex triple whose >=2-covering hyperedges have empty intersection.
ClassReport is_helly(const Hypergraph& h);

// Conformality = Helly property of the dual. Throws std::invalid_argument on
// isolated vertices (the dual is undefined there); the negative witness
// triple lives on dual vertices, i.e. hyperedge indices of h.
ClassReport is_conformal(const Hypergraph& h);

// Alpha-acyclicity, decided two independent ways (conformal + chordal
// 2-section, and reduction to an empty residue); both must agree or a
// std::logic_error is thrown. Positive witness: a join tree. Negative
// witness: the irreducible residue. Isolated vertices are admitted (each is
// treated as its own trivial hyperedge for the conformality test).
ClassReport is_alpha_acyclic(const Hypergraph& h);

// Hypertree test: Helly + chordal line graph. Positive witness: a tree on
// the vertices in which every hyperedge induces a subtree. Negative witness:
// the failing triple, or a hole of the line graph (over hyperedge indices).
ClassReport is_hypertree(const Hypergraph& h);

// Join tree construction: maximum-weight spanning tree of the line graph
// under w(i,j) = |e_i cap e_j|, then running-intersection verification.
// Returns nullopt when the verification fails (h is not alpha-acyclic).
std::optional<JoinTree> join_tree(const Hypergraph& h);

// Reduction engine behind is_alpha_acyclic: repeatedly delete vertices lying
// in exactly one hyperedge and hyperedges contained in another (empty ones
// are dropped). `residue` keeps the original vertex numbering;
// `edge_index[i]` is the original 1-based index of residue edge i+1.
struct ReductionResidue {
  Hypergraph residue;
  std::vector<int> edge_index;
  bool empty = false;
};
ReductionResidue acyclicity_reduce(const Hypergraph& h);

// Witness verifiers (independent of the recognizers above).
bool verify_hole(const Graph& g, const std::vector<int>& cycle);
bool verify_join_tree(const Hypergraph& h, const JoinTree& t);
bool verify_underlying_tree(const Hypergraph& h, const VertexTree& t);

}  // namespace effdom
