#ifndef TROPMOD_GRAPH_HPP
#define TROPMOD_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tropmod/perm.hpp"
#include "tropmod/weights.hpp"

namespace tropmod {

// A marked multigraph with vertex genus labels: the triple (G, h, m).
// Loops are edges with equal endpoints. For edge-labelled use the edge at
// position k carries label k.
struct MarkedGraph {
  std::vector<int> genus;                  // h(v) per vertex
  std::vector<std::pair<int, int>> edges;  // unordered endpoints, loops allowed
  std::vector<int> markings;               // vertex supporting marking i (0-based)

  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_markings() const { return static_cast<int>(markings.size()); }

  bool is_connected() const;
  // Number of half-edges at v; a loop contributes 2.
  int valence(int v) const;
  int loops_at(int v) const;
  std::vector<int> markings_at(int v) const;
};

// A marked graph together with the bijective edge labelling tau: edge at
// position k has label k, so the edge vector order is the labelling.
struct EdgeLabelledGraph {
  MarkedGraph graph;
};

// Byte-comparable encoding identifying a graph up to isomorphism (exact
// marking match; for labelled graphs, exact label match as well).
using CanonicalCode = std::string;

int first_betti(const MarkedGraph& g);  // |E| - |V| + 1; input error if disconnected
int total_genus(const MarkedGraph& g);  // b1 + sum of vertex genera

bool is_w_stable(const MarkedGraph& g, const WeightVector& w, int genus);

// Contracts the edge labelled i: a non-loop merges its endpoints (genera
// add, markings and edges reattach), a loop is deleted and its vertex's
// genus grows by one. Remaining labels collapse order-preservingly.
EdgeLabelledGraph contract(const EdgeLabelledGraph& g, int label);

// Contracts every label outside `keep` (any order gives the same class);
// kept edges are relabelled preserving their order.
EdgeLabelledGraph contract_complement(const EdgeLabelledGraph& g, const std::vector<int>& keep);

inline constexpr int kCanonicalVertexBound = 16;

CanonicalCode canonical_code(const MarkedGraph& g);
CanonicalCode canonical_code(const EdgeLabelledGraph& g);
// Labelled code with the markings ignored: invariant of weak isomorphism.
CanonicalCode weak_code(const EdgeLabelledGraph& g);

// An automorphism of a marked graph: a genus- and marking-preserving vertex
// bijection together with a compatible permutation of the edges. Half-edge
// swaps of a loop are quotiented out, so parallel edges and loops at one
// vertex contribute plain edge permutations.
struct GraphAutomorphism {
  Perm vertex_map;
  Perm edge_map;
};
std::vector<GraphAutomorphism> automorphisms(const MarkedGraph& g);

bool weak_isomorphic(const EdgeLabelledGraph& a, const EdgeLabelledGraph& b);

// Nonloop contraction deck: one entry per non-loop label i, pairing the
// class of the contraction at i with i itself.
struct Deck {
  std::vector<std::pair<CanonicalCode, int>> entries;  // sorted by index
  bool operator==(const Deck&) const = default;
};
Deck deck(const EdgeLabelledGraph& g);

// Edge positions of the bridges: non-loop edges whose removal disconnects.
std::vector<int> bridges(const MarkedGraph& g);

// Label sets of size k forming a simple cycle; a 1-cycle is a loop and a
// 2-cycle a pair of parallel edges.
std::vector<std::vector<int>> cycle_index_sets(const EdgeLabelledGraph& g, int k);
// Label pairs that are two loops on one vertex.
std::vector<std::pair<int, int>> loop_pairs_same_vertex(const EdgeLabelledGraph& g);

// All w-stable classes with one more edge admitting a contraction onto g:
// vertex splittings (genus, markings and half-edges distributed over a new
// edge) plus the genus-decrementing loop insertion. Canonical
// representatives sorted by code.
std::vector<MarkedGraph> one_edge_expansions(const MarkedGraph& g, const WeightVector& w,
                                             int genus);

// The two-vertex graph B^{k,l}_A: k loops and the markings A on one vertex,
// l loops and the complement on the other, g-(k+l)+1 connecting edges, all
// genus labels zero.
struct BGraph {
  MarkedGraph graph;
  bool stable = false;
};
BGraph make_B(int g, int k, int l, const std::vector<int>& A, const WeightVector& w);

// The rose R_g with every marking on its single vertex.
MarkedGraph make_rose(int g, int n);

inline constexpr std::size_t kDefaultClassCap = 100'000;

// Every w-stable isomorphism class with at least one edge, grouped by edge
// count: result[e-1] holds the classes with e edges. Generated breadth
// first by one-edge expansions from the smooth single-vertex object.
std::vector<std::vector<MarkedGraph>> enumerate_stable_graphs(
    int genus, const WeightVector& w, std::size_t class_cap = kDefaultClassCap);

}  // namespace tropmod

#endif
