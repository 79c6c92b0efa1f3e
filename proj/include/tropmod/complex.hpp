#ifndef TROPMOD_COMPLEX_HPP
#define TROPMOD_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tropmod/graph.hpp"
#include "tropmod/perm.hpp"
#include "tropmod/weights.hpp"

namespace tropmod {

inline constexpr std::size_t kDefaultSimplexCap = 50'000;
inline constexpr std::size_t kDefaultAutCap = 1'000'000;
// Above this many isolated vertices the full symmetric automorphism group
// is reported symbolically instead of enumerated.
inline constexpr std::size_t kSymbolicOrderThreshold = 8;

struct SimplexClass {
  EdgeLabelledGraph rep;
  CanonicalCode code;
};

// The moduli complex as a symmetric Delta-complex: simplex classes per
// dimension, face tables for the order-preserving injections, and action
// tables for the adjacent transpositions generating each symmetric group.
// Immutable after construction.
class DeltaComplex {
 public:
  int g = 0;
  WeightVector w{std::vector<Rational>{Rational(1)}};

  // classes[p]: dimension-p classes (graphs with p+1 edges), sorted by code.
  std::vector<std::vector<SimplexClass>> classes;
  // faces[p][i][s], p >= 1, i in [p]: index of d_i(s) in dimension p-1.
  std::vector<std::vector<std::vector<int>>> faces;
  // gens[p][j][s], p >= 1, j in [p-1]: action of the transposition (j, j+1).
  std::vector<std::vector<std::vector<int>>> gens;
  // Set when this is the complete complex for (g, w); graph-theoretic
  // invariants may then prune the automorphism search.
  bool full_build = false;

  int dimension() const { return static_cast<int>(classes.size()) - 1; }
  std::vector<std::size_t> sizes() const;
  std::size_t total_classes() const;
  // Index of a labelled canonical code in dimension p, or -1.
  int index_of(int p, const CanonicalCode& code) const;

  std::vector<std::map<CanonicalCode, int>> index_;
};

// Builds the full complex for (g, w). Face and permutation tables are
// populated and the simplicial identities and symmetric-group relations
// are machine-checked before returning.
DeltaComplex build_delta(int g, const WeightVector& w,
                         std::size_t cap_simplices = kDefaultSimplexCap);

// Functor value on an arbitrary injection iota: [p] -> [q], computed by
// composing stored face tables (for the order-preserving part) and
// generator tables (for the permutation part). `iota` lists the images of
// 0..p; `simplex` indexes a dimension-q class.
int apply_injection(const DeltaComplex& X, const std::vector<int>& iota, int q, int simplex);

// Restriction to simplices whose graphs have at most `max_vertices`
// vertices; closed under faces by construction.
DeltaComplex v_subcomplex(const DeltaComplex& X, int max_vertices);

// An automorphism: one bijection of the class indices per dimension,
// commuting with every face and permutation table.
struct ComplexAutomorphism {
  std::vector<std::vector<int>> maps;
  bool operator==(const ComplexAutomorphism&) const = default;
  auto operator<=>(const ComplexAutomorphism&) const = default;
  bool is_identity() const;
};

// The automorphism induced by relabelling markings with sigma; sigma must
// preserve the weight complex (domain error otherwise).
ComplexAutomorphism sn_induced_automorphism(const DeltaComplex& X, const Perm& sigma);

struct ComplexAutGroup {
  // Complete, sorted list when `enumerated`; otherwise empty and the group
  // is the full symmetric group on `vertex_count` isolated vertices.
  std::vector<ComplexAutomorphism> elements;
  bool enumerated = true;
  bool symmetric_on_vertices = false;
  std::size_t vertex_count = 0;

  std::string order_text() const;
  bool order_equals(unsigned long long n) const;
  // Order as u64; throws CapacityError when it does not fit.
  unsigned long long order() const;
};

// Complete enumeration of Aut(X) by exhaustive backtracking over class
// bijections with structure-map propagation. A complex consisting only of
// isolated vertices short-cuts to the full symmetric group.
ComplexAutGroup aut_complex(const DeltaComplex& X, std::size_t cap = kDefaultAutCap);

// Genus-zero one-skeleton: one vertex per one-edge class, an edge when two
// classes share a two-edge expansion.
struct SkeletonGraph {
  std::vector<std::string> vertex_labels;  // marking-partition descriptions
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> components() const;
};
SkeletonGraph one_skeleton_g0(const DeltaComplex& X);

// Flag test: every pairwise-adjacent vertex set of the one-skeleton must
// span a simplex. On failure the witness lists a violating clique.
struct FlagCheckResult {
  bool is_flag = false;
  std::vector<int> violating_clique;
};
FlagCheckResult is_flag_g0(const DeltaComplex& X);

}  // namespace tropmod

#endif
