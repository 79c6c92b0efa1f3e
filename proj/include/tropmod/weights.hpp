#ifndef TROPMOD_WEIGHTS_HPP
#define TROPMOD_WEIGHTS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropmod/perm.hpp"
#include "tropmod/rational.hpp"

namespace tropmod {

// A vector of n exact rational weights, each in (0, 1]. Immutable after
// construction. Indices are 0-based throughout the library; printed output
// uses the 1-based convention.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);

  // Parses comma-separated rationals with repetition shorthand, e.g.
  // "1/3^3,7/12^3" or "1,1,1/2".
  static WeightVector parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  const Rational& operator[](int i) const { return w_[i]; }
  const std::vector<Rational>& weights() const { return w_; }
  Rational total() const;
  std::string to_string() const;

  bool operator==(const WeightVector& o) const { return w_ == o.w_; }

 private:
  std::vector<Rational> w_;
};

// w(S): exact sum over the subset. Indices must be in range and distinct.
Rational weight_of_subset(const WeightVector& w, const std::vector<int>& subset);

// Membership in the weight complex K_w: true iff w(S) <= 1.
bool kw_contains(const WeightVector& w, const std::vector<int>& subset);

// All maximal faces of K_w, each sorted, ordered lexicographically.
std::vector<std::vector<int>> kw_facets(const WeightVector& w);

bool kw_has_one_dimensional_facet(const WeightVector& w);

// Whether the swap (i, j) maps faces of K_w to faces. Decided via the
// interval test: assuming w_i <= w_j, the swap fails exactly when some
// subset T avoiding i and j has 1 - w_j < w(T) <= 1 - w_i.
bool is_transposition_automorphism(const WeightVector& w, int i, int j);

// Direct face-preservation test for an arbitrary permutation.
bool is_simplicial_automorphism(const WeightVector& w, const Perm& sigma);

// Aut(K_w) as the subgroup of S_n generated by its transpositions; this is
// the full simplicial automorphism group, since the group is generated by
// transpositions.
PermGroup aut_kw(const WeightVector& w);

// Transpositions (i, j) such that for every S with |S| >= 2 we have
// w_i + w(S) <= 1 iff w_j + w(S) <= 1. By default S ranges over subsets
// disjoint from {i, j}; pass disjoint_from_pair = false to let S meet the
// pair (the stricter reading, kept selectable for comparison).
std::vector<std::pair<int, int>> admissible_transpositions(const WeightVector& w,
                                                           bool disjoint_from_pair = true);

// Subgroup of S_n generated by the admissible transpositions.
PermGroup aut_mbar(const WeightVector& w, bool disjoint_from_pair = true);

// Returns a vector constant on each Aut(K_w)-orbit with the same weight
// complex; each weight is replaced by the exact mean over its orbit, and
// the facet lists are compared to confirm K is unchanged.
WeightVector symmetrize(const WeightVector& w);

// Heavy/light classification. An index is heavy when it exceeds 1 in
// combination with every other single index; it is light when adding it to
// any strictly-light subset avoiding it stays within 1. Heaviness takes
// precedence so the three lists partition {0..n-1}.
struct HeavyLightClassification {
  std::vector<int> heavy;
  std::vector<int> light;
  std::vector<int> neither;
  // True when every index is heavy or light, there is at least one of
  // each, and the light weights sum to at most 1.
  bool is_heavy_light = false;
};
HeavyLightClassification classify_heavy_light(const WeightVector& w);

// Constructs a weight vector whose Aut(K_w) is the direct product of
// symmetric groups of the given sizes, with one group orbit per block.
// The construction is certified post hoc via aut_kw; an uncertifiable
// input (e.g. two size-1 blocks alone) is an input error.
WeightVector realize_product(const std::vector<int>& block_sizes);

// Convenience: (eps^(m), 1^(n)).
WeightVector heavy_light_vector(int m, int n, const Rational& eps);

}  // namespace tropmod

#endif
