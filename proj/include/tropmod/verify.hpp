#ifndef TROPMOD_VERIFY_HPP
#define TROPMOD_VERIFY_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "tropmod/rational.hpp"
#include "tropmod/weights.hpp"

namespace tropmod {

// Outcome of one named check. Failures always carry a concrete witness;
// passes carry summary statistics. Serializes to
// {check, params, verdict, witnesses, duration_ms}.
struct CheckReport {
  std::string check;
  nlohmann::json params;
  bool pass = false;
  nlohmann::json witnesses;
  long long duration_ms = 0;
};

nlohmann::json to_json(const CheckReport& report);

// The induced map from the weight-complex group is a bijection onto the
// automorphisms of the moduli complex (g >= 1, 2g - 2 + n >= 3).
CheckReport verify_main_theorem(int g, const WeightVector& w);

// Genus zero with w = (eps^(m), 1^(n)), m, n >= 2, m + n >= 5, eps <= 1/m:
// the complex has exactly m! n! automorphisms, all marking-induced.
CheckReport verify_heavy_light(int m, int n, const Rational& eps);

// w = (1/k)^(2k+2) gives a complex of (2k+2 choose k+1)/2 isolated
// vertices, whose automorphism group is the full symmetric group.
CheckReport verify_disjoint_vertices(int k);

// w = (1/3^3, 7/12^3): three 3-leaf stars, 1296 complex automorphisms
// against 36 weight-complex automorphisms.
CheckReport verify_wreath_example();

// Labelled classes with first Betti number g and at least three vertices
// are determined by their nonloop contraction decks.
CheckReport verify_reconstruction(int g, const WeightVector& w);

// One-edge expansion counts of the genus-zero trees B_A match the closed
// formula 2^x - 2^y + 2^(m+n-x) - 2^(m-y) - 2 - n, maximized exactly by
// the special trees.
CheckReport verify_expansion_formula(int m, int n, const Rational& eps);

// realize_product output has automorphism group of order prod n_i! with
// matching orbit blocks.
CheckReport verify_realize_product(const std::vector<int>& blocks);

// Every complex automorphism preserves the vertex-count filtration, fixes
// the rose classes, and preserves bridge, cycle and loop-pair index sets.
CheckReport verify_filtration_and_locals(int g, const WeightVector& w);

}  // namespace tropmod

#endif
