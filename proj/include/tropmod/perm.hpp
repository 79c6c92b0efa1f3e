#ifndef TROPMOD_PERM_HPP
#define TROPMOD_PERM_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace tropmod {

// A permutation of {0..n-1} stored as its image vector: p[i] is the image
// of point i.
using Perm = std::vector<int>;

inline constexpr std::size_t kDefaultGroupElementCap = 1'000'000;

Perm identity_perm(int degree);
Perm transposition_perm(int degree, int i, int j);
bool is_valid_perm(const Perm& p);
// compose(a, b) applies a first, then b: result[i] = b[a[i]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

// A subgroup of a finite symmetric group given by generators. Elements are
// enumerated by breadth-first closure under composition; exceeding the cap
// is reported as CapacityError, never truncated silently.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  const std::vector<Perm>& elements(std::size_t cap = kDefaultGroupElementCap) const&;
  // Calling elements() on a temporary group must not hand out a dangling
  // reference; the rvalue overload moves the list out instead.
  std::vector<Perm> elements(std::size_t cap = kDefaultGroupElementCap) &&;
  std::size_t order(std::size_t cap = kDefaultGroupElementCap) const;
  bool contains(const Perm& p, std::size_t cap = kDefaultGroupElementCap) const;
  bool same_subgroup(const PermGroup& other, std::size_t cap = kDefaultGroupElementCap) const;

  // Orbits of {0..degree-1} under the group, each sorted, in order of their
  // minimum element.
  std::vector<std::vector<int>> orbits() const;

 private:
  int degree_;
  std::vector<Perm> generators_;
  mutable std::vector<Perm> elements_;  // sorted; filled on first use
};

// Structural certificate that `group` is the direct product of the full
// symmetric groups on blocks whose sizes match `block_sizes`: the orbit
// sizes agree as multisets, |group| equals the product of factorials, and
// the restriction to each orbit realizes every permutation of that orbit.
bool certify_symmetric_product(const PermGroup& group, std::vector<int> block_sizes,
                               std::size_t cap = kDefaultGroupElementCap);

}  // namespace tropmod

#endif
