#include "tropmod/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tropmod/errors.hpp"

namespace tropmod {

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm transposition_perm(int degree, int i, int j) {
  if (i < 0 || j < 0 || i >= degree || j >= degree || i == j)
    throw std::invalid_argument("transposition_perm: bad points");
  Perm p = identity_perm(degree);
  std::swap(p[i], p[j]);
  return p;
}

bool is_valid_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: degree mismatch");
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 0) throw std::invalid_argument("PermGroup: negative degree");
  for (const Perm& g : generators_) {
    if (static_cast<int>(g.size()) != degree || !is_valid_perm(g))
      throw std::invalid_argument("PermGroup: generator is not a bijection on {0..degree-1}");
  }
}

std::vector<Perm> PermGroup::elements(std::size_t cap) && {
  return static_cast<const PermGroup&>(*this).elements(cap);
}

const std::vector<Perm>& PermGroup::elements(std::size_t cap) const& {
  if (!elements_.empty()) return elements_;
  std::set<Perm> seen;
  std::deque<Perm> frontier;
  Perm id = identity_perm(degree_);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Perm cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& g : generators_) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapacityError("PermGroup::elements: closure exceeds cap of " +
                              std::to_string(cap) + " elements");
        frontier.push_back(std::move(next));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  return elements_;
}

std::size_t PermGroup::order(std::size_t cap) const { return elements(cap).size(); }

bool PermGroup::contains(const Perm& p, std::size_t cap) const {
  const auto& els = elements(cap);
  return std::binary_search(els.begin(), els.end(), p);
}

bool PermGroup::same_subgroup(const PermGroup& other, std::size_t cap) const {
  if (degree_ != other.degree_) return false;
  return elements(cap) == other.elements(cap);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : generators_)
    for (int i = 0; i < degree_; ++i) {
      int a = find(i), b = find(g[i]);
      if (a != b) parent[a] = b;
    }
  std::vector<std::vector<int>> orbits;
  std::vector<int> root_slot(degree_, -1);
  for (int i = 0; i < degree_; ++i) {
    int r = find(i);
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[root_slot[r]].push_back(i);
  }
  return orbits;
}

bool certify_symmetric_product(const PermGroup& group, std::vector<int> block_sizes,
                               std::size_t cap) {
  auto orbits = group.orbits();
  std::vector<int> orbit_sizes;
  orbit_sizes.reserve(orbits.size());
  for (const auto& o : orbits) orbit_sizes.push_back(static_cast<int>(o.size()));
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  std::sort(block_sizes.begin(), block_sizes.end());
  if (orbit_sizes != block_sizes) return false;

  std::size_t expected = 1;
  for (int s : block_sizes)
    for (int f = 2; f <= s; ++f) expected *= static_cast<std::size_t>(f);
  const auto& els = group.elements(cap);
  if (els.size() != expected) return false;

  // Each orbit's restriction must realize every permutation of the orbit.
  for (const auto& orbit : orbits) {
    std::set<std::vector<int>> restrictions;
    for (const Perm& p : els) {
      std::vector<int> r(orbit.size());
      for (std::size_t t = 0; t < orbit.size(); ++t) r[t] = p[orbit[t]];
      restrictions.insert(std::move(r));
    }
    std::size_t fact = 1;
    for (std::size_t f = 2; f <= orbit.size(); ++f) fact *= f;
    if (restrictions.size() != fact) return false;
  }
  return true;
}

}  // namespace tropmod
