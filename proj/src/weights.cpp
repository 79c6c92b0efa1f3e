#include "tropmod/weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tropmod/errors.hpp"

namespace tropmod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer: '" + std::string(s) + "'");
  return value;
}

const Rational kOne = Rational(1);

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

WeightVector::WeightVector(std::vector<Rational> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("weight vector must be nonempty");
  for (const Rational& x : w_)
    if (x <= Rational(0) || x > kOne)
      throw std::invalid_argument("weights must lie in (0, 1], got " + rational_to_string(x));
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<Rational> out;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string_view token = trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
    if (token.empty()) throw std::invalid_argument("empty weight entry");
    long long repeat = 1;
    auto caret = token.find('^');
    if (caret != std::string_view::npos) {
      repeat = parse_int(token.substr(caret + 1));
      if (repeat < 1) throw std::invalid_argument("repetition count must be >= 1");
      token = trim(token.substr(0, caret));
    }
    Rational value = parse_rational(token);
    for (long long r = 0; r < repeat; ++r) out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return WeightVector(std::move(out));
}

Rational WeightVector::total() const {
  return std::accumulate(w_.begin(), w_.end(), Rational(0));
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) out += ",";
    out += rational_to_string(w_[i]);
  }
  return out;
}

Rational weight_of_subset(const WeightVector& w, const std::vector<int>& subset) {
  Rational sum(0);
  std::set<int> seen;
  for (int i : subset) {
    if (i < 0 || i >= w.size()) throw std::invalid_argument("subset index out of range");
    if (!seen.insert(i).second) throw std::invalid_argument("subset has a repeated index");
    sum += w[i];
  }
  return sum;
}

bool kw_contains(const WeightVector& w, const std::vector<int>& subset) {
  return weight_of_subset(w, subset) <= kOne;
}

namespace {

// Depth-first enumeration of the faces of K_w in increasing index order.
// Visit receives each face (sorted) exactly once.
template <typename Visit>
void walk_faces(const WeightVector& w, std::vector<int>& face, Rational sum, int next,
                const Visit& visit) {
  visit(face, sum);
  for (int i = next; i < w.size(); ++i) {
    Rational s = sum + w[i];
    if (s > kOne) continue;
    face.push_back(i);
    walk_faces(w, face, s, i + 1, visit);
    face.pop_back();
  }
}

// True when some subset of `pool` (given as index list) has weight sum in
// the interval (lo, hi] — or (lo, hi) when open_upper is set. min_size
// constrains the subset cardinality.
bool subset_sum_in_interval(const WeightVector& w, const std::vector<int>& pool,
                            const Rational& lo, const Rational& hi, int min_size,
                            bool open_upper = false) {
  if (hi <= lo) return false;
  // Weights are positive, so a branch whose sum already exceeds hi is dead.
  std::vector<Rational> vals;
  vals.reserve(pool.size());
  for (int i : pool) vals.push_back(w[i]);
  std::sort(vals.begin(), vals.end());
  std::vector<Rational> suffix(vals.size() + 1, Rational(0));
  for (int i = static_cast<int>(vals.size()) - 1; i >= 0; --i)
    suffix[i] = suffix[i + 1] + vals[i];

  auto in_range = [&](const Rational& s) {
    return s > lo && (open_upper ? s < hi : s <= hi);
  };
  auto rec = [&](auto&& self, int idx, Rational sum, int count) -> bool {
    if (count >= min_size && in_range(sum)) return true;
    if (idx == static_cast<int>(vals.size())) return false;
    if (sum + suffix[idx] <= lo) return false;  // cannot climb into the interval
    for (int i = idx; i < static_cast<int>(vals.size()); ++i) {
      Rational s = sum + vals[i];
      if (s > hi || (open_upper && s == hi)) break;  // ascending: larger picks overshoot
      if (self(self, i + 1, s, count + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, Rational(0), 0);
}

std::vector<int> all_indices_except(int n, std::initializer_list<int> excluded) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::vector<int>> kw_facets(const WeightVector& w) {
  if (w.size() > 24) throw CapacityError("kw_facets: n too large for exhaustive scan");
  std::vector<std::vector<int>> facets;
  std::vector<int> face;
  walk_faces(w, face, Rational(0), 0, [&](const std::vector<int>& f, const Rational& sum) {
    if (f.empty() && w.size() > 0) {
      // The empty face is maximal only if no singleton fits, which cannot
      // happen since every w_i <= 1.
      return;
    }
    for (int i = 0; i < w.size(); ++i) {
      if (std::binary_search(f.begin(), f.end(), i)) continue;
      if (sum + w[i] <= kOne) return;  // extendable, not maximal
    }
    facets.push_back(f);
  });
  std::sort(facets.begin(), facets.end());
  return facets;
}

bool kw_has_one_dimensional_facet(const WeightVector& w) {
  int n = w.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w[i] + w[j] > kOne) continue;
      bool maximal = true;
      for (int k = 0; k < n && maximal; ++k) {
        if (k == i || k == j) continue;
        if (w[i] + w[j] + w[k] <= kOne) maximal = false;
      }
      if (maximal) return true;
    }
  return false;
}

bool is_transposition_automorphism(const WeightVector& w, int i, int j) {
  if (i == j) throw std::invalid_argument("transposition needs distinct indices");
  if (i < 0 || j < 0 || i >= w.size() || j >= w.size())
    throw std::invalid_argument("index out of range");
  if (w[i] == w[j]) return true;
  Rational lo = std::min(w[i], w[j]), hi = std::max(w[i], w[j]);
  // The swap fails exactly when some T avoiding both indices has
  // 1 - hi < w(T) <= 1 - lo.
  return !subset_sum_in_interval(w, all_indices_except(w.size(), {i, j}), kOne - hi, kOne - lo, 0);
}

bool is_simplicial_automorphism(const WeightVector& w, const Perm& sigma) {
  if (static_cast<int>(sigma.size()) != w.size() || !is_valid_perm(sigma))
    throw std::invalid_argument("sigma is not a permutation of the index set");
  bool ok = true;
  std::vector<int> face;
  walk_faces(w, face, Rational(0), 0, [&](const std::vector<int>& f, const Rational&) {
    if (!ok) return;
    Rational image_sum(0);
    for (int x : f) image_sum += w[sigma[x]];
    if (image_sum > kOne) ok = false;
  });
  return ok;
}

PermGroup aut_kw(const WeightVector& w) {
  int n = w.size();
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (is_transposition_automorphism(w, i, j)) gens.push_back(transposition_perm(n, i, j));
  return PermGroup(n, std::move(gens));
}

std::vector<std::pair<int, int>> admissible_transpositions(const WeightVector& w,
                                                           bool disjoint_from_pair) {
  int n = w.size();
  if (n < 2) throw std::invalid_argument("admissible_transpositions needs n >= 2");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w[i] == w[j]) {
        out.emplace_back(i, j);
        continue;
      }
      Rational lo = std::min(w[i], w[j]), hi = std::max(w[i], w[j]);
      std::vector<int> pool =
          disjoint_from_pair ? all_indices_except(n, {i, j}) : all_indices_except(n, {});
      if (!subset_sum_in_interval(w, pool, kOne - hi, kOne - lo, 2)) out.emplace_back(i, j);
    }
  return out;
}

PermGroup aut_mbar(const WeightVector& w, bool disjoint_from_pair) {
  std::vector<Perm> gens;
  for (auto [i, j] : admissible_transpositions(w, disjoint_from_pair))
    gens.push_back(transposition_perm(w.size(), i, j));
  return PermGroup(w.size(), std::move(gens));
}

WeightVector symmetrize(const WeightVector& w) {
  PermGroup group = aut_kw(w);
  std::vector<Rational> out(w.size(), Rational(0));
  for (const auto& orbit : group.orbits()) {
    Rational sum(0);
    for (int i : orbit) sum += w[i];
    Rational mean = sum / Rational(static_cast<std::int64_t>(orbit.size()));
    for (int i : orbit) out[i] = mean;
  }
  WeightVector result{std::move(out)};
  // The chamber of vectors with a given weight complex is convex, so the
  // orbit mean stays inside it; confirm via the facet lists.
  if (kw_facets(result) != kw_facets(w))
    throw std::logic_error("symmetrize: weight complex changed");
  return result;
}

HeavyLightClassification classify_heavy_light(const WeightVector& w) {
  int n = w.size();
  HeavyLightClassification cls;
  std::vector<bool> is_heavy(n, false);
  for (int i = 0; i < n; ++i) {
    bool heavy = true;
    for (int j = 0; j < n && heavy; ++j)
      if (j != i && w[i] + w[j] <= kOne) heavy = false;
    is_heavy[i] = heavy;
  }
  for (int i = 0; i < n; ++i) {
    if (is_heavy[i]) {
      cls.heavy.push_back(i);
      continue;
    }
    // Light: no subset avoiding i has weight strictly inside (1 - w_i, 1).
    // Such a subset would weigh less than 1 yet overflow once i joins.
    bool light = !subset_sum_in_interval(w, all_indices_except(n, {i}), kOne - w[i], kOne, 0,
                                         /*open_upper=*/true);
    if (light)
      cls.light.push_back(i);
    else
      cls.neither.push_back(i);
  }
  Rational light_sum(0);
  for (int i : cls.light) light_sum += w[i];
  cls.is_heavy_light = cls.neither.empty() && !cls.heavy.empty() && !cls.light.empty() &&
                       light_sum <= kOne;
  return cls;
}

WeightVector heavy_light_vector(int m, int n, const Rational& eps) {
  if (m < 1 || n < 1) throw std::invalid_argument("heavy_light_vector: m, n >= 1 required");
  std::vector<Rational> w(m, eps);
  w.insert(w.end(), n, kOne);
  return WeightVector(std::move(w));
}

namespace {

WeightVector ones_vector(int n) { return WeightVector(std::vector<Rational>(n, kOne)); }

// (1^a, eps^b) with the light budget set to half the slack of the all-ones
// base, split across the b light entries.
WeightVector ones_plus_lights(int a, int b) {
  std::vector<Rational> w(a, kOne);
  Rational eps = Rational(1, 2 * static_cast<std::int64_t>(b));
  w.insert(w.end(), b, eps);
  return WeightVector(std::move(w));
}

// Blocks sorted by descending size; the largest block becomes b light
// entries of weight eps, and block t of the rest gets weight 1 - t*eps.
WeightVector graded_mediums_plus_lights(const std::vector<int>& sorted_desc) {
  int k = static_cast<int>(sorted_desc.size());
  int b = sorted_desc.front();
  Rational eps = Rational(1, 2 * static_cast<std::int64_t>(b + k));
  std::vector<Rational> w;
  for (int t = 1; t < k; ++t) {
    Rational c = kOne - Rational(t) * eps;
    w.insert(w.end(), sorted_desc[t], c);
  }
  w.insert(w.end(), b, eps);
  return WeightVector(std::move(w));
}

}  // namespace

WeightVector realize_product(const std::vector<int>& block_sizes) {
  if (block_sizes.empty()) throw std::invalid_argument("realize_product: no blocks");
  for (int s : block_sizes)
    if (s < 1) throw std::invalid_argument("realize_product: block sizes must be >= 1");

  std::vector<int> sorted = block_sizes;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());

  std::vector<WeightVector> candidates;
  if (sorted.size() == 1) {
    candidates.push_back(ones_vector(sorted[0]));
  } else {
    if (sorted.size() == 2 && sorted[0] >= 2)
      candidates.push_back(ones_plus_lights(sorted[1], sorted[0]));
    candidates.push_back(graded_mediums_plus_lights(sorted));
  }
  for (const WeightVector& w : candidates) {
    if (certify_symmetric_product(aut_kw(w), block_sizes)) return w;
  }
  throw std::invalid_argument(
      "realize_product: no built-in construction realizes this orbit structure");
}

}  // namespace tropmod
