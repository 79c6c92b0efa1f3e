#include "tropmod/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tropmod/errors.hpp"

namespace tropmod {

std::vector<std::size_t> DeltaComplex::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(classes.size());
  for (const auto& level : classes) out.push_back(level.size());
  return out;
}

std::size_t DeltaComplex::total_classes() const {
  std::size_t t = 0;
  for (const auto& level : classes) t += level.size();
  return t;
}

int DeltaComplex::index_of(int p, const CanonicalCode& code) const {
  if (p < 0 || p >= static_cast<int>(index_.size())) return -1;
  auto it = index_[p].find(code);
  return it == index_[p].end() ? -1 : it->second;
}

namespace {

// Relabelled copy: edge at position x becomes the edge previously at
// position alpha[x]; this is the pullback along alpha.
EdgeLabelledGraph permute_labels(const EdgeLabelledGraph& g, const Perm& alpha) {
  EdgeLabelledGraph out = g;
  for (std::size_t x = 0; x < alpha.size(); ++x) out.graph.edges[x] = g.graph.edges[alpha[x]];
  return out;
}

void rebuild_index(DeltaComplex& X) {
  X.index_.assign(X.classes.size(), {});
  for (std::size_t p = 0; p < X.classes.size(); ++p)
    for (std::size_t s = 0; s < X.classes[p].size(); ++s)
      X.index_[p][X.classes[p][s].code] = static_cast<int>(s);
}

void check_structure_tables(const DeltaComplex& X) {
  int top = X.dimension();
  for (int p = 2; p <= top; ++p) {
    // simplicial identity d_i d_j = d_{j-1} d_i for i < j
    for (std::size_t s = 0; s < X.classes[p].size(); ++s)
      for (int j = 1; j <= p; ++j)
        for (int i = 0; i < j; ++i) {
          int a = X.faces[p - 1][i][X.faces[p][j][s]];
          int b = X.faces[p - 1][j - 1][X.faces[p][i][s]];
          if (a != b) throw std::logic_error("face tables violate the simplicial identity");
        }
  }
  for (int p = 1; p <= top; ++p) {
    auto apply_gen = [&](int j, int s) { return X.gens[p][j][s]; };
    for (std::size_t t = 0; t < X.classes[p].size(); ++t) {
      int s = static_cast<int>(t);
      for (int j = 0; j < p; ++j) {
        if (apply_gen(j, apply_gen(j, s)) != s)
          throw std::logic_error("generator table is not an involution");
        if (j + 1 < p) {
          int lhs = apply_gen(j, apply_gen(j + 1, apply_gen(j, s)));
          int rhs = apply_gen(j + 1, apply_gen(j, apply_gen(j + 1, s)));
          if (lhs != rhs) throw std::logic_error("generator tables violate the braid relation");
        }
        for (int i = j + 2; i < p; ++i)
          if (apply_gen(i, apply_gen(j, s)) != apply_gen(j, apply_gen(i, s)))
            throw std::logic_error("distant generators fail to commute");
      }
    }
  }
}

}  // namespace

DeltaComplex build_delta(int g, const WeightVector& w, std::size_t cap_simplices) {
  DeltaComplex X;
  X.g = g;
  X.w = w;
  X.full_build = true;

  auto levels = enumerate_stable_graphs(g, w);
  std::size_t total = 0;
  for (const auto& level : levels) {
    std::vector<SimplexClass> dim_classes;
    std::map<CanonicalCode, EdgeLabelledGraph> seen;
    for (const MarkedGraph& cls : level) {
      // All labellings of the class, deduplicated by labelled code.
      std::vector<int> order(cls.num_edges());
      std::iota(order.begin(), order.end(), 0);
      do {
        EdgeLabelledGraph labelled{cls};
        for (std::size_t x = 0; x < order.size(); ++x)
          labelled.graph.edges[x] = cls.edges[order[x]];
        CanonicalCode code = canonical_code(labelled);
        seen.emplace(std::move(code), std::move(labelled));
      } while (std::next_permutation(order.begin(), order.end()));
    }
    for (auto& [code, rep] : seen) dim_classes.push_back({std::move(rep), code});
    total += dim_classes.size();
    if (total > cap_simplices) throw CapacityError("build_delta: simplex class cap exceeded");
    X.classes.push_back(std::move(dim_classes));
  }
  rebuild_index(X);

  // Face and generator tables.
  X.faces.assign(X.classes.size(), {});
  X.gens.assign(X.classes.size(), {});
  for (int p = 1; p <= X.dimension(); ++p) {
    std::size_t count = X.classes[p].size();
    X.faces[p].assign(p + 1, std::vector<int>(count, -1));
    X.gens[p].assign(p, std::vector<int>(count, -1));
    for (std::size_t s = 0; s < count; ++s) {
      const EdgeLabelledGraph& rep = X.classes[p][s].rep;
      for (int i = 0; i <= p; ++i) {
        int idx = X.index_of(p - 1, canonical_code(contract(rep, i)));
        if (idx < 0) throw std::logic_error("build_delta: face class missing (closure violated)");
        X.faces[p][i][s] = idx;
      }
      for (int j = 0; j < p; ++j) {
        Perm swap_j = transposition_perm(p + 1, j, j + 1);
        int idx = X.index_of(p, canonical_code(permute_labels(rep, swap_j)));
        if (idx < 0) throw std::logic_error("build_delta: permuted class missing");
        X.gens[p][j][s] = idx;
      }
    }
  }
  check_structure_tables(X);
  return X;
}

namespace {

// Table-composed action of an arbitrary permutation of [p]: decompose into
// adjacent transpositions and chain the generator tables.
int apply_permutation_tables(const DeltaComplex& X, int p, const Perm& alpha, int s) {
  if (p == 0) return s;
  Perm beta = alpha;
  std::vector<int> word;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int i = 0; i + 1 <= p; ++i)
      if (beta[i] > beta[i + 1]) {
        std::swap(beta[i], beta[i + 1]);
        word.push_back(i);
        progressed = true;
      }
  }
  // Sorting beta by right-multiplications with adjacent swaps expresses
  // alpha with the last-recorded swap leftmost; contravariance of the
  // tables then applies the word in reverse recording order.
  int cur = s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = X.gens[p][*it][cur];
  return cur;
}

}  // namespace

int apply_injection(const DeltaComplex& X, const std::vector<int>& iota, int q, int simplex) {
  if (q < 0 || q > X.dimension() || simplex < 0 ||
      simplex >= static_cast<int>(X.classes[q].size()))
    throw std::invalid_argument("apply_injection: bad simplex reference");
  if (iota.empty()) throw std::invalid_argument("apply_injection: empty injection");
  int p = static_cast<int>(iota.size()) - 1;
  if (p > q) throw std::invalid_argument("apply_injection: source exceeds target dimension");
  std::set<int> image(iota.begin(), iota.end());
  if (static_cast<int>(image.size()) != p + 1)
    throw std::invalid_argument("apply_injection: map is not injective");
  for (int v : iota)
    if (v < 0 || v > q) throw std::invalid_argument("apply_injection: value out of range");

  // Order-preserving part: contract the labels outside the image, largest
  // first so positions stay valid.
  int cur = simplex;
  int dim = q;
  for (int c = q; c >= 0; --c) {
    if (image.count(c)) continue;
    cur = X.faces[dim][c][cur];
    --dim;
  }
  // Permutation part: position x of the result should hold what the
  // order-preserving collapse put at the rank of iota[x].
  std::vector<int> sorted(image.begin(), image.end());
  Perm rank(p + 1);
  for (int x = 0; x <= p; ++x)
    rank[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), iota[x]) -
                               sorted.begin());
  return apply_permutation_tables(X, p, rank, cur);
}

DeltaComplex v_subcomplex(const DeltaComplex& X, int max_vertices) {
  if (max_vertices < 1) throw std::invalid_argument("v_subcomplex: bound must be >= 1");
  DeltaComplex out;
  out.g = X.g;
  out.w = X.w;
  out.full_build = false;
  std::vector<std::vector<int>> keep_map(X.classes.size());
  for (std::size_t p = 0; p < X.classes.size(); ++p) {
    keep_map[p].assign(X.classes[p].size(), -1);
    std::vector<SimplexClass> level;
    for (std::size_t s = 0; s < X.classes[p].size(); ++s)
      if (X.classes[p][s].rep.graph.num_vertices() <= max_vertices) {
        keep_map[p][s] = static_cast<int>(level.size());
        level.push_back(X.classes[p][s]);
      }
    out.classes.push_back(std::move(level));
  }
  while (!out.classes.empty() && out.classes.back().empty()) out.classes.pop_back();
  rebuild_index(out);
  out.faces.assign(out.classes.size(), {});
  out.gens.assign(out.classes.size(), {});
  for (int p = 1; p <= out.dimension(); ++p) {
    std::size_t count = out.classes[p].size();
    out.faces[p].assign(p + 1, std::vector<int>(count, -1));
    out.gens[p].assign(p, std::vector<int>(count, -1));
    for (std::size_t s_old = 0; s_old < X.classes[p].size(); ++s_old) {
      int s_new = keep_map[p][s_old];
      if (s_new < 0) continue;
      for (int i = 0; i <= p; ++i) {
        int f = keep_map[p - 1][X.faces[p][i][s_old]];
        if (f < 0) throw std::logic_error("v_subcomplex: faces left the subcomplex");
        out.faces[p][i][s_new] = f;
      }
      for (int j = 0; j < p; ++j) {
        int t = keep_map[p][X.gens[p][j][s_old]];
        if (t < 0) throw std::logic_error("v_subcomplex: permutation left the subcomplex");
        out.gens[p][j][s_new] = t;
      }
    }
  }
  return out;
}

bool ComplexAutomorphism::is_identity() const {
  for (const auto& level : maps)
    for (std::size_t i = 0; i < level.size(); ++i)
      if (level[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

void check_commutation(const DeltaComplex& X, const ComplexAutomorphism& phi) {
  for (int p = 1; p <= X.dimension(); ++p)
    for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
      for (int i = 0; i <= p; ++i)
        if (X.faces[p][i][phi.maps[p][s]] != phi.maps[p - 1][X.faces[p][i][s]])
          throw std::logic_error("automorphism does not commute with a face map");
      for (int j = 0; j < p; ++j)
        if (X.gens[p][j][phi.maps[p][s]] != phi.maps[p][X.gens[p][j][s]])
          throw std::logic_error("automorphism does not commute with a permutation action");
    }
}

}  // namespace

ComplexAutomorphism sn_induced_automorphism(const DeltaComplex& X, const Perm& sigma) {
  if (static_cast<int>(sigma.size()) != X.w.size() || !is_valid_perm(sigma))
    throw std::invalid_argument("sn_induced_automorphism: sigma has the wrong degree");
  if (!is_simplicial_automorphism(X.w, sigma))
    throw std::domain_error(
        "sn_induced_automorphism: sigma does not preserve the weight complex");
  ComplexAutomorphism phi;
  phi.maps.resize(X.classes.size());
  for (std::size_t p = 0; p < X.classes.size(); ++p) {
    phi.maps[p].assign(X.classes[p].size(), -1);
    for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
      EdgeLabelledGraph moved = X.classes[p][s].rep;
      for (std::size_t m = 0; m < sigma.size(); ++m)
        moved.graph.markings[sigma[m]] = X.classes[p][s].rep.graph.markings[m];
      int idx = X.index_of(static_cast<int>(p), canonical_code(moved));
      if (idx < 0)
        throw std::logic_error("sn_induced_automorphism: image class missing from complex");
      phi.maps[p][s] = idx;
    }
  }
  check_commutation(X, phi);
  return phi;
}

std::string ComplexAutGroup::order_text() const {
  if (enumerated) return std::to_string(elements.size());
  return std::to_string(vertex_count) + "!";
}

unsigned long long ComplexAutGroup::order() const {
  if (enumerated) return elements.size();
  if (vertex_count > 20) throw CapacityError("automorphism group order exceeds 64 bits");
  unsigned long long f = 1;
  for (unsigned long long i = 2; i <= vertex_count; ++i) f *= i;
  return f;
}

bool ComplexAutGroup::order_equals(unsigned long long n) const {
  if (enumerated) return elements.size() == n;
  if (vertex_count > 20) return false;
  return order() == n;
}

namespace {

// Invariant color of a simplex class, usable only on a full build: vertex
// count plus the exact bridge, cycle and same-vertex-loop-pair index sets,
// all preserved by every automorphism of the full complex.
std::string class_color(const SimplexClass& cls, int p) {
  std::string c = "V" + std::to_string(cls.rep.graph.num_vertices());
  c += ";B";
  for (int b : bridges(cls.rep.graph)) c += std::to_string(b) + ",";
  for (int k = 1; k <= p + 1; ++k) {
    c += ";C" + std::to_string(k) + ":";
    for (const auto& cyc : cycle_index_sets(cls.rep, k)) {
      for (int e : cyc) c += std::to_string(e) + ",";
      c += "|";
    }
  }
  c += ";L";
  for (auto [i, j] : loop_pairs_same_vertex(cls.rep))
    c += std::to_string(i) + "-" + std::to_string(j) + ",";
  return c;
}

struct AutSearch {
  const DeltaComplex& X;
  std::size_t cap;
  std::vector<std::vector<int>> colors;
  std::vector<std::vector<int>> phi;
  std::vector<std::vector<char>> used;
  std::size_t unassigned = 0;
  std::vector<ComplexAutomorphism> results;

  AutSearch(const DeltaComplex& x, std::size_t cap_in) : X(x), cap(cap_in) {
    phi.resize(X.classes.size());
    used.resize(X.classes.size());
    for (std::size_t p = 0; p < X.classes.size(); ++p) {
      phi[p].assign(X.classes[p].size(), -1);
      used[p].assign(X.classes[p].size(), 0);
      unassigned += X.classes[p].size();
    }
    refine_colors();
  }

  // Iterated refinement of class colors over the incidence structure:
  // start from dimension plus (on full builds) the graph-level invariant
  // string, then repeatedly absorb the colors across face, coface and
  // generator arcs until the partition stabilizes. Automorphisms commute
  // with every arc, so equal refined colors are a sound candidate filter.
  void refine_colors() {
    std::map<std::string, int> palette;
    colors.resize(X.classes.size());
    for (std::size_t p = 0; p < X.classes.size(); ++p) {
      colors[p].resize(X.classes[p].size());
      for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
        std::string init = "d" + std::to_string(p);
        if (X.full_build) init += "|" + class_color(X.classes[p][s], static_cast<int>(p));
        auto [it, ignore] = palette.emplace(init, static_cast<int>(palette.size()));
        (void)ignore;
        colors[p][s] = it->second;
      }
    }
    std::size_t distinct = palette.size();
    while (true) {
      // coface colors per slot, gathered upward
      std::vector<std::vector<std::vector<std::pair<int, int>>>> up(X.classes.size());
      for (std::size_t p = 0; p < X.classes.size(); ++p)
        up[p].resize(X.classes[p].size());
      for (std::size_t p = 1; p < X.classes.size(); ++p)
        for (std::size_t s = 0; s < X.classes[p].size(); ++s)
          for (std::size_t i = 0; i < X.faces[p].size(); ++i)
            up[p - 1][X.faces[p][i][s]].emplace_back(static_cast<int>(i), colors[p][s]);

      std::map<std::string, int> next_palette;
      std::vector<std::vector<int>> next(X.classes.size());
      for (std::size_t p = 0; p < X.classes.size(); ++p) {
        next[p].resize(X.classes[p].size());
        for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
          std::string key = std::to_string(colors[p][s]);
          if (p >= 1) {
            key += "|f";
            for (std::size_t i = 0; i < X.faces[p].size(); ++i)
              key += "," + std::to_string(colors[p - 1][X.faces[p][i][s]]);
            key += "|g";
            for (std::size_t j = 0; j < X.gens[p].size(); ++j)
              key += "," + std::to_string(colors[p][X.gens[p][j][s]]);
          }
          auto& cofaces = up[p][s];
          std::sort(cofaces.begin(), cofaces.end());
          key += "|u";
          for (auto [slot, c] : cofaces)
            key += "," + std::to_string(slot) + ":" + std::to_string(c);
          auto [it, ignore] = next_palette.emplace(key, static_cast<int>(next_palette.size()));
          (void)ignore;
          next[p][s] = it->second;
        }
      }
      if (next_palette.size() == distinct) break;
      distinct = next_palette.size();
      colors = std::move(next);
    }
  }

  bool force(int p, int s, int t, std::vector<std::pair<int, int>>& trail) {
    if (phi[p][s] != -1) return phi[p][s] == t;
    if (used[p][t] || colors[p][s] != colors[p][t]) return false;
    phi[p][s] = t;
    used[p][t] = 1;
    --unassigned;
    trail.emplace_back(p, s);
    if (p >= 1) {
      for (int i = 0; i <= p; ++i)
        if (!force(p - 1, X.faces[p][i][s], X.faces[p][i][t], trail)) return false;
      for (int j = 0; j < p; ++j)
        if (!force(p, X.gens[p][j][s], X.gens[p][j][t], trail)) return false;
    }
    return true;
  }

  void unwind(std::vector<std::pair<int, int>>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      auto [p, s] = *it;
      used[p][phi[p][s]] = 0;
      phi[p][s] = -1;
      ++unassigned;
    }
    trail.clear();
  }

  // Chooses the unassigned class with the most already-assigned faces so
  // that constraint propagation cascades; fresh components seed at the
  // lowest dimension.
  std::pair<int, int> next_node() const {
    int best_p = -1, best_s = -1, best_score = -1;
    for (std::size_t p = 0; p < X.classes.size(); ++p)
      for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
        if (phi[p][s] != -1) continue;
        int score = 0;
        if (p >= 1)
          for (std::size_t i = 0; i <= p; ++i)
            if (phi[p - 1][X.faces[p][i][s]] != -1) ++score;
        if (score > best_score) {
          best_score = score;
          best_p = static_cast<int>(p);
          best_s = static_cast<int>(s);
        }
      }
    return {best_p, best_s};
  }

  void dfs() {
    if (unassigned == 0) {
      ComplexAutomorphism out;
      out.maps = phi;
      results.push_back(std::move(out));
      if (results.size() > cap)
        throw CapacityError("aut_complex: more automorphisms than the cap allows");
      return;
    }
    auto [p, s] = next_node();
    for (std::size_t t = 0; t < X.classes[p].size(); ++t) {
      std::vector<std::pair<int, int>> trail;
      if (force(p, s, static_cast<int>(t), trail)) dfs();
      unwind(trail);
    }
  }
};

}  // namespace

ComplexAutGroup aut_complex(const DeltaComplex& X, std::size_t cap) {
  ComplexAutGroup out;
  std::size_t total = X.total_classes();
  if (total <= 1) {
    ComplexAutomorphism id;
    id.maps.resize(X.classes.size());
    for (std::size_t p = 0; p < X.classes.size(); ++p) {
      id.maps[p].resize(X.classes[p].size());
      std::iota(id.maps[p].begin(), id.maps[p].end(), 0);
    }
    out.elements.push_back(std::move(id));
    return out;
  }
  if (X.dimension() == 0) {
    // Isolated vertices only: every bijection is an automorphism.
    std::size_t n = X.classes[0].size();
    out.symmetric_on_vertices = true;
    out.vertex_count = n;
    if (n > kSymbolicOrderThreshold) {
      out.enumerated = false;
      return out;
    }
    Perm p = identity_perm(static_cast<int>(n));
    do {
      ComplexAutomorphism phi;
      phi.maps = {std::vector<int>(p.begin(), p.end())};
      out.elements.push_back(std::move(phi));
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }
  AutSearch search(X, cap);
  search.dfs();
  out.elements = std::move(search.results);
  std::sort(out.elements.begin(), out.elements.end());
  for (const auto& phi : out.elements) check_commutation(X, phi);
  return out;
}

SkeletonGraph one_skeleton_g0(const DeltaComplex& X) {
  if (X.g != 0) throw std::domain_error("one_skeleton_g0: only defined in genus zero");
  SkeletonGraph out;
  if (X.classes.empty()) return out;
  for (const SimplexClass& cls : X.classes[0]) {
    const MarkedGraph& g = cls.rep.graph;
    std::string label;
    for (int side = 0; side < g.num_vertices(); ++side) {
      if (side) label += "|";
      bool first = true;
      for (int m : g.markings_at(side)) {
        if (!first) label += ",";
        label += std::to_string(m + 1);
        first = false;
      }
    }
    out.vertex_labels.push_back("{" + label + "}");
  }
  if (X.dimension() >= 1) {
    std::set<std::pair<int, int>> edges;
    for (std::size_t s = 0; s < X.classes[1].size(); ++s) {
      int a = X.faces[1][1][s];  // contract label 1, keep label 0
      int b = X.faces[1][0][s];  // contract label 0, keep label 1
      if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
    }
    out.edges.assign(edges.begin(), edges.end());
  }
  return out;
}

std::vector<std::vector<int>> SkeletonGraph::components() const {
  int n = static_cast<int>(vertex_labels.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> stack{start}, members;
    comp[start] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u : adj[v])
        if (comp[u] == -1) {
          comp[u] = comp[start];
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

FlagCheckResult is_flag_g0(const DeltaComplex& X) {
  if (X.g != 0) throw std::domain_error("is_flag_g0: only defined in genus zero");
  FlagCheckResult result;
  result.is_flag = true;
  if (X.classes.empty() || X.classes[0].empty()) return result;
  SkeletonGraph skel = one_skeleton_g0(X);
  int n = static_cast<int>(X.classes[0].size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : skel.edges) adj[u][v] = adj[v][u] = 1;

  // Vertex sets spanned by each simplex class, per dimension.
  std::vector<std::set<std::vector<int>>> spanned(X.classes.size());
  for (int p = 0; p <= X.dimension(); ++p)
    for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
      std::set<int> verts;
      for (int i = 0; i <= p; ++i) verts.insert(apply_injection(X, {i}, p, static_cast<int>(s)));
      spanned[p].insert(std::vector<int>(verts.begin(), verts.end()));
    }

  // Every clique of size c >= 3 must be spanned in dimension c - 1.
  std::vector<int> clique;
  bool done = false;
  auto rec = [&](auto&& self, int start) -> void {
    if (done) return;
    if (clique.size() >= 3) {
      int p = static_cast<int>(clique.size()) - 1;
      if (p > X.dimension() || !spanned[p].count(clique)) {
        result.is_flag = false;
        result.violating_clique = clique;
        done = true;
        return;
      }
    }
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : clique)
        if (!adj[u][v]) ok = false;
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
      if (done) return;
    }
  };
  rec(rec, 0);
  return result;
}

}  // namespace tropmod
