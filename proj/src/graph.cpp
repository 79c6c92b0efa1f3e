#include "tropmod/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tropmod/errors.hpp"

namespace tropmod {

namespace {

void append_byte(std::string& s, int v) {
  s.push_back(static_cast<char>(static_cast<unsigned char>(v)));
}

std::vector<std::vector<int>> adjacency(const MarkedGraph& g) {
  std::vector<std::vector<int>> adj(g.num_vertices());
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool connected_skipping_edge(const MarkedGraph& g, int skip) {
  int nv = g.num_vertices();
  if (nv == 0) return false;
  std::vector<bool> seen(nv, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.num_edges(); ++e) {
      if (e == skip) continue;
      auto [u, v] = g.edges[e];
      int other = -1;
      if (u == cur)
        other = v;
      else if (v == cur)
        other = u;
      else
        continue;
      if (!seen[other]) {
        seen[other] = true;
        ++count;
        queue.push_back(other);
      }
    }
  }
  return count == nv;
}

// Invariant vertex keys refined by neighbor multisets; equal keys mean the
// vertices are interchangeable candidates for canonical ordering.
std::vector<std::string> refined_vertex_keys(const MarkedGraph& g, bool use_markings) {
  int nv = g.num_vertices();
  std::vector<std::string> keys(nv);
  for (int v = 0; v < nv; ++v) {
    std::string k = std::to_string(g.genus[v]) + ":" + std::to_string(g.valence(v)) + ":" +
                    std::to_string(g.loops_at(v));
    if (use_markings) {
      k += ":";
      for (int m : g.markings_at(v)) k += std::to_string(m) + ",";
    }
    keys[v] = std::move(k);
  }
  auto distinct = [](const std::vector<std::string>& ks) {
    std::set<std::string> s(ks.begin(), ks.end());
    return s.size();
  };
  auto adj = adjacency(g);
  while (true) {
    std::size_t before = distinct(keys);
    std::vector<std::string> next(nv);
    for (int v = 0; v < nv; ++v) {
      std::vector<std::string> nb;
      for (int u : adj[v]) nb.push_back(keys[u]);
      std::sort(nb.begin(), nb.end());
      std::string k = keys[v] + "|";
      for (const auto& s : nb) k += s + ";";
      next[v] = std::move(k);
    }
    if (distinct(next) == before) break;
    keys = std::move(next);
  }
  return keys;
}

// Vertices grouped into cells, cells ordered by key.
std::vector<std::vector<int>> key_cells(const std::vector<std::string>& keys) {
  std::map<std::string, std::vector<int>> by_key;
  for (int v = 0; v < static_cast<int>(keys.size()); ++v) by_key[keys[v]].push_back(v);
  std::vector<std::vector<int>> cells;
  for (auto& [k, vs] : by_key) cells.push_back(std::move(vs));
  return cells;
}

// Calls f(order) for every vertex ordering that lists cell 0 first, then
// cell 1, and so on, with every permutation inside each cell.
template <typename F>
void for_each_cell_ordering(std::vector<std::vector<int>> cells, const F& f) {
  std::vector<int> order;
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == cells.size()) {
      f(order);
      return;
    }
    std::vector<int>& cell = cells[c];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      self(self, c + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  rec(rec, 0);
}

enum class CodeKind { Unlabelled, Labelled, Weak };

std::string encode_under_order(const MarkedGraph& g, const std::vector<int>& order,
                               CodeKind kind) {
  int nv = g.num_vertices();
  std::vector<int> rank(nv);
  for (int pos = 0; pos < nv; ++pos) rank[order[pos]] = pos;
  std::string s;
  append_byte(s, nv);
  append_byte(s, g.num_edges());
  append_byte(s, kind == CodeKind::Weak ? 0 : g.num_markings());
  for (int pos = 0; pos < nv; ++pos) append_byte(s, g.genus[order[pos]]);
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(g.edges.size());
  for (auto [u, v] : g.edges)
    mapped.emplace_back(std::min(rank[u], rank[v]), std::max(rank[u], rank[v]));
  if (kind == CodeKind::Unlabelled) std::sort(mapped.begin(), mapped.end());
  for (auto [u, v] : mapped) {
    append_byte(s, u);
    append_byte(s, v);
  }
  if (kind != CodeKind::Weak)
    for (int m : g.markings) append_byte(s, rank[m]);
  return s;
}

std::string minimal_code(const MarkedGraph& g, CodeKind kind) {
  if (g.num_vertices() > kCanonicalVertexBound)
    throw CapacityError("canonical code: vertex count exceeds search bound");
  bool use_markings = kind != CodeKind::Weak;
  auto cells = key_cells(refined_vertex_keys(g, use_markings));
  std::string best;
  for_each_cell_ordering(cells, [&](const std::vector<int>& order) {
    std::string code = encode_under_order(g, order, kind);
    if (best.empty() || code < best) best = std::move(code);
  });
  return best;
}

}  // namespace

bool MarkedGraph::is_connected() const { return connected_skipping_edge(*this, -1); }

int MarkedGraph::valence(int v) const {
  int d = 0;
  for (auto [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

int MarkedGraph::loops_at(int v) const {
  int d = 0;
  for (auto [a, b] : edges)
    if (a == v && b == v) ++d;
  return d;
}

std::vector<int> MarkedGraph::markings_at(int v) const {
  std::vector<int> out;
  for (int i = 0; i < num_markings(); ++i)
    if (markings[i] == v) out.push_back(i);
  return out;
}

int first_betti(const MarkedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("first_betti: graph is disconnected");
  return g.num_edges() - g.num_vertices() + 1;
}

int total_genus(const MarkedGraph& g) {
  int h = std::accumulate(g.genus.begin(), g.genus.end(), 0);
  return first_betti(g) + h;
}

bool is_w_stable(const MarkedGraph& g, const WeightVector& w, int genus) {
  if (g.num_markings() != w.size())
    throw std::invalid_argument("is_w_stable: marking count does not match weight vector");
  if (g.num_vertices() == 0 || !g.is_connected()) return false;
  for (int h : g.genus)
    if (h < 0) return false;
  if (total_genus(g) != genus) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    Rational value = Rational(2 * g.genus[v] - 2 + g.valence(v));
    value += weight_of_subset(w, g.markings_at(v));
    if (value <= Rational(0)) return false;
  }
  return true;
}

EdgeLabelledGraph contract(const EdgeLabelledGraph& gl, int label) {
  const MarkedGraph& g = gl.graph;
  if (label < 0 || label >= g.num_edges())
    throw std::invalid_argument("contract: label out of range");
  auto [u, v] = g.edges[label];
  MarkedGraph out;
  if (u == v) {
    out = g;
    out.edges.erase(out.edges.begin() + label);
    out.genus[u] += 1;
    return {out};
  }
  int keep = std::min(u, v), gone = std::max(u, v);
  auto remap = [&](int x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  out.genus.reserve(g.num_vertices() - 1);
  for (int x = 0; x < g.num_vertices(); ++x)
    if (x != gone) out.genus.push_back(g.genus[x]);
  out.genus[keep] += g.genus[gone];
  for (int e = 0; e < g.num_edges(); ++e) {
    if (e == label) continue;
    auto [a, b] = g.edges[e];
    out.edges.emplace_back(remap(a), remap(b));
  }
  out.markings.reserve(g.num_markings());
  for (int m : g.markings) out.markings.push_back(remap(m));
  return {out};
}

EdgeLabelledGraph contract_complement(const EdgeLabelledGraph& g, const std::vector<int>& keep) {
  int ne = g.graph.num_edges();
  if (keep.empty())
    throw std::invalid_argument("contract_complement: keep set must be nonempty");
  std::set<int> keep_set(keep.begin(), keep.end());
  if (keep_set.size() != keep.size())
    throw std::invalid_argument("contract_complement: repeated label");
  for (int k : keep_set)
    if (k < 0 || k >= ne) throw std::invalid_argument("contract_complement: label out of range");
  EdgeLabelledGraph cur = g;
  // Contract discarded labels from the largest down so earlier positions
  // stay valid.
  for (int label = ne - 1; label >= 0; --label)
    if (!keep_set.count(label)) cur = contract(cur, label);
  return cur;
}

CanonicalCode canonical_code(const MarkedGraph& g) { return minimal_code(g, CodeKind::Unlabelled); }

CanonicalCode canonical_code(const EdgeLabelledGraph& g) {
  return minimal_code(g.graph, CodeKind::Labelled);
}

CanonicalCode weak_code(const EdgeLabelledGraph& g) { return minimal_code(g.graph, CodeKind::Weak); }

std::vector<GraphAutomorphism> automorphisms(const MarkedGraph& g) {
  if (g.num_vertices() > kCanonicalVertexBound)
    throw CapacityError("automorphisms: vertex count exceeds search bound");
  std::vector<std::pair<int, int>> normalized;
  for (auto [u, v] : g.edges) normalized.emplace_back(std::min(u, v), std::max(u, v));
  std::vector<std::pair<int, int>> sorted_edges = normalized;
  std::sort(sorted_edges.begin(), sorted_edges.end());

  // Parallel classes: edge positions grouped by normalized endpoints.
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (int e = 0; e < g.num_edges(); ++e) parallel[normalized[e]].push_back(e);

  std::vector<GraphAutomorphism> out;
  // Vertex bijections: a vertex may map only within its cell. Enumerate by
  // pairing each cell's sorted list against its permutations.
  Perm rho(g.num_vertices());
  auto cells2 = key_cells(refined_vertex_keys(g, true));
  auto try_edge_maps = [&](const Perm& vperm) {
    // Mapped parallel classes must match in size.
    std::map<std::pair<int, int>, std::vector<int>> image_of;
    for (auto& [pair_key, idxs] : parallel) {
      std::pair<int, int> target{std::min(vperm[pair_key.first], vperm[pair_key.second]),
                                 std::max(vperm[pair_key.first], vperm[pair_key.second])};
      auto it = parallel.find(target);
      if (it == parallel.end() || it->second.size() != idxs.size()) return;
      image_of[pair_key] = it->second;
    }
    // Product of per-class bijections.
    std::vector<const std::vector<int>*> sources, targets;
    for (auto& [pair_key, idxs] : parallel) {
      sources.push_back(&idxs);
      targets.push_back(&image_of[pair_key]);
    }
    Perm emap(g.num_edges());
    auto rec = [&](auto&& self, std::size_t c) -> void {
      if (c == sources.size()) {
        out.push_back({vperm, emap});
        if (out.size() > 1'000'000)
          throw CapacityError("automorphisms: more than 1e6 automorphisms");
        return;
      }
      std::vector<int> slot(sources[c]->size());
      std::iota(slot.begin(), slot.end(), 0);
      do {
        for (std::size_t t = 0; t < slot.size(); ++t)
          emap[(*sources[c])[t]] = (*targets[c])[slot[t]];
        self(self, c + 1);
      } while (std::next_permutation(slot.begin(), slot.end()));
    };
    rec(rec, 0);
  };

  auto rec_cells = [&](auto&& self, std::size_t c) -> void {
    if (c == cells2.size()) {
      // genus and markings are preserved inside cells by construction;
      // verify the edge multiset.
      std::vector<std::pair<int, int>> mapped;
      for (auto [u, v] : g.edges)
        mapped.emplace_back(std::min(rho[u], rho[v]), std::max(rho[u], rho[v]));
      std::sort(mapped.begin(), mapped.end());
      if (mapped == sorted_edges) try_edge_maps(rho);
      return;
    }
    std::vector<int> cell = cells2[c];
    std::sort(cell.begin(), cell.end());
    std::vector<int> image = cell;
    do {
      for (std::size_t t = 0; t < cell.size(); ++t) rho[cell[t]] = image[t];
      self(self, c + 1);
    } while (std::next_permutation(image.begin(), image.end()));
  };
  rec_cells(rec_cells, 0);

  std::sort(out.begin(), out.end(), [](const GraphAutomorphism& a, const GraphAutomorphism& b) {
    return std::tie(a.vertex_map, a.edge_map) < std::tie(b.vertex_map, b.edge_map);
  });
  return out;
}

bool weak_isomorphic(const EdgeLabelledGraph& a, const EdgeLabelledGraph& b) {
  const MarkedGraph& ga = a.graph;
  const MarkedGraph& gb = b.graph;
  if (ga.num_edges() != gb.num_edges() || ga.num_vertices() != gb.num_vertices()) return false;
  return weak_code(a) == weak_code(b);
}

Deck deck(const EdgeLabelledGraph& g) {
  Deck d;
  for (int e = 0; e < g.graph.num_edges(); ++e) {
    auto [u, v] = g.graph.edges[e];
    if (u == v) continue;
    d.entries.emplace_back(canonical_code(contract(g, e)), e);
  }
  std::sort(d.entries.begin(), d.entries.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  return d;
}

std::vector<int> bridges(const MarkedGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    if (!connected_skipping_edge(g, e)) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<int>> cycle_index_sets(const EdgeLabelledGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("cycle_index_sets: k must be positive");
  const MarkedGraph& gr = g.graph;
  int ne = gr.num_edges();
  std::vector<std::vector<int>> out;
  if (k > ne) return out;
  std::vector<int> pick;
  auto is_cycle = [&](const std::vector<int>& labels) {
    std::map<int, int> degree;
    for (int e : labels) {
      auto [u, v] = gr.edges[e];
      degree[u] += u == v ? 2 : 1;
      degree[v] += u == v ? 0 : 1;
    }
    for (auto& [v, d] : degree)
      if (d != 2) return false;
    // connectivity over the chosen edges
    std::set<int> support;
    for (auto& [v, d] : degree) support.insert(v);
    std::set<int> seen{*support.begin()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e : labels) {
        auto [u, v] = gr.edges[e];
        if (seen.count(u) && !seen.count(v)) seen.insert(v), grew = true;
        if (seen.count(v) && !seen.count(u)) seen.insert(u), grew = true;
      }
    }
    return seen.size() == support.size();
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == k) {
      if (is_cycle(pick)) out.push_back(pick);
      return;
    }
    for (int e = start; e < ne; ++e) {
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::pair<int, int>> loop_pairs_same_vertex(const EdgeLabelledGraph& g) {
  std::vector<std::pair<int, int>> out;
  const auto& edges = g.graph.edges;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(edges.size()); ++j)
      if (edges[i].first == edges[i].second && edges[j].first == edges[j].second &&
          edges[i].first == edges[j].first)
        out.emplace_back(i, j);
  return out;
}

std::vector<MarkedGraph> one_edge_expansions(const MarkedGraph& g, const WeightVector& w,
                                             int genus) {
  if (!is_w_stable(g, w, genus))
    throw std::invalid_argument("one_edge_expansions: input graph is not w-stable");
  std::map<CanonicalCode, MarkedGraph> found;
  auto offer = [&](const MarkedGraph& h) {
    if (!is_w_stable(h, w, genus)) return;
    found.emplace(canonical_code(h), h);
  };

  int nv = g.num_vertices();
  for (int v = 0; v < nv; ++v) {
    // Loop insertion: trade one unit of vertex genus for a loop.
    if (g.genus[v] >= 1) {
      MarkedGraph h = g;
      h.genus[v] -= 1;
      h.edges.emplace_back(v, v);
      offer(h);
    }

    // Vertex splitting: v becomes v and a fresh vertex joined by a new
    // edge; every incident half-edge, loop, marking and the genus label
    // distributes across the two sides.
    std::vector<std::pair<int, int>> incident;  // (edge index, endpoint slot 0/1)
    std::vector<int> loops;
    for (int e = 0; e < g.num_edges(); ++e) {
      auto [a, b] = g.edges[e];
      if (a == v && b == v)
        loops.push_back(e);
      else if (a == v)
        incident.emplace_back(e, 0);
      else if (b == v)
        incident.emplace_back(e, 1);
    }
    std::vector<int> marks = g.markings_at(v);

    std::size_t inc_count = incident.size();
    std::size_t mark_count = marks.size();
    std::size_t loop_count = loops.size();
    std::size_t loop_states = 1;
    for (std::size_t i = 0; i < loop_count; ++i) loop_states *= 3;

    for (int h1 = 0; h1 <= g.genus[v]; ++h1)
      for (std::size_t im = 0; im < (std::size_t{1} << inc_count); ++im)
        for (std::size_t mm = 0; mm < (std::size_t{1} << mark_count); ++mm)
          for (std::size_t lm = 0; lm < loop_states; ++lm) {
            MarkedGraph h = g;
            int fresh = nv;
            h.genus.push_back(g.genus[v] - h1);
            h.genus[v] = h1;
            for (std::size_t t = 0; t < inc_count; ++t)
              if (im & (std::size_t{1} << t)) {
                auto [e, slot] = incident[t];
                if (slot == 0)
                  h.edges[e].first = fresh;
                else
                  h.edges[e].second = fresh;
              }
            std::size_t code = lm;
            for (std::size_t t = 0; t < loop_count; ++t) {
              int choice = static_cast<int>(code % 3);
              code /= 3;
              if (choice == 1)
                h.edges[loops[t]] = {fresh, fresh};
              else if (choice == 2)
                h.edges[loops[t]] = {v, fresh};
            }
            for (std::size_t t = 0; t < mark_count; ++t)
              if (mm & (std::size_t{1} << t)) h.markings[marks[t]] = fresh;
            h.edges.emplace_back(v, fresh);
            offer(h);
          }
  }
  std::vector<MarkedGraph> out;
  out.reserve(found.size());
  for (auto& [code, graph] : found) out.push_back(std::move(graph));
  return out;
}

BGraph make_B(int g, int k, int l, const std::vector<int>& A, const WeightVector& w) {
  if (k < 0 || l < 0 || k + l > g)
    throw std::invalid_argument("make_B: need k, l >= 0 and k + l <= g");
  std::set<int> a_set(A.begin(), A.end());
  if (a_set.size() != A.size()) throw std::invalid_argument("make_B: repeated marking");
  for (int i : a_set)
    if (i < 0 || i >= w.size()) throw std::invalid_argument("make_B: marking out of range");
  MarkedGraph out;
  out.genus = {0, 0};
  for (int t = 0; t < k; ++t) out.edges.emplace_back(0, 0);
  for (int t = 0; t < g - (k + l) + 1; ++t) out.edges.emplace_back(0, 1);
  for (int t = 0; t < l; ++t) out.edges.emplace_back(1, 1);
  out.markings.assign(w.size(), 1);
  for (int i : a_set) out.markings[i] = 0;
  return {out, is_w_stable(out, w, g)};
}

MarkedGraph make_rose(int g, int n) {
  if (g < 1) throw std::invalid_argument("make_rose: g must be at least 1");
  MarkedGraph out;
  out.genus = {0};
  for (int t = 0; t < g; ++t) out.edges.emplace_back(0, 0);
  out.markings.assign(n, 0);
  return out;
}

std::vector<std::vector<MarkedGraph>> enumerate_stable_graphs(int genus, const WeightVector& w,
                                                              std::size_t class_cap) {
  if (genus < 0) throw std::invalid_argument("enumerate_stable_graphs: negative genus");
  if (Rational(2 * genus - 2) + w.total() <= Rational(0))
    throw std::invalid_argument("enumerate_stable_graphs: 2g - 2 + |w| must be positive");
  int max_edges = 3 * genus - 3 + w.size();
  std::vector<std::vector<MarkedGraph>> result;
  if (max_edges < 1) return result;

  MarkedGraph seed;
  seed.genus = {genus};
  seed.markings.assign(w.size(), 0);

  std::size_t total = 0;
  std::vector<MarkedGraph> frontier{seed};
  for (int e = 1; e <= max_edges; ++e) {
    std::map<CanonicalCode, MarkedGraph> next;
    for (const MarkedGraph& g : frontier)
      for (MarkedGraph& h : one_edge_expansions(g, w, genus))
        next.emplace(canonical_code(h), std::move(h));
    std::vector<MarkedGraph> level;
    level.reserve(next.size());
    for (auto& [code, graph] : next) level.push_back(std::move(graph));
    total += level.size();
    if (total > class_cap)
      throw CapacityError("enumerate_stable_graphs: class cap exceeded");
    frontier = level;
    result.push_back(std::move(level));
    if (frontier.empty()) break;
  }
  while (!result.empty() && result.back().empty()) result.pop_back();
  return result;
}

}  // namespace tropmod
