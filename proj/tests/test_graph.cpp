#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tropmod/errors.hpp"
#include "tropmod/graph.hpp"

using namespace tropmod;

namespace {

WeightVector wv(const char* s) { return WeightVector::parse(s); }

MarkedGraph theta(int n_markings = 0) {
  MarkedGraph g;
  g.genus = {0, 0};
  g.edges = {{0, 1}, {0, 1}, {0, 1}};
  g.markings.assign(n_markings, 0);
  return g;
}

// All stable classes across every edge count, flattened.
std::vector<MarkedGraph> all_classes(int genus, const WeightVector& w) {
  std::vector<MarkedGraph> out;
  for (auto& level : enumerate_stable_graphs(genus, w))
    for (auto& g : level) out.push_back(g);
  return out;
}

// Independent generator for tiny cases: every connected stable class with
// exactly `edges` edges, found by enumerating all small multigraphs
// directly rather than by expansion.
std::vector<CanonicalCode> direct_generation(int genus, const WeightVector& w, int edges) {
  std::set<CanonicalCode> codes;
  int n = w.size();
  for (int nv = 1; nv <= edges + 1; ++nv) {
    // all multisets of `edges` endpoint pairs over nv vertices
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < nv; ++u)
      for (int v = u; v < nv; ++v) pairs.emplace_back(u, v);
    std::vector<int> choice(edges, 0);
    auto advance = [&]() {
      int pos = edges - 1;
      while (pos >= 0) {
        if (++choice[pos] < static_cast<int>(pairs.size())) {
          for (int t = pos + 1; t < edges; ++t) choice[t] = choice[pos];
          return true;
        }
        --pos;
      }
      return false;
    };
    do {
      MarkedGraph base;
      base.genus.assign(nv, 0);
      for (int c : choice) base.edges.push_back(pairs[c]);
      if (!base.is_connected()) continue;
      int b1 = base.num_edges() - nv + 1;
      if (b1 < 0 || b1 > genus) continue;
      int h_total = genus - b1;
      // all genus assignments summing to h_total
      std::vector<int> h(nv, 0);
      auto rec_h = [&](auto&& self, int v, int remaining) -> void {
        if (v == nv - 1) {
          h[v] = remaining;
          base.genus = h;
          // all marking maps
          std::vector<int> m(n, 0);
          auto rec_m = [&](auto&& mark_self, int i) -> void {
            if (i == n) {
              base.markings = m;
              if (is_w_stable(base, w, genus)) codes.insert(canonical_code(base));
              return;
            }
            for (int v2 = 0; v2 < nv; ++v2) {
              m[i] = v2;
              mark_self(mark_self, i + 1);
            }
          };
          rec_m(rec_m, 0);
          return;
        }
        for (int x = 0; x <= remaining; ++x) {
          h[v] = x;
          self(self, v + 1, remaining - x);
        }
      };
      rec_h(rec_h, 0, h_total);
    } while (advance());
  }
  return {codes.begin(), codes.end()};
}

}  // namespace

TEST_CASE("first betti number") {
  MarkedGraph rose = make_rose(3, 0);
  CHECK(first_betti(rose) == 3);
  MarkedGraph tree;
  tree.genus = {0, 0, 0};
  tree.edges = {{0, 1}, {1, 2}};
  CHECK(first_betti(tree) == 0);
  CHECK(first_betti(theta()) == 2);

  MarkedGraph disconnected;
  disconnected.genus = {0, 0};
  CHECK_THROWS_AS(first_betti(disconnected), std::invalid_argument);
}

TEST_CASE("w-stability") {
  WeightVector half = wv("1/2,1/2");
  MarkedGraph loop;  // single loop supporting both markings
  loop.genus = {0};
  loop.edges = {{0, 0}};
  loop.markings = {0, 0};
  CHECK(is_w_stable(loop, half, 1));

  MarkedGraph bridge;  // genus (1,0) bridge, markings on the genus-0 end
  bridge.genus = {1, 0};
  bridge.edges = {{0, 1}};
  bridge.markings = {1, 1};
  CHECK_FALSE(is_w_stable(bridge, half, 1));

  WeightVector ones4 = wv("1,1,1,1");
  MarkedGraph split;  // one edge, markings split 2/2
  split.genus = {0, 0};
  split.edges = {{0, 1}};
  split.markings = {0, 0, 1, 1};
  CHECK(is_w_stable(split, ones4, 0));

  CHECK_THROWS_AS(is_w_stable(split, half, 0), std::invalid_argument);
}

TEST_CASE("contract a loop and a bridge") {
  // rose R_2, contract label 0 -> R_1 with genus bumped
  EdgeLabelledGraph r2{make_rose(2, 1)};
  EdgeLabelledGraph c = contract(r2, 0);
  CHECK(c.graph.genus == std::vector<int>{1});
  CHECK(c.graph.edges == std::vector<std::pair<int, int>>{{0, 0}});

  // bridge plus loop: contracting the bridge merges to one vertex
  MarkedGraph bl;
  bl.genus = {0, 0};
  bl.edges = {{0, 1}, {1, 1}};
  bl.markings = {0};
  EdgeLabelledGraph m = contract(EdgeLabelledGraph{bl}, 0);
  CHECK(m.graph.genus == std::vector<int>{0});
  CHECK(m.graph.edges == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(m.graph.markings == std::vector<int>{0});

  // theta graph: contracting label 1 leaves two loops, labels 0 -> 0, 2 -> 1
  EdgeLabelledGraph t{theta()};
  EdgeLabelledGraph tc = contract(t, 1);
  CHECK(tc.graph.genus == std::vector<int>{0});
  CHECK(tc.graph.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 0}});

  CHECK_THROWS_AS(contract(t, 3), std::invalid_argument);
}

TEST_CASE("contraction preserves total genus and stability over an enumeration") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1,1,1")},
                                                               {2, wv("1/2,1/2")},
                                                               {0, wv("1/3^3,7/12^3")}}) {
    for (const MarkedGraph& cls : all_classes(g, w)) {
      EdgeLabelledGraph el{cls};
      for (int e = 0; e < cls.num_edges(); ++e) {
        EdgeLabelledGraph c = contract(el, e);
        if (c.graph.num_edges() > 0) CHECK(total_genus(c.graph) == g);
        CHECK(is_w_stable(c.graph, w, g) == (true));
      }
    }
  }
}

TEST_CASE("contractions in either order agree") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1,1,1")},
                                                               {0, wv("1/3^3,7/12^3")}}) {
    for (const MarkedGraph& cls : all_classes(g, w)) {
      if (cls.num_edges() < 2) continue;
      EdgeLabelledGraph el{cls};
      for (int i = 0; i < cls.num_edges(); ++i)
        for (int j = i + 1; j < cls.num_edges(); ++j) {
          EdgeLabelledGraph a = contract(contract(el, j), i);
          EdgeLabelledGraph b = contract(contract(el, i), j - 1);
          CHECK(canonical_code(a) == canonical_code(b));
        }
    }
  }
}

TEST_CASE("contract_complement") {
  EdgeLabelledGraph t{theta()};
  // keep all is the identity
  CHECK(canonical_code(contract_complement(t, {0, 1, 2})) == canonical_code(t));
  // keep one edge of the theta graph: a loop remains
  EdgeLabelledGraph kept = contract_complement(t, {2});
  CHECK(kept.graph.num_vertices() == 1);
  CHECK(kept.graph.edges == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK_THROWS_AS(contract_complement(t, {}), std::invalid_argument);
}

TEST_CASE("canonical codes identify isomorphic presentations") {
  MarkedGraph a = theta(2);
  a.markings = {0, 1};
  MarkedGraph b;  // same theta with vertex ids flipped
  b.genus = {0, 0};
  b.edges = {{1, 0}, {0, 1}, {1, 0}};
  b.markings = {1, 0};
  CHECK(canonical_code(a) == canonical_code(b));

  // loop placement distinguishes
  WeightVector w1 = wv("1");
  MarkedGraph loop_near = make_B(1, 1, 0, {0}, w1).graph;
  MarkedGraph loop_far = make_B(1, 0, 1, {0}, w1).graph;
  CHECK(canonical_code(loop_near) != canonical_code(loop_far));

  // genus label distinguishes
  MarkedGraph g1, g2;
  g1.genus = {1, 0};
  g1.edges = {{0, 0}, {0, 1}};
  g1.markings = {1};
  g2.genus = {0, 1};
  g2.edges = {{0, 0}, {0, 1}};
  g2.markings = {1};
  CHECK(canonical_code(g1) != canonical_code(g2));
}

TEST_CASE("canonical code equality matches brute-force isomorphism") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1,1,1")},
                                                               {2, wv("1/2,1/2")},
                                                               {0, wv("1/2,1/2,1,1,1")}}) {
    auto classes = all_classes(g, w);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i; j < classes.size(); ++j) {
        if (classes[i].num_vertices() > 6 || classes[j].num_vertices() > 6) continue;
        bool same_code = canonical_code(classes[i]) == canonical_code(classes[j]);
        CHECK(same_code == oracles::isomorphic_brute(classes[i], classes[j]));
      }
  }
}

TEST_CASE("labelled canonical codes match brute-force labelled isomorphism") {
  // Take a handful of labelled variants of enumerated graphs and compare.
  auto classes = all_classes(1, wv("1,1"));
  std::vector<MarkedGraph> variants;
  for (const MarkedGraph& g : classes) {
    MarkedGraph v = g;
    std::sort(v.edges.begin(), v.edges.end());
    variants.push_back(v);
    std::reverse(v.edges.begin(), v.edges.end());
    variants.push_back(v);
  }
  for (const MarkedGraph& a : variants)
    for (const MarkedGraph& b : variants) {
      bool same = canonical_code(EdgeLabelledGraph{a}) == canonical_code(EdgeLabelledGraph{b});
      CHECK(same == oracles::labelled_isomorphic_brute(a, b));
    }
}

TEST_CASE("graph automorphisms") {
  // theta with one marking on each side: edge group S_3, vertex group trivial
  MarkedGraph t = theta(2);
  t.markings = {0, 1};
  auto autos = automorphisms(t);
  CHECK(autos.size() == 6);
  for (const auto& a : autos) CHECK(a.vertex_map == Perm{0, 1});

  // rose: edge group S_g
  CHECK(automorphisms(make_rose(3, 1)).size() == 6);

  // one-edge tree with distinct marking sets: trivial
  MarkedGraph tree;
  tree.genus = {0, 0};
  tree.edges = {{0, 1}};
  tree.markings = {0, 1, 1};
  CHECK(automorphisms(tree).size() == 1);
}

TEST_CASE("weak isomorphism ignores markings but matches labels") {
  WeightVector w2 = wv("1,1");
  MarkedGraph b1 = make_B(0, 0, 0, {0}, wv("1,1,1,1")).graph;
  MarkedGraph b2 = make_B(0, 0, 0, {1}, wv("1,1,1,1")).graph;
  CHECK(weak_isomorphic(EdgeLabelledGraph{b1}, EdgeLabelledGraph{b2}));

  CHECK_FALSE(weak_isomorphic(EdgeLabelledGraph{make_rose(2, 0)}, EdgeLabelledGraph{theta()}));

  // a 2-cycle with transposed labels is weakly isomorphic to itself
  MarkedGraph pair;
  pair.genus = {0, 0};
  pair.edges = {{0, 1}, {0, 1}};
  pair.markings = {0, 1};
  MarkedGraph swapped = pair;
  std::swap(swapped.edges[0], swapped.edges[1]);
  CHECK(weak_isomorphic(EdgeLabelledGraph{pair}, EdgeLabelledGraph{swapped}));
}

TEST_CASE("decks") {
  CHECK(deck(EdgeLabelledGraph{make_rose(2, 1)}).entries.empty());

  MarkedGraph tree;
  tree.genus = {0, 0};
  tree.edges = {{0, 1}};
  tree.markings = {0, 0, 1, 1};
  CHECK(deck(EdgeLabelledGraph{tree}).entries.size() == 1);

  auto d = deck(EdgeLabelledGraph{theta(2)});
  CHECK(d.entries.size() == 3);
  for (auto& [code, idx] : d.entries) {
    EdgeLabelledGraph c = contract(EdgeLabelledGraph{theta(2)}, idx);
    CHECK(c.graph.num_edges() == 2);
    CHECK(code == canonical_code(c));
  }
}

TEST_CASE("bridges") {
  MarkedGraph tree;
  tree.genus = {0, 0, 0};
  tree.edges = {{0, 1}, {1, 2}};
  CHECK(bridges(tree) == std::vector<int>{0, 1});
  CHECK(bridges(theta()).empty());

  MarkedGraph bl = make_B(1, 1, 0, {0}, wv("1")).graph;  // loop + bridge
  CHECK(bridges(bl).size() == 1);
  auto [u, v] = bl.edges[bridges(bl)[0]];
  CHECK(u != v);
}

TEST_CASE("bridges agree with the labelled keep-one-edge characterization") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{2, wv("1/2,1/2")},
                                                               {1, wv("1,1,1")}}) {
    CanonicalCode loop_code = canonical_code(EdgeLabelledGraph{make_rose(1, w.size())});
    for (const MarkedGraph& cls : all_classes(g, w)) {
      auto b = bridges(cls);
      EdgeLabelledGraph el{cls};
      for (int e = 0; e < cls.num_edges(); ++e) {
        EdgeLabelledGraph kept = contract_complement(el, {e});
        // after renaming markings off, compare only the shape: a non-bridge
        // leaves the loop R_1
        bool is_loop = kept.graph.edges[0].first == kept.graph.edges[0].second;
        bool listed = std::find(b.begin(), b.end(), e) != b.end();
        CHECK(is_loop == !listed);
      }
    }
    (void)loop_code;
  }
}

TEST_CASE("cycle index sets and loop pairs") {
  EdgeLabelledGraph r2{make_rose(2, 0)};
  CHECK(cycle_index_sets(r2, 1) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(loop_pairs_same_vertex(r2) == std::vector<std::pair<int, int>>{{0, 1}});

  EdgeLabelledGraph t{theta()};
  CHECK(cycle_index_sets(t, 2) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(cycle_index_sets(t, 1).empty());

  MarkedGraph tri;
  tri.genus = {0, 0, 0};
  tri.edges = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(cycle_index_sets(EdgeLabelledGraph{tri}, 3) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(cycle_index_sets(EdgeLabelledGraph{tri}, 2).empty());
}

TEST_CASE("make_B") {
  WeightVector w = wv("1,1");
  BGraph b = make_B(2, 1, 1, {0}, w);
  CHECK(b.graph.num_edges() == 3);
  CHECK(b.graph.loops_at(0) == 1);
  CHECK(b.graph.loops_at(1) == 1);
  CHECK(b.stable);
  CHECK(total_genus(b.graph) == 2);

  // both markings on one side of a parallel pair: unstable
  BGraph bad = make_B(1, 0, 0, {0, 1}, wv("1/2,1/2"));
  CHECK_FALSE(bad.stable);
  // split markings: stable
  CHECK(make_B(1, 0, 0, {0}, wv("1/2,1/2")).stable);

  CHECK_THROWS_AS(make_B(1, 1, 1, {0}, w), std::invalid_argument);
}

TEST_CASE("make_rose") {
  MarkedGraph r = make_rose(1, 2);
  CHECK(r.num_vertices() == 1);
  CHECK(r.genus == std::vector<int>{0});
  CHECK(r.num_edges() == 1);
  CHECK(total_genus(make_rose(3, 0)) == 3);
  CHECK_THROWS_AS(make_rose(0, 2), std::invalid_argument);

  EdgeLabelledGraph c = contract(EdgeLabelledGraph{make_rose(2, 1)}, 0);
  CHECK(c.graph.genus == std::vector<int>{1});
  CHECK(c.graph.num_edges() == 1);
}

TEST_CASE("one-edge expansions of the marked loop") {
  WeightVector w = wv("1/2,1/2");
  MarkedGraph loop;
  loop.genus = {0};
  loop.edges = {{0, 0}};
  loop.markings = {0, 0};
  auto exps = one_edge_expansions(loop, w, 1);
  CHECK(exps.size() == 1);
  CHECK(exps[0].num_vertices() == 2);
  CHECK(exps[0].num_edges() == 2);
  CHECK(exps[0].edges[0] == exps[0].edges[1]);  // parallel pair

  MarkedGraph unstable;
  unstable.genus = {1, 0};
  unstable.edges = {{0, 1}};
  unstable.markings = {1, 1};
  CHECK_THROWS_AS(one_edge_expansions(unstable, w, 1), std::invalid_argument);
}

TEST_CASE("expansion counts of special and non-special one-edge trees") {
  WeightVector w = wv("1/2,1/2,1,1,1");
  // special: one light, one heavy isolated together
  MarkedGraph special = make_B(0, 0, 0, {0, 2}, w).graph;
  CHECK(one_edge_expansions(special, w, 0).size() == 3);
  // two heavies together
  MarkedGraph hh = make_B(0, 0, 0, {2, 3}, w).graph;
  CHECK(one_edge_expansions(hh, w, 0).size() == 2);
}

TEST_CASE("expansion/contraction duality") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1,1,1")},
                                                               {0, wv("1/3^3,7/12^3")}}) {
    auto levels = enumerate_stable_graphs(g, w);
    for (std::size_t lvl = 0; lvl + 1 < levels.size(); ++lvl)
      for (const MarkedGraph& low : levels[lvl]) {
        auto exps = one_edge_expansions(low, w, g);
        std::set<CanonicalCode> exp_codes;
        for (auto& h : exps) exp_codes.insert(canonical_code(h));
        CanonicalCode low_code = canonical_code(low);
        for (const MarkedGraph& high : levels[lvl + 1]) {
          bool contracts_to_low = false;
          EdgeLabelledGraph el{high};
          for (int e = 0; e < high.num_edges(); ++e)
            if (canonical_code(contract(el, e).graph) == low_code) contracts_to_low = true;
          CHECK(contracts_to_low == (exp_codes.count(canonical_code(high)) > 0));
        }
      }
  }
}

TEST_CASE("enumerate stable graphs: named counts") {
  // genus 1, two weights of a half: the marked loop and the parallel pair
  auto a = enumerate_stable_graphs(1, wv("1/2,1/2"));
  REQUIRE(a.size() == 2);
  CHECK(a[0].size() == 1);
  CHECK(a[1].size() == 1);

  // four heavy markings in genus 0: three one-edge trees
  auto b = enumerate_stable_graphs(0, wv("1,1,1,1"));
  REQUIRE(b.size() == 1);
  CHECK(b[0].size() == 3);

  // the wreath example: 12 one-edge classes, 9 two-edge classes
  auto c = enumerate_stable_graphs(0, wv("1/3^3,7/12^3"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].size() == 12);
  CHECK(c[1].size() == 9);
}

TEST_CASE("enumeration matches independent direct generation on tiny cases") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1/2,1/2")},
                                                               {1, wv("1,1")},
                                                               {2, wv("1")},
                                                               {0, wv("1,1,1,1,1")}}) {
    auto levels = enumerate_stable_graphs(g, w);
    for (int e = 1; e <= static_cast<int>(levels.size()) && e <= 3; ++e) {
      std::vector<CanonicalCode> ours;
      for (const MarkedGraph& cls : levels[e - 1]) ours.push_back(canonical_code(cls));
      std::sort(ours.begin(), ours.end());
      CHECK(ours == direct_generation(g, w, e));
    }
  }
}

TEST_CASE("enumeration rejects empty moduli and reports caps") {
  CHECK_THROWS_AS(enumerate_stable_graphs(0, wv("1/4,1/4")), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_stable_graphs(2, wv("1/2,1/2"), 3), CapacityError);
}
