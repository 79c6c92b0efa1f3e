#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "tropmod/complex.hpp"
#include "tropmod/errors.hpp"

using namespace tropmod;

namespace {

WeightVector wv(const char* s) { return WeightVector::parse(s); }

// Direct graph-level pullback along alpha, for checking the table route.
int direct_perm_action(const DeltaComplex& X, int p, const Perm& alpha, int s) {
  EdgeLabelledGraph moved = X.classes[p][s].rep;
  for (std::size_t x = 0; x < alpha.size(); ++x)
    moved.graph.edges[x] = X.classes[p][s].rep.graph.edges[alpha[x]];
  return X.index_of(p, canonical_code(moved));
}

// Direct graph-level pullback along an arbitrary injection.
int direct_injection(const DeltaComplex& X, const std::vector<int>& iota, int q, int s) {
  std::set<int> image(iota.begin(), iota.end());
  EdgeLabelledGraph cur = X.classes[q][s].rep;
  std::vector<int> keep(image.begin(), image.end());
  cur = contract_complement(cur, keep);
  // cur's edge at position t corresponds to sorted-image rank t; pull back.
  EdgeLabelledGraph out = cur;
  for (std::size_t x = 0; x < iota.size(); ++x) {
    int rank = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), iota[x]) - keep.begin());
    out.graph.edges[x] = cur.graph.edges[rank];
  }
  int p = static_cast<int>(iota.size()) - 1;
  return X.index_of(p, canonical_code(out));
}

std::vector<Perm> perms_of(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("build sizes on named complexes") {
  CHECK(build_delta(1, wv("1/2,1/2")).sizes() == std::vector<std::size_t>{1, 1});
  CHECK(build_delta(1, wv("2/5,2/5")).sizes() == std::vector<std::size_t>{1, 1});
  CHECK(build_delta(0, wv("1,1,1,1")).sizes() == std::vector<std::size_t>{3});
  // 9 two-edge tree classes, each with two labellings and no label-swapping
  // automorphism, so dimension 1 holds 18 labelled classes.
  CHECK(build_delta(0, wv("1/3^3,7/12^3")).sizes() == std::vector<std::size_t>{12, 18});
  CHECK(build_delta(1, wv("1")).sizes() == std::vector<std::size_t>{1});
}

TEST_CASE("labelled class counts follow the orbit count of each graph") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1,1,1")},
                                                               {2, wv("1/2,1/2")}}) {
    DeltaComplex X = build_delta(g, w);
    auto levels = enumerate_stable_graphs(g, w);
    for (std::size_t p = 0; p < levels.size(); ++p) {
      std::size_t expected = 0;
      for (const MarkedGraph& cls : levels[p]) {
        std::set<Perm> edge_actions;
        for (const auto& a : automorphisms(cls)) edge_actions.insert(a.edge_map);
        std::size_t factorial = 1;
        for (std::size_t f = 2; f <= static_cast<std::size_t>(cls.num_edges()); ++f)
          factorial *= f;
        REQUIRE(factorial % edge_actions.size() == 0);
        expected += factorial / edge_actions.size();
      }
      CHECK(X.classes[p].size() == expected);
    }
  }
}

TEST_CASE("permutation tables agree with the direct graph action") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1,1,1")},
                                                               {2, wv("1/2,1/2")},
                                                               {0, wv("1/3^3,7/12^3")}}) {
    DeltaComplex X = build_delta(g, w);
    for (int p = 1; p <= X.dimension(); ++p)
      for (const Perm& alpha : perms_of(p + 1))
        for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
          std::vector<int> iota(alpha.begin(), alpha.end());
          CHECK(apply_injection(X, iota, p, static_cast<int>(s)) ==
                direct_perm_action(X, p, alpha, static_cast<int>(s)));
        }
  }
}

TEST_CASE("apply_injection matches the direct contraction route for every injection") {
  DeltaComplex X = build_delta(2, wv("1/2,1/2"));
  for (int q = 1; q <= X.dimension(); ++q)
    for (int p = 0; p <= q; ++p) {
      // all injections [p] -> [q]: choose image then permute
      std::vector<int> base(q + 1);
      std::iota(base.begin(), base.end(), 0);
      std::vector<bool> select(q + 1, false);
      std::fill(select.end() - (p + 1), select.end(), true);
      do {
        std::vector<int> image;
        for (int x = 0; x <= q; ++x)
          if (select[x]) image.push_back(x);
        for (const Perm& alpha : perms_of(p + 1)) {
          std::vector<int> iota(p + 1);
          for (int x = 0; x <= p; ++x) iota[x] = image[alpha[x]];
          for (std::size_t s = 0; s < X.classes[q].size(); ++s)
            CHECK(apply_injection(X, iota, q, static_cast<int>(s)) ==
                  direct_injection(X, iota, q, static_cast<int>(s)));
        }
      } while (std::next_permutation(select.begin(), select.end()));
    }
}

TEST_CASE("apply_injection handles identity and single faces") {
  DeltaComplex X = build_delta(1, wv("1,1,1"));
  for (int p = 0; p <= X.dimension(); ++p) {
    std::vector<int> id(p + 1);
    std::iota(id.begin(), id.end(), 0);
    for (std::size_t s = 0; s < X.classes[p].size(); ++s)
      CHECK(apply_injection(X, id, p, static_cast<int>(s)) == static_cast<int>(s));
  }
  // delta^i as an injection equals the stored face table
  for (int p = 1; p <= X.dimension(); ++p)
    for (int i = 0; i <= p; ++i) {
      std::vector<int> iota;
      for (int x = 0; x <= p; ++x)
        if (x != i) iota.push_back(x);
      for (std::size_t s = 0; s < X.classes[p].size(); ++s)
        CHECK(apply_injection(X, iota, p, static_cast<int>(s)) == X.faces[p][i][s]);
    }
  CHECK_THROWS_AS(apply_injection(X, {0, 0}, 1, 0), std::invalid_argument);
}

TEST_CASE("vertex-count subcomplex filtration") {
  DeltaComplex X = build_delta(2, wv("1"));
  DeltaComplex v1 = v_subcomplex(X, 1);
  for (const auto& level : v1.classes)
    for (const auto& cls : level) CHECK(cls.rep.graph.num_vertices() == 1);
  // chain property and the top filtration step
  int top = 2 * X.g - 2 + X.w.size();
  std::size_t prev = 0;
  for (int i = 1; i <= top; ++i) {
    DeltaComplex vi = v_subcomplex(X, i);
    CHECK(vi.total_classes() >= prev);
    prev = vi.total_classes();
  }
  CHECK(v_subcomplex(X, top).total_classes() == X.total_classes());

  DeltaComplex small = build_delta(1, wv("1/2,1/2"));
  CHECK(v_subcomplex(small, 2).total_classes() == small.total_classes());
}

TEST_CASE("marking-induced automorphisms") {
  DeltaComplex X = build_delta(1, wv("1,1,1"));
  ComplexAutomorphism id = sn_induced_automorphism(X, identity_perm(3));
  CHECK(id.is_identity());

  ComplexAutomorphism swap01 = sn_induced_automorphism(X, transposition_perm(3, 0, 1));
  CHECK_FALSE(swap01.is_identity());
  // order two
  ComplexAutomorphism square = swap01;
  for (std::size_t p = 0; p < square.maps.size(); ++p)
    for (std::size_t s = 0; s < square.maps[p].size(); ++s)
      square.maps[p][s] = swap01.maps[p][swap01.maps[p][s]];
  CHECK(square.is_identity());

  DeltaComplex W = build_delta(0, wv("1/3^3,7/12^3"));
  CHECK_THROWS_AS(sn_induced_automorphism(W, transposition_perm(6, 0, 3)), std::domain_error);
}

TEST_CASE("aut_complex on the exceptional two-marking genus-one case") {
  for (const char* weights : {"2/5,2/5", "1/2,1/2"}) {
    DeltaComplex X = build_delta(1, wv(weights));
    ComplexAutGroup aut = aut_complex(X);
    CHECK(aut.enumerated);
    CHECK(aut.elements.size() == 1);
    CHECK(aut.elements[0].is_identity());
  }
}

TEST_CASE("aut_complex on disjoint vertices is the full symmetric group") {
  DeltaComplex X = build_delta(0, wv("1,1,1,1"));
  ComplexAutGroup aut = aut_complex(X);
  CHECK(aut.symmetric_on_vertices);
  CHECK(aut.enumerated);
  CHECK(aut.elements.size() == 6);
  CHECK(aut.order_text() == "6");
}

TEST_CASE("aut_complex of the wreath example has order 1296") {
  DeltaComplex X = build_delta(0, wv("1/3^3,7/12^3"));
  ComplexAutGroup aut = aut_complex(X);
  CHECK(aut.enumerated);
  CHECK(aut.elements.size() == 1296);
  // the marking-induced subgroup is strictly smaller
  std::set<ComplexAutomorphism> induced;
  for (const Perm& sigma : aut_kw(X.w).elements())
    induced.insert(sn_induced_automorphism(X, sigma));
  CHECK(induced.size() == 36);
  std::set<ComplexAutomorphism> all(aut.elements.begin(), aut.elements.end());
  for (const auto& phi : induced) CHECK(all.count(phi));
}

TEST_CASE("the marking action is a homomorphism into the automorphisms") {
  DeltaComplex X = build_delta(1, wv("1,1,1"));
  const auto& elements = aut_kw(X.w).elements();
  for (const Perm& sigma : elements)
    for (const Perm& tau : elements) {
      ComplexAutomorphism a = sn_induced_automorphism(X, tau);
      ComplexAutomorphism b = sn_induced_automorphism(X, sigma);
      // apply tau's automorphism first, then sigma's
      ComplexAutomorphism composed = a;
      for (std::size_t p = 0; p < a.maps.size(); ++p)
        for (std::size_t s = 0; s < a.maps[p].size(); ++s)
          composed.maps[p][s] = b.maps[p][a.maps[p][s]];
      CHECK(composed == sn_induced_automorphism(X, compose(tau, sigma)));
    }
}

TEST_CASE("aut_complex matches the marking action in genus one") {
  DeltaComplex X = build_delta(1, wv("1,1,1"));
  ComplexAutGroup aut = aut_complex(X);
  CHECK(aut.elements.size() == 6);
  std::set<ComplexAutomorphism> induced;
  for (const Perm& sigma : aut_kw(X.w).elements())
    induced.insert(sn_induced_automorphism(X, sigma));
  CHECK(induced.size() == 6);
  std::set<ComplexAutomorphism> all(aut.elements.begin(), aut.elements.end());
  CHECK(induced == all);
}

TEST_CASE("one-skeleton of five heavy markings is the Petersen graph") {
  DeltaComplex X = build_delta(0, wv("1,1,1,1,1"));
  SkeletonGraph skel = one_skeleton_g0(X);
  CHECK(skel.vertex_labels.size() == 10);
  CHECK(skel.edges.size() == 15);
  std::vector<int> degree(10, 0);
  for (auto [u, v] : skel.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (int d : degree) CHECK(d == 3);
  CHECK(skel.components().size() == 1);
}

TEST_CASE("one-skeleton of the wreath example: three 3-leaf stars") {
  DeltaComplex X = build_delta(0, wv("1/3^3,7/12^3"));
  SkeletonGraph skel = one_skeleton_g0(X);
  CHECK(skel.vertex_labels.size() == 12);
  CHECK(skel.edges.size() == 9);
  auto comps = skel.components();
  CHECK(comps.size() == 3);
  std::vector<int> degree(12, 0);
  for (auto [u, v] : skel.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (const auto& comp : comps) {
    CHECK(comp.size() == 4);
    int leaves = 0, centers = 0;
    for (int v : comp) {
      if (degree[v] == 1) ++leaves;
      if (degree[v] == 3) ++centers;
    }
    CHECK(leaves == 3);
    CHECK(centers == 1);
  }

  DeltaComplex g1 = build_delta(1, wv("1,1"));
  CHECK_THROWS_AS(one_skeleton_g0(g1), std::domain_error);
}

TEST_CASE("flag property in genus zero") {
  CHECK(is_flag_g0(build_delta(0, wv("1,1,1,1,1"))).is_flag);
  CHECK(is_flag_g0(build_delta(0, wv("1/2,1/2,1,1,1"))).is_flag);
  CHECK(is_flag_g0(build_delta(0, wv("1,1,1,1"))).is_flag);
  // six markings give two-dimensional simplices, a non-vacuous case
  CHECK(is_flag_g0(build_delta(0, wv("1/2,1/2,1,1,1,1"))).is_flag);
  CHECK(is_flag_g0(build_delta(0, wv("1,1,1,1,1,1"))).is_flag);
  CHECK_THROWS_AS(is_flag_g0(build_delta(1, wv("1,1"))), std::domain_error);
}

TEST_CASE("automorphisms preserve vertex counts, roses, bridges and cycles") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1,1,1")},
                                                               {2, wv("1/2,1/2")}}) {
    DeltaComplex X = build_delta(g, w);
    ComplexAutGroup aut = aut_complex(X);
    // rose classes: k loops on one vertex of genus g - k; R_1 sits in
    // dimension 0 and R_g in dimension g - 1
    auto rose_object = [&](int k) {
      MarkedGraph r;
      r.genus = {g - k};
      for (int t = 0; t < k; ++t) r.edges.emplace_back(0, 0);
      r.markings.assign(w.size(), 0);
      return EdgeLabelledGraph{r};
    };
    int rose1 = X.index_of(0, canonical_code(rose_object(1)));
    int roseg = X.index_of(g - 1, canonical_code(rose_object(g)));
    REQUIRE(rose1 >= 0);
    REQUIRE(roseg >= 0);
    for (const ComplexAutomorphism& phi : aut.elements) {
      CHECK(phi.maps[0][rose1] == rose1);
      CHECK(phi.maps[g - 1][roseg] == roseg);
      for (int p = 0; p <= X.dimension(); ++p)
        for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
          const auto& src = X.classes[p][s].rep;
          const auto& dst = X.classes[p][phi.maps[p][s]].rep;
          CHECK(src.graph.num_vertices() == dst.graph.num_vertices());
          CHECK(bridges(src.graph) == bridges(dst.graph));
          for (int k = 1; k <= p + 1; ++k)
            CHECK(cycle_index_sets(src, k) == cycle_index_sets(dst, k));
          CHECK(loop_pairs_same_vertex(src) == loop_pairs_same_vertex(dst));
        }
    }
  }
}

TEST_CASE("distinct automorphisms restrict to distinct maps on the two-vertex part") {
  for (auto [g, w] : std::vector<std::pair<int, WeightVector>>{{1, wv("1,1,1")},
                                                               {2, wv("1/2,1/2")}}) {
    DeltaComplex X = build_delta(g, w);
    ComplexAutGroup aut = aut_complex(X);
    std::set<std::vector<std::vector<int>>> restrictions;
    for (const ComplexAutomorphism& phi : aut.elements) {
      std::vector<std::vector<int>> restriction(X.classes.size());
      for (int p = 0; p <= X.dimension(); ++p)
        for (std::size_t s = 0; s < X.classes[p].size(); ++s)
          if (X.classes[p][s].rep.graph.num_vertices() <= 2)
            restriction[p].push_back(phi.maps[p][s]);
      restrictions.insert(std::move(restriction));
    }
    CHECK(restrictions.size() == aut.elements.size());
  }
}
