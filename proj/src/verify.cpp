#include "tropmod/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "tropmod/complex.hpp"
#include "tropmod/errors.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/perm.hpp"

namespace tropmod {

namespace {

using nlohmann::json;

unsigned long long factorial_u64(unsigned long long n) {
  if (n > 20) throw CapacityError("factorial exceeds 64 bits");
  unsigned long long f = 1;
  for (unsigned long long i = 2; i <= n; ++i) f *= i;
  return f;
}

template <typename Body>
CheckReport timed_check(std::string name, json params, const Body& body) {
  CheckReport report;
  report.check = std::move(name);
  report.params = std::move(params);
  auto start = std::chrono::steady_clock::now();
  body(report);
  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

// Compares the marking-induced subgroup with the full automorphism group.
struct InducedComparison {
  std::size_t kw_order = 0;
  std::size_t induced_distinct = 0;
  bool injective = false;
  bool bijective = false;
};

InducedComparison compare_induced(const DeltaComplex& X, const ComplexAutGroup& aut) {
  InducedComparison cmp;
  std::set<ComplexAutomorphism> induced;
  const auto& kw_elements = aut_kw(X.w).elements();
  cmp.kw_order = kw_elements.size();
  for (const Perm& sigma : kw_elements) induced.insert(sn_induced_automorphism(X, sigma));
  cmp.induced_distinct = induced.size();
  cmp.injective = induced.size() == kw_elements.size();
  if (aut.enumerated) {
    cmp.bijective = cmp.injective && induced.size() == aut.elements.size() &&
                    std::equal(induced.begin(), induced.end(), aut.elements.begin());
  }
  return cmp;
}

json rose_fix_witness(int g, int k) {
  return json{{"rose_loops", k}, {"genus_label", g - k}};
}

}  // namespace

json to_json(const CheckReport& report) {
  return json{{"check", report.check},
              {"params", report.params},
              {"verdict", report.pass ? "pass" : "fail"},
              {"witnesses", report.witnesses},
              {"duration_ms", report.duration_ms}};
}

CheckReport verify_main_theorem(int g, const WeightVector& w) {
  if (g < 1) throw std::domain_error("verify_main_theorem: requires g >= 1");
  if (2 * g - 2 + w.size() < 3)
    throw std::domain_error("verify_main_theorem: requires 2g - 2 + n >= 3");
  return timed_check(
      "main-theorem", json{{"g", g}, {"w", w.to_string()}}, [&](CheckReport& report) {
        DeltaComplex X = build_delta(g, w);
        ComplexAutGroup aut = aut_complex(X);
        InducedComparison cmp = compare_induced(X, aut);
        report.pass = cmp.bijective;
        report.witnesses = json{{"kw_order", cmp.kw_order},
                                {"complex_aut_order", aut.order_text()},
                                {"sizes", X.sizes()},
                                {"induced_injective", cmp.injective}};
      });
}

CheckReport verify_heavy_light(int m, int n, const Rational& eps) {
  if (m < 2 || n < 2 || m + n < 5)
    throw std::domain_error("verify_heavy_light: requires m, n >= 2 and m + n >= 5");
  if (eps <= Rational(0) || eps > Rational(1, m))
    throw std::domain_error("verify_heavy_light: requires 0 < eps <= 1/m");
  return timed_check(
      "heavy-light", json{{"m", m}, {"n", n}, {"eps", rational_to_string(eps)}},
      [&](CheckReport& report) {
        WeightVector w = heavy_light_vector(m, n, eps);
        DeltaComplex X = build_delta(0, w);
        ComplexAutGroup aut = aut_complex(X);
        InducedComparison cmp = compare_induced(X, aut);
        unsigned long long expected = factorial_u64(m) * factorial_u64(n);
        report.pass = aut.order_equals(expected) && cmp.bijective;
        report.witnesses = json{{"expected_order", expected},
                                {"complex_aut_order", aut.order_text()},
                                {"kw_order", cmp.kw_order},
                                {"induced_bijective", cmp.bijective},
                                {"sizes", X.sizes()}};
      });
}

CheckReport verify_disjoint_vertices(int k) {
  if (k < 1) throw std::domain_error("verify_disjoint_vertices: requires k >= 1");
  return timed_check("disjoint-vertices", json{{"k", k}}, [&](CheckReport& report) {
    std::vector<Rational> weights(2 * k + 2, Rational(1, k));
    WeightVector w{std::move(weights)};
    DeltaComplex X = build_delta(0, w);
    // N(k) = (2k+2 choose k+1) / 2
    unsigned long long binom = 1;
    for (int t = 1; t <= k + 1; ++t)
      binom = binom * static_cast<unsigned long long>(k + 1 + t) / t;
    unsigned long long expected_vertices = binom / 2;
    ComplexAutGroup aut = aut_complex(X);
    bool only_vertices = X.dimension() == 0;
    bool count_ok =
        !X.classes.empty() && X.classes[0].size() == expected_vertices && only_vertices;
    bool aut_ok = aut.symmetric_on_vertices && aut.vertex_count == expected_vertices;
    if (aut.enumerated) aut_ok = aut_ok && aut.elements.size() == factorial_u64(expected_vertices);
    report.pass = count_ok && aut_ok;
    report.witnesses = json{{"vertices", X.classes.empty() ? 0 : X.classes[0].size()},
                            {"expected_vertices", expected_vertices},
                            {"higher_simplices", !only_vertices},
                            {"aut_order", aut.order_text()}};
  });
}

CheckReport verify_wreath_example() {
  return timed_check("wreath", json::object(), [&](CheckReport& report) {
    WeightVector w = WeightVector::parse("1/3^3,7/12^3");
    DeltaComplex X = build_delta(0, w);
    SkeletonGraph skel = one_skeleton_g0(X);
    auto comps = skel.components();
    std::vector<int> degree(skel.vertex_labels.size(), 0);
    for (auto [u, v] : skel.edges) {
      ++degree[u];
      ++degree[v];
    }
    bool stars = comps.size() == 3;
    for (const auto& comp : comps) {
      if (comp.size() != 4) stars = false;
      int leaves = 0, centers = 0;
      for (int v : comp) {
        if (degree[v] == 1) ++leaves;
        else if (degree[v] == 3) ++centers;
      }
      if (leaves != 3 || centers != 1) stars = false;
    }
    ComplexAutGroup aut = aut_complex(X);
    std::size_t kw_order = aut_kw(w).order();
    report.pass = skel.vertex_labels.size() == 12 && skel.edges.size() == 9 && stars &&
                  aut.order_equals(1296) && kw_order == 36 && !aut.order_equals(kw_order);
    report.witnesses = json{{"skeleton_vertices", skel.vertex_labels.size()},
                            {"skeleton_edges", skel.edges.size()},
                            {"components", comps.size()},
                            {"complex_aut_order", aut.order_text()},
                            {"kw_order", kw_order}};
  });
}

CheckReport verify_reconstruction(int g, const WeightVector& w) {
  return timed_check(
      "reconstruction", json{{"g", g}, {"w", w.to_string()}}, [&](CheckReport& report) {
        DeltaComplex X = build_delta(g, w);
        json restricted_failures = json::array();
        json unrestricted_pairs = json::array();
        for (int p = 0; p <= X.dimension(); ++p) {
          const auto& level = X.classes[p];
          std::vector<Deck> decks(level.size());
          std::vector<bool> eligible(level.size());
          std::vector<bool> betti_match(level.size());
          for (std::size_t s = 0; s < level.size(); ++s) {
            const MarkedGraph& gr = level[s].rep.graph;
            eligible[s] = gr.num_vertices() >= 3;
            betti_match[s] = first_betti(gr) == g;
            if (eligible[s]) decks[s] = deck(level[s].rep);
          }
          for (std::size_t a = 0; a < level.size(); ++a) {
            if (!eligible[a]) continue;
            for (std::size_t b = a + 1; b < level.size(); ++b) {
              if (!eligible[b] || decks[a] != decks[b]) continue;
              json pair = json{{"dimension", p},
                               {"first", level[a].code},
                               {"second", level[b].code}};
              if (betti_match[a] && betti_match[b])
                restricted_failures.push_back(pair);
              else
                unrestricted_pairs.push_back(pair);
            }
          }
        }
        report.pass = restricted_failures.empty();
        report.witnesses = json{{"deck_equal_pairs_with_betti_g", restricted_failures},
                                {"deck_equal_pairs_other", unrestricted_pairs},
                                {"sizes", X.sizes()}};
      });
}

CheckReport verify_expansion_formula(int m, int n, const Rational& eps) {
  if (m < 2 || n < 2 || m + n < 5)
    throw std::domain_error("verify_expansion_formula: requires m, n >= 2 and m + n >= 5");
  if (eps <= Rational(0) || eps > Rational(1, m))
    throw std::domain_error("verify_expansion_formula: requires 0 < eps <= 1/m");
  return timed_check(
      "expansion-formula", json{{"m", m}, {"n", n}, {"eps", rational_to_string(eps)}},
      [&](CheckReport& report) {
        WeightVector w = heavy_light_vector(m, n, eps);
        int total = m + n;
        std::set<CanonicalCode> seen;
        json mismatches = json::array();
        long long best = -1;
        std::set<CanonicalCode> maximizers, specials;
        std::size_t stable_count = 0;
        for (unsigned mask = 1; mask + 1 < (1u << total); ++mask) {
          std::vector<int> A;
          int x = 0, y = 0;
          for (int i = 0; i < total; ++i)
            if (mask & (1u << i)) {
              A.push_back(i);
              ++x;
              if (i < m) ++y;
            }
          BGraph b = make_B(0, 0, 0, A, w);
          if (!b.stable) continue;
          CanonicalCode code = canonical_code(b.graph);
          if (!seen.insert(code).second) continue;  // B_A and its complement
          ++stable_count;
          long long formula = (1LL << x) - (1LL << y) + (1LL << (total - x)) -
                              (1LL << (m - y)) - 2 - n;
          long long count = static_cast<long long>(one_edge_expansions(b.graph, w, 0).size());
          if (count != formula)
            mismatches.push_back(json{{"A_size", x},
                                      {"light_in_A", y},
                                      {"enumerated", count},
                                      {"formula", formula}});
          if (count > best) {
            best = count;
            maximizers.clear();
          }
          if (count == best) maximizers.insert(code);
          // special means one light and one heavy isolated together, seen
          // from either side of the edge
          if ((x == 2 && y == 1) || (total - x == 2 && m - y == 1)) specials.insert(code);
        }
        report.pass = mismatches.empty() && maximizers == specials && !specials.empty();
        report.witnesses = json{{"stable_one_edge_classes", stable_count},
                                {"mismatches", mismatches},
                                {"max_expansions", best},
                                {"maximizer_count", maximizers.size()},
                                {"special_count", specials.size()},
                                {"maximizers_are_special", maximizers == specials}};
      });
}

CheckReport verify_realize_product(const std::vector<int>& blocks) {
  return timed_check("realize-product", json{{"blocks", blocks}}, [&](CheckReport& report) {
    WeightVector w = realize_product(blocks);
    PermGroup group = aut_kw(w);
    unsigned long long expected = 1;
    for (int b : blocks) expected *= factorial_u64(b);
    std::vector<std::size_t> orbit_sizes;
    for (const auto& orbit : group.orbits()) orbit_sizes.push_back(orbit.size());
    report.pass = certify_symmetric_product(group, blocks);
    report.witnesses = json{{"w", w.to_string()},
                            {"order", group.order()},
                            {"expected_order", expected},
                            {"orbit_sizes", orbit_sizes}};
  });
}

CheckReport verify_filtration_and_locals(int g, const WeightVector& w) {
  if (g < 1) throw std::domain_error("verify_filtration_and_locals: requires g >= 1");
  return timed_check(
      "filtration", json{{"g", g}, {"w", w.to_string()}}, [&](CheckReport& report) {
        DeltaComplex X = build_delta(g, w);
        ComplexAutGroup aut = aut_complex(X);
        json violations = json::array();
        auto rose_index = [&](int k) {
          MarkedGraph r;
          r.genus = {g - k};
          for (int t = 0; t < k; ++t) r.edges.emplace_back(0, 0);
          r.markings.assign(w.size(), 0);
          return X.index_of(k - 1, canonical_code(EdgeLabelledGraph{r}));
        };
        int rose1 = rose_index(1);
        int roseg = X.dimension() >= g - 1 ? rose_index(g) : -1;
        for (std::size_t e = 0; e < aut.elements.size(); ++e) {
          const ComplexAutomorphism& phi = aut.elements[e];
          if (rose1 >= 0 && phi.maps[0][rose1] != rose1)
            violations.push_back(json{{"element", e}, {"kind", "rose1-moved"}});
          if (roseg >= 0 && phi.maps[g - 1][roseg] != roseg)
            violations.push_back(json{{"element", e}, {"kind", "roseg-moved"}});
          for (int p = 0; p <= X.dimension(); ++p)
            for (std::size_t s = 0; s < X.classes[p].size(); ++s) {
              const EdgeLabelledGraph& src = X.classes[p][s].rep;
              const EdgeLabelledGraph& dst = X.classes[p][phi.maps[p][s]].rep;
              bool ok = src.graph.num_vertices() == dst.graph.num_vertices() &&
                        bridges(src.graph) == bridges(dst.graph) &&
                        loop_pairs_same_vertex(src) == loop_pairs_same_vertex(dst);
              for (int k = 1; ok && k <= p + 1; ++k)
                ok = cycle_index_sets(src, k) == cycle_index_sets(dst, k);
              if (!ok)
                violations.push_back(json{{"element", e},
                                          {"kind", "local-invariant"},
                                          {"dimension", p},
                                          {"class", X.classes[p][s].code}});
            }
        }
        report.pass = violations.empty() && rose1 >= 0;
        report.witnesses = json{{"aut_order", aut.order_text()},
                                {"violations", violations},
                                {"rose1", rose_fix_witness(g, 1)},
                                {"roseg_present", roseg >= 0}};
      });
}

}  // namespace tropmod
