// Command-line front door: weight-complex reports, stable-graph
// enumeration, moduli-complex automorphisms, named theorem checks, and
// JSON/DOT export.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropmod/complex.hpp"
#include "tropmod/errors.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/json_io.hpp"
#include "tropmod/perm.hpp"
#include "tropmod/verify.hpp"
#include "tropmod/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitDomain = 4;

using nlohmann::json;
using namespace tropmod;

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  return static_cast<std::size_t>(std::strtoull(value, nullptr, 10));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

std::string perm_to_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) out += " ";
      out += std::to_string(cur + 1);
      first = false;
      cur = static_cast<std::size_t>(p[cur]);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

std::string subset_to_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

ComplexAutomorphism compose_phi(const ComplexAutomorphism& a, const ComplexAutomorphism& b) {
  ComplexAutomorphism out = a;
  for (std::size_t p = 0; p < a.maps.size(); ++p)
    for (std::size_t s = 0; s < a.maps[p].size(); ++s) out.maps[p][s] = b.maps[p][a.maps[p][s]];
  return out;
}

// Greedy generating set for an enumerated automorphism list.
std::vector<ComplexAutomorphism> generating_set(const std::vector<ComplexAutomorphism>& all) {
  std::vector<ComplexAutomorphism> gens;
  std::set<ComplexAutomorphism> closure;
  if (all.empty()) return gens;
  ComplexAutomorphism id = all.front();
  for (auto& level : id.maps)
    for (std::size_t s = 0; s < level.size(); ++s) level[s] = static_cast<int>(s);
  closure.insert(id);
  for (const ComplexAutomorphism& phi : all) {
    if (closure.count(phi)) continue;
    gens.push_back(phi);
    // close under composition with the new generator
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<ComplexAutomorphism> snapshot(closure.begin(), closure.end());
      for (const auto& a : snapshot)
        for (const auto& g : gens) {
          ComplexAutomorphism c = compose_phi(a, g);
          if (closure.insert(c).second) grew = true;
        }
    }
  }
  return gens;
}

int run_kw(const std::string& weights, const std::string& format, const std::string& out_path,
           std::size_t cap_group, bool admissible_meets_pair) {
  WeightVector w = WeightVector::parse(weights);
  bool disjoint = !admissible_meets_pair;
  PermGroup kw = aut_kw(w);
  // admissible transpositions need at least two indices
  PermGroup mbar = w.size() >= 2 ? aut_mbar(w, disjoint) : PermGroup(1, {});
  auto facets = kw_facets(w);
  auto admissible = w.size() >= 2 ? admissible_transpositions(w, disjoint)
                                  : std::vector<std::pair<int, int>>{};
  auto cls = classify_heavy_light(w);
  auto orbits = kw.orbits();

  if (format == "json") {
    json j{{"weights", weight_vector_to_json(w)},
           {"facets", facets},
           {"aut_kw_order", kw.order(cap_group)},
           {"aut_kw_generators", kw.generators()},
           {"orbits", orbits},
           {"admissible_transpositions", admissible},
           {"aut_mbar_order", mbar.order(cap_group)},
           {"has_one_dimensional_facet", kw_has_one_dimensional_facet(w)},
           {"heavy", cls.heavy},
           {"light", cls.light},
           {"neither", cls.neither},
           {"is_heavy_light", cls.is_heavy_light}};
    emit(j.dump(2) + "\n", out_path);
    return kExitOk;
  }
  std::string text;
  text += "w = (" + w.to_string() + ")\n";
  text += "facets of the weight complex:\n";
  for (const auto& f : facets) text += "  " + subset_to_string(f) + "\n";
  text += "Aut(K_w): order " + std::to_string(kw.order(cap_group)) + ", generators:";
  if (kw.generators().empty()) text += " none (trivial)";
  for (const Perm& g : kw.generators()) text += " " + perm_to_cycles(g);
  text += "\norbits:";
  for (const auto& o : orbits) text += " " + subset_to_string(o);
  text += "\nadmissible transpositions:";
  if (admissible.empty()) text += " none";
  for (auto [i, j] : admissible)
    text += " (" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
  text += "\nadmissible-transposition group order: " + std::to_string(mbar.order(cap_group));
  text += "\none-dimensional facet: ";
  text += kw_has_one_dimensional_facet(w) ? "yes" : "no";
  text += "\nheavy " + subset_to_string(cls.heavy) + ", light " + subset_to_string(cls.light) +
          ", neither " + subset_to_string(cls.neither);
  text += cls.is_heavy_light ? " -- heavy/light vector\n" : "\n";
  emit(text, out_path);
  return kExitOk;
}

int run_enumerate(int g, const std::string& weights, const std::string& format,
                  const std::string& out_path, std::size_t cap) {
  WeightVector w = WeightVector::parse(weights);
  auto levels = enumerate_stable_graphs(g, w, cap);
  if (format == "json") {
    json j{{"g", g}, {"weights", weight_vector_to_json(w)}, {"levels", json::array()}};
    for (std::size_t e = 0; e < levels.size(); ++e) {
      json level{{"edges", e + 1}, {"classes", json::array()}};
      for (const MarkedGraph& cls : levels[e]) level["classes"].push_back(graph_to_json(cls, g));
      j["levels"].push_back(std::move(level));
    }
    emit(j.dump(2) + "\n", out_path);
    return kExitOk;
  }
  std::string text = "stable graph classes for g=" + std::to_string(g) + ", w=(" +
                     w.to_string() + ")\n";
  std::size_t total = 0;
  for (std::size_t e = 0; e < levels.size(); ++e) {
    text += "  " + std::to_string(e + 1) + " edge(s): " + std::to_string(levels[e].size()) +
            " class(es)\n";
    total += levels[e].size();
  }
  text += "  total: " + std::to_string(total) + "\n";
  emit(text, out_path);
  return kExitOk;
}

int run_aut_delta(int g, const std::string& weights, const std::string& format,
                  const std::string& out_path, std::size_t cap_simplices,
                  std::size_t cap_group) {
  WeightVector w = WeightVector::parse(weights);
  DeltaComplex X = build_delta(g, w, cap_simplices);
  ComplexAutGroup aut = aut_complex(X, cap_group);

  bool bijective = false;
  std::size_t kw_order = aut_kw(w).order(cap_group);
  if (aut.enumerated) {
    std::set<ComplexAutomorphism> induced;
    for (const Perm& sigma : aut_kw(w).elements(cap_group))
      induced.insert(sn_induced_automorphism(X, sigma));
    bijective = induced.size() == kw_order && induced.size() == aut.elements.size() &&
                std::equal(induced.begin(), induced.end(), aut.elements.begin());
  }
  std::vector<ComplexAutomorphism> gens;
  if (aut.enumerated) gens = generating_set(aut.elements);

  if (format == "json") {
    json j{{"g", g},
           {"weights", weight_vector_to_json(w)},
           {"sizes", X.sizes()},
           {"aut_order", aut.order_text()},
           {"kw_order", kw_order},
           {"induced_map_bijective", bijective}};
    json gen_list = json::array();
    for (const auto& phi : gens) gen_list.push_back(phi.maps.empty() ? json::array() : json(phi.maps[0]));
    j["generators_dim0"] = gen_list;
    emit(j.dump(2) + "\n", out_path);
    return kExitOk;
  }
  std::string text = "complex sizes:";
  for (std::size_t s : X.sizes()) text += " " + std::to_string(s);
  text += "\n|Aut(Delta)| = " + aut.order_text();
  text += "\n|Aut(K_w)| = " + std::to_string(kw_order);
  text += "\ninduced map bijective: ";
  text += bijective ? "yes" : "no";
  text += "\n";
  if (!gens.empty()) {
    text += "generators on dimension 0:\n";
    for (const auto& phi : gens) {
      text += " ";
      if (!phi.maps.empty())
        for (int v : phi.maps[0]) text += " " + std::to_string(v);
      text += "\n";
    }
  }
  emit(text, out_path);
  return kExitOk;
}

int run_export(int g, const std::string& weights, const std::string& format,
               const std::string& out_path, std::size_t cap_simplices) {
  WeightVector w = WeightVector::parse(weights);
  DeltaComplex X = build_delta(g, w, cap_simplices);
  if (format == "dot") {
    if (g != 0)
      throw std::domain_error("dot export draws the genus-zero one-skeleton; use --format json");
    emit(skeleton_to_dot(one_skeleton_g0(X)), out_path);
    return kExitOk;
  }
  emit(complex_to_json(X).dump(2) + "\n", out_path);
  return kExitOk;
}

int run_verify(const std::string& name, int g, const std::string& weights, int m, int n,
               const std::string& eps_text, int k, const std::string& blocks_text,
               const std::string& out_path) {
  CheckReport report;
  auto need_weights = [&]() {
    if (weights.empty()) throw std::invalid_argument("this check needs --weights");
    return WeightVector::parse(weights);
  };
  if (name == "main-theorem") {
    report = verify_main_theorem(g, need_weights());
  } else if (name == "heavy-light") {
    report = verify_heavy_light(m, n, parse_rational(eps_text));
  } else if (name == "disjoint-vertices") {
    report = verify_disjoint_vertices(k);
  } else if (name == "wreath") {
    report = verify_wreath_example();
  } else if (name == "reconstruction") {
    report = verify_reconstruction(g, need_weights());
  } else if (name == "expansion-formula") {
    report = verify_expansion_formula(m, n, parse_rational(eps_text));
  } else if (name == "realize-product") {
    std::vector<int> blocks;
    std::string token;
    for (char c : blocks_text + ",") {
      if (c == ',') {
        if (!token.empty()) blocks.push_back(std::stoi(token));
        token.clear();
      } else {
        token += c;
      }
    }
    report = verify_realize_product(blocks);
  } else if (name == "filtration") {
    report = verify_filtration_and_locals(g, need_weights());
  } else {
    throw std::invalid_argument(
        "unknown check '" + name +
        "'; available: main-theorem, heavy-light, disjoint-vertices, wreath, "
        "reconstruction, expansion-formula, realize-product, filtration");
  }
  emit(to_json(report).dump(2) + "\n", out_path);
  return report.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical moduli complexes from rational weight data"};
  app.require_subcommand(1);

  std::size_t cap_simplices = env_or("TROPMOD_CAP_SIMPLICES", kDefaultSimplexCap);
  std::size_t cap_group = env_or("TROPMOD_CAP_GROUP", kDefaultGroupElementCap);
  int g = 0, m = 0, n = 0, k = 1;
  std::string weights, format = "text", out_path, eps = "1", blocks, check_name;

  auto add_common = [&](CLI::App* cmd, bool with_g) {
    if (with_g) cmd->add_option("--g", g, "genus");
    cmd->add_option("--weights", weights, "weight vector, e.g. \"1/3^3,7/12^3\"");
    cmd->add_option("--format", format, "output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--out", out_path, "write output to a file");
    cmd->add_option("--cap-simplices", cap_simplices, "simplex class cap");
    cmd->add_option("--cap-group", cap_group, "group element cap");
  };

  bool admissible_meets_pair = false;
  CLI::App* kw_cmd = app.add_subcommand("kw", "weight complex report");
  add_common(kw_cmd, false);
  kw_cmd->get_option("--weights")->required();
  kw_cmd->add_flag("--admissible-meets-pair", admissible_meets_pair,
                   "quantify the admissibility condition over sets meeting the swapped pair");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "stable graph classes by edge count");
  add_common(enum_cmd, true);
  enum_cmd->get_option("--weights")->required();

  CLI::App* aut_cmd = app.add_subcommand("aut-delta", "automorphisms of the moduli complex");
  add_common(aut_cmd, true);
  aut_cmd->get_option("--weights")->required();

  CLI::App* export_cmd = app.add_subcommand("export", "write the complex as JSON or DOT");
  add_common(export_cmd, true);
  export_cmd->get_option("--weights")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a named check");
  verify_cmd->add_option("name", check_name, "check name")->required();
  add_common(verify_cmd, true);
  verify_cmd->add_option("--m", m, "light marking count");
  verify_cmd->add_option("--n", n, "heavy marking count");
  verify_cmd->add_option("--eps", eps, "light weight, e.g. 1/2");
  verify_cmd->add_option("--k", k, "parameter k");
  verify_cmd->add_option("--blocks", blocks, "comma-separated block sizes, e.g. 2,3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (kw_cmd->parsed())
      return run_kw(weights, format, out_path, cap_group, admissible_meets_pair);
    if (enum_cmd->parsed()) return run_enumerate(g, weights, format, out_path, cap_simplices);
    if (aut_cmd->parsed())
      return run_aut_delta(g, weights, format, out_path, cap_simplices, cap_group);
    if (export_cmd->parsed()) return run_export(g, weights, format, out_path, cap_simplices);
    if (verify_cmd->parsed())
      return run_verify(check_name, g, weights, m, n, eps, k, blocks, out_path);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
