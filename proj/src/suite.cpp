#include "cliqueline/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include "cliqueline/errors.hpp"
#include "cliqueline/graph_io.hpp"

namespace cliqueline {

namespace {

using GraphCheck = Report (*)(std::string_view, const Graph&);

Report leray_default(std::string_view label, const Graph& g) { return check_leray(label, g); }

const std::map<std::string, GraphCheck>& graph_checks() {
  static const std::map<std::string, GraphCheck> checks{
      {"skeleton", &check_skeleton},   {"triangle-free", &check_triangle_free},
      {"chordal", &check_chordal},     {"cone", &check_cone},
      {"suspension", &check_suspension}, {"wheel-free", &check_wheel_free},
      {"leray", &leray_default},
  };
  return checks;
}

const std::map<std::string, Json>& catalog_defaults() {
  static const std::map<std::string, Json> defaults{
      {"bipartite", {{"max", 5}}},
      {"tripartite", {{"max_mn", 3}, {"max_r", 3}}},
      {"multipartite", {{"parts", {{2, 2, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 3}, {1, 1, 2, 2, 2}}}}},
      {"complete", {{"min", 3}, {"max", 7}}},
      {"skeleton", {{"graphs", {"complete:5", "cycle:7", "petersen", "wheel:5"}}, {"fuzz", 100}, {"max_vertices", 8}, {"max_edges", 9}}},
      {"triangle-free",
       {{"graphs", {"multipartite:3,3", "petersen", "path:4", "cycle:7", "star:4"}}, {"fuzz", 100}, {"max_edges", 12}}},
      {"chordal",
       {{"graphs", {"complete:4", "complete:6", "bowtie", "wheel:3"}},
        {"fuzz", 50},
        {"max_vertices", 9},
        {"k_trees", 12},
        {"k_tree_max_vertices", 10}}},
      {"cone",
       {{"graphs",
         {"multipartite:1,1", "multipartite:1,2", "multipartite:1,3", "multipartite:2,2", "multipartite:2,3",
          "multipartite:3,3", "complete:3", "multipartite:2,2,2", "cycle:5", "petersen", "bowtie"}}}},
      {"suspension", {{"graphs", {"cycle:4", "path:3", "multipartite:2,3", "cycle:5", "petersen", "star:3"}}}},
      {"wheel-free",
       {{"graphs", {"bowtie", "cycle:5", "petersen", "circulant:8:1,2", "prism:3"}},
        {"subcubic_max_vertices", 8},
        {"fuzz", 200},
        {"max_edges", 12}}},
      {"circulant", {{"min_n", 5}, {"max_n", 30}}},
      {"leray",
       {{"graphs", {"complete:5", "multipartite:3,3", "wheel:4", "wheel:5", "bowtie", "prism:3"}}, {"sample_budget", 0}}},
      {"gluing", Json::object()},
      {"nerve", {{"fuzz", 100}, {"max_facets", 8}, {"max_vertices", 8}}},
      {"facet-collapse", {{"fuzz", 500}, {"max_sigma", 7}}},
  };
  return defaults;
}

bool same_kind(const Json& a, const Json& b) {
  if (a.is_number_unsigned() || a.is_number_integer()) return b.is_number_unsigned() || (b.is_number_integer() && b.get<std::int64_t>() >= 0);
  return a.type() == b.type();
}

std::size_t param(const Json& p, const char* key) { return p.at(key).get<std::size_t>(); }

Graph graph_from_spec(const std::string& spec) {
  try {
    return named_graph(spec);
  } catch (const std::exception& e) {
    throw ConfigError("graph '" + spec + "': " + e.what());
  }
}

// Reports carry the configured check name and, for random instances, the
// seed and index that regenerate them.
CheckTask task(std::string name, std::function<Report()> body, std::optional<std::pair<std::uint64_t, std::size_t>> origin = std::nullopt) {
  return CheckTask{name, [name, body = std::move(body), origin] {
                     Report r = body();
                     r.spec.name = name;
                     if (origin) {
                       r.spec.params["seed"] = origin->first;
                       r.spec.params["index"] = origin->second;
                     }
                     return r;
                   }};
}

void add_graph_tasks(std::vector<CheckTask>& out, const std::string& name, const Json& params) {
  const GraphCheck check = graph_checks().at(name);
  std::size_t budget = 0;
  if (name == "leray") budget = param(params, "sample_budget");
  for (const auto& spec_json : params.at("graphs")) {
    const auto spec = spec_json.get<std::string>();
    Graph g = graph_from_spec(spec);
    if (name == "leray" && budget > 0) {
      out.push_back(task(name, [spec, g, budget] { return check_leray(spec, g, budget); }));
    } else {
      out.push_back(task(name, [check, spec, g] { return check(spec, g); }));
    }
  }
}

template <class Make>
void add_fuzz(std::vector<CheckTask>& out, const std::string& name, std::uint64_t seed, std::size_t count, Make make) {
  const std::uint64_t stream = derive_seed(seed, name);
  Rng rng(stream);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(task(name, make(rng, "random#" + std::to_string(i)), std::pair{seed, i}));
  }
}

template <class Gen>
auto graph_maker(GraphCheck check, Gen gen) {
  return [check, gen](Rng& rng, std::string label) -> std::function<Report()> {
    Graph g = gen(rng);
    return [check, label, g] { return check(label, g); };
  };
}

void gluing_cases(std::vector<CheckTask>& out) {
  struct Case {
    std::string label;
    Graph left, right;
    VertexMap overlap;
  };
  std::vector<Case> cases{
      {"disjoint triangles", complete(3), complete(3), {}},
      {"bowtie", complete(3), complete(3), {{0, 0}}},
      {"cycle(4) wedge complete(4)", cycle(4), complete(4), {{0, 0}}},
      {"cycle(5) wedge cycle(4)", cycle(5), cycle(4), {{0, 0}}},
      {"disjoint complete(4) and multipartite(3,3)", complete(4), complete_multipartite({3, 3}), {}},
      {"complete(4) wedge complete(4)", complete(4), complete(4), {{0, 0}}},
      {"triangles sharing an edge", complete(3), complete(3), {{0, 0}, {1, 1}}},
  };
  for (auto& c : cases) {
    out.push_back(task("gluing", [c] { return check_gluing(c.label, c.left, c.right, c.overlap); }));
  }
}

}  // namespace

const std::vector<std::string>& check_catalog() {
  static const std::vector<std::string> names{
      "bipartite", "tripartite", "multipartite", "complete",  "skeleton", "triangle-free", "chordal", "cone",
      "suspension", "wheel-free", "circulant",   "leray",     "gluing",   "nerve",         "facet-collapse"};
  return names;
}

Json default_params(const std::string& name) {
  auto it = catalog_defaults().find(name);
  if (it == catalog_defaults().end()) throw ConfigError("unknown check '" + name + "'");
  return it->second;
}

Json default_config() {
  Json checks = Json::array();
  for (const auto& name : check_catalog()) {
    Json entry{{"name", name}, {"enabled", true}};
    entry.update(default_params(name));
    checks.push_back(std::move(entry));
  }
  return Json{{"seed", 42}, {"checks", std::move(checks)}};
}

Json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("malformed config " + path.string() + ": " + e.what());
  }
}

Json apply_overrides(Json config, const SuiteOverrides& o) {
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  if (!config.contains("checks")) config["checks"] = default_config()["checks"];
  if (o.seed) config["seed"] = *o.seed;

  std::optional<std::string> only = o.check;
  auto conflict = [&](const std::string& implied) {
    if (only && *only != implied) throw ConfigError("--check " + *only + " conflicts with an option for " + implied);
    only = implied;
  };
  if (o.parts) {
    if (only && (*only == "bipartite" || *only == "tripartite")) only = "multipartite";
    conflict("multipartite");
  }
  if (o.fuzz) conflict(o.fuzz->first);

  auto& checks = config["checks"];
  if (!checks.is_array()) throw ConfigError("\"checks\" must be an array");
  if (only) {
    default_params(*only);
    Json kept = Json::array();
    for (auto& entry : checks)
      if (entry.is_object() && entry.value("name", "") == *only) kept.push_back(entry);
    if (kept.empty()) kept.push_back(Json{{"name", *only}});
    for (auto& entry : kept) entry["enabled"] = true;
    checks = std::move(kept);
  }

  for (auto& entry : checks) {
    if (!entry.is_object() || !entry.contains("name")) continue;
    const auto name = entry["name"].get<std::string>();
    if (o.parts && name == "multipartite") {
      entry["parts"] = Json::array({*o.parts});
    }
    const bool fuzz_here = o.fuzz && name == o.fuzz->first;
    if (fuzz_here) {
      auto defaults = default_params(name);
      if (!defaults.contains("fuzz")) throw ConfigError("check '" + name + "' has no random instances");
      entry["fuzz"] = o.fuzz->second;
    }
    if (o.graph && graph_checks().contains(name)) entry["graphs"] = Json::array({*o.graph});
    if (fuzz_here || (o.graph && graph_checks().contains(name))) {
      auto defaults = default_params(name);
      if (fuzz_here && defaults.contains("graphs")) entry["graphs"] = Json::array();
      if (!fuzz_here && defaults.contains("fuzz")) entry["fuzz"] = 0;
      if (defaults.contains("k_trees")) entry["k_trees"] = 0;
      if (defaults.contains("subcubic_max_vertices")) entry["subcubic_max_vertices"] = 0;
    }
  }
  if (o.graph && !only) {
    Json kept = Json::array();
    for (auto& entry : checks)
      if (entry.is_object() && graph_checks().contains(entry.value("name", ""))) kept.push_back(entry);
    checks = std::move(kept);
  } else if (o.graph && !graph_checks().contains(*only)) {
    throw ConfigError("check '" + *only + "' does not take a graph");
  }
  return config;
}

std::vector<CheckTask> expand_config(const Json& config) {
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (key != "seed" && key != "checks") throw ConfigError("unknown config key '" + key + "'");
  }
  std::uint64_t seed = 42;
  if (config.contains("seed")) {
    if (!same_kind(Json(0), config["seed"])) throw ConfigError("\"seed\" must be a nonnegative integer");
    seed = config["seed"].get<std::uint64_t>();
  }
  const Json checks = config.contains("checks") ? config["checks"] : default_config()["checks"];
  if (!checks.is_array()) throw ConfigError("\"checks\" must be an array");

  std::vector<CheckTask> out;
  for (const auto& entry : checks) {
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
      throw ConfigError("each check needs a \"name\" string");
    }
    const auto name = entry["name"].get<std::string>();
    Json params = default_params(name);
    bool enabled = true;
    for (const auto& [key, value] : entry.items()) {
      if (key == "name") continue;
      if (key == "enabled") {
        if (!value.is_boolean()) throw ConfigError(name + ": \"enabled\" must be a boolean");
        enabled = value.get<bool>();
        continue;
      }
      if (!params.contains(key)) throw ConfigError(name + ": unknown parameter '" + key + "'");
      if (!same_kind(params[key], value)) throw ConfigError(name + ": parameter '" + key + "' has the wrong type");
      params[key] = value;
    }
    if (!enabled) continue;

    try {
      if (name == "bipartite") {
        const auto max = param(params, "max");
        for (std::size_t m = 1; m <= max; ++m)
          for (std::size_t n = m; n <= max; ++n)
            out.push_back(task(name, [m, n] { return check_multipartite({m, n}); }));
      } else if (name == "tripartite") {
        const auto max_mn = param(params, "max_mn");
        const auto max_r = param(params, "max_r");
        for (std::size_t m = 1; m <= max_mn; ++m)
          for (std::size_t n = m; n <= max_mn; ++n)
            for (std::size_t r = 1; r <= max_r; ++r)
              out.push_back(task(name, [m, n, r] { return check_multipartite({m, n, r}); }));
      } else if (name == "multipartite") {
        for (const auto& p : params.at("parts")) {
          auto parts = p.get<std::vector<std::size_t>>();
          if (parts.size() < 2) throw ConfigError("multipartite: each entry needs at least two parts");
          out.push_back(task(name, [parts] { return check_multipartite(parts); }));
        }
      } else if (name == "complete") {
        for (std::size_t n = param(params, "min"); n <= param(params, "max"); ++n)
          out.push_back(task(name, [n] { return check_complete(n); }));
      } else if (name == "circulant") {
        for (std::size_t n = std::max<std::size_t>(5, param(params, "min_n")); n <= param(params, "max_n"); ++n)
          for (const auto& spec : four_regular_circulants(n))
            out.push_back(task(name, [spec] { return check_circulant(spec); }));
      } else if (name == "gluing") {
        gluing_cases(out);
      } else if (name == "nerve") {
        const auto max_facets = param(params, "max_facets");
        const auto max_vertices = param(params, "max_vertices");
        add_fuzz(out, name, seed, param(params, "fuzz"), [=](Rng& rng, std::string label) -> std::function<Report()> {
          Complex k = random_complex(rng, max_facets, max_vertices);
          return [label, k] { return check_nerve(label, k); };
        });
      } else if (name == "facet-collapse") {
        const auto max_sigma = std::max<std::size_t>(2, param(params, "max_sigma"));
        std::size_t index = 0;
        add_fuzz(out, name, seed, param(params, "fuzz"), [&](Rng& rng, std::string label) -> std::function<Report()> {
          FacetInstance inst = index++ % 2 == 0 ? random_split_instance(rng, max_sigma) : random_fold_instance(rng, max_sigma);
          return [label, inst] { return check_facet_collapse(label, inst); };
        });
      } else {
        add_graph_tasks(out, name, params);
        const GraphCheck check = graph_checks().at(name);
        if (name == "skeleton") {
          const auto mv = param(params, "max_vertices");
          const auto me = param(params, "max_edges");
          add_fuzz(out, name, seed, param(params, "fuzz"),
                   graph_maker(check, [mv, me](Rng& rng) { return random_graph_without_isolated(rng, mv, me); }));
        } else if (name == "triangle-free") {
          const auto me = param(params, "max_edges");
          add_fuzz(out, name, seed, param(params, "fuzz"),
                   graph_maker(check, [me](Rng& rng) { return random_connected_triangle_free(rng, me); }));
        } else if (name == "chordal") {
          const auto mv = param(params, "max_vertices");
          add_fuzz(out, name, seed, param(params, "fuzz"),
                   graph_maker(check, [mv](Rng& rng) { return random_chordal(rng, mv); }));
          const auto kt_max = param(params, "k_tree_max_vertices");
          Rng rng(derive_seed(seed, "chordal/k-tree"));
          for (std::size_t i = 0; i < param(params, "k_trees"); ++i) {
            const std::size_t k = 1 + i % 3;
            const std::size_t n = std::uniform_int_distribution<std::size_t>(k + 1, std::max(k + 1, kt_max))(rng);
            Graph g = random_k_tree(rng, k, n);
            const std::string label = std::to_string(k) + "-tree#" + std::to_string(i);
            out.push_back(task(name, [label, g] { return check_chordal(label, g); }, std::pair{seed, i}));
          }
        } else if (name == "wheel-free") {
          for (const Graph& g : connected_subcubic_graphs(param(params, "subcubic_max_vertices"))) {
            if (g.edge_count() == 0 || g == complete(4)) continue;
            out.push_back(task(name, [g] { return check_wheel_free("max-degree-3", g); }));
          }
          const auto me = param(params, "max_edges");
          add_fuzz(out, name, seed, param(params, "fuzz"),
                   graph_maker(check, [me](Rng& rng) { return random_connected_wheel_free(rng, me); }));
        }
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(name + ": " + e.what());
    }
  }
  return out;
}

std::vector<Report> run_tasks(const std::vector<CheckTask>& tasks, std::size_t threads) {
  std::vector<Report> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) reports[i] = tasks[i].run();
  };
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return reports;
}

std::size_t default_thread_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CLIQUELINE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return n;
}

SuiteResult run_suite(const Json& config, std::size_t threads) {
  SuiteResult result;
  result.reports = run_tasks(expand_config(config), threads);
  const bool ok = std::all_of(result.reports.begin(), result.reports.end(), [](const Report& r) { return r.pass; });
  result.exit_code = ok ? 0 : 1;
  return result;
}

Json reports_to_json(const std::vector<Report>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace cliqueline
