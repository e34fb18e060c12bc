#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliqueline/cliqueline.h"

namespace {

using Json = nlohmann::ordered_json;

struct CliError {
  int code;
  std::string message;
};

void check(cl_status s, int code = 1) {
  if (s != CL_OK) throw CliError{code, std::string(cl_status_name(s)) + ": " + cl_last_error()};
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  cl_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{1, "cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError{1, "cannot write " + path};
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

bool is_json_path(const std::string& path) { return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0; }

struct GraphHandle {
  cl_graph* g = nullptr;
  ~GraphHandle() { cl_graph_free(g); }
};

struct ComplexHandle {
  cl_complex* k = nullptr;
  ~ComplexHandle() { cl_complex_free(k); }
};

void load_graph(const std::string& path, GraphHandle& out) { check(cl_graph_parse_edge_list(read_file(path).c_str(), &out.g)); }

// A complex file, or delta_L of an edge-list graph.
void load_complex(const std::string& path, bool clique, ComplexHandle& out) {
  if (is_json_path(path)) {
    check(cl_complex_from_json(read_file(path).c_str(), &out.k));
    return;
  }
  GraphHandle g;
  load_graph(path, g);
  check(clique ? cl_clique_complex(g.g, &out.k) : cl_delta_l(g.g, &out.k));
}

std::string instance_label(const Json& params) {
  for (const char* key : {"graph", "case"}) {
    if (params.contains(key)) {
      std::string label = params[key].get<std::string>();
      if (params.contains("seed")) label += " seed=" + std::to_string(params["seed"].get<std::uint64_t>());
      return label;
    }
  }
  return params.dump();
}

int run_verify(const std::string& config_path, const std::optional<std::string>& check_name,
               const std::optional<std::uint64_t>& seed, const std::string& out_path, const std::string& parts,
               const std::string& fuzz, const std::string& graph, std::size_t threads, bool quiet) {
  std::string config;
  if (!config_path.empty()) config = read_file(config_path);

  Json overrides = Json::object();
  if (check_name) overrides["check"] = *check_name;
  if (seed) overrides["seed"] = *seed;
  if (!graph.empty()) overrides["graph"] = graph;
  if (!parts.empty()) {
    Json list = Json::array();
    std::stringstream ss(parts);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        list.push_back(std::stoul(item));
      } catch (const std::exception&) {
        throw CliError{2, "--parts expects comma-separated sizes"};
      }
    }
    overrides["parts"] = list;
  }
  if (!fuzz.empty()) {
    auto colon = fuzz.rfind(':');
    if (colon == std::string::npos) throw CliError{2, "--fuzz expects NAME:COUNT"};
    try {
      overrides["fuzz"] = {{"name", fuzz.substr(0, colon)}, {"count", std::stoul(fuzz.substr(colon + 1))}};
    } catch (const std::exception&) {
      throw CliError{2, "--fuzz expects NAME:COUNT"};
    }
  }

  char* reports_raw = nullptr;
  int exit_code = 2;
  const std::string overrides_text = overrides.dump();
  check(cl_verify_run(config.empty() ? nullptr : config.c_str(), overrides_text.c_str(), threads, &reports_raw,
                      &exit_code),
        2);
  const std::string reports_text = take(reports_raw);
  const Json reports = Json::parse(reports_text);

  std::size_t passed = 0;
  for (const auto& r : reports) {
    const bool pass = r["pass"].get<bool>();
    passed += pass;
    if (quiet && pass) continue;
    std::cout << (pass ? "PASS " : "FAIL ") << r["spec"]["name"].get<std::string>() << ' '
              << instance_label(r["spec"]["params"]);
    if (!pass) std::cout << " expected " << r["expected"].dump() << " computed " << r["computed"].dump();
    if (r.contains("note")) std::cout << " (" << r["note"].get<std::string>() << ')';
    std::cout << '\n';
  }
  std::cout << passed << "/" << reports.size() << " checks passed\n";
  if (!out_path.empty()) write_output(out_path, reports_text);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique complexes of line graphs: construction, collapses, homology, verification"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Write a named graph as an edge list");
  std::string build_spec, build_out, build_complex;
  bool build_props = false;
  build->add_option("graph", build_spec, "complete:5, multipartite:3,3, circulant:8:1,2, petersen, ...")->required();
  build->add_option("-o,--out", build_out, "Edge-list file (default stdout)");
  build->add_option("--complex", build_complex, "Also write delta_L of the graph as JSON");
  build->add_flag("--properties", build_props, "Print graph properties as JSON to stderr");

  auto* homology = app.add_subcommand("homology", "Reduced integer homology of a complex or of delta_L(graph)");
  std::string homology_in;
  bool homology_clique = false;
  homology->add_option("input", homology_in, "complex.json or graph.edges")->required();
  homology->add_flag("--clique", homology_clique, "Use the clique complex of the graph instead of delta_L");

  auto* collapse = app.add_subcommand("collapse", "Collapse delta_L(graph) and print the trace");
  std::string collapse_in, collapse_strategy = "wheelfree", collapse_out;
  collapse->add_option("input", collapse_in, "graph.edges (or complex.json for greedy)")->required();
  collapse->add_option("--strategy", collapse_strategy, "wheelfree or greedy")
      ->check(CLI::IsMember({"wheelfree", "greedy"}));
  collapse->add_option("-o,--out", collapse_out, "Trace JSON file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string config_path, out_path, parts, fuzz, graph;
  std::optional<std::string> check_name;
  std::optional<std::uint64_t> seed;
  std::size_t threads = 0;
  bool list = false, print_config = false, quiet = false;
  verify->add_option("--config", config_path, "JSON suite configuration");
  verify->add_option("--check", check_name, "Run a single check");
  verify->add_option("--seed", seed, "Seed for random instances");
  verify->add_option("--out", out_path, "Write the JSON report array here");
  verify->add_option("--parts", parts, "Part sizes for the multipartite check, e.g. 3,3,2");
  verify->add_option("--fuzz", fuzz, "NAME:COUNT random instances of one check");
  verify->add_option("--graph", graph, "Run graph checks on this named graph");
  verify->add_option("--threads", threads, "Worker count (default: cores, capped by CLIQUELINE_THREADS)");
  verify->add_flag("--list", list, "List check names");
  verify->add_flag("--print-config", print_config, "Print the default configuration");
  verify->add_flag("-q,--quiet", quiet, "Only print failing checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      GraphHandle g;
      check(cl_graph_named(build_spec.c_str(), &g.g));
      char* text = nullptr;
      check(cl_graph_format_edge_list(g.g, &text));
      write_output(build_out, take(text));
      if (!build_complex.empty()) {
        ComplexHandle k;
        check(cl_delta_l(g.g, &k.k));
        check(cl_complex_to_json(k.k, &text));
        write_output(build_complex, take(text));
      }
      if (build_props) {
        check(cl_graph_properties_json(g.g, &text));
        std::cerr << take(text) << '\n';
      }
      return 0;
    }
    if (homology->parsed()) {
      ComplexHandle k;
      load_complex(homology_in, homology_clique, k);
      char* text = nullptr;
      check(cl_homology_json(k.k, &text));
      std::cout << take(text) << '\n';
      return 0;
    }
    if (collapse->parsed()) {
      char* trace = nullptr;
      ComplexHandle end;
      if (collapse_strategy == "wheelfree") {
        if (is_json_path(collapse_in)) throw CliError{1, "the wheelfree strategy needs a graph edge list"};
        GraphHandle g;
        load_graph(collapse_in, g);
        check(cl_collapse_wheelfree(g.g, &trace, &end.k));
      } else {
        ComplexHandle k;
        load_complex(collapse_in, false, k);
        check(cl_collapse_greedy(k.k, &trace, &end.k));
      }
      const std::string trace_text = take(trace);
      write_output(collapse_out, Json::parse(trace_text).dump(2));
      char* hom = nullptr;
      check(cl_homology_json(end.k, &hom));
      const Json steps = Json::parse(trace_text)["steps"];
      std::cerr << steps.size() << " collapses, end dimension " << cl_complex_dimension(end.k) << ", homology "
                << take(hom) << '\n';
      return 0;
    }
    if (verify->parsed()) {
      if (list || print_config) {
        char* text = nullptr;
        check(list ? cl_check_catalog(&text) : cl_default_config(&text));
        std::cout << take(text) << '\n';
        return 0;
      }
      return run_verify(config_path, check_name, seed, out_path, parts, fuzz, graph, threads, quiet);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
