#include "cliqueline/cliqueline.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "cliqueline/collapse.hpp"
#include "cliqueline/complex.hpp"
#include "cliqueline/errors.hpp"
#include "cliqueline/graph_io.hpp"
#include "cliqueline/homology.hpp"
#include "cliqueline/serialize.hpp"
#include "cliqueline/suite.hpp"

struct cl_graph {
  cliqueline::Graph g;
};

struct cl_complex {
  cliqueline::Complex k;
};

namespace {

using namespace cliqueline;

thread_local std::string last_error;

cl_status fail(cl_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
cl_status guarded(F&& body) {
  try {
    body();
    return CL_OK;
  } catch (const InvalidCollapse& e) {
    return fail(CL_INVALID_COLLAPSE, e.what());
  } catch (const PreconditionViolation& e) {
    return fail(CL_PRECONDITION, e.what());
  } catch (const ParseError& e) {
    return fail(CL_PARSE_ERROR, e.what());
  } catch (const ConfigError& e) {
    return fail(CL_CONFIG_ERROR, e.what());
  } catch (const BudgetExhausted& e) {
    return fail(CL_BUDGET_EXHAUSTED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CL_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CL_INTERNAL, e.what());
  } catch (...) {
    return fail(CL_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool any_null() { return false; }
template <class P, class... Rest>
bool any_null(P p, Rest... rest) {
  return p == nullptr || any_null(rest...);
}

#define CL_REQUIRE(...) \
  if (any_null(__VA_ARGS__)) return fail(CL_INVALID_ARGUMENT, "null argument")

std::string trace_text(const CollapseTrace& t) { return to_json(t).dump(); }

}  // namespace

extern "C" {

const char* cl_version(void) { return "0.1.0"; }

const char* cl_status_name(cl_status status) {
  switch (status) {
    case CL_OK: return "ok";
    case CL_INVALID_ARGUMENT: return "invalid argument";
    case CL_PRECONDITION: return "precondition violation";
    case CL_INVALID_COLLAPSE: return "invalid collapse";
    case CL_PARSE_ERROR: return "parse error";
    case CL_CONFIG_ERROR: return "configuration error";
    case CL_BUDGET_EXHAUSTED: return "budget exhausted";
    case CL_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cl_last_error(void) { return last_error.c_str(); }

void cl_string_free(char* s) { std::free(s); }

cl_status cl_graph_named(const char* spec, cl_graph** out) {
  CL_REQUIRE(spec, out);
  *out = nullptr;
  return guarded([&] { *out = new cl_graph{named_graph(spec)}; });
}

cl_status cl_graph_from_edges(size_t vertex_count, const uint32_t* edges, size_t edge_count, cl_graph** out) {
  CL_REQUIRE(out);
  *out = nullptr;
  if (edge_count > 0 && !edges) return fail(CL_INVALID_ARGUMENT, "null edge array");
  return guarded([&] {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (size_t i = 0; i < edge_count; ++i) pairs.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new cl_graph{Graph(vertex_count, pairs)};
  });
}

cl_status cl_graph_parse_edge_list(const char* text, cl_graph** out) {
  CL_REQUIRE(text, out);
  *out = nullptr;
  return guarded([&] { *out = new cl_graph{parse_edge_list(text)}; });
}

cl_status cl_graph_format_edge_list(const cl_graph* g, char** out) {
  CL_REQUIRE(g, out);
  *out = nullptr;
  return guarded([&] { *out = copy_string(format_edge_list(g->g)); });
}

size_t cl_graph_vertex_count(const cl_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t cl_graph_edge_count(const cl_graph* g) { return g ? g->g.edge_count() : 0; }

cl_status cl_graph_properties_json(const cl_graph* g, char** out) {
  CL_REQUIRE(g, out);
  *out = nullptr;
  return guarded([&] {
    const Graph& h = g->g;
    Json j{{"vertices", h.vertex_count()},
           {"edges", h.edge_count()},
           {"triangles", triangles(h).size()},
           {"components", component_count(h)},
           {"chordal", is_chordal(h)},
           {"wheel_free", is_wheel_free(h)},
           {"triangle_free", is_triangle_free(h)},
           {"bipartite", is_bipartite(h)},
           {"max_degree", h.max_degree()}};
    *out = copy_string(j.dump());
  });
}

void cl_graph_free(cl_graph* g) { delete g; }

cl_status cl_delta_l(const cl_graph* g, cl_complex** out) {
  CL_REQUIRE(g, out);
  *out = nullptr;
  return guarded([&] { *out = new cl_complex{delta_L(g->g)}; });
}

cl_status cl_clique_complex(const cl_graph* g, cl_complex** out) {
  CL_REQUIRE(g, out);
  *out = nullptr;
  return guarded([&] { *out = new cl_complex{clique_complex(g->g)}; });
}

cl_status cl_complex_from_json(const char* json, cl_complex** out) {
  CL_REQUIRE(json, out);
  *out = nullptr;
  return guarded([&] { *out = new cl_complex{parse_complex(json)}; });
}

cl_status cl_complex_to_json(const cl_complex* k, char** out) {
  CL_REQUIRE(k, out);
  *out = nullptr;
  return guarded([&] { *out = copy_string(serialize(k->k)); });
}

cl_status cl_complex_digest(const cl_complex* k, char** out) {
  CL_REQUIRE(k, out);
  *out = nullptr;
  return guarded([&] { *out = copy_string(digest(k->k)); });
}

int64_t cl_complex_dimension(const cl_complex* k) { return k ? k->k.dimension() : -1; }

void cl_complex_free(cl_complex* k) { delete k; }

cl_status cl_homology_json(const cl_complex* k, char** out) {
  CL_REQUIRE(k, out);
  *out = nullptr;
  return guarded([&] {
    Json j = to_json(reduced_homology(k->k));
    j["f_vector"] = f_vector(k->k);
    j["euler_characteristic"] = euler_characteristic(k->k);
    *out = copy_string(j.dump());
  });
}

cl_status cl_collapse_wheelfree(const cl_graph* g, char** trace_json, cl_complex** end_complex) {
  CL_REQUIRE(g, trace_json);
  *trace_json = nullptr;
  if (end_complex) *end_complex = nullptr;
  return guarded([&] {
    const auto trace = wheelfree_collapse(g->g);
    *trace_json = copy_string(trace_text(trace));
    if (end_complex) *end_complex = new cl_complex{trace.end};
  });
}

cl_status cl_collapse_greedy(const cl_complex* k, char** trace_json, cl_complex** end_complex) {
  CL_REQUIRE(k, trace_json);
  *trace_json = nullptr;
  if (end_complex) *end_complex = nullptr;
  return guarded([&] {
    const auto trace = greedy_collapse(k->k);
    *trace_json = copy_string(trace_text(trace));
    if (end_complex) *end_complex = new cl_complex{trace.end};
  });
}

cl_status cl_check_catalog(char** out) {
  CL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = copy_string(Json(check_catalog()).dump()); });
}

cl_status cl_default_config(char** out) {
  CL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = copy_string(default_config().dump(2)); });
}

cl_status cl_verify_run(const char* config_json, const char* overrides_json, size_t threads, char** reports_json,
                        int* exit_code) {
  CL_REQUIRE(reports_json, exit_code);
  *reports_json = nullptr;
  *exit_code = 2;
  return guarded([&] {
    Json config = default_config();
    if (config_json) {
      try {
        config = Json::parse(config_json);
      } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
      }
    }
    if (overrides_json) {
      Json o;
      try {
        o = Json::parse(overrides_json);
      } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("malformed overrides: ") + e.what());
      }
      SuiteOverrides ov;
      try {
        if (o.contains("check")) ov.check = o["check"].get<std::string>();
        if (o.contains("seed")) ov.seed = o["seed"].get<std::uint64_t>();
        if (o.contains("fuzz")) ov.fuzz = {o["fuzz"].at("name").get<std::string>(), o["fuzz"].at("count").get<std::size_t>()};
        if (o.contains("parts")) ov.parts = o["parts"].get<std::vector<std::size_t>>();
        if (o.contains("graph")) ov.graph = o["graph"].get<std::string>();
      } catch (const Json::exception& e) {
        throw ConfigError(std::string("bad overrides: ") + e.what());
      }
      config = apply_overrides(std::move(config), ov);
    }
    auto result = run_suite(config, threads == 0 ? default_thread_count() : threads);
    *reports_json = copy_string(reports_to_json(result.reports).dump(2));
    *exit_code = result.exit_code;
  });
}

}  // extern "C"
