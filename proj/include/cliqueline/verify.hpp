#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliqueline/circulant.hpp"
#include "cliqueline/generators.hpp"
#include "cliqueline/graph.hpp"
#include "cliqueline/serialize.hpp"

namespace cliqueline {

enum class Certification { Homology, Collapse };
/// Where an expected value comes from: a closed formula stated as a result
/// (Published), or an oracle / Euler characteristic count (Derived).
enum class Provenance { Published, Derived };

std::string_view to_string(Certification c);
std::string_view to_string(Provenance p);

struct CheckSpec {
  std::string name;
  Json params = Json::object();
  Certification certification = Certification::Homology;
};

struct Report {
  CheckSpec spec;
  Json expected;
  Json computed;
  bool pass = false;
  std::int64_t runtime_ms = 0;
  std::optional<std::string> trace_digest;
  Provenance provenance = Provenance::Derived;
  std::string note;
};

Json to_json(const Report& r);
/// "PASS skeleton {"graph":"complete:5"}"-style one-liner.
std::string summary_line(const Report& r);

/// {"graph": label, "vertices": n, "edges": [[u, v], ...]}
Json describe_graph(std::string_view label, const Graph& g);

/// Exhaustive search for a wheel subgraph: some vertex whose neighborhood
/// contains a cycle, found by enumerating simple paths. Independent of the
/// neighborhood-forest test.
bool has_wheel_subgraph(const Graph& g);

// Each check measures its own runtime. Precondition failures and other
// errors produce a failing report whose note carries the message.

/// delta_L(g) against the 2-skeleton of the clique complex of g.
Report check_skeleton(std::string_view label, const Graph& g);
/// Connected triangle-free g: beta_1 equals the cyclomatic number.
Report check_triangle_free(std::string_view label, const Graph& g);
/// Connected chordal g: beta_2 = v - e + t - 1, nothing else.
Report check_chordal(std::string_view label, const Graph& g);
/// beta_2 of delta_L(cone(g)) equals the triangle count of g.
Report check_cone(std::string_view label, const Graph& g);
/// Connected triangle-free g on >= 2 vertices: suspension shifts degrees by one.
Report check_suspension(std::string_view label, const Graph& g);
/// Complete multipartite graphs with >= 2 parts.
Report check_multipartite(const std::vector<std::size_t>& parts);
/// delta_L(K_n) = (0, 0, C(n-1, 3)).
Report check_complete(std::size_t n);
/// Connected wheel-free g: collapse to dimension <= 1 with beta_1 = 1 - chi.
Report check_wheel_free(std::string_view label, const Graph& g);
/// 4-regular circulants: classification and per-component homology.
Report check_circulant(const CirculantSpec& spec);
/// 3-Leray, plus 2-Leray for bipartite g.
Report check_leray(std::string_view label, const Graph& g, std::optional<std::size_t> sample_budget = std::nullopt);
/// Betti additivity for gluing along at most one vertex; larger overlaps are
/// recorded for information only.
Report check_gluing(std::string_view label, const Graph& g1, const Graph& g2, const VertexMap& overlap);
/// Homology of the nerve of the facets equals that of the complex.
Report check_nerve(std::string_view label, const Complex& k);
/// Structured facet collapse: end facets equal the stated generators and each
/// step preserves homology. Two parts use split_facet_collapse, more use
/// fold_facet_collapse.
Report check_facet_collapse(std::string_view label, const FacetInstance& inst);

/// Generators of the end complex promised for a facet split into parts and C,
/// together with the other facets of the instance.
Complex expected_facet_collapse(const FacetInstance& inst);

}  // namespace cliqueline
