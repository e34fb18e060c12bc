#include "cliqueline/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "cliqueline/collapse.hpp"
#include "cliqueline/complex.hpp"
#include "cliqueline/errors.hpp"
#include "cliqueline/homology.hpp"

namespace cliqueline {

std::string_view to_string(Certification c) {
  return c == Certification::Collapse ? "collapse-certified" : "homology-certified";
}

std::string_view to_string(Provenance p) { return p == Provenance::Published ? "published" : "derived"; }

Json to_json(const Report& r) {
  Json j;
  j["spec"] = {{"name", r.spec.name},
               {"params", r.spec.params},
               {"certification", std::string(to_string(r.spec.certification))}};
  j["provenance"] = std::string(to_string(r.provenance));
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["pass"] = r.pass;
  j["runtime_ms"] = r.runtime_ms;
  if (r.trace_digest) j["trace_digest"] = *r.trace_digest;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string summary_line(const Report& r) {
  std::string line = r.pass ? "PASS " : "FAIL ";
  line += r.spec.name + " " + r.spec.params.dump();
  if (!r.pass) line += " expected " + r.expected.dump() + " computed " + r.computed.dump();
  if (!r.note.empty()) line += " (" + r.note + ")";
  return line;
}

Json describe_graph(std::string_view label, const Graph& g) {
  Json edges = Json::array();
  for (const EdgeId& e : g.edges()) edges.push_back({e.lo, e.hi});
  return Json{{"graph", std::string(label)}, {"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

bool has_wheel_subgraph(const Graph& g) {
  for (VertexId hub = 0; hub < g.vertex_count(); ++hub) {
    const auto& rim = g.neighbors(hub);
    std::vector<bool> on_path(g.vertex_count(), false);
    // Simple paths inside N(hub) starting at `start`; a path of >= 3 vertices
    // whose end is adjacent to start closes a rim cycle.
    std::function<bool(VertexId, VertexId, std::size_t)> walk = [&](VertexId start, VertexId at, std::size_t len) {
      if (len >= 3 && g.adjacent(at, start)) return true;
      for (VertexId next : g.neighbors(at)) {
        if (next <= start || on_path[next] || !std::binary_search(rim.begin(), rim.end(), next)) continue;
        on_path[next] = true;
        bool found = walk(start, next, len + 1);
        on_path[next] = false;
        if (found) return true;
      }
      return false;
    };
    for (VertexId start : rim) {
      on_path[start] = true;
      bool found = walk(start, start, 1);
      on_path[start] = false;
      if (found) return true;
    }
  }
  return false;
}

namespace {

Json profile_json(const HomologyProfile& p) { return to_json(p.normalized()); }

HomologyProfile homology_of(const Graph& g) { return reduced_homology(delta_L(g)); }

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count();
}

Report run_check(CheckSpec spec, Provenance provenance, const std::function<void(Report&)>& body) {
  Report r;
  r.spec = std::move(spec);
  r.provenance = provenance;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
    r.pass = !r.expected.is_null() && r.expected == r.computed;
  } catch (const PreconditionViolation& e) {
    r.pass = false;
    r.note = std::string("precondition: ") + e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.note = std::string("error: ") + e.what();
  }
  r.runtime_ms = elapsed_ms(start);
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionViolation(what);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Invariant factors of a direct sum of cyclic groups.
std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::vector<std::int64_t>> powers;
  for (std::int64_t m : orders) {
    for (std::int64_t p = 2; p * p <= m; ++p) {
      std::int64_t q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      if (q > 1) powers[p].push_back(q);
    }
    if (m > 1) powers[m].push_back(m);
  }
  std::size_t count = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.rbegin(), qs.rend());
    count = std::max(count, qs.size());
  }
  std::vector<std::int64_t> out(count, 1);
  for (auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) out[i] *= qs[i];
  std::sort(out.begin(), out.end());
  return out;
}

HomologyProfile direct_sum(const HomologyProfile& a, const HomologyProfile& b) {
  if (a.empty_complex) return b;
  if (b.empty_complex) return a;
  HomologyProfile out;
  const std::size_t n = std::max(a.betti.size(), b.betti.size());
  out.betti.resize(n);
  out.torsion.resize(n);
  for (std::size_t d = 0; d < n; ++d) {
    out.betti[d] = a.betti_at(d) + b.betti_at(d);
    std::vector<std::int64_t> orders;
    if (d < a.torsion.size()) orders.insert(orders.end(), a.torsion[d].begin(), a.torsion[d].end());
    if (d < b.torsion.size()) orders.insert(orders.end(), b.torsion[d].begin(), b.torsion[d].end());
    out.torsion[d] = invariant_factors(orders);
  }
  return out;
}

bool homology_preserved_stepwise(const CollapseTrace& trace) {
  const auto start = reduced_homology(trace.start);
  Complex current = trace.start;
  for (const auto& step : trace.steps) {
    current = collapse_pair(current, step);
    if (!(reduced_homology(current) == start)) return false;
  }
  return true;
}

std::string trace_digest(const CollapseTrace& t) { return digest_text(to_json(t).dump()); }

}  // namespace

Report check_skeleton(std::string_view label, const Graph& g) {
  return run_check({"skeleton", describe_graph(label, g)}, Provenance::Derived, [&](Report& r) {
    r.expected = profile_json(reduced_homology(skeleton(clique_complex(g), 2)));
    r.computed = profile_json(homology_of(g));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) {
        r.note = "isolated vertices are points of the clique complex but carry no edge of delta_L";
        break;
      }
    }
  });
}

Report check_triangle_free(std::string_view label, const Graph& g) {
  return run_check({"triangle-free", describe_graph(label, g)}, Provenance::Published, [&](Report& r) {
    require(is_triangle_free(g), "graph has a triangle");
    require(is_connected(g), "graph is not connected");
    require(g.edge_count() > 0, "graph has no edges");
    r.expected = profile_json(profile_from_betti({0, cyclomatic(g)}));
    r.computed = profile_json(homology_of(g));
  });
}

Report check_chordal(std::string_view label, const Graph& g) {
  return run_check({"chordal", describe_graph(label, g)}, Provenance::Derived, [&](Report& r) {
    require(is_chordal(g), "graph is not chordal");
    require(is_connected(g), "graph is not connected");
    require(g.edge_count() > 0, "graph has no edges");
    const auto v = static_cast<std::int64_t>(g.vertex_count());
    const auto e = static_cast<std::int64_t>(g.edge_count());
    const auto t = static_cast<std::int64_t>(triangles(g).size());
    const std::int64_t spheres = v - e + t - 1;
    require(spheres >= 0, "negative sphere count");
    r.expected = profile_json(profile_from_betti({0, 0, static_cast<std::size_t>(spheres)}));
    const auto p = homology_of(g);
    r.computed = profile_json(p);
    if (!wedge_profile(p, {2})) r.note = "not a homology wedge of 2-spheres";
  });
}

Report check_cone(std::string_view label, const Graph& g) {
  return run_check({"cone", describe_graph(label, g)}, Provenance::Published, [&](Report& r) {
    require(g.vertex_count() > 0, "cone over the empty graph has no edges");
    r.expected = profile_json(profile_from_betti({0, 0, triangles(g).size()}));
    r.computed = profile_json(homology_of(cone(g)));
  });
}

Report check_suspension(std::string_view label, const Graph& g) {
  return run_check({"suspension", describe_graph(label, g)}, Provenance::Published, [&](Report& r) {
    require(is_triangle_free(g), "graph has a triangle");
    require(is_connected(g), "graph is not connected");
    require(g.vertex_count() >= 2, "graph needs at least two vertices");
    const auto base = homology_of(g);
    HomologyProfile shifted;
    shifted.betti.push_back(0);
    shifted.torsion.emplace_back();
    shifted.betti.insert(shifted.betti.end(), base.betti.begin(), base.betti.end());
    shifted.torsion.insert(shifted.torsion.end(), base.torsion.begin(), base.torsion.end());
    r.expected = profile_json(shifted);
    r.computed = profile_json(homology_of(suspension(g)));
  });
}

Report check_multipartite(const std::vector<std::size_t>& parts) {
  const Provenance provenance = parts.size() <= 3 ? Provenance::Published : Provenance::Derived;
  return run_check({"multipartite", Json{{"parts", parts}}}, provenance, [&](Report& r) {
    if (parts.size() < 2) throw InvalidArgument("need at least two parts");
    if (std::find(parts.begin(), parts.end(), 0) != parts.end()) throw InvalidArgument("empty part");
    const Complex k = delta_L(complete_multipartite(std::span<const std::size_t>(parts)));
    const auto p = reduced_homology(k);
    r.computed = profile_json(p);
    const auto m = parts[0];
    const auto n = parts[1];
    const std::size_t t = m * n - (m + n - 1);
    if (parts.size() == 2) {
      r.expected = profile_json(profile_from_betti({0, t}));
    } else if (parts.size() == 3) {
      r.expected = profile_json(profile_from_betti({0, 0, t * (parts[2] - 1)}));
    } else {
      const std::int64_t spheres = euler_characteristic(k) - 1;
      require(spheres >= 0, "negative sphere count");
      r.expected = profile_json(profile_from_betti({0, 0, static_cast<std::size_t>(spheres)}));
      r.note = "sphere count read off the Euler characteristic";
    }
  });
}

Report check_complete(std::size_t n) {
  return run_check({"complete", Json{{"n", n}}}, Provenance::Derived, [&](Report& r) {
    require(n >= 2, "need at least one edge");
    r.expected = profile_json(profile_from_betti({0, 0, binomial(n - 1, 3)}));
    r.computed = profile_json(homology_of(complete(n)));
  });
}

Report check_wheel_free(std::string_view label, const Graph& g) {
  return run_check({"wheel-free", describe_graph(label, g), Certification::Collapse}, Provenance::Published,
                   [&](Report& r) {
                     require(is_connected(g), "graph is not connected");
                     require(is_wheel_free(g), "graph contains a wheel");
                     require(g.edge_count() > 0, "graph has no edges");
                     const auto trace = wheelfree_collapse(g);
                     replay(trace);
                     const std::int64_t circles = 1 - euler_characteristic(trace.start);
                     require(circles >= 0, "negative circle count");
                     r.expected = {{"end_dimension_at_most_one", true},
                                   {"end_homology", profile_json(profile_from_betti({0, static_cast<std::size_t>(circles)}))},
                                   {"homology", profile_json(reduced_homology(trace.start))}};
                     const auto end = reduced_homology(trace.end);
                     r.computed = {{"end_dimension_at_most_one", trace.end.dimension() <= 1},
                                   {"end_homology", profile_json(end)},
                                   {"homology", profile_json(end)}};
                     r.trace_digest = trace_digest(trace);
                   });
}

Report check_circulant(const CirculantSpec& spec) {
  Json params{{"n", spec.n()}, {"generators", spec.generators()}};
  return run_check({"circulant", params, Certification::Homology}, Provenance::Derived, [&](Report& r) {
    const ComponentClass cls = classify_circulant(spec);
    const Graph g = circulant(spec);
    const Graph k5 = complete(5);
    const Graph sigma_c4 = suspension(cycle(4));

    Json expected_components = Json::array();
    Json computed_components = Json::array();
    std::string brute;
    for (const auto& comp : components(g)) {
      const Graph h = g.induced(comp);
      std::string here;
      if (isomorphic_small(h, k5)) here = "K5";
      else if (isomorphic_small(h, sigma_c4)) here = "suspension-C4";
      else if (!has_wheel_subgraph(h)) here = "wheel-free";
      else here = "unclassified";
      brute = brute.empty() || brute == here ? here : "mixed";

      if (cls == ComponentClass::WheelFree) {
        const auto trace = wheelfree_collapse(h);
        replay(trace);
        const std::int64_t circles = 1 - euler_characteristic(trace.start);
        expected_components.push_back(profile_json(profile_from_betti({0, static_cast<std::size_t>(circles)})));
        computed_components.push_back(trace.end.dimension() <= 1 ? profile_json(reduced_homology(trace.end))
                                                                 : Json("dimension above one"));
      } else {
        expected_components.push_back(
            profile_json(profile_from_betti({0, 0, cls == ComponentClass::K5 ? std::size_t{4} : std::size_t{1}})));
        computed_components.push_back(profile_json(homology_of(h)));
      }
    }
    if (cls == ComponentClass::WheelFree) r.spec.certification = Certification::Collapse;
    r.expected = {{"class", brute}, {"components", expected_components}};
    r.computed = {{"class", std::string(to_string(cls))}, {"components", computed_components}};
  });
}

Report check_leray(std::string_view label, const Graph& g, std::optional<std::size_t> sample_budget) {
  return run_check({"leray", describe_graph(label, g)}, Provenance::Published, [&](Report& r) {
    const Complex k = delta_L(g);
    LerayOptions options;
    options.sample_budget = sample_budget;
    std::vector<std::ptrdiff_t> degrees{3};
    if (is_bipartite(g)) degrees.push_back(2);
    r.expected = Json::object();
    r.computed = Json::object();
    for (auto d : degrees) {
      const auto key = std::to_string(d);
      const auto result = leray_bound_check(k, d, options);
      r.expected[key] = "certified";
      r.computed[key] = to_string(result.status);
      if (result.status == LerayStatus::Refuted) {
        Json w = result.witness;
        r.note += (r.note.empty() ? "" : "; ") + key + "-Leray witness " + w.dump();
      }
    }
  });
}

Report check_gluing(std::string_view label, const Graph& g1, const Graph& g2, const VertexMap& overlap) {
  Json params{{"case", std::string(label)},
              {"left", describe_graph("", g1)},
              {"right", describe_graph("", g2)},
              {"overlap", overlap}};
  params["left"].erase("graph");
  params["right"].erase("graph");
  return run_check({"gluing", params}, Provenance::Published, [&](Report& r) {
    const Graph glued = glue(g1, g2, overlap);
    const auto computed = homology_of(glued);
    r.computed = profile_json(computed);
    if (overlap.size() >= 2) {
      r.expected = r.computed;
      r.provenance = Provenance::Derived;
      r.note = "overlap has two or more vertices; pushout not computed, recorded for information";
      return;
    }
    const auto p1 = homology_of(g1);
    const auto p2 = homology_of(g2);
    auto expected = direct_sum(p1, p2);
    const bool joined = overlap.size() == 1 && g1.degree(overlap[0].first) > 0 && g2.degree(overlap[0].second) > 0;
    if (!joined && !p1.empty_complex && !p2.empty_complex) expected.betti[0] += 1;
    r.expected = profile_json(expected);
  });
}

Report check_nerve(std::string_view label, const Complex& k) {
  return run_check({"nerve", Json{{"case", std::string(label)}, {"complex", to_json(k)}}}, Provenance::Published,
                   [&](Report& r) {
                     r.expected = profile_json(reduced_homology(k));
                     r.computed = profile_json(reduced_homology(nerve_of_facets(k)));
                   });
}

Complex expected_facet_collapse(const FacetInstance& inst) {
  std::vector<Simplex> facets;
  for (const Simplex& f : inst.complex.facets())
    if (f != inst.sigma) facets.push_back(f);
  if (!inst.c.empty()) {
    for (const Simplex& part : inst.parts) facets.push_back(part.united(inst.c));
  } else {
    const VertexId anchor = inst.parts.back().back();
    for (std::size_t i = 0; i < inst.parts.size(); ++i) {
      facets.push_back(inst.parts[i]);
      if (i + 1 < inst.parts.size()) facets.push_back(Simplex{inst.parts[i].back(), anchor});
    }
  }
  return Complex(inst.complex.vertex_count(), std::move(facets));
}

Report check_facet_collapse(std::string_view label, const FacetInstance& inst) {
  Json parts = Json::array();
  for (const auto& p : inst.parts) parts.push_back(to_json(p));
  Json params{{"case", std::string(label)},
              {"complex", to_json(inst.complex)},
              {"sigma", to_json(inst.sigma)},
              {"parts", parts},
              {"c", to_json(inst.c)}};
  return run_check({"facet-collapse", params, Certification::Collapse}, Provenance::Published, [&](Report& r) {
    const auto trace = inst.parts.size() == 2
                           ? split_facet_collapse(inst.complex, inst.sigma, inst.parts[0], inst.parts[1], inst.c)
                           : fold_facet_collapse(inst.complex, inst.sigma, inst.parts, inst.c);
    replay(trace);
    r.expected = {{"end", to_json(expected_facet_collapse(inst))}, {"homology_preserved", true}};
    r.computed = {{"end", to_json(trace.end)}, {"homology_preserved", homology_preserved_stepwise(trace)}};
    r.trace_digest = trace_digest(trace);
  });
}

}  // namespace cliqueline
