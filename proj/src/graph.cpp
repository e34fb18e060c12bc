#include "cliqueline/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cliqueline/errors.hpp"

namespace cliqueline {

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw InvalidArgument("vertex id " + std::to_string(v) + " out of range for graph on " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
}

// Union-find with path halving, used for component and forest checks.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Graph::Graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges,
             std::map<VertexId, std::string> labels)
    : labels_(std::move(labels)) {
  std::vector<EdgeId> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(vertex_count));
    }
    if (u != v) canon.emplace_back(u, v);
  }
  build(vertex_count, std::move(canon));
}

Graph::Graph(std::size_t vertex_count, std::span<const EdgeId> edges,
             std::map<VertexId, std::string> labels)
    : labels_(std::move(labels)) {
  std::vector<EdgeId> canon;
  canon.reserve(edges.size());
  for (const EdgeId& e : edges) {
    if (e.hi >= vertex_count) {
      throw InvalidArgument("edge endpoint " + std::to_string(e.hi) + " outside 0.." +
                            std::to_string(vertex_count));
    }
    if (e.lo != e.hi) canon.push_back(e);
  }
  build(vertex_count, std::move(canon));
}

void Graph::build(std::size_t vertex_count, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(vertex_count, {});
  for (const EdgeId& e : edges_) {
    adjacency_[e.lo].push_back(e.hi);
    adjacency_[e.hi].push_back(e.lo);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  for (auto it = labels_.begin(); it != labels_.end();) {
    it = it->first < vertex_count ? std::next(it) : labels_.erase(it);
  }
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  check_vertex(*this, v);
  return adjacency_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

std::size_t Graph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::induced(std::span<const VertexId> vs) const {
  std::vector<VertexId> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int64_t> relabel(vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    check_vertex(*this, sorted[i]);
    relabel[sorted[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<EdgeId> kept;
  for (const EdgeId& e : edges_) {
    if (relabel[e.lo] >= 0 && relabel[e.hi] >= 0) {
      kept.emplace_back(static_cast<VertexId>(relabel[e.lo]), static_cast<VertexId>(relabel[e.hi]));
    }
  }
  std::map<VertexId, std::string> labels;
  for (const auto& [v, name] : labels_) {
    if (relabel[v] >= 0) labels.emplace(static_cast<VertexId>(relabel[v]), name);
  }
  return Graph(sorted.size(), std::span<const EdgeId>(kept), std::move(labels));
}

// ---------------------------------------------------------------------------

Graph complete(std::size_t n) {
  if (n == 0) throw InvalidArgument("complete graph needs at least one vertex");
  std::vector<EdgeId> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::span<const EdgeId>(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle graph needs at least 3 vertices, got " + std::to_string(n));
  std::vector<EdgeId> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<VertexId>(n - 1));
  return Graph(n, std::span<const EdgeId>(edges));
}

Graph path(std::size_t r) {
  if (r == 0) throw InvalidArgument("path graph needs length at least 1");
  std::vector<EdgeId> edges;
  for (VertexId i = 0; i < r; ++i) edges.emplace_back(i, i + 1);
  return Graph(r + 1, std::span<const EdgeId>(edges));
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.empty()) throw InvalidArgument("complete multipartite graph needs at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] == 0) throw InvalidArgument("multipartite part sizes must be at least 1");
    part_of.insert(part_of.end(), parts[p], p);
  }
  std::vector<EdgeId> edges;
  for (VertexId u = 0; u < part_of.size(); ++u)
    for (VertexId v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph(part_of.size(), std::span<const EdgeId>(edges));
}

Graph complete_multipartite(std::initializer_list<std::size_t> parts) {
  return complete_multipartite(std::span<const std::size_t>(parts.begin(), parts.size()));
}

Graph star(std::size_t leaves) {
  if (leaves == 0) throw InvalidArgument("star needs at least one leaf");
  std::vector<std::size_t> parts{1, leaves};
  return complete_multipartite(parts);
}

Graph petersen() {
  std::vector<EdgeId> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::span<const EdgeId>(edges));
}

Graph prism(std::size_t n) {
  if (n < 3) throw InvalidArgument("prism needs n >= 3");
  std::vector<EdgeId> edges;
  const auto m = static_cast<VertexId>(n);
  for (VertexId i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);
    edges.emplace_back(m + i, m + (i + 1) % m);
    edges.emplace_back(i, m + i);
  }
  return Graph(2 * n, std::span<const EdgeId>(edges));
}

Graph bowtie() { return wedge_at_vertex(complete(3), complete(3), 0, 0); }

Graph cone(const Graph& g) {
  const auto apex = static_cast<VertexId>(g.vertex_count());
  std::vector<EdgeId> edges = g.edges();
  for (VertexId v = 0; v < apex; ++v) edges.emplace_back(v, apex);
  auto labels = g.labels();
  labels[apex] = "w";
  return Graph(g.vertex_count() + 1, std::span<const EdgeId>(edges), std::move(labels));
}

Graph suspension(const Graph& g) {
  const auto a = static_cast<VertexId>(g.vertex_count());
  const VertexId b = a + 1;
  std::vector<EdgeId> edges = g.edges();
  for (VertexId v = 0; v < a; ++v) {
    edges.emplace_back(v, a);
    edges.emplace_back(v, b);
  }
  auto labels = g.labels();
  labels[a] = "a";
  labels[b] = "b";
  return Graph(g.vertex_count() + 2, std::span<const EdgeId>(edges), std::move(labels));
}

Graph wheel(std::size_t n) {
  if (n < 3) throw InvalidArgument("wheel needs a rim of at least 3 vertices");
  return cone(cycle(n));
}

LineGraph line_graph(const Graph& g) {
  std::vector<EdgeId> line_edges;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    std::vector<VertexId> incident;
    incident.reserve(nbrs.size());
    for (VertexId u : nbrs) incident.push_back(static_cast<VertexId>(g.edge_index(EdgeId(u, v))));
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j)
        line_edges.emplace_back(incident[i], incident[j]);
  }
  return LineGraph{Graph(g.edge_count(), std::span<const EdgeId>(line_edges)), g.edges()};
}

// ---------------------------------------------------------------------------

Graph glue(const Graph& g1, const Graph& g2, const VertexMap& iso) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  std::vector<std::int64_t> image(n2, -1);
  std::vector<bool> used1(n1, false);
  for (auto [u1, u2] : iso) {
    check_vertex(g1, u1);
    check_vertex(g2, u2);
    if (used1[u1] || image[u2] >= 0) throw InvalidArgument("gluing map is not injective");
    used1[u1] = true;
    image[u2] = u1;
  }
  for (std::size_t i = 0; i < iso.size(); ++i) {
    for (std::size_t j = i + 1; j < iso.size(); ++j) {
      if (g1.adjacent(iso[i].first, iso[j].first) != g2.adjacent(iso[i].second, iso[j].second)) {
        throw InvalidArgument("gluing map does not induce isomorphic overlaps");
      }
    }
  }
  std::vector<VertexId> new_id(n2);
  auto next = static_cast<VertexId>(n1);
  for (VertexId v = 0; v < n2; ++v) {
    new_id[v] = image[v] >= 0 ? static_cast<VertexId>(image[v]) : next++;
  }
  std::vector<EdgeId> edges = g1.edges();
  for (const EdgeId& e : g2.edges()) edges.emplace_back(new_id[e.lo], new_id[e.hi]);
  auto labels = g1.labels();
  for (const auto& [v, name] : g2.labels()) {
    if (image[v] < 0) labels.emplace(new_id[v], name);
  }
  return Graph(next, std::span<const EdgeId>(edges), std::move(labels));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) { return glue(g1, g2, {}); }

Graph wedge_at_vertex(const Graph& g1, const Graph& g2, VertexId v1, VertexId v2) {
  return glue(g1, g2, {{v1, v2}});
}

// ---------------------------------------------------------------------------

std::vector<std::array<VertexId, 3>> triangles(const Graph& g) {
  std::vector<std::array<VertexId, 3>> out;
  for (const EdgeId& e : g.edges()) {
    const auto& a = g.neighbors(e.lo);
    const auto& b = g.neighbors(e.hi);
    // common neighbors above e.hi keep each triangle once, in sorted order
    auto ia = std::upper_bound(a.begin(), a.end(), e.hi);
    auto ib = std::upper_bound(b.begin(), b.end(), e.hi);
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        out.push_back({e.lo, e.hi, *ia});
        ++ia;
        ++ib;
      }
    }
  }
  return out;
}

bool is_triangle_free(const Graph& g) { return triangles(g).empty(); }

std::vector<VertexId> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId pick = 0;
    bool found = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!visited[v] && (!found || weight[v] > weight[pick])) {
        pick = v;
        found = true;
      }
    }
    visited[pick] = true;
    order.push_back(pick);
    for (VertexId u : g.neighbors(pick))
      if (!visited[u]) ++weight[u];
  }
  return order;
}

bool is_chordal(const Graph& g) {
  const auto order = maximum_cardinality_search(g);
  std::vector<std::size_t> position(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  // In the reversed order each vertex must be simplicial among its later
  // neighbors, i.e. the neighbors visited earlier by the search form a clique.
  for (VertexId v : order) {
    std::vector<VertexId> earlier;
    for (VertexId u : g.neighbors(v))
      if (position[u] < position[v]) earlier.push_back(u);
    for (std::size_t i = 0; i < earlier.size(); ++i)
      for (std::size_t j = i + 1; j < earlier.size(); ++j)
        if (!g.adjacent(earlier[i], earlier[j])) return false;
  }
  return true;
}

bool is_wheel_free(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    DisjointSets sets(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j]) && !sets.unite(i, j)) return false;
      }
    }
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> component_labels(const Graph& g) {
  DisjointSets sets(g.vertex_count());
  for (const EdgeId& e : g.edges()) sets.unite(e.lo, e.hi);
  std::vector<std::size_t> label(g.vertex_count());
  std::vector<std::int64_t> index_of_root(g.vertex_count(), -1);
  std::size_t next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto root = sets.find(v);
    if (index_of_root[root] < 0) index_of_root[root] = static_cast<std::int64_t>(next++);
    label[v] = static_cast<std::size_t>(index_of_root[root]);
  }
  return label;
}

std::size_t component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  const auto labels = component_labels(g);
  std::vector<std::vector<VertexId>> out(component_count(g));
  for (VertexId v = 0; v < labels.size(); ++v) out[labels[v]].push_back(v);
  return out;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::size_t cyclomatic(const Graph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> da(n), db(n);
  for (VertexId v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<VertexId> map(n);
  std::vector<bool> taken(n, false);
  // Assign a's vertices in order, each to a degree-matching unused vertex of b
  // consistent with all earlier assignments.
  auto extend = [&](auto&& self, VertexId v) -> bool {
    if (v == n) return true;
    for (VertexId w = 0; w < n; ++w) {
      if (taken[w] || db[w] != da[v]) continue;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      if (!ok) continue;
      taken[w] = true;
      map[v] = w;
      if (self(self, v + 1)) return true;
      taken[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace cliqueline
