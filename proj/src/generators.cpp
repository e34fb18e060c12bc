#include "cliqueline/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace cliqueline {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return rng() & 1; }

std::vector<EdgeId> random_tree_edges(Rng& rng, std::size_t n) {
  std::vector<EdgeId> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<VertexId>(uniform(rng, 0, v - 1)), static_cast<VertexId>(v));
  }
  return edges;
}

std::vector<EdgeId> all_pairs(std::size_t n) {
  std::vector<EdgeId> out;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

Simplex random_subset(Rng& rng, const std::vector<VertexId>& pool, std::size_t min_size) {
  std::vector<VertexId> out;
  for (VertexId v : pool)
    if (coin(rng)) out.push_back(v);
  auto rest = pool;
  std::shuffle(rest.begin(), rest.end(), rng);
  for (VertexId v : rest) {
    if (out.size() >= min_size) break;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return Simplex(std::move(out));
}

// sigma is 0..s-1 with labels[i] the part of vertex i (parts.size() means C),
// outsiders are s..s+extra-1. Extra facets mix at most one part with C and
// outsiders, so no extra facet holds a cross pair.
FacetInstance assemble(Rng& rng, std::size_t s, std::size_t part_count,
                       const std::vector<std::size_t>& labels) {
  const std::size_t extra = uniform(rng, 0, 3);
  FacetInstance inst;
  std::vector<std::vector<VertexId>> parts(part_count);
  std::vector<VertexId> c;
  for (VertexId v = 0; v < s; ++v) {
    if (labels[v] < part_count) parts[labels[v]].push_back(v);
    else c.push_back(v);
  }
  std::vector<VertexId> all(s);
  std::iota(all.begin(), all.end(), 0);
  inst.sigma = Simplex(all);
  for (auto& p : parts) inst.parts.emplace_back(p);
  inst.c = Simplex(c);

  std::vector<Simplex> facets{inst.sigma};
  const std::size_t extra_facets = uniform(rng, 0, 3);
  for (std::size_t i = 0; i < extra_facets; ++i) {
    std::vector<VertexId> pool = parts[uniform(rng, 0, part_count - 1)];
    pool.insert(pool.end(), c.begin(), c.end());
    for (std::size_t o = 0; o < extra; ++o) pool.push_back(static_cast<VertexId>(s + o));
    facets.push_back(random_subset(rng, pool, 1));
  }
  inst.complex = Complex(s + extra, std::move(facets));
  return inst;
}

FacetInstance random_partition_instance(Rng& rng, std::size_t max_sigma, std::size_t part_count) {
  const std::size_t s = uniform(rng, part_count, std::max(part_count, max_sigma));
  std::vector<std::size_t> labels(s);
  // The first part_count vertices of a shuffled order seed each part, the
  // rest land in a random part or in C.
  std::vector<VertexId> order(s);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < s; ++i) {
    labels[order[i]] = i < part_count ? i : uniform(rng, 0, part_count);
  }
  return assemble(rng, s, part_count, labels);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view stream) {
  std::uint64_t h = 1469598103934665603ULL ^ base;
  for (unsigned char ch : stream) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

Graph random_graph_without_isolated(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = uniform(rng, 2, std::max<std::size_t>(2, max_vertices));
  auto pairs = all_pairs(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(uniform(rng, 1, std::min(max_edges, pairs.size())));
  std::vector<VertexId> used;
  for (auto e : pairs) {
    used.push_back(e.lo);
    used.push_back(e.hi);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return Graph(n, pairs).induced(used);
}

Graph random_connected_triangle_free(Rng& rng, std::size_t max_edges) {
  const std::size_t n = uniform(rng, 2, std::min<std::size_t>(10, max_edges + 1));
  auto edges = random_tree_edges(rng, n);
  const std::size_t target = uniform(rng, edges.size(), max_edges);
  auto candidates = all_pairs(n);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (auto e : candidates) {
    if (edges.size() >= target) break;
    Graph g(n, edges);
    if (g.adjacent(e.lo, e.hi)) continue;
    const auto& a = g.neighbors(e.lo);
    const auto& b = g.neighbors(e.hi);
    std::vector<VertexId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) edges.push_back(e);
  }
  return Graph(n, edges);
}

Graph random_chordal(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, std::min<std::size_t>(4, std::max<std::size_t>(2, max_vertices)),
                                std::max<std::size_t>(2, max_vertices));
  std::vector<EdgeId> edges;
  for (VertexId v = 1; v < n; ++v) {
    Graph g(v, edges);
    const auto u = static_cast<VertexId>(uniform(rng, 0, v - 1));
    std::vector<VertexId> clique{u};
    auto pool = g.neighbors(u);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (VertexId w : pool) {
      if (!coin(rng)) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](VertexId x) { return g.adjacent(x, w); })) {
        clique.push_back(w);
      }
    }
    for (VertexId w : clique) edges.emplace_back(w, v);
  }
  return Graph(n, edges);
}

Graph random_k_tree(Rng& rng, std::size_t k, std::size_t n) {
  n = std::max(n, k + 1);
  std::vector<EdgeId> edges;
  for (VertexId u = 0; u <= k; ++u)
    for (VertexId v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
  std::vector<std::vector<VertexId>> cliques;
  for (VertexId skip = 0; skip <= k; ++skip) {
    std::vector<VertexId> c;
    for (VertexId u = 0; u <= k; ++u)
      if (u != skip) c.push_back(u);
    cliques.push_back(c);
  }
  for (auto v = static_cast<VertexId>(k + 1); v < n; ++v) {
    const auto base = cliques[uniform(rng, 0, cliques.size() - 1)];
    for (VertexId u : base) edges.emplace_back(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      auto c = base;
      c[drop] = v;
      std::sort(c.begin(), c.end());
      cliques.push_back(c);
    }
  }
  return Graph(n, edges);
}

Graph random_connected_wheel_free(Rng& rng, std::size_t max_edges) {
  for (;;) {
    const std::size_t n = uniform(rng, std::min<std::size_t>(3, max_edges + 1), std::min<std::size_t>(10, max_edges + 1));
    auto edges = random_tree_edges(rng, n);
    const std::size_t target = uniform(rng, edges.size(), std::min(max_edges, n * (n - 1) / 2));
    auto candidates = all_pairs(n);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    Graph g(n, edges);
    for (auto e : candidates) {
      if (edges.size() >= target) break;
      if (g.adjacent(e.lo, e.hi)) continue;
      edges.push_back(e);
      g = Graph(n, edges);
    }
    if (is_wheel_free(g)) return g;
  }
}

namespace {

// Isomorphism invariant used to bucket candidates before the exact test.
std::vector<std::size_t> invariant(const Graph& g) {
  std::vector<std::size_t> key{g.vertex_count(), g.edge_count(), triangles(g).size()};
  std::vector<std::size_t> profile;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t code = g.degree(v);
    std::vector<std::size_t> nd;
    for (VertexId w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    for (auto d : nd) code = code * 4 + d;
    profile.push_back(code);
  }
  std::sort(profile.begin(), profile.end());
  key.insert(key.end(), profile.begin(), profile.end());
  return key;
}

}  // namespace

std::vector<Graph> connected_subcubic_graphs(std::size_t max_vertices) {
  std::vector<Graph> out;
  if (max_vertices == 0) return out;
  // All classes on n vertices, connected or not.
  std::vector<Graph> layer{Graph(1)};
  out.push_back(layer.front());
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::map<std::vector<std::size_t>, std::vector<Graph>> buckets;
    std::vector<Graph> next;
    for (const Graph& base : layer) {
      std::vector<VertexId> open;
      for (VertexId v = 0; v < base.vertex_count(); ++v)
        if (base.degree(v) <= 2) open.push_back(v);
      const std::size_t subsets = std::size_t{1} << open.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        if (std::popcount(mask) > 3) continue;
        std::vector<EdgeId> edges = base.edges();
        for (std::size_t i = 0; i < open.size(); ++i)
          if (mask >> i & 1) edges.emplace_back(open[i], static_cast<VertexId>(n - 1));
        Graph candidate(n, edges);
        auto& bucket = buckets[invariant(candidate)];
        if (std::none_of(bucket.begin(), bucket.end(),
                         [&](const Graph& h) { return isomorphic_small(h, candidate); })) {
          bucket.push_back(candidate);
          next.push_back(candidate);
        }
      }
    }
    for (const Graph& g : next)
      if (is_connected(g)) out.push_back(g);
    layer = std::move(next);
  }
  return out;
}

Complex random_complex(Rng& rng, std::size_t max_facets, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, max_vertices));
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Simplex> facets;
  const std::size_t count = uniform(rng, 1, std::max<std::size_t>(1, max_facets));
  for (std::size_t i = 0; i < count; ++i) {
    auto shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.resize(uniform(rng, 1, std::min<std::size_t>(4, n)));
    facets.emplace_back(shuffled);
  }
  return Complex(n, std::move(facets));
}

FacetInstance random_split_instance(Rng& rng, std::size_t max_sigma) {
  return random_partition_instance(rng, max_sigma, 2);
}

FacetInstance random_fold_instance(Rng& rng, std::size_t max_sigma) {
  const std::size_t parts = uniform(rng, 2, std::min<std::size_t>(4, std::max<std::size_t>(2, max_sigma)));
  return random_partition_instance(rng, max_sigma, parts);
}

}  // namespace cliqueline
