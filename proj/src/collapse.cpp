#include "cliqueline/collapse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cliqueline/errors.hpp"

namespace cliqueline {

bool is_collapsible(const Complex& k, const CollapsiblePair& p) {
  if (p.free_face.empty() || p.free_face.size() >= p.facet.size()) return false;
  if (!p.free_face.is_face_of(p.facet) || !k.has_facet(p.facet)) return false;
  return k.facets_containing(p.free_face).size() == 1;
}

std::vector<CollapsiblePair> free_faces(const Complex& k) {
  std::vector<CollapsiblePair> out;
  for (const Simplex& tau : k.facets()) {
    const std::size_t n = tau.size();
    if (n < 2 || n > 20) continue;
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); ++mask) {
      std::vector<VertexId> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) sub.push_back(tau[i]);
      Simplex sigma(std::move(sub));
      if (k.facets_containing(sigma).size() == 1) out.push_back({std::move(sigma), tau});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex collapse_pair(const Complex& k, const CollapsiblePair& p) {
  if (!is_collapsible(k, p)) {
    throw InvalidCollapse("(" + to_string(p.free_face) + ", " + to_string(p.facet) +
                          ") is not a collapsible pair of the current complex");
  }
  // What survives of the facet is generated by the faces missing one vertex
  // of the free face.
  std::vector<Simplex> facets;
  for (const Simplex& f : k.facets())
    if (f != p.facet) facets.push_back(f);
  for (VertexId v : p.free_face) facets.push_back(p.facet.without(v));
  return Complex(k.vertex_count(), std::move(facets));
}

void replay(const CollapseTrace& trace) {
  Complex current = trace.start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    try {
      current = collapse_pair(current, trace.steps[i]);
    } catch (const InvalidCollapse& e) {
      throw InvalidCollapse("step " + std::to_string(i) + ": " + e.what());
    }
  }
  if (current != trace.end) throw InvalidCollapse("replayed steps do not reach the recorded end complex");
}

CollapseTrace append(CollapseTrace a, const CollapseTrace& b) {
  if (a.end != b.start) throw InvalidArgument("traces do not chain");
  a.steps.insert(a.steps.end(), b.steps.begin(), b.steps.end());
  a.end = b.end;
  return a;
}

namespace {

class TraceBuilder {
 public:
  explicit TraceBuilder(Complex start) : start_(start), current_(std::move(start)) {}

  const Complex& current() const { return current_; }

  void apply(CollapsiblePair p) {
    current_ = collapse_pair(current_, p);
    steps_.push_back(std::move(p));
  }

  CollapseTrace finish() && { return CollapseTrace{std::move(steps_), std::move(start_), std::move(current_)}; }

 private:
  Complex start_;
  Complex current_;
  std::vector<CollapsiblePair> steps_;
};

void require_facet(const Complex& k, const Simplex& sigma) {
  if (!k.has_facet(sigma)) throw PreconditionViolation(to_string(sigma) + " is not a facet of the complex");
}

void require_free_pairs(const Complex& k, const Simplex& sigma, const std::vector<VertexId>& a,
                        const std::vector<VertexId>& b) {
  for (VertexId x : a) {
    for (VertexId y : b) {
      const Simplex pair{x, y};
      const auto holders = k.facets_containing(pair);
      if (holders.size() != 1 || k.facets()[holders.front()] != sigma) {
        throw PreconditionViolation(to_string(pair) + " is not a free face of " + to_string(sigma));
      }
    }
  }
}

// Collapses every pair {a_i, b_j} out of sigma, walking a_1..a_p and within
// each a_i the list b_1..b_q. The pair {a_i, b_j} is free in the facet
// sigma \ {a_1..a_{i-1}, b_1..b_{j-1}} at its turn. When sigma = A u B the very
// last pair equals its facet and is kept, which leaves the edge {a_p, b_q}.
void collapse_cross_pairs(TraceBuilder& trace, const Simplex& sigma, const std::vector<VertexId>& a,
                          const std::vector<VertexId>& b) {
  require_facet(trace.current(), sigma);
  require_free_pairs(trace.current(), sigma, a, b);
  Simplex removed_a;
  for (VertexId ai : a) {
    Simplex removed_b;
    for (VertexId bj : b) {
      Simplex facet = sigma.without(removed_a).without(removed_b);
      Simplex pair{ai, bj};
      if (facet != pair) trace.apply({std::move(pair), std::move(facet)});
      removed_b = removed_b.with(bj);
    }
    removed_a = removed_a.with(ai);
  }
}

void require_partition(const Simplex& sigma, const std::vector<Simplex>& pieces) {
  Simplex all;
  std::size_t total = 0;
  for (const Simplex& p : pieces) {
    all = all.united(p);
    total += p.size();
  }
  if (total != all.size()) throw PreconditionViolation("parts of the facet are not disjoint");
  if (all != sigma) throw PreconditionViolation("parts do not cover the facet " + to_string(sigma));
}

}  // namespace

CollapseTrace split_facet_collapse(const Complex& k, const Simplex& sigma, const Simplex& a,
                               const Simplex& b, const Simplex& c) {
  if (a.empty() || b.empty()) throw PreconditionViolation("A and B must be nonempty");
  require_partition(sigma, {a, b, c});
  TraceBuilder trace(k);
  collapse_cross_pairs(trace, sigma, a.vertices(), b.vertices());
  return std::move(trace).finish();
}

namespace {

// Shared by fold_facet_collapse and the wheel-free procedure: the anchor of the
// fold is the largest element of the last part.
void fold_parts(TraceBuilder& trace, const Simplex& sigma, const std::vector<Simplex>& parts) {
  if (parts.size() < 2) {
    require_facet(trace.current(), sigma);
    return;
  }
  const VertexId anchor = parts.back().back();
  Simplex current = sigma;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    std::vector<VertexId> rest;
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (VertexId v : parts[j])
        if (v != anchor) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    rest.push_back(anchor);
    collapse_cross_pairs(trace, current, parts[i].vertices(), rest);
    current = current.without(parts[i]);
  }
}

}  // namespace

CollapseTrace fold_facet_collapse(const Complex& k, const Simplex& sigma, const std::vector<Simplex>& parts,
                             const Simplex& c) {
  if (parts.empty()) throw PreconditionViolation("at least one part is required");
  for (const Simplex& p : parts)
    if (p.empty()) throw PreconditionViolation("parts must be nonempty");
  std::vector<Simplex> pieces = parts;
  pieces.push_back(c);
  require_partition(sigma, pieces);
  require_facet(k, sigma);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      require_free_pairs(k, sigma, parts[i].vertices(), parts[j].vertices());
  TraceBuilder trace(k);
  fold_parts(trace, sigma, parts);
  return std::move(trace).finish();
}

// ---------------------------------------------------------------------------

CollapseTrace greedy_collapse(const Complex& k, std::optional<std::ptrdiff_t> target_dim) {
  TraceBuilder trace(k);
  while (!target_dim || trace.current().dimension() > *target_dim) {
    const auto pairs = free_faces(trace.current());
    if (pairs.empty()) break;
    std::ptrdiff_t top = -1;
    for (const auto& p : pairs) top = std::max(top, p.facet.dimension());
    auto pick = std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) { return p.facet.dimension() == top; });
    trace.apply(*pick);
  }
  return std::move(trace).finish();
}

StarPartition star_partition(const Graph& g, VertexId x) {
  StarPartition out;
  out.center = x;
  const auto& nbrs = g.neighbors(x);
  const Graph local = g.induced(nbrs);
  for (const auto& comp : components(local)) {
    if (comp.size() == 1) {
      out.isolated.push_back(nbrs[comp.front()]);
      continue;
    }
    std::size_t internal_edges = 0;
    for (VertexId v : comp) internal_edges += local.degree(v);
    internal_edges /= 2;
    if (internal_edges != comp.size() - 1) {
      throw PreconditionViolation("neighborhood of vertex " + std::to_string(x) +
                                  " contains a cycle, so the graph has a wheel centered there");
    }
    std::vector<VertexId> members;
    for (VertexId v : comp) members.push_back(nbrs[v]);
    out.tree_components.push_back(std::move(members));
  }
  return out;
}

namespace {

// Collapses the simplex of star edges {(x, v) : v in tree} down to the edges
// of the tree, removing one leaf at a time.
void collapse_tree_simplex(TraceBuilder& trace, const Graph& g, VertexId x, std::vector<VertexId> tree) {
  auto edge_of = [&](VertexId v) { return static_cast<VertexId>(g.edge_index(EdgeId(x, v))); };
  std::sort(tree.begin(), tree.end());
  while (tree.size() >= 3) {
    // smallest leaf of the current tree and its parent
    VertexId leaf = 0, parent = 0;
    bool found = false;
    for (VertexId v : tree) {
      std::size_t inside = 0;
      VertexId last = 0;
      for (VertexId u : tree) {
        if (u != v && g.adjacent(u, v)) {
          ++inside;
          last = u;
        }
      }
      if (inside == 1) {
        leaf = v;
        parent = last;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("neighborhood tree of vertex " + std::to_string(x) + " has no leaf");

    std::vector<VertexId> simplex_vertices;
    for (VertexId v : tree) simplex_vertices.push_back(edge_of(v));
    const Simplex whole(simplex_vertices);
    Simplex removed;
    for (VertexId r : tree) {
      if (r == leaf || r == parent) continue;
      if (g.adjacent(leaf, r)) {
        // The pair below would sit in the triangle {x, leaf, r} and not be free.
        throw std::logic_error("counterexample: edges (" + std::to_string(x) + "," + std::to_string(leaf) +
                               ") and (" + std::to_string(x) + "," + std::to_string(r) +
                               ") lie in a common triangle");
      }
      trace.apply({Simplex{edge_of(leaf), edge_of(r)}, whole.without(removed)});
      removed = removed.with(edge_of(r));
    }
    tree.erase(std::find(tree.begin(), tree.end(), leaf));
  }
}

}  // namespace

CollapseTrace wheelfree_collapse(const Graph& g) {
  if (!is_connected(g)) throw PreconditionViolation("wheel-free collapse needs a connected graph");
  if (!is_wheel_free(g)) throw PreconditionViolation("graph contains a wheel");

  TraceBuilder trace(delta_L(g));
  auto edge_of = [&](VertexId a, VertexId b) { return static_cast<VertexId>(g.edge_index(EdgeId(a, b))); };

  // Edge stars with at least three edges. Stars with fewer are already at most
  // one-dimensional.
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) < 3) continue;
    const StarPartition star = star_partition(g, x);
    std::vector<VertexId> star_edges;
    for (VertexId v : g.neighbors(x)) star_edges.push_back(edge_of(x, v));
    const Simplex sigma(star_edges);

    std::vector<Simplex> parts;
    for (const auto& comp : star.tree_components) {
      std::vector<VertexId> ids;
      for (VertexId v : comp) ids.push_back(edge_of(x, v));
      parts.emplace_back(std::move(ids));
    }
    for (VertexId a : star.isolated) parts.push_back(Simplex{edge_of(x, a)});

    fold_parts(trace, sigma, parts);
    for (const auto& comp : star.tree_components) {
      if (comp.size() >= 3) collapse_tree_simplex(trace, g, x, comp);
    }
  }

  // Triangle facets, each through its two smallest edges.
  for (const auto& t : triangles(g)) {
    const Simplex tri{edge_of(t[0], t[1]), edge_of(t[0], t[2]), edge_of(t[1], t[2])};
    trace.apply({Simplex{tri[0], tri[1]}, tri});
  }

  if (trace.current().dimension() > 1) {
    throw std::logic_error("wheel-free collapse ended above dimension one");
  }
  return std::move(trace).finish();
}

}  // namespace cliqueline
