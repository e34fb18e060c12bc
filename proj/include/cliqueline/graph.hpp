#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliqueline {

using VertexId = std::uint32_t;

/// An undirected edge in canonical form (lo < hi). Ordered lexicographically.
struct EdgeId {
  VertexId lo = 0;
  VertexId hi = 0;

  EdgeId() = default;
  EdgeId(VertexId u, VertexId v) : lo(u < v ? u : v), hi(u < v ? v : u) {}

  bool contains(VertexId v) const { return lo == v || hi == v; }
  VertexId other(VertexId v) const { return v == lo ? hi : lo; }

  auto operator<=>(const EdgeId&) const = default;
};

/// Finite simple graph on vertices 0..vertex_count-1.
///
/// Immutable once built. The constructor normalizes the edge list: loops are
/// dropped and parallel edges collapse to one, so every Graph is simple.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count,
                 std::span<const std::pair<VertexId, VertexId>> edges = {},
                 std::map<VertexId, std::string> labels = {});
  Graph(std::size_t vertex_count, std::span<const EdgeId> edges,
        std::map<VertexId, std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges in lexicographic order.
  const std::vector<EdgeId>& edges() const { return edges_; }
  /// Sorted neighbor list.
  const std::vector<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;
  std::size_t max_degree() const;

  /// Index of `e` in edges(), or edge_count() when absent.
  std::size_t edge_index(EdgeId e) const;

  const std::map<VertexId, std::string>& labels() const { return labels_; }

  /// Subgraph induced on `vs`, relabelled densely in increasing id order.
  Graph induced(std::span<const VertexId> vs) const;

  bool operator==(const Graph& other) const {
    return adjacency_.size() == other.adjacency_.size() && edges_ == other.edges_;
  }

 private:
  void build(std::size_t vertex_count, std::vector<EdgeId> edges);

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<EdgeId> edges_;
  std::map<VertexId, std::string> labels_;
};

// ---------------------------------------------------------------------------
// Constructors

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
/// Path with r edges on vertices 0..r.
Graph path(std::size_t r);
Graph complete_multipartite(std::span<const std::size_t> parts);
Graph complete_multipartite(std::initializer_list<std::size_t> parts);
Graph star(std::size_t leaves);
Graph petersen();
/// Circular ladder C_n x K_2; prism(3) is the triangular prism.
Graph prism(std::size_t n = 3);
/// Two triangles sharing one vertex.
Graph bowtie();

/// Apex "w" appended as the last vertex, adjacent to everything.
Graph cone(const Graph& g);
/// Apexes "a" and "b" appended as the last two vertices.
Graph suspension(const Graph& g);
/// Cone over the n-cycle; the hub is the last vertex.
Graph wheel(std::size_t n);

struct LineGraph {
  Graph graph;
  /// vertex i of `graph` is edge_of_vertex[i] of the source graph.
  std::vector<EdgeId> edge_of_vertex;
};

LineGraph line_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Gluing

/// Pairs (vertex of g1, vertex of g2) to identify.
using VertexMap = std::vector<std::pair<VertexId, VertexId>>;

/// Quotient of g1 + g2 identifying each mapped pair. Vertices of g1 keep their
/// ids; surviving vertices of g2 follow in increasing order. Throws when the
/// map is not injective or the two overlaps are not isomorphic under it.
Graph glue(const Graph& g1, const Graph& g2, const VertexMap& iso);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph wedge_at_vertex(const Graph& g1, const Graph& g2, VertexId v1, VertexId v2);

// ---------------------------------------------------------------------------
// Structure

std::vector<std::array<VertexId, 3>> triangles(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Maximum-cardinality search order (ties to the smallest id). Reversed, it
/// is a perfect elimination ordering exactly when g is chordal.
std::vector<VertexId> maximum_cardinality_search(const Graph& g);
bool is_chordal(const Graph& g);

/// True when every neighborhood G[N(v)] is a forest.
bool is_wheel_free(const Graph& g);

bool is_bipartite(const Graph& g);

/// Component index per vertex, numbered by smallest member.
std::vector<std::size_t> component_labels(const Graph& g);
std::size_t component_count(const Graph& g);
std::vector<std::vector<VertexId>> components(const Graph& g);
bool is_connected(const Graph& g);

/// e - v + #components.
std::size_t cyclomatic(const Graph& g);

/// Brute-force isomorphism test, intended for graphs with at most ~9 vertices.
bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace cliqueline
