#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cliqueline/graph.hpp"

namespace cliqueline {

/// A simplex as a strictly increasing vertex list. The empty simplex has
/// dimension -1.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts and removes duplicates.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  std::ptrdiff_t dimension() const { return static_cast<std::ptrdiff_t>(v_.size()) - 1; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  VertexId operator[](std::size_t i) const { return v_[i]; }
  VertexId front() const { return v_.front(); }
  VertexId back() const { return v_.back(); }
  const std::vector<VertexId>& vertices() const { return v_; }

  bool contains(VertexId v) const;
  /// True when this simplex is a subset of `other` (not necessarily proper).
  bool is_face_of(const Simplex& other) const;

  Simplex without(VertexId v) const;
  Simplex without(const Simplex& other) const;
  Simplex with(VertexId v) const;
  Simplex united(const Simplex& other) const;
  Simplex intersected(const Simplex& other) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<VertexId> v_;
};

std::string to_string(const Simplex& s);

/// Faces per dimension 0..dim.
using FVector = std::vector<std::size_t>;

/// A finite simplicial complex stored by its facets.
///
/// The facet list is kept sorted and is always an antichain: the constructor
/// drops empty simplices, duplicates, and any simplex contained in another.
/// The vertex universe is 0..vertex_count-1; ids need not all be used. A
/// complex with no facets is the empty complex.
class Complex {
 public:
  Complex() = default;
  Complex(std::size_t vertex_count, std::vector<Simplex> facets);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  bool empty() const { return facets_.empty(); }
  /// -1 for the empty complex.
  std::ptrdiff_t dimension() const;

  /// Vertices that lie in some facet, increasing.
  std::vector<VertexId> used_vertices() const;

  /// All faces of the given dimension, lexicographically sorted.
  std::vector<Simplex> faces(std::ptrdiff_t dim) const;
  bool contains_face(const Simplex& s) const;
  bool has_facet(const Simplex& s) const;
  /// Indices into facets() of the facets containing `s`.
  std::vector<std::size_t> facets_containing(const Simplex& s) const;

  bool operator==(const Complex&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> facets_;
};

/// Sorts, deduplicates and drops every simplex contained in another one.
std::vector<Simplex> prune_to_antichain(std::vector<Simplex> simplices);

// ---------------------------------------------------------------------------

/// Facets are the maximal cliques of g (Bron-Kerbosch with pivoting).
Complex clique_complex(const Graph& g);

/// Maximal cliques, each sorted, in lexicographic order.
std::vector<Simplex> maximal_cliques(const Graph& g);

Complex skeleton(const Complex& k, std::ptrdiff_t d);

/// The clique complex of the line graph of g. Vertex i is the i-th edge of g.
///
/// Built from the two facet families (edge stars at a vertex, and triangles of
/// g), then checked face-for-face against clique_complex(line_graph(g)).
Complex delta_L(const Graph& g);

/// The candidate facets of delta_L before pruning: one star per vertex with
/// nonzero degree, and one 3-set of edges per triangle.
std::vector<Simplex> edge_stars_and_triangles(const Graph& g);

/// Vertex i stands for facet i; a set of facets spans a simplex exactly when
/// their common intersection is nonempty.
Complex nerve_of_facets(const Complex& k);

/// Faces of k whose vertices lie in vs. Ids keep their meaning.
Complex induced_subcomplex(const Complex& k, std::span<const VertexId> vs);

/// Apex appended as vertex vertex_count().
Complex cone_complex(const Complex& k);
/// Two apexes appended as vertices vertex_count() and vertex_count()+1.
Complex suspension_complex(const Complex& k);

/// Disjoint union; k2's ids are shifted past k1's universe.
Complex disjoint_union(const Complex& k1, const Complex& k2);
/// One-point union identifying v1 of k1 with v2 of k2.
Complex wedge(const Complex& k1, const Complex& k2, VertexId v1, VertexId v2);

FVector f_vector(const Complex& k);
std::int64_t euler_characteristic(const Complex& k);

/// The full simplex on n vertices.
Complex simplex_complex(std::size_t n);
/// Boundary of the simplex on n vertices (a sphere of dimension n-2).
Complex simplex_boundary(std::size_t n);

}  // namespace cliqueline
