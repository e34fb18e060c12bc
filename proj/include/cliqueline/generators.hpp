#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "cliqueline/complex.hpp"
#include "cliqueline/graph.hpp"

namespace cliqueline {

using Rng = std::mt19937_64;

/// Seed for a named stream, so each suite draws independently of the others.
std::uint64_t derive_seed(std::uint64_t base, std::string_view stream);

/// m distinct random edges on n vertices, with isolated vertices dropped.
Graph random_graph_without_isolated(Rng& rng, std::size_t max_vertices, std::size_t max_edges);

/// Random spanning tree plus triangle-avoiding extra edges; at least one edge.
Graph random_connected_triangle_free(Rng& rng, std::size_t max_edges);

/// Vertices added one at a time, each joined to a nonempty clique of the
/// existing graph, so the insertion order reversed is a perfect elimination
/// ordering. Connected, at least two vertices.
Graph random_chordal(Rng& rng, std::size_t max_vertices);

/// A k-tree on n >= k + 1 vertices.
Graph random_k_tree(Rng& rng, std::size_t k, std::size_t n);

/// Rejection sampling over random connected graphs with the neighborhood
/// forest test. At least one edge.
Graph random_connected_wheel_free(Rng& rng, std::size_t max_edges);

/// One representative per isomorphism class of connected graphs with maximum
/// degree at most 3 on 1..max_vertices vertices. Built by adding a vertex
/// joined to at most three vertices of degree <= 2 to every class one size
/// smaller, then deduplicating with isomorphic_small.
std::vector<Graph> connected_subcubic_graphs(std::size_t max_vertices);

/// Between 1 and max_facets random facets of size 1..4 over at most
/// max_vertices vertices.
Complex random_complex(Rng& rng, std::size_t max_facets, std::size_t max_vertices);

/// A facet sigma split into parts and C inside a complex whose other facets
/// never contain two elements from different parts, so all cross pairs are
/// free faces of sigma.
struct FacetInstance {
  Complex complex;
  Simplex sigma;
  std::vector<Simplex> parts;
  Simplex c;
};

/// Two parts (A, B) and C; |sigma| <= max_sigma.
FacetInstance random_split_instance(Rng& rng, std::size_t max_sigma);
/// Two to four parts and C; |sigma| <= max_sigma.
FacetInstance random_fold_instance(Rng& rng, std::size_t max_sigma);

}  // namespace cliqueline
