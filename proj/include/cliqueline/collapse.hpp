#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cliqueline/complex.hpp"
#include "cliqueline/graph.hpp"

namespace cliqueline {

/// (free_face, facet): facet is the only maximal face containing free_face,
/// and free_face is a proper nonempty subset of it.
struct CollapsiblePair {
  Simplex free_face;
  Simplex facet;

  auto operator<=>(const CollapsiblePair&) const = default;
  bool operator==(const CollapsiblePair&) const = default;
};

/// An ordered sequence of elementary collapses from start to end.
struct CollapseTrace {
  std::vector<CollapsiblePair> steps;
  Complex start;
  Complex end;
};

/// True when p is an elementary collapse of k right now.
bool is_collapsible(const Complex& k, const CollapsiblePair& p);

/// Every collapsible pair of k, ordered by (free_face, facet).
std::vector<CollapsiblePair> free_faces(const Complex& k);

/// Removes every face between p.free_face and p.facet. The pair is
/// revalidated against k; a stale or non-free pair throws InvalidCollapse.
Complex collapse_pair(const Complex& k, const CollapsiblePair& p);

/// Replays the steps from trace.start, validating each one, and checks that
/// the result is trace.end. Throws InvalidCollapse on the first bad step.
void replay(const CollapseTrace& trace);

/// Concatenation; b.start must equal a.end.
CollapseTrace append(CollapseTrace a, const CollapseTrace& b);

// ---------------------------------------------------------------------------
// Structured collapses of a single facet

/// Collapses the facet sigma = A u B u C of k given that every pair {a, b}
/// with a in A, b in B is a free face of sigma. The result is generated by
///   sigma \ A and sigma \ B            when C is nonempty,
///   B and {a, b}                       when C is empty and |A| = 1,
///   A, B and {a, b}                    when C is empty and |A|, |B| >= 2,
/// where a and b are the largest elements of A and B.
CollapseTrace split_facet_collapse(const Complex& k, const Simplex& sigma, const Simplex& a,
                               const Simplex& b, const Simplex& c);

/// Folds split_facet_collapse over sigma = A_1 u ... u A_k u C when every pair of
/// elements from different parts is a free face of sigma. With C empty the
/// result is generated by A_1, ..., A_k and the edges {last(A_i), last(A_k)}
/// for i < k, where last() is the largest element of a part. With C nonempty
/// it is generated by A_i u C for each i.
CollapseTrace fold_facet_collapse(const Complex& k, const Simplex& sigma,
                             const std::vector<Simplex>& parts, const Simplex& c);

// ---------------------------------------------------------------------------

/// Repeatedly applies the smallest collapsible pair whose facet has the largest
/// dimension available, until no pair exists or the complex has dimension at
/// most target_dim.
CollapseTrace greedy_collapse(const Complex& k, std::optional<std::ptrdiff_t> target_dim = std::nullopt);

/// Neighborhood of x split into isolated neighbors and the vertex sets of the
/// nontrivial components of G[N(x)], the latter ordered by smallest member.
struct StarPartition {
  VertexId center = 0;
  std::vector<VertexId> isolated;
  std::vector<std::vector<VertexId>> tree_components;
};

/// Throws PreconditionViolation if some nontrivial component of G[N(x)] is
/// not a tree (the neighborhood then carries a wheel).
StarPartition star_partition(const Graph& g, VertexId x);

/// Collapses delta_L(g) of a connected wheel-free graph to a complex of
/// dimension at most one: every edge star with at least three edges is
/// collapsed through fold_facet_collapse and leaf removal on the neighborhood
/// trees, then every triangle facet loses a free edge.
CollapseTrace wheelfree_collapse(const Graph& g);

}  // namespace cliqueline
