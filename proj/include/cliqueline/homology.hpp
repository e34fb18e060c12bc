#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cliqueline/complex.hpp"
#include "cliqueline/smith.hpp"

namespace cliqueline {

/// Boundary map from d-faces (columns) to (d-1)-faces (rows), both sorted.
/// Dropping the i-th vertex of a sorted simplex carries sign (-1)^i. For d = 0
/// the single row is the empty simplex (augmented complex).
struct BoundaryMatrix {
  std::vector<Simplex> rows;
  std::vector<Simplex> cols;
  IntMatrix entries;
};

BoundaryMatrix boundary_matrix(const Complex& k, std::ptrdiff_t d);

/// Reduced integral homology.
///
/// betti[d] is the free rank of H~_d and torsion[d] its invariant factors
/// greater than one, for d = 0..dim. The empty complex carries no entries and
/// sets empty_complex, standing for H~_{-1} = Z.
struct HomologyProfile {
  std::vector<std::size_t> betti;
  std::vector<std::vector<std::int64_t>> torsion;
  bool empty_complex = false;

  std::size_t betti_at(std::size_t d) const { return d < betti.size() ? betti[d] : 0; }
  bool torsion_free() const;
  /// Alternating sum including the -1 term; equals euler_characteristic - 1.
  std::int64_t reduced_euler() const;
  /// Trailing zero degrees removed, so profiles of different complexes compare.
  HomologyProfile normalized() const;

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

std::string to_string(const HomologyProfile& p);

/// Shorthand for a torsion-free profile.
HomologyProfile profile_from_betti(std::vector<std::size_t> betti);

HomologyProfile reduced_homology(const Complex& k);

/// Number of connected components of the used part of k, by union-find on
/// its 1-skeleton.
std::size_t connected_components(const Complex& k);

/// Connected, torsion-free, and with vanishing reduced homology outside dims.
bool wedge_profile(const Complex& k, const std::set<std::size_t>& dims);
bool wedge_profile(const HomologyProfile& p, const std::set<std::size_t>& dims);

// ---------------------------------------------------------------------------

enum class LerayStatus {
  Certified,   // every induced subcomplex checked, none failed
  Refuted,     // a witness subset was found
  Sampled,     // random sample within budget found no counterexample
  BudgetExhausted,
};

std::string to_string(LerayStatus s);

struct LerayOptions {
  /// Exhaustive enumeration is used up to this many vertices.
  std::size_t max_exhaustive_vertices = 14;
  /// Above the exhaustive limit, test this many random subsets instead.
  std::optional<std::size_t> sample_budget;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct LerayResult {
  LerayStatus status = LerayStatus::Certified;
  /// Smallest failing vertex subset (by size, then lexicographically).
  std::vector<VertexId> witness;
  std::size_t subsets_checked = 0;
  /// Torsion also vanished in degree d-1 on every subset, so the vanishing
  /// holds over every coefficient field and not only for integer homology.
  bool all_fields = false;

  bool holds() const { return status == LerayStatus::Certified; }
};

/// Checks that every induced subcomplex has vanishing reduced integer homology
/// (free rank and torsion) in all degrees >= d.
LerayResult leray_bound_check(const Complex& k, std::ptrdiff_t d, const LerayOptions& options = {});

}  // namespace cliqueline
