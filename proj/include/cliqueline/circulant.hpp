#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cliqueline/graph.hpp"

namespace cliqueline {

/// Generating data of a circulant graph C_n(S), with S a subset of 1..n/2.
class CirculantSpec {
 public:
  /// Throws InvalidArgument unless n >= 3 and S is a nonempty set within 1..n/2.
  CirculantSpec(std::size_t n, std::vector<std::size_t> generators);

  std::size_t n() const { return n_; }
  /// Sorted, duplicate-free.
  const std::vector<std::size_t>& generators() const { return generators_; }
  /// Sorted residues of S u (-S) mod n; its size is the degree.
  std::vector<std::size_t> connection_set() const;
  std::size_t degree() const { return connection_set().size(); }

 private:
  std::size_t n_;
  std::vector<std::size_t> generators_;
};

Graph circulant(const CirculantSpec& spec);

enum class ComponentClass { WheelFree, K5, SigmaC4 };

std::string_view to_string(ComponentClass c);

/// Classifies the components of a 4-regular circulant graph. All components
/// are isomorphic, so the component of vertex 0 is tested against K5 and the
/// suspension of C4 by explicit isomorphism and for wheel-freeness; exactly
/// one must match. Throws InvalidArgument for specs that are not 4-regular.
ComponentClass classify_circulant(const CirculantSpec& spec);

/// Every 4-regular spec {s < t} with the given n, in lexicographic order.
std::vector<CirculantSpec> four_regular_circulants(std::size_t n);

}  // namespace cliqueline
