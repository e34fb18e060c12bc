#include "cliqueline/circulant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cliqueline/errors.hpp"

namespace cliqueline {

CirculantSpec::CirculantSpec(std::size_t n, std::vector<std::size_t> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n_ < 3) throw InvalidArgument("circulant graph needs n >= 3, got " + std::to_string(n_));
  std::sort(generators_.begin(), generators_.end());
  if (generators_.empty()) throw InvalidArgument("circulant generating set is empty");
  if (std::adjacent_find(generators_.begin(), generators_.end()) != generators_.end()) {
    throw InvalidArgument("circulant generating set has repeated elements");
  }
  for (std::size_t s : generators_) {
    if (s < 1 || s > n_ / 2) {
      throw InvalidArgument("circulant generator " + std::to_string(s) + " outside 1.." +
                            std::to_string(n_ / 2));
    }
  }
}

std::vector<std::size_t> CirculantSpec::connection_set() const {
  std::vector<std::size_t> out;
  for (std::size_t s : generators_) {
    out.push_back(s);
    out.push_back(n_ - s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph circulant(const CirculantSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<EdgeId> edges;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s : spec.generators()) {
      edges.emplace_back(static_cast<VertexId>(x), static_cast<VertexId>((x + s) % n));
    }
  }
  return Graph(n, std::span<const EdgeId>(edges));
}

std::string_view to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::WheelFree: return "wheel-free";
    case ComponentClass::K5: return "K5";
    case ComponentClass::SigmaC4: return "suspension-C4";
  }
  return "unknown";
}

ComponentClass classify_circulant(const CirculantSpec& spec) {
  if (spec.degree() != 4) {
    throw InvalidArgument("circulant C_" + std::to_string(spec.n()) + " is " +
                          std::to_string(spec.degree()) + "-regular, not 4-regular");
  }
  const Graph g = circulant(spec);
  const auto comps = components(g);
  const Graph component = g.induced(comps.front());

  const bool k5 = isomorphic_small(component, complete(5));
  const bool sigma_c4 = isomorphic_small(component, suspension(cycle(4)));
  const bool wheel_free = is_wheel_free(component);
  if (int(k5) + int(sigma_c4) + int(wheel_free) != 1) {
    throw std::logic_error("circulant C_" + std::to_string(spec.n()) +
                           " component matches no class or several");
  }
  if (k5) return ComponentClass::K5;
  if (sigma_c4) return ComponentClass::SigmaC4;
  return ComponentClass::WheelFree;
}

std::vector<CirculantSpec> four_regular_circulants(std::size_t n) {
  std::vector<CirculantSpec> out;
  for (std::size_t s = 1; s <= n / 2; ++s) {
    for (std::size_t t = s + 1; t <= n / 2; ++t) {
      CirculantSpec spec(n, {s, t});
      if (spec.degree() == 4) out.push_back(std::move(spec));
    }
  }
  return out;
}

}  // namespace cliqueline
