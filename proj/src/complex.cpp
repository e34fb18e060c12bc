#include "cliqueline/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cliqueline/errors.hpp"

namespace cliqueline {

Simplex::Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Simplex Simplex::without(VertexId v) const {
  Simplex out;
  out.v_.reserve(v_.size());
  for (VertexId x : v_)
    if (x != v) out.v_.push_back(x);
  return out;
}

Simplex Simplex::without(const Simplex& other) const {
  Simplex out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                      std::back_inserter(out.v_));
  return out;
}

Simplex Simplex::with(VertexId v) const {
  Simplex out = *this;
  auto it = std::lower_bound(out.v_.begin(), out.v_.end(), v);
  if (it == out.v_.end() || *it != v) out.v_.insert(it, v);
  return out;
}

Simplex Simplex::united(const Simplex& other) const {
  Simplex out;
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out.v_));
  return out;
}

Simplex Simplex::intersected(const Simplex& other) const {
  Simplex out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out.v_));
  return out;
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::vector<Simplex> prune_to_antichain(std::vector<Simplex> simplices) {
  std::erase_if(simplices, [](const Simplex& s) { return s.empty(); });
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& a, const Simplex& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::vector<Simplex> kept;
  for (auto& s : simplices) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Simplex& big) {
      return big.size() > s.size() && s.is_face_of(big);
    });
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

Complex::Complex(std::size_t vertex_count, std::vector<Simplex> facets)
    : vertex_count_(vertex_count) {
  for (const Simplex& s : facets) {
    if (!s.empty() && s.back() >= vertex_count) {
      throw InvalidArgument("simplex " + to_string(s) + " uses a vertex outside 0.." +
                            std::to_string(vertex_count));
    }
  }
  facets_ = prune_to_antichain(std::move(facets));
}

std::ptrdiff_t Complex::dimension() const {
  std::ptrdiff_t dim = -1;
  for (const Simplex& f : facets_) dim = std::max(dim, f.dimension());
  return dim;
}

std::vector<VertexId> Complex::used_vertices() const {
  std::vector<VertexId> out;
  for (const Simplex& f : facets_) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Simplex> Complex::faces(std::ptrdiff_t dim) const {
  if (dim < -1) return {};
  if (dim == -1) return {Simplex{}};
  const auto k = static_cast<std::size_t>(dim + 1);
  std::vector<Simplex> out;
  std::vector<VertexId> buf(k);
  for (const Simplex& f : facets_) {
    if (f.size() < k) continue;
    // enumerate k-subsets of f by index combinations
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      for (std::size_t i = 0; i < k; ++i) buf[i] = f[idx[i]];
      out.emplace_back(buf);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == f.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Complex::contains_face(const Simplex& s) const {
  if (s.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return s.is_face_of(f); });
}

bool Complex::has_facet(const Simplex& s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::vector<std::size_t> Complex::facets_containing(const Simplex& s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (s.is_face_of(facets_[i])) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Simplex> maximal_cliques(const Graph& g) {
  std::vector<Simplex> out;
  std::vector<VertexId> clique;

  auto intersect_nbrs = [&](const std::vector<VertexId>& set, VertexId v) {
    std::vector<VertexId> r;
    const auto& nbrs = g.neighbors(v);
    std::set_intersection(set.begin(), set.end(), nbrs.begin(), nbrs.end(), std::back_inserter(r));
    return r;
  };

  auto expand = [&](auto&& self, std::vector<VertexId> p, std::vector<VertexId> x) -> void {
    if (p.empty()) {
      if (x.empty()) out.emplace_back(clique);
      return;
    }
    // pivot: smallest id in P u X
    VertexId pivot = p.front();
    if (!x.empty() && x.front() < pivot) pivot = x.front();
    std::vector<VertexId> candidates;
    const auto& pn = g.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(candidates));
    for (VertexId v : candidates) {
      clique.push_back(v);
      self(self, intersect_nbrs(p, v), intersect_nbrs(x, v));
      clique.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  };

  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  expand(expand, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

Complex clique_complex(const Graph& g) { return Complex(g.vertex_count(), maximal_cliques(g)); }

Complex skeleton(const Complex& k, std::ptrdiff_t d) {
  if (d < 0) throw InvalidArgument("skeleton dimension must be nonnegative");
  std::vector<Simplex> facets;
  bool any_large = false;
  for (const Simplex& f : k.facets()) {
    if (f.dimension() <= d) {
      facets.push_back(f);
    } else {
      any_large = true;
    }
  }
  if (any_large) {
    Complex large(k.vertex_count(), [&] {
      std::vector<Simplex> big;
      for (const Simplex& f : k.facets())
        if (f.dimension() > d) big.push_back(f);
      return big;
    }());
    auto d_faces = large.faces(d);
    facets.insert(facets.end(), d_faces.begin(), d_faces.end());
  }
  return Complex(k.vertex_count(), std::move(facets));
}

std::vector<Simplex> edge_stars_and_triangles(const Graph& g) {
  std::vector<Simplex> candidates;
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    std::vector<VertexId> star;
    for (VertexId v : g.neighbors(a)) star.push_back(static_cast<VertexId>(g.edge_index(EdgeId(a, v))));
    if (!star.empty()) candidates.emplace_back(std::move(star));
  }
  for (const auto& t : triangles(g)) {
    candidates.push_back(Simplex{static_cast<VertexId>(g.edge_index(EdgeId(t[0], t[1]))),
                                 static_cast<VertexId>(g.edge_index(EdgeId(t[0], t[2]))),
                                 static_cast<VertexId>(g.edge_index(EdgeId(t[1], t[2])))});
  }
  return candidates;
}

Complex delta_L(const Graph& g) {
  Complex direct(g.edge_count(), edge_stars_and_triangles(g));
  Complex via_line_graph = clique_complex(line_graph(g).graph);
  if (direct != via_line_graph) {
    throw std::logic_error("edge-star/triangle facets disagree with the clique complex of the line graph");
  }
  return direct;
}

Complex nerve_of_facets(const Complex& k) {
  // Any set of facets with a common vertex v lies inside the set of all
  // facets through v, so those sets generate the nerve.
  std::vector<std::vector<VertexId>> through(k.vertex_count());
  for (std::size_t i = 0; i < k.facets().size(); ++i)
    for (VertexId v : k.facets()[i]) through[v].push_back(static_cast<VertexId>(i));
  std::vector<Simplex> generators;
  for (auto& ids : through)
    if (!ids.empty()) generators.emplace_back(std::move(ids));
  return Complex(k.facets().size(), std::move(generators));
}

Complex induced_subcomplex(const Complex& k, std::span<const VertexId> vs) {
  for (VertexId v : vs) {
    if (v >= k.vertex_count()) {
      throw InvalidArgument("unknown vertex id " + std::to_string(v) + " for induced subcomplex");
    }
  }
  Simplex keep{std::vector<VertexId>(vs.begin(), vs.end())};
  std::vector<Simplex> facets;
  for (const Simplex& f : k.facets()) facets.push_back(f.intersected(keep));
  return Complex(k.vertex_count(), std::move(facets));
}

Complex cone_complex(const Complex& k) {
  const auto apex = static_cast<VertexId>(k.vertex_count());
  std::vector<Simplex> facets;
  for (const Simplex& f : k.facets()) facets.push_back(f.with(apex));
  if (facets.empty()) facets.push_back(Simplex{apex});
  return Complex(k.vertex_count() + 1, std::move(facets));
}

Complex suspension_complex(const Complex& k) {
  const auto a = static_cast<VertexId>(k.vertex_count());
  const VertexId b = a + 1;
  std::vector<Simplex> facets;
  for (const Simplex& f : k.facets()) {
    facets.push_back(f.with(a));
    facets.push_back(f.with(b));
  }
  if (facets.empty()) facets = {Simplex{a}, Simplex{b}};
  return Complex(k.vertex_count() + 2, std::move(facets));
}

Complex disjoint_union(const Complex& k1, const Complex& k2) {
  const auto shift = static_cast<VertexId>(k1.vertex_count());
  std::vector<Simplex> facets = k1.facets();
  for (const Simplex& f : k2.facets()) {
    std::vector<VertexId> moved;
    for (VertexId v : f) moved.push_back(v + shift);
    facets.emplace_back(std::move(moved));
  }
  return Complex(k1.vertex_count() + k2.vertex_count(), std::move(facets));
}

Complex wedge(const Complex& k1, const Complex& k2, VertexId v1, VertexId v2) {
  if (v1 >= k1.vertex_count() || v2 >= k2.vertex_count()) {
    throw InvalidArgument("wedge point outside the vertex universe");
  }
  std::vector<VertexId> new_id(k2.vertex_count());
  auto next = static_cast<VertexId>(k1.vertex_count());
  for (VertexId v = 0; v < k2.vertex_count(); ++v) new_id[v] = v == v2 ? v1 : next++;
  std::vector<Simplex> facets = k1.facets();
  for (const Simplex& f : k2.facets()) {
    std::vector<VertexId> moved;
    for (VertexId v : f) moved.push_back(new_id[v]);
    facets.emplace_back(std::move(moved));
  }
  return Complex(next, std::move(facets));
}

FVector f_vector(const Complex& k) {
  FVector f;
  for (std::ptrdiff_t d = 0; d <= k.dimension(); ++d) f.push_back(k.faces(d).size());
  return f;
}

std::int64_t euler_characteristic(const Complex& k) {
  std::int64_t chi = 0;
  const auto f = f_vector(k);
  for (std::size_t d = 0; d < f.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[d]);
  }
  return chi;
}

Complex simplex_complex(std::size_t n) {
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  return Complex(n, {Simplex(all)});
}

Complex simplex_boundary(std::size_t n) {
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  const Simplex full(all);
  std::vector<Simplex> facets;
  for (VertexId v : full) facets.push_back(full.without(v));
  return Complex(n, std::move(facets));
}

}  // namespace cliqueline
