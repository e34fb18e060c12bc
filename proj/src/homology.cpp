#include "cliqueline/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "cliqueline/errors.hpp"

namespace cliqueline {

BoundaryMatrix boundary_matrix(const Complex& k, std::ptrdiff_t d) {
  if (d < 0) throw InvalidArgument("boundary matrix dimension must be nonnegative");
  BoundaryMatrix m{k.faces(d - 1), k.faces(d), {}};
  m.entries = IntMatrix(m.rows.size(), m.cols.size());
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    const Simplex& s = m.cols[c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s.without(s[i]);
      auto it = std::lower_bound(m.rows.begin(), m.rows.end(), face);
      if (it == m.rows.end() || *it != face) throw std::logic_error("boundary face missing from complex");
      m.entries(static_cast<std::size_t>(it - m.rows.begin()), c) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

bool HomologyProfile::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

std::int64_t HomologyProfile::reduced_euler() const {
  std::int64_t sum = empty_complex ? -1 : 0;
  for (std::size_t d = 0; d < betti.size(); ++d) {
    sum += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(betti[d]);
  }
  return sum;
}

HomologyProfile HomologyProfile::normalized() const {
  HomologyProfile out = *this;
  out.torsion.resize(out.betti.size());
  while (!out.betti.empty() && out.betti.back() == 0 && out.torsion.back().empty()) {
    out.betti.pop_back();
    out.torsion.pop_back();
  }
  return out;
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  const auto na = a.normalized();
  const auto nb = b.normalized();
  return na.empty_complex == nb.empty_complex && na.betti == nb.betti && na.torsion == nb.torsion;
}

std::string to_string(const HomologyProfile& p) {
  if (p.empty_complex) return "(empty complex)";
  std::string out = "(";
  for (std::size_t d = 0; d < p.betti.size(); ++d) {
    if (d) out += ", ";
    out += std::to_string(p.betti[d]);
    if (d < p.torsion.size() && !p.torsion[d].empty()) {
      out += " +";
      for (auto t : p.torsion[d]) out += " Z/" + std::to_string(t);
    }
  }
  return out + ")";
}

HomologyProfile profile_from_betti(std::vector<std::size_t> betti) {
  HomologyProfile p;
  p.torsion.resize(betti.size());
  p.betti = std::move(betti);
  return p;
}

std::size_t connected_components(const Complex& k) {
  std::vector<std::size_t> parent(k.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Simplex& f : k.facets()) {
    for (std::size_t i = 1; i < f.size(); ++i) {
      auto a = find(f[0]);
      auto b = find(f[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::size_t count = 0;
  for (VertexId v : k.used_vertices())
    if (find(v) == v) ++count;
  return count;
}

HomologyProfile reduced_homology(const Complex& k) {
  HomologyProfile p;
  if (k.empty()) {
    p.empty_complex = true;
    return p;
  }
  const auto top = static_cast<std::size_t>(k.dimension());
  // rank[d] = rank of the boundary map leaving dimension d; rank[0] is the
  // augmentation, which is onto Z for a nonempty complex.
  std::vector<std::size_t> rank(top + 2, 0);
  std::vector<std::vector<std::int64_t>> torsion_of_map(top + 2);
  std::vector<std::size_t> face_count(top + 1);
  rank[0] = 1;
  face_count[0] = k.faces(0).size();
  for (std::size_t d = 1; d <= top; ++d) {
    const auto bm = boundary_matrix(k, static_cast<std::ptrdiff_t>(d));
    face_count[d] = bm.cols.size();
    const auto snf = smith_normal_form(bm.entries);
    rank[d] = snf.rank();
    for (const BigInt& f : snf.factors) {
      if (f > 1) torsion_of_map[d].push_back(f.convert_to<std::int64_t>());
    }
  }
  p.betti.resize(top + 1);
  p.torsion.resize(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    p.betti[d] = face_count[d] - rank[d] - rank[d + 1];
    p.torsion[d] = torsion_of_map[d + 1];
  }
#ifndef NDEBUG
  if (p.betti[0] != connected_components(k) - 1) {
    throw std::logic_error("rank of the 1-boundary disagrees with the component count");
  }
#endif
  return p;
}

bool wedge_profile(const HomologyProfile& p, const std::set<std::size_t>& dims) {
  if (p.empty_complex) return false;
  if (p.betti_at(0) != 0 || !p.torsion_free()) return false;
  for (std::size_t d = 0; d < p.betti.size(); ++d) {
    if (p.betti[d] != 0 && !dims.contains(d)) return false;
  }
  return true;
}

bool wedge_profile(const Complex& k, const std::set<std::size_t>& dims) {
  return wedge_profile(reduced_homology(k), dims);
}

// ---------------------------------------------------------------------------

std::string to_string(LerayStatus s) {
  switch (s) {
    case LerayStatus::Certified: return "certified";
    case LerayStatus::Refuted: return "refuted";
    case LerayStatus::Sampled: return "sampled";
    case LerayStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

namespace {

struct SubsetVerdict {
  bool fails = false;
  bool torsion_below = false;  // torsion in degree d-1
};

SubsetVerdict examine_subset(const Complex& k, const std::vector<VertexId>& subset, std::ptrdiff_t d) {
  const auto p = reduced_homology(induced_subcomplex(k, subset));
  SubsetVerdict v;
  for (std::size_t i = 0; i < p.betti.size(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) >= d && (p.betti[i] != 0 || !p.torsion[i].empty())) v.fails = true;
    if (static_cast<std::ptrdiff_t>(i) == d - 1 && !p.torsion[i].empty()) v.torsion_below = true;
  }
  if (d <= -1 && p.empty_complex) v.fails = true;
  return v;
}

bool witness_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

LerayResult leray_bound_check(const Complex& k, std::ptrdiff_t d, const LerayOptions& options) {
  const auto used = k.used_vertices();
  const std::size_t m = used.size();
  const bool exhaustive = m <= options.max_exhaustive_vertices && m < 63;
  if (!exhaustive && !options.sample_budget) {
    LerayResult r;
    r.status = LerayStatus::BudgetExhausted;
    return r;
  }

  // Exhaustive mode walks every bitmask over the used vertices; sampling mode
  // draws each vertex with probability 1/2.
  std::vector<std::vector<VertexId>> samples;
  std::size_t total = 0;
  if (exhaustive) {
    total = std::size_t{1} << m;
  } else {
    std::mt19937_64 rng(options.seed);
    samples.resize(*options.sample_budget);
    for (auto& s : samples) {
      for (VertexId v : used)
        if (rng() & 1) s.push_back(v);
    }
    total = samples.size();
  }

  auto subset_at = [&](std::size_t index) {
    if (!exhaustive) return samples[index];
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < m; ++i)
      if (index >> i & 1) s.push_back(used[i]);
    return s;
  };

  struct Partial {
    std::optional<std::vector<VertexId>> witness;
    bool torsion_below = false;
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, total));
  std::vector<Partial> partial(threads);
  auto work = [&](std::size_t t) {
    for (std::size_t i = t; i < total; i += threads) {
      auto subset = subset_at(i);
      auto verdict = examine_subset(k, subset, d);
      partial[t].torsion_below |= verdict.torsion_below;
      if (verdict.fails && (!partial[t].witness || witness_less(subset, *partial[t].witness))) {
        partial[t].witness = std::move(subset);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  LerayResult result;
  result.subsets_checked = total;
  bool torsion_below = false;
  std::optional<std::vector<VertexId>> witness;
  for (auto& part : partial) {
    torsion_below |= part.torsion_below;
    if (part.witness && (!witness || witness_less(*part.witness, *witness))) witness = part.witness;
  }
  if (witness) {
    result.status = LerayStatus::Refuted;
    result.witness = std::move(*witness);
  } else {
    result.status = exhaustive ? LerayStatus::Certified : LerayStatus::Sampled;
  }
  result.all_fields = !witness && !torsion_below;
  return result;
}

}  // namespace cliqueline
