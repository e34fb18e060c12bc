#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cliqueline/complex.hpp"
#include "cliqueline/errors.hpp"
#include "cliqueline/generators.hpp"
#include "cliqueline/homology.hpp"
#include "cliqueline/smith.hpp"
#include "oracles.hpp"

using namespace cliqueline;

namespace {

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? BigInt(1) : sign * m[n - 1][n - 1];
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
// d_k = D_k / D_{k-1}.
std::vector<BigInt> factors_from_minors(const IntMatrix& a) {
  std::vector<BigInt> out;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    BigInt g = 0;
    for (const auto& rows : subsets(a.rows(), k)) {
      for (const auto& cols : subsets(a.cols(), k)) {
        std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rows[i], cols[j]);
        g = boost::multiprecision::gcd(g, abs(determinant(m)));
      }
    }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

HomologyProfile profile(std::vector<std::size_t> betti, std::vector<std::vector<std::int64_t>> torsion) {
  HomologyProfile p;
  p.betti = std::move(betti);
  p.torsion = std::move(torsion);
  return p;
}

// Six-vertex triangulation of the real projective plane.
Complex projective_plane() {
  return Complex(6, {Simplex{0, 1, 2}, Simplex{0, 2, 3}, Simplex{0, 3, 4}, Simplex{0, 4, 5}, Simplex{0, 1, 5},
                     Simplex{1, 2, 4}, Simplex{2, 3, 5}, Simplex{1, 3, 4}, Simplex{1, 3, 5}, Simplex{2, 4, 5}});
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix(3, 4)).rank() == 0);
  CHECK(smith_normal_form(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).factors == std::vector<BigInt>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).factors == std::vector<BigInt>{1, 6});
  CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).factors == std::vector<BigInt>{2, 6, 12});
  CHECK(smith_normal_form(IntMatrix()).rank() == 0);
}

TEST_CASE("Smith normal form matches determinantal divisors") {
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, r, c, 6);
    const auto snf = smith_normal_form(m);
    REQUIRE(snf.factors == factors_from_minors(m));
    for (std::size_t k = 1; k < snf.factors.size(); ++k) REQUIRE(snf.factors[k] % snf.factors[k - 1] == 0);
  }
}

TEST_CASE("Smith normal form is invariant under unimodular changes of basis") {
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = 2 + rng() % 4;
    const std::size_t c = 2 + rng() % 4;
    const IntMatrix m = random_matrix(rng, r, c, 4);
    auto elementary = [&](std::size_t n) {
      IntMatrix e(n, n);
      for (std::size_t d = 0; d < n; ++d) e(d, d) = 1;
      for (int step = 0; step < 3; ++step) {
        const std::size_t a = rng() % n, b = rng() % n;
        if (a == b) continue;
        IntMatrix add(n, n);
        for (std::size_t d = 0; d < n; ++d) add(d, d) = 1;
        add(a, b) = static_cast<std::int64_t>(rng() % 5) - 2;
        e = multiply(e, add);
      }
      return e;
    };
    const IntMatrix changed = multiply(multiply(elementary(r), m), elementary(c));
    REQUIRE(smith_normal_form(changed).factors == smith_normal_form(m).factors);
  }
}

TEST_CASE("overflowing entries fall back to exact arithmetic") {
  const std::int64_t big = std::int64_t{1} << 62;
  const IntMatrix m{{3, big + 1}, {big - 1, 5}};
  const auto snf = smith_normal_form(m);
  CHECK(snf.used_bignum);
  CHECK(snf.factors == factors_from_minors(m));
  CHECK(smith_normal_form_exact(m).factors == snf.factors);
  CHECK_FALSE(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).used_bignum);
  CHECK_THROWS_AS(multiply(IntMatrix{{big}}, IntMatrix{{4}}), std::overflow_error);
}

TEST_CASE("boundary matrices") {
  const auto d1 = boundary_matrix(Complex(2, {Simplex{0, 1}}), 1);
  CHECK(d1.entries == IntMatrix{{-1}, {1}});
  const auto d2 = boundary_matrix(simplex_complex(3), 2);
  CHECK(d2.entries == IntMatrix{{1}, {-1}, {1}});
  const auto d0 = boundary_matrix(simplex_complex(3), 0);
  CHECK(d0.rows == std::vector<Simplex>{Simplex{}});
  CHECK(d0.entries == IntMatrix{{1, 1, 1}});
  CHECK_THROWS_AS(boundary_matrix(simplex_complex(3), -1), InvalidArgument);
}

TEST_CASE("consecutive boundary maps compose to zero") {
  auto check = [](const Complex& k) {
    for (std::ptrdiff_t d = 1; d <= k.dimension(); ++d) {
      REQUIRE(multiply(boundary_matrix(k, d - 1).entries, boundary_matrix(k, d).entries).is_zero());
    }
  };
  check(simplex_boundary(4));
  check(simplex_complex(6));
  check(delta_L(complete(6)));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) check(random_complex(rng, 8, 8));
}

TEST_CASE("reduced homology of standard complexes") {
  CHECK(reduced_homology(Complex()).empty_complex);
  CHECK(reduced_homology(simplex_complex(1)) == profile_from_betti({}));
  CHECK(reduced_homology(simplex_complex(5)) == profile_from_betti({0}));
  CHECK(reduced_homology(simplex_boundary(4)) == profile_from_betti({0, 0, 1}));
  CHECK(reduced_homology(simplex_boundary(6)) == profile_from_betti({0, 0, 0, 0, 1}));
  CHECK(reduced_homology(Complex(3, {Simplex{0}, Simplex{1}, Simplex{2}})) == profile_from_betti({2}));
  CHECK(reduced_homology(projective_plane()) == profile({0, 0, 0}, {{}, {2}, {}}));
  CHECK_FALSE(reduced_homology(projective_plane()).torsion_free());
}

TEST_CASE("homology of line-graph complexes") {
  CHECK(reduced_homology(delta_L(complete(4))) == profile_from_betti({0, 0, 1}));
  CHECK(reduced_homology(delta_L(complete_multipartite({3, 3}))) == profile_from_betti({0, 4}));
  CHECK(reduced_homology(delta_L(complete_multipartite({2, 2, 2}))) == profile_from_betti({0, 0, 1}));
  CHECK(reduced_homology(delta_L(complete(4))).torsion_free());
}

TEST_CASE("free ranks agree with rank computations modulo a prime") {
  Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    const Complex k = random_complex(rng, 8, 8);
    const auto p = reduced_homology(k).normalized();
    REQUIRE(p.betti == oracle::betti_mod(k));
  }
  for (const Graph& g : {complete(6), petersen(), wheel(6), complete_multipartite({2, 2, 3})}) {
    REQUIRE(reduced_homology(delta_L(g)).normalized().betti == oracle::betti_mod(delta_L(g)));
  }
  // Z/2 torsion shows up as a drop in rank modulo 2.
  CHECK(oracle::betti_mod(projective_plane(), 2) == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("Euler-Poincare identity") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const Complex k = random_complex(rng, 8, 8);
    REQUIRE(reduced_homology(k).reduced_euler() == euler_characteristic(k) - 1);
  }
  CHECK(reduced_homology(Complex()).reduced_euler() == -1);
}

TEST_CASE("degree zero matches component counts") {
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const Complex k = random_complex(rng, 8, 8);
    REQUIRE(reduced_homology(k).betti_at(0) + 1 == connected_components(k));
  }
}

TEST_CASE("suspension shifts homology up one degree") {
  Rng rng(31);
  auto shifted = [](HomologyProfile p) {
    p.betti.insert(p.betti.begin(), 0);
    p.torsion.insert(p.torsion.begin(), std::vector<std::int64_t>{});
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    const Complex k = random_complex(rng, 7, 7);
    REQUIRE(reduced_homology(suspension_complex(k)) == shifted(reduced_homology(k)));
  }
  CHECK(reduced_homology(suspension_complex(projective_plane())) == profile({0, 0, 0, 0}, {{}, {}, {2}, {}}));
  CHECK(reduced_homology(suspension_complex(Complex())) == profile_from_betti({1}));
}

TEST_CASE("disjoint unions and wedges add homology") {
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const Complex a = random_complex(rng, 6, 6);
    const Complex b = random_complex(rng, 6, 6);
    const auto pa = reduced_homology(a), pb = reduced_homology(b);
    const auto pu = reduced_homology(disjoint_union(a, b));
    const auto pw = reduced_homology(wedge(a, b, a.used_vertices().front(), b.used_vertices().front()));
    const std::size_t top = std::max(pa.betti.size(), pb.betti.size());
    REQUIRE(pu.betti_at(0) == pa.betti_at(0) + pb.betti_at(0) + 1);
    REQUIRE(pw.betti_at(0) == pa.betti_at(0) + pb.betti_at(0));
    for (std::size_t d = 1; d < top + 1; ++d) {
      REQUIRE(pu.betti_at(d) == pa.betti_at(d) + pb.betti_at(d));
      REQUIRE(pw.betti_at(d) == pa.betti_at(d) + pb.betti_at(d));
    }
  }
}

TEST_CASE("wedge-of-spheres profiles") {
  CHECK(wedge_profile(delta_L(cycle(6)), {1}));
  CHECK_FALSE(wedge_profile(simplex_boundary(4), {1}));
  CHECK(wedge_profile(simplex_boundary(4), {2}));
  CHECK_FALSE(wedge_profile(Complex(), {0, 1, 2}));
  CHECK_FALSE(wedge_profile(projective_plane(), {1, 2}));
  CHECK_FALSE(wedge_profile(Complex(2, {Simplex{0}, Simplex{1}}), {1}));
}

TEST_CASE("Leray checks") {
  const auto k5 = leray_bound_check(delta_L(complete(5)), 3);
  CHECK(k5.status == LerayStatus::Certified);
  CHECK(k5.subsets_checked == 1024);
  CHECK(k5.all_fields);

  const auto sphere = leray_bound_check(simplex_boundary(4), 2);
  CHECK(sphere.status == LerayStatus::Refuted);
  CHECK(sphere.witness == std::vector<VertexId>{0, 1, 2, 3});

  CHECK(leray_bound_check(simplex_complex(1), 1).holds());
  CHECK(leray_bound_check(delta_L(complete(5)), 2).status == LerayStatus::Refuted);

  // Torsion in degree 1 blocks the all-fields claim for d = 2.
  const auto rp2 = leray_bound_check(projective_plane(), 2);
  CHECK(rp2.status == LerayStatus::Certified);
  CHECK_FALSE(rp2.all_fields);

  const Complex large = delta_L(complete(6));
  CHECK(leray_bound_check(large, 3).status == LerayStatus::BudgetExhausted);
  LerayOptions sampled;
  sampled.sample_budget = 200;
  sampled.seed = 1;
  CHECK(leray_bound_check(large, 3, sampled).status == LerayStatus::Sampled);
}

TEST_CASE("Leray witnesses do not depend on the worker count") {
  LerayOptions one, four;
  four.threads = 4;
  const Complex k = delta_L(wheel(4));
  const auto a = leray_bound_check(k, 2, one);
  const auto b = leray_bound_check(k, 2, four);
  CHECK(a.status == b.status);
  CHECK(a.witness == b.witness);
}
