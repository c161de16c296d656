#include "cyclocover/lattice.hpp"
#include "cyclocover/linalg.hpp"

#include "doctest.h"
#include "random.hpp"

using namespace cyclocover;

namespace {

AbelianInvariants inv(std::initializer_list<long> factors, std::size_t free_rank = 0) {
  AbelianInvariants a;
  for (long f : factors) a.invariant_factors.emplace_back(f);
  a.free_rank = free_rank;
  return a;
}

bool is_diagonal_chain(const IntMatrix& d) {
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (r != c && d(r, c) != 0) return false;
      if (r != c) continue;
      const Integer& x = d(r, c);
      if (x < 0) return false;
      if (x == 0) {
        zero_seen = true;
        continue;
      }
      if (zero_seen || x % prev != 0) return false;
      prev = x;
    }
  return true;
}

}  // namespace

TEST_CASE("smith form of small matrices") {
  const auto id = snf(IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));
  CHECK(smith_invariants(IntMatrix{{2, 4}, {6, 8}}) == IntVector{2, 4});
  CHECK(cokernel_invariants(IntMatrix{{2, 4}, {6, 8}}) == inv({2, 4}));
  const auto e6 = lattice::cartan_matrix("E6");
  CHECK(smith_invariants(e6) == IntVector{1, 1, 1, 1, 1, 3});
}

TEST_CASE("kernel basis oracles") {
  CHECK(kernel_basis(IntMatrix(2, 2)) == Submodule::full(2));
  CHECK(kernel_basis(IntMatrix::identity(2)).is_zero());
  const auto k = kernel_basis(IntMatrix{{1, 1}, {1, 1}});
  CHECK(k.rank() == 1);
  CHECK(k.contains(IntVector{1, -1}));
}

TEST_CASE("cokernel oracles") {
  CHECK(cokernel_invariants(IntMatrix::identity(4)).is_trivial());
  CHECK(cokernel_invariants(IntMatrix{{7}}) == inv({7}));
  CHECK(cokernel_invariants(IntMatrix(0, 3)) == inv({}, 3));
  CHECK(cokernel_invariants(IntMatrix(3, 0)).is_trivial());
}

TEST_CASE("intersection and sum oracles") {
  const auto a = Submodule::span(2, IntMatrix{{1, 0}});
  const auto b = Submodule::span(2, IntMatrix{{0, 1}});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, b).is_zero());
  CHECK(sum(a, Submodule(2)) == a);
  CHECK(sum(a, b) == Submodule::full(2));
  CHECK(solve(IntMatrix::identity(3), IntVector{4, -1, 2}) == IntVector{4, -1, 2});
  CHECK(mod_p_rank(lattice::cartan_matrix("E6"), 3) == 5);
}

TEST_CASE("hermite basis is canonical") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = testing::random_matrix(rng, 4, 6);
    const auto u = testing::random_unimodular(rng, 4);
    const auto h1 = hermite(m);
    const auto h2 = hermite(u * m);
    CHECK(h1.basis == h2.basis);
    for (std::size_t i = 0; i < h1.pivots.size(); ++i) {
      const auto p = h1.pivots[i];
      CHECK(h1.basis(i, p) > 0);
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(h1.basis(j, p) >= 0);
        CHECK(h1.basis(j, p) < h1.basis(i, p));
      }
    }
  }
}

TEST_CASE("hermite transform reproduces the basis") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_matrix(rng, 5, 4);
    const auto h = hermite(m, true);
    const auto prod = h.transform * m;
    CHECK(prod.select_rows(0, h.rank()) == h.basis);
    CHECK(prod.select_rows(h.rank(), m.rows() - h.rank()).is_zero());
    CHECK(abs(determinant(h.transform)) == 1);
  }
}

TEST_CASE("smith form certificate U M V = D") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    const auto m = testing::random_matrix(rng, dim(rng), dim(rng), 9);
    const auto s = snf(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_diagonal_chain(s.D));
    if (m.rows() > 0) CHECK(abs(determinant(s.U)) == 1);
    if (m.cols() > 0) CHECK(abs(determinant(s.V)) == 1);
  }
}

TEST_CASE("cokernel invariants are unimodular invariants") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testing::random_matrix(rng, 4, 5, 6);
    const auto u = testing::random_unimodular(rng, 4);
    const auto v = testing::random_unimodular(rng, 5);
    CHECK(cokernel_invariants(u * m * v) == cokernel_invariants(m));
  }
}

TEST_CASE("modular law for submodules") {
  std::mt19937 rng(15);
  std::uniform_int_distribution<std::size_t> amb(2, 8), gens(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = amb(rng);
    const auto b = Submodule::span(n, testing::random_matrix(rng, gens(rng), n, 3));
    const auto c = Submodule::span(n, testing::random_matrix(rng, gens(rng), n, 3));
    const auto a = sum(b, Submodule::span(n, testing::random_matrix(rng, gens(rng), n, 3)));
    // B <= A implies A cap (B + C) = B + (A cap C).
    REQUIRE(a.contains(b));
    CHECK(intersect(a, sum(b, c)) == sum(b, intersect(a, c)));
  }
}

TEST_CASE("kernel basis is saturated") {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testing::random_matrix(rng, 6, 3, 4);
    const auto k = kernel_basis(m);
    CHECK(saturation(k) == k);
    for (std::size_t r = 0; r < k.rank(); ++r) {
      const auto x = k.basis().row_vector(r);
      IntVector scaled = x;
      for (auto& e : scaled) e *= 7;
      CHECK(k.contains(scaled));
      CHECK((x * m) == IntVector(3));
    }
  }
}

TEST_CASE("solve and preimage agree") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testing::random_matrix(rng, 4, 4, 3);
    const auto x = testing::random_vector(rng, 4);
    const auto b = x * m;
    const auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK((*y * m) == b);
  }
}

TEST_CASE("modular kernel and cokernel") {
  const IntMatrix m{{2, 0}, {0, 3}};
  CHECK(modular_kernel_invariants(m, 6) == inv({6}));
  CHECK(modular_cokernel_invariants(m, 6) == inv({6}));
  CHECK(modular_kernel_invariants(IntMatrix::identity(3), 5).is_trivial());
}

TEST_CASE("group homomorphism bookkeeping") {
  // Z/4 -> Z/2, 1 -> 1
  GroupHom f{QuotientGroup::modular(1, 4), QuotientGroup::modular(1, 2), IntMatrix{{1}}};
  CHECK(f.well_defined());
  CHECK(f.is_surjective());
  CHECK_FALSE(f.is_injective());
  CHECK(f.kernel() == inv({2}));
  // Z/2 -> Z/4, 1 -> 2
  GroupHom g{QuotientGroup::modular(1, 2), QuotientGroup::modular(1, 4), IntMatrix{{2}}};
  CHECK(g.well_defined());
  CHECK(g.is_injective());
  CHECK(g.cokernel() == inv({2}));
  GroupHom bad{QuotientGroup::modular(1, 2), QuotientGroup::modular(1, 4), IntMatrix{{1}}};
  CHECK_FALSE(bad.well_defined());
  const auto gf = compose(f, g);
  CHECK(gf.kernel() == inv({2}));
}

TEST_CASE("subquotient coordinates") {
  const auto num = Submodule::full(3);
  const auto den = Submodule::span(3, IntMatrix{{1, 1, 0}});
  const SubQuotient q(num, den);
  CHECK(q.is_free());
  CHECK(q.free_rank() == 2);
  const IntVector v{1, 1, 0};
  CHECK(q.project(v) == IntVector(2));
  const SubQuotient t(num, Submodule::span(3, IntMatrix{{2, 0, 0}}));
  CHECK(t.invariants() == inv({2}, 2));
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(IntMatrix(2, 2) * IntMatrix(3, 1), DimensionMismatch);
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2}}), PreconditionViolation);
}
