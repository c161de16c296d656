#include "cyclocover/fermat.hpp"
#include "cyclocover/gmodule.hpp"
#include "cyclocover/group_ring.hpp"

#include "doctest.h"
#include "random.hpp"

using namespace cyclocover;
using namespace cyclocover::gmodule;

namespace {

AbelianInvariants cyclic(long d) {
  AbelianInvariants a;
  if (d == 0) a.free_rank = 1;
  else if (d > 1) a.invariant_factors.emplace_back(d);
  return a;
}

IntMatrix cyclic_shift(int d) {
  IntMatrix g(d, d);
  for (int i = 0; i < d; ++i) g(i, (i + 1) % d) = 1;
  return g;
}

}  // namespace

TEST_CASE("invariants of the basic modules") {
  for (int d = 2; d <= 6; ++d) {
    const auto reg = invariants(EquivariantModule::regular(d));
    CHECK(reg.rank() == 1);
    CHECK(reg.generators().contains(IntVector(d, 1)));
    const auto triv = EquivariantModule::trivial(d);
    CHECK(invariants(triv).rank() == 1);
    CHECK(invariants(EquivariantModule::augmentation_ideal(d)).rank() == 0);
  }
}

TEST_CASE("coinvariants of the basic modules") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(coinvariants(EquivariantModule::regular(d)).module == cyclic(0));
    CHECK(coinvariants(EquivariantModule::trivial(d)).module == cyclic(0));
    CHECK(coinvariants(EquivariantModule::augmentation_ideal(d)).module == cyclic(d));
  }
}

TEST_CASE("r maps of the basic modules") {
  for (int d = 2; d <= 8; ++d) {
    const auto r_reg = r_map(EquivariantModule::regular(d));
    CHECK(r_reg.well_defined);
    CHECK(r_reg.source() == cyclic(d));
    CHECK(r_reg.target() == cyclic(d));
    CHECK(r_reg.is_isomorphism());

    const auto r_triv = r_map(EquivariantModule::trivial(d));
    CHECK(r_triv.well_defined);
    CHECK(r_triv.source().is_trivial());
    CHECK(r_triv.target() == cyclic(d));

    const auto r_aug = r_map(EquivariantModule::augmentation_ideal(d));
    CHECK(r_aug.well_defined);
    CHECK(r_aug.target().is_trivial());
  }
}

TEST_CASE("s maps of the basic modules") {
  for (int d = 2; d <= 6; ++d) {
    const auto s_triv = s_map(EquivariantModule::trivial(d));
    CHECK(s_triv.well_defined);
    CHECK(s_triv.target().is_trivial());

    const auto s_reg = s_map(EquivariantModule::regular(d));
    CHECK(s_reg.well_defined);
    CHECK(s_reg.source() == cyclic(d));
    CHECK(s_reg.target() == cyclic(d));
    CHECK(s_reg.is_isomorphism());
  }
  for (int d : {2, 3, 5}) {
    const auto s_aug = s_map(EquivariantModule::augmentation_ideal(d));
    CHECK(s_aug.well_defined);
    CHECK(s_aug.is_surjective());
  }
  CHECK_THROWS_AS(s_map(EquivariantModule::regular(4), 2), PreconditionViolation);
  CHECK(s_map(EquivariantModule::regular(5), 2).is_isomorphism());
}

TEST_CASE("construction rejects bad actions") {
  const auto full = Submodule::full(3);
  IntMatrix not_order_three{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK_NOTHROW(EquivariantModule(full, Submodule(3), not_order_three, 2));
  CHECK_THROWS_AS(EquivariantModule(full, Submodule(3), not_order_three, 3), PreconditionViolation);
  const auto line = Submodule::span(3, IntMatrix{{1, 0, 0}});
  CHECK_THROWS_AS(EquivariantModule(line, Submodule(3), cyclic_shift(3), 3), PreconditionViolation);
}

TEST_CASE("invariant rank plus image rank is the module rank") {
  for (int d = 2; d <= 5; ++d)
    for (const auto& m : {EquivariantModule::regular(d), EquivariantModule::augmentation_ideal(d),
                          EquivariantModule::trivial(d)}) {
      REQUIRE(m.torsion_free());
      const auto& g = m.action_coords();
      const auto moved = image(g - IntMatrix::identity(g.rows()));
      CHECK(invariants(m).rank() + moved.rank() == m.rank());
    }
}

TEST_CASE("orbit sum is invariant under translation") {
  std::mt19937 rng(31);
  for (int d = 2; d <= 6; ++d) {
    const auto m = EquivariantModule::regular(d);
    const auto& g = m.action();
    IntMatrix norm(d, d);
    IntMatrix gk = IntMatrix::identity(d);
    for (int k = 0; k < d; ++k) {
      norm = norm + gk;
      gk = gk * g;
    }
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = testing::random_vector(rng, d);
      const auto hx = x * power(g, static_cast<unsigned>(trial % d));
      CHECK((hx * norm) == (x * norm));
    }
  }
}

TEST_CASE("pham module middle coinvariants feed the diagram corner") {
  // Coinvariants of H_P(Z) computed as a module agree with the diagram's
  // bottom-left corner used by the main verification.
  for (auto c : {fermat::FermatCase{2, 3}, fermat::FermatCase{3, 2}}) {
    fermat::Workspace ws(c.d);
    const auto pair = fermat::primitive_pair(c, ws);
    const std::size_t k = pair.homology.free_rank();
    const EquivariantModule hp(Submodule::full(k), Submodule(k), pair.homology_action, c.d);
    const auto cov = coinvariants(hp).module;
    const auto diagram = fermat::build_diagram(c, ws);
    CHECK(cov == diagram.bottom_cov.source.invariants());
  }
}
