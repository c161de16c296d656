#include "cyclocover/gmodule.hpp"

#include <numeric>

namespace cyclocover::gmodule {

namespace {

IntMatrix cyclic_permutation(int d) {
  IntMatrix p(d, d);
  for (int i = 0; i < d; ++i) p(i, (i + 1) % d) = 1;
  return p;
}

IntMatrix minus_identity(const IntMatrix& g) { return g - IntMatrix::identity(g.rows()); }

}  // namespace

EquivariantModule::EquivariantModule(Submodule generators, Submodule relations, IntMatrix action,
                                     int order)
    : generators_(std::move(generators)),
      relations_(std::move(relations)),
      action_(std::move(action)),
      order_(order) {
  const std::size_t n = generators_.ambient_rank();
  if (order_ < 1) throw PreconditionViolation("EquivariantModule: order must be positive");
  if (relations_.ambient_rank() != n || action_.rows() != n || action_.cols() != n)
    throw DimensionMismatch("EquivariantModule: ambient ranks differ");
  if (!power(action_, static_cast<unsigned>(order_)).is_identity())
    throw PreconditionViolation("EquivariantModule: g^d != 1");
  if (!generators_.contains(relations_))
    throw PreconditionViolation("EquivariantModule: relations not contained in generators");
  const IntMatrix ga = generators_.basis() * action_;
  if (!generators_.contains(Submodule::span(n, ga)))
    throw PreconditionViolation("EquivariantModule: generators not g-stable");
  if (!relations_.contains(map_submodule(relations_, action_)))
    throw PreconditionViolation("EquivariantModule: relations not g-stable");

  const std::size_t k = generators_.rank();
  relation_coords_ = Submodule::span(k, generators_.coordinates_of_rows(relations_.basis()));
  action_coords_ = k == 0 ? IntMatrix(0, 0) : generators_.coordinates_of_rows(ga);
}

EquivariantModule EquivariantModule::regular(int d) {
  return EquivariantModule(Submodule::full(d), Submodule(d), cyclic_permutation(d), d);
}

EquivariantModule EquivariantModule::trivial(int d) {
  return EquivariantModule(Submodule::full(1), Submodule(1), IntMatrix::identity(1), d);
}

EquivariantModule EquivariantModule::augmentation_ideal(int d) {
  IntMatrix gens(d - 1, d);
  for (int i = 0; i + 1 < d; ++i) {
    gens(i, i) = 1;
    gens(i, i + 1) = -1;
  }
  return EquivariantModule(Submodule::span(d, gens), Submodule(d), cyclic_permutation(d), d);
}

bool EquivariantModule::torsion_free() const {
  return as_group().invariants().invariant_factors.empty();
}

Submodule invariant_lattice(const EquivariantModule& m) {
  if (m.coordinate_rank() == 0) return Submodule(0);
  return preimage(minus_identity(m.action_coords()), m.relation_coords());
}

EquivariantModule invariants(const EquivariantModule& m) {
  const Submodule k = invariant_lattice(m);
  const std::size_t n = m.ambient_rank();
  Submodule ambient = k.is_zero() ? Submodule(n) : Submodule::span(n, k.basis() * m.generators().basis());
  return EquivariantModule(std::move(ambient), m.relations(), m.action(), m.order());
}

Coinvariants coinvariants(const EquivariantModule& m) {
  const std::size_t k = m.coordinate_rank();
  Submodule rel = m.relation_coords();
  if (k > 0) rel = sum(rel, image(minus_identity(m.action_coords())));
  QuotientGroup target(k, rel);
  Coinvariants out;
  out.module = target.invariants();
  out.projection.hom = GroupHom{m.as_group(), target, IntMatrix::identity(k)};
  out.projection.well_defined = out.projection.hom.well_defined();
  return out;
}

InducedMap r_map(const EquivariantModule& m) {
  const std::size_t k = m.coordinate_rank();
  const IntMatrix& g = m.action_coords();
  const Submodule inv = invariant_lattice(m);
  const std::size_t r = inv.rank();

  Submodule source_rel = inv;
  if (k > 0) source_rel = sum(source_rel, image(minus_identity(g)));

  IntMatrix target_gens = r == 0 ? IntMatrix(0, 0) : inv.coordinates_of_rows(m.relation_coords().basis());
  if (r > 0) {
    const IntMatrix dI = Integer(m.order()) * IntMatrix::identity(r);
    target_gens = target_gens.rows() == 0 ? dI : target_gens.stack(dI);
  }
  QuotientGroup target(r, Submodule::span(r, target_gens));

  IntMatrix norm(k, k);
  IntMatrix gj = IntMatrix::identity(k);
  for (int j = 0; j < m.order(); ++j) {
    norm = norm + gj;
    gj = gj * g;
  }
  IntMatrix matrix = (k == 0 || r == 0) ? IntMatrix(k, r) : inv.coordinates_of_rows(norm);

  InducedMap out;
  out.hom = GroupHom{QuotientGroup(k, source_rel), target, std::move(matrix)};
  out.well_defined = out.hom.well_defined();
  return out;
}

InducedMap s_map(const EquivariantModule& m, int generator_power) {
  const int d = m.order();
  if (std::gcd(((generator_power % d) + d) % d, d) != 1)
    throw PreconditionViolation("s_map: power must be coprime to the order");
  const std::size_t k = m.coordinate_rank();
  InducedMap out;
  if (k == 0) {
    out.hom = GroupHom{QuotientGroup::free(0), QuotientGroup::free(0), IntMatrix(0, 0)};
    out.well_defined = true;
    return out;
  }
  const IntMatrix gm = minus_identity(m.action_coords());
  const Submodule base = sum(m.relation_coords(), image(gm));
  const Submodule source_rel = sum(base, scale(Submodule::full(k), Integer(d)));

  // I M inside M, in coordinates of its own basis.
  const std::size_t r = base.rank();
  Submodule target_rel(r);
  IntMatrix matrix(k, r);
  if (r > 0) {
    IntMatrix rel = base.coordinates_of_rows(m.relation_coords().is_zero()
                                                  ? IntMatrix(0, k)
                                                  : m.relation_coords().basis());
    IntMatrix moved = base.coordinates_of_rows(base.basis() * gm);
    target_rel = Submodule::span(r, rel.rows() == 0 ? moved : rel.stack(moved));
    const unsigned c = static_cast<unsigned>(((generator_power % d) + d) % d);
    matrix = base.coordinates_of_rows(minus_identity(power(m.action_coords(), c)));
  }
  out.hom = GroupHom{QuotientGroup(k, source_rel), QuotientGroup(r, target_rel), std::move(matrix)};
  out.well_defined = out.hom.well_defined();
  return out;
}

}  // namespace cyclocover::gmodule
