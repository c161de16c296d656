#pragma once

// Z mu_d-modules presented as subquotients A / B of a free Z-module, with the
// generator g of mu_d acting by an integer matrix (on the right of row vectors).

#include "cyclocover/linalg.hpp"

namespace cyclocover::gmodule {

class EquivariantModule {
 public:
  // Verifies g^d = 1 on the ambient module, B <= A, g(A) <= A and g(B) <= B.
  EquivariantModule(Submodule generators, Submodule relations, IntMatrix action, int order);

  // Z mu_d acting on itself, basis 1, g, ..., g^{d-1}.
  static EquivariantModule regular(int d);
  // Z with trivial action.
  static EquivariantModule trivial(int d);
  // The augmentation ideal I_d inside Z mu_d.
  static EquivariantModule augmentation_ideal(int d);

  std::size_t ambient_rank() const { return generators_.ambient_rank(); }
  const Submodule& generators() const { return generators_; }
  const Submodule& relations() const { return relations_; }
  const IntMatrix& action() const { return action_; }
  int order() const { return order_; }

  // Rank of A / B.
  std::size_t rank() const { return generators_.rank() - relations_.rank(); }
  bool torsion_free() const;

  // Coordinates relative to the Hermite basis of A: the module is
  // Z^k / relation_coords() with g acting by action_coords().
  std::size_t coordinate_rank() const { return generators_.rank(); }
  const Submodule& relation_coords() const { return relation_coords_; }
  const IntMatrix& action_coords() const { return action_coords_; }
  QuotientGroup as_group() const { return QuotientGroup(coordinate_rank(), relation_coords_); }

 private:
  Submodule generators_;
  Submodule relations_;
  IntMatrix action_;
  int order_;
  Submodule relation_coords_;
  IntMatrix action_coords_;
};

// A homomorphism between presented groups together with its
// well-definedness certificate.
struct InducedMap {
  GroupHom hom;
  bool well_defined = false;

  AbelianInvariants source() const { return hom.source.invariants(); }
  AbelianInvariants target() const { return hom.target.invariants(); }
  bool is_surjective() const { return hom.is_surjective(); }
  bool is_injective() const { return hom.is_injective(); }
  bool is_isomorphism() const { return is_surjective() && is_injective(); }
};

// M^G, the kernel of g - 1 on M.
EquivariantModule invariants(const EquivariantModule& m);

struct Coinvariants {
  AbelianInvariants module;
  InducedMap projection;  // M -> M_G
};

// M_G = M / (g - 1) M.
Coinvariants coinvariants(const EquivariantModule& m);

// r_M : (M / M^G)_G -> Z/d (x) M^G induced by m -> sum_g g m.
InducedMap r_map(const EquivariantModule& m);

// s_M : G_ab (x) M_G -> (IM)_G, [m] -> class of (g_0 - 1) m, with G_ab
// identified with Z/d through g_0 = g^generator_power.
InducedMap s_map(const EquivariantModule& m, int generator_power = 1);

// Lattice of (coordinate) vectors x with x (g - 1) in the relations.
Submodule invariant_lattice(const EquivariantModule& m);

}  // namespace cyclocover::gmodule
