#pragma once

// Lattices with (anti)symmetric forms, Picard-Lefschetz and Pham transformations,
// quadratic refinements, mod-p reductions and reflection group enumeration.

#include "cyclocover/group_ring.hpp"
#include "cyclocover/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclocover::lattice {

enum class Parity { symmetric, antisymmetric };

struct LatticeWithForm {
  IntMatrix gram;
  Parity parity = Parity::symmetric;
  std::vector<IntVector> vanishing;

  std::size_t rank() const { return gram.rows(); }
  Integer pair(std::span<const Integer> a, std::span<const Integer> b) const;
  // Throws PreconditionViolation when the Gram matrix does not match the parity.
  void validate() const;
};

// Cartan matrix of "A<k>" (k >= 1), "E6" or "E7", Bourbaki numbering.
IntMatrix cartan_matrix(std::string_view name);
// Gram = sign * Cartan, simple roots as the standard basis and as vanishing vectors.
LatticeWithForm root_lattice(std::string_view name, int sign = 1);
// All roots, as the orbit of the simple roots under the simple reflections.
std::vector<IntVector> roots(const LatticeWithForm& root_lattice);
// Dual lattice modulo lattice.
AbelianInvariants discriminant_group(const LatticeWithForm& l);

// T G T^t == G
bool preserves_form(const IntMatrix& t, const IntMatrix& gram);
// Smallest k in 1..max_order with t^k = 1.
std::optional<unsigned> matrix_order(const IntMatrix& t, unsigned max_order);

// a -> a + (-1)^{n(n+1)/2} (a . delta) delta on a lattice of middle dimension n - 1.
// For odd n = 2m + 1 requires delta . delta = (-1)^m 2.
IntMatrix pl_transvection(const LatticeWithForm& l, std::span<const Integer> delta, int n);

// A Z mu_d lattice carrying the variation (Seifert) pairing P; the
// intersection form is Q = P + (-1)^n P^t and the hermitian form is
// <a, b> = sum_k Q(a, g^k b) y^k.
struct HermitianModule {
  int d = 2;
  int n = 0;
  IntMatrix action;     // g on row vectors
  IntMatrix variation;  // P

  std::size_t rank() const { return action.rows(); }
  IntMatrix intersection_form() const;
  Integer variation_pair(std::span<const Integer> a, std::span<const Integer> b) const;
  group_ring::GroupRingElement hermitian(std::span<const Integer> a, std::span<const Integer> b) const;
  // Hermitian Gram matrix of the given vectors, entries in R_d.
  std::vector<std::vector<group_ring::GroupRingElement>> hermitian_gram(const std::vector<IntVector>& vectors) const;
  // g^d = 1, g preserves P, and conj<a, b> = (-1)^n <b, a> on the basis.
  void validate() const;
};

// A_{d-1} model: basis g^k delta (0 <= k <= d-2), with
// P(g^i delta, g^j delta) = -s, s, 0 for j - i = 0, 1, other mod d, where
// s = (-1)^{(n+1)(n+2)/2}. Then Q = -s Cartan(A_{d-1}).
HermitianModule standard_model(int d, int n);

// a -> a + s sum_k P(a, g^k delta) g^k delta, the Z-matrix of the Pham
// transformation; it commutes with g and preserves Q.
IntMatrix pham_reflection(const HermitianModule& h, std::span<const Integer> delta);

struct QuadraticRefinement {
  bool integral = false;  // odd n: q = x.x / 2 over Z; even n: F_2-valued
  bool feasible = false;
  std::vector<Integer> values;    // q on each vanishing vector
  Integer expected;               // (-1)^{(n-1)(n-2)/2} for odd n, 1 for even n
  std::vector<int> basis_values;  // even n: q(e_i) in F_2
  bool pass = false;
};

QuadraticRefinement quadratic_refinement(const LatticeWithForm& l, int n);

struct ModPQuotient {
  int p = 2;
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t quotient_dim = 0;
  IntMatrix radical;        // rows, reduced mod p
  IntMatrix complement;     // rows lifting a basis of the quotient
  IntMatrix quotient_gram;  // entries in [0, p)
  IntMatrix projection;     // dim x quotient_dim, x -> x * projection mod p
  bool nondegenerate = false;
  bool alternating = false;
};

ModPQuotient mod_p_quotient(const LatticeWithForm& l, int p);

inline constexpr std::size_t kDefaultEnumerationCap = 4'000'000;

class EnumerationCapExceeded : public Error {
 public:
  explicit EnumerationCapExceeded(std::size_t cap);
};

struct WeylImage {
  Integer group_order;
  Integer image_order;
  bool faithful = false;
};

// Order of the Weyl group (orbit of a regular weight) and of its image on
// the mod-p quotient (closure of the induced reflection matrices).
WeylImage weyl_image_order(const LatticeWithForm& root_lattice, int p,
                           std::size_t cap = kDefaultEnumerationCap);
// |W| as a product of the degrees of the basic invariants.
Integer weyl_order_from_degrees(std::string_view name);
// Simple reflection s_i in root coordinates.
IntMatrix simple_reflection(const IntMatrix& cartan, std::size_t i);

}  // namespace cyclocover::lattice
