#pragma once

// Group-ring models for the primitive (co)homology of Fermat hypersurfaces and
// their cyclic covers, and the checks built on them.
//
// For a fixed degree d and level w >= -1 the following lattices are used:
//
//   T(w) = R^{(w+1)} phi_w                          reduced homology of the Milnor fibre
//   J(w) = R^{(w)} phi_{w-1} cap R^{(w)} (1 - y_{w-1})   primitive cohomology in dim w-1
//   D(w) = J(w) u_w                                  mu_d-invariants of T(w)
//
// so that H_P in dimension w is T(w) / D(w) and H^P is J(w + 1). Level -1 is
// Z (phi_{-1} = 1) and J(0) = 0 because 1 - y_{-1} = 0.

#include "cyclocover/gmodule.hpp"
#include "cyclocover/group_ring.hpp"
#include "cyclocover/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyclocover::fermat {

inline constexpr std::size_t kDefaultCap = 1024;

class CapExceeded : public Error {
 public:
  CapExceeded(int n, int d, std::size_t ambient, std::size_t cap);
  int n;
  int d;
  std::size_t ambient;
  std::size_t cap;
};

struct FermatCase {
  int n = 1;  // Z' is a hypersurface in P^n
  int d = 2;  // degree

  // d^{n+1}
  std::size_t ambient_rank() const;
  // Throws PreconditionViolation on n < 1 or d < 2 and CapExceeded above the cap.
  void validate(std::size_t cap = kDefaultCap) const;
  std::string name() const;

  friend auto operator<=>(const FermatCase&, const FermatCase&) = default;
};

// ---------------------------------------------------------------------------
// Ranks p_n(d)

// (d-1)((d-1)^{n+1} + (-1)^n) / d, n >= -1.
Integer primitive_rank(int n, int d);
// p_0 = d - 1, p_n = (d-1)^{n+1} - p_{n-1}.
Integer primitive_rank_recurrence(int n, int d);

struct RankEntry {
  int n = 0;
  int d = 2;
  Integer closed_form;
  Integer recurrence;
  bool identity = false;  // p_n = (d-1)(p_{n-1} + (-1)^n)
  bool plus_recurrence = false;  // p_n = (d-1)^{n+1} + p_{n-1}, as printed
  bool consistent = false;
};

// Entries for 2 <= d <= d_max, 0 <= n <= n_max, sorted by (d, n).
std::vector<RankEntry> rank_table(int d_max, int n_max);

// p_n(3) / 2 for n = 0..n_max.
std::vector<Integer> half_ranks(int n_max);
// Half ranks for n = 1..6 as quoted in the cubic example: 1, 2, 3, 5, 11, 21, 43.
std::vector<Integer> quoted_half_ranks();

// ---------------------------------------------------------------------------
// Level models

// Lazily built T, J, D lattices for one degree. Not thread-safe; use one
// workspace per thread.
class Workspace {
 public:
  explicit Workspace(int d, std::size_t cap = kDefaultCap);

  int d() const { return d_; }
  group_ring::RingShape shape(int m) const { return group_ring::RingShape(d_, m); }

  const Submodule& pham(int w);              // T(w), ambient d^{w+1}
  const Submodule& intersection(int w);      // J(w), ambient d^w
  const Submodule& sum_variant(int w);       // R phi_{w-1} + R (1 - y_{w-1}), ambient d^w
  const Submodule& invariant_part(int w);    // D(w) = J(w) u_w, ambient d^{w+1}
  const Submodule& invariant_part_plus(int w);
  const Submodule& coprimitive(int w) { return intersection(w + 1); }

 private:
  void check_level(int w) const;

  int d_;
  std::size_t cap_;
  std::map<int, Submodule> pham_;
  std::map<int, Submodule> intersection_;
  std::map<int, Submodule> sum_;
  std::map<int, Submodule> invariant_;
  std::map<int, Submodule> invariant_plus_;
};

// ---------------------------------------------------------------------------
// Modules and maps

struct PhamModule {
  FermatCase fermat_case;
  gmodule::EquivariantModule module;  // T(n) with y_n acting
};

PhamModule pham_module(const FermatCase& c, Workspace& ws);

struct RankReport {
  std::size_t pham_rank = 0;
  Integer expected_pham_rank;
  std::size_t quotient_rank = 0;
  Integer expected_quotient_rank;
  std::size_t invariant_rank = 0;
  bool quotient_free = false;
  bool exact_sequence = false;  // ranks add up and D(n) = T(n) cap R u_n
  bool pass = false;
};

RankReport verify_ranks(const FermatCase& c, Workspace& ws);

struct InvariantsReport {
  std::size_t module_side_rank = 0;
  std::size_t ideal_side_rank = 0;
  Integer expected_rank;
  bool equal = false;
  bool pass = false;
};

// mu_d-invariants of the Pham module computed as ker(g - 1) and as J(n) u_n.
InvariantsReport invariants_two_ways(const FermatCase& c, Workspace& ws);

struct PrimitivePair {
  FermatCase fermat_case;
  Submodule cohomology_prime;   // H^P(Z') = J(n)
  SubQuotient homology;         // H_P(Z) = T(n) / D(n)
  Submodule cohomology;         // H^P(Z) = J(n+1)
  IntMatrix iota;               // free coordinates of H_P(Z) -> basis coordinates of H^P(Z)
  IntMatrix homology_action;    // y_n on H_P(Z)
  IntMatrix cohomology_action;  // y_n on H^P(Z)
  bool well_defined = false;    // D(n) (1 - y_n) = 0
};

PrimitivePair primitive_pair(const FermatCase& c, Workspace& ws);

struct CompareReport {
  bool odd = false;
  std::size_t rank = 0;
  AbelianInvariants kernel;
  AbelianInvariants cokernel;
  AbelianInvariants kernel_mod_d;
  AbelianInvariants cokernel_mod_d;
  bool well_defined = false;
  bool equivariant = false;
  bool pass = false;
};

// iota_Z: multiplication by 1 - y_n from T(n)/D(n) to J(n+1).
CompareReport verify_compare(const FermatCase& c, Workspace& ws);

struct ProductIdealReport {
  bool applicable = false;      // odd n
  bool product_equal = false;   // R phi_n cap R(1 - y_n) = R phi_n (1 - y_n)
  bool annihilator_equal = false;  // R phi_n cap R u_n = J(n) u_n
  bool pass = false;
};

ProductIdealReport verify_product_ideal(const FermatCase& c, Workspace& ws);

// ---------------------------------------------------------------------------
// The square relating Z' and Z

struct DiagramInstance {
  FermatCase fermat_case;
  SubQuotient bottom_left;   // H_P(Z) = T(n)/D(n)
  SubQuotient top_right;     // H_P(Z') = T(n-1)/D(n-1)
  Submodule top_left;        // H^P(Z') = J(n)
  Submodule bottom_right;    // H^P(Z) = J(n+1)

  // Integer matrices on lifts: free coordinates for the quotients, basis
  // coordinates for the intersections.
  IntMatrix left;    // y_n = 1
  IntMatrix top;     // . (1 - y_{n-1})
  IntMatrix right;   // . (y_n - y_{n-1})(1 - y_n)
  IntMatrix bottom;  // . (1 - y_n)

  IntMatrix bottom_left_action;
  IntMatrix bottom_right_action;

  GroupHom r;           // (H_P Z)_mu -> Z/d (x) H^P(Z')
  GroupHom top_mod;     // Z/d (x) H_P(Z') -> Z/d (x) H^P(Z')
  GroupHom s;           // Z/d (x) H_P(Z') -> (H^P Z)_mu
  GroupHom bottom_cov;  // (H_P Z)_mu -> (H^P Z)_mu

  struct Certificates {
    bool left = false;
    bool top = false;
    bool right = false;
    bool bottom = false;
    bool induced = false;  // all four reduced maps well defined
    bool all() const { return left && top && right && bottom && induced; }
  } certificates;

  bool generator_chase = false;
};

DiagramInstance build_diagram(const FermatCase& c, Workspace& ws);

struct DenominatorComparison {
  bool intersection_in_sum = false;
  bool sum_in_numerator = false;
  bool equal = false;
  std::optional<std::size_t> sum_quotient_rank;
  bool sum_rank_matches = false;
};

struct PointOracleReport {
  bool lattice_equal = false;
  AbelianInvariants kernel;
  AbelianInvariants cokernel;
  bool agrees = false;
};

struct MainReport {
  bool even = false;
  // r for even n, s for odd n
  std::string first_map;
  AbelianInvariants first_source;
  AbelianInvariants first_target;
  bool first_surjective = false;
  AbelianInvariants first_kernel;
  Integer first_kernel_order;
  bool kernel_cyclic_dividing_d = false;
  // s for even n, r for odd n; reported only
  std::string second_map;
  bool second_injective = false;
  bool commutes = false;
  bool certificates = false;
  bool generator_chase = false;
  DenominatorComparison denominator;
  std::optional<PointOracleReport> point_oracle;
  bool pass = false;
};

MainReport verify_main(const FermatCase& c, Workspace& ws);

struct CorollaryReport {
  bool applicable = false;  // d prime
  std::size_t expected_corner_dim = 0;
  std::size_t bottom_left_dim = 0;
  std::size_t bottom_right_dim = 0;
  std::size_t top_image_dim = 0;
  std::size_t bottom_image_dim = 0;
  std::size_t expected_image_dim = 0;
  bool pass = false;
};

CorollaryReport verify_corollary(const FermatCase& c, Workspace& ws);

struct ComplexReport {
  bool squares_to_zero = false;
  // homology[k] sits in degree -k, k = 0..n-1
  std::vector<AbelianInvariants> homology;
  bool pass = false;
};

// The complex T(0) -> T(1) -> ... -> T(n-1) -> D(n) with differentials
// x -> x (1 - y_w) u_{w+1}.
ComplexReport verify_complex(const FermatCase& c, Workspace& ws);

// Dimension of F_p (x) A.
std::size_t fp_dimension(const AbelianInvariants& a, const Integer& p);
bool is_prime(int d);

}  // namespace cyclocover::fermat
