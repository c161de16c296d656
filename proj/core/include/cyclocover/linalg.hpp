#pragma once

// Exact linear algebra over the integers.
//
// Conventions used throughout the library:
//   * vectors are row vectors and matrices act on the right: x -> x * M;
//   * a submodule of Z^n is stored by a row basis in canonical Hermite form
//     (strictly increasing pivot columns, positive pivots, entries above a
//     pivot reduced into [0, pivot)), so equal subgroups compare equal.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclocover {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntVector row_vector(std::size_t r) const;

  void append_row(std::span<const Integer> values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  IntMatrix transpose() const;
  IntMatrix select_rows(std::size_t first, std::size_t count) const;
  IntMatrix select_cols(std::size_t first, std::size_t count) const;
  // [this; other]
  IntMatrix stack(const IntMatrix& other) const;

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& s, const IntMatrix& a);
IntVector operator*(std::span<const Integer> x, const IntMatrix& m);

IntMatrix power(const IntMatrix& m, unsigned exponent);
// Every entry reduced into [0, modulus).
IntMatrix reduce_mod(const IntMatrix& m, const Integer& modulus);
Integer determinant(const IntMatrix& m);
// Inverse of a unimodular matrix; throws PreconditionViolation otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Normal forms

struct HermiteForm {
  IntMatrix basis;           // nonzero rows of H, canonical
  std::vector<std::size_t> pivots;
  IntMatrix transform;       // U with U * M = [basis; 0]; empty unless requested
  std::size_t rank() const { return basis.rows(); }
};

HermiteForm hermite(const IntMatrix& m, bool with_transform = false);

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // rows x cols, diagonal d_1 | d_2 | ..., d_i >= 0
  IntMatrix V;  // unimodular, cols x cols
  IntVector diagonal() const;
};

// U * m * V == D exactly.
SmithForm snf(const IntMatrix& m);

// Nonzero invariant factors of m (including 1s), without transforms.
IntVector smith_invariants(const IntMatrix& m);

struct AbelianInvariants {
  IntVector invariant_factors;  // each > 1, d_i | d_{i+1}
  std::size_t free_rank = 0;

  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }
  bool is_cyclic() const { return invariant_factors.size() + free_rank <= 1; }
  // Order of the torsion subgroup.
  Integer torsion_order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Z^{cols} / rowspace(m).
AbelianInvariants cokernel_invariants(const IntMatrix& m);
// Direct sum of cyclic groups Z/orders[i] (0 means Z) in canonical form.
AbelianInvariants abelian_from_cyclic(std::span<const Integer> orders);

// For the map (Z/m)^rows -> (Z/m)^cols, x -> x * M.
AbelianInvariants modular_kernel_invariants(const IntMatrix& m, const Integer& modulus);
AbelianInvariants modular_cokernel_invariants(const IntMatrix& m, const Integer& modulus);

// Number of Smith invariant factors coprime to modulus; for a prime this is
// the rank over F_p.
std::size_t mod_p_rank(const IntMatrix& m, const Integer& modulus);

// ---------------------------------------------------------------------------
// Submodules of Z^n

class Submodule {
 public:
  Submodule() = default;
  explicit Submodule(std::size_t ambient_rank);  // zero submodule

  static Submodule span(std::size_t ambient_rank, const IntMatrix& generators);
  static Submodule span(std::size_t ambient_rank, std::span<const IntVector> generators);
  static Submodule full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return rank() == 0; }

  // Coordinates c with c * basis() == v, if v lies in the submodule.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }
  bool contains(const Submodule& other) const;
  // Coordinates of every row; throws PreconditionViolation if one is missing.
  IntMatrix coordinates_of_rows(const IntMatrix& rows) const;

  friend bool operator==(const Submodule&, const Submodule&) = default;

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// {x : x * m == 0}, a saturated submodule of Z^{rows}.
Submodule kernel_basis(const IntMatrix& m);
Submodule image(const IntMatrix& m);
Submodule intersect(const Submodule& a, const Submodule& b);
Submodule sum(const Submodule& a, const Submodule& b);
Submodule saturation(const Submodule& a);
Submodule scale(const Submodule& a, const Integer& factor);
// Image of a under x -> x * m.
Submodule map_submodule(const Submodule& a, const IntMatrix& m);
// {x : x * m in target}.
Submodule preimage(const IntMatrix& m, const Submodule& target);
// x with x * m == b.
std::optional<IntVector> solve(const IntMatrix& m, std::span<const Integer> b);

// ---------------------------------------------------------------------------
// Finitely generated abelian groups Z^k / relations.

class QuotientGroup {
 public:
  QuotientGroup() = default;
  QuotientGroup(std::size_t generators, Submodule relations);

  static QuotientGroup free(std::size_t generators);
  // (Z/m)^generators
  static QuotientGroup modular(std::size_t generators, const Integer& modulus);

  std::size_t generators() const { return generators_; }
  const Submodule& relations() const { return relations_; }
  AbelianInvariants invariants() const;
  bool is_trivial() const;
  bool is_zero(std::span<const Integer> x) const { return relations_.contains(x); }

 private:
  std::size_t generators_ = 0;
  Submodule relations_;
};

// Homomorphism source -> target given by x -> x * matrix on generator lifts.
struct GroupHom {
  QuotientGroup source;
  QuotientGroup target;
  IntMatrix matrix;

  // Relations of the source land in relations of the target.
  bool well_defined() const;
  bool is_surjective() const;
  bool is_injective() const;
  // Lattice {x : x * matrix in target relations}, containing source relations.
  Submodule kernel_lattice() const;
  AbelianInvariants kernel() const;
  AbelianInvariants image() const;
  AbelianInvariants cokernel() const;
};

// Compose f: A -> B with g: B -> C.
GroupHom compose(const GroupHom& f, const GroupHom& g);
// f and g agree as maps (difference lands in target relations).
bool equal_as_maps(const GroupHom& f, const GroupHom& g);

// A / B for lattices B <= A <= Z^n, with coordinates on the quotient.
class SubQuotient {
 public:
  SubQuotient() = default;
  SubQuotient(Submodule numerator, Submodule denominator);

  const Submodule& numerator() const { return numerator_; }
  const Submodule& denominator() const { return denominator_; }
  const AbelianInvariants& invariants() const { return invariants_; }
  bool is_free() const { return invariants_.invariant_factors.empty(); }
  std::size_t free_rank() const { return invariants_.free_rank; }

  // Ambient vectors lifting a basis of the free part (rows).
  const IntMatrix& section() const { return section_; }
  // Free coordinates of an ambient vector lying in the numerator.
  IntVector project(std::span<const Integer> v) const;
  // Matrix taking numerator coordinates to free coordinates.
  const IntMatrix& projection() const { return projection_; }

 private:
  Submodule numerator_;
  Submodule denominator_;
  AbelianInvariants invariants_;
  IntMatrix section_;
  IntMatrix projection_;
};

}  // namespace cyclocover
