#pragma once

// The group ring R_d^{(m)} = Z[y_0, ..., y_{m-1}] / (y_i^d - 1).
//
// Elements are dense coefficient vectors over the monomial basis
// y_0^{e_0} ... y_{m-1}^{e_{m-1}}, 0 <= e_i < d, in lexicographic order with
// e_0 varying slowest:
//
//     index(e) = e_0 * d^{m-1} + e_1 * d^{m-2} + ... + e_{m-1}.
//
// This order is part of the report format and must not change.

#include "cyclocover/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cyclocover::group_ring {

struct RingShape {
  int d = 2;  // order of mu_d, >= 2
  int m = 0;  // number of variables, >= 0

  RingShape() = default;
  RingShape(int d, int m);

  std::size_t rank() const;  // d^m
  std::size_t index(std::span<const int> exponents) const;
  std::vector<int> exponents(std::size_t index) const;

  friend bool operator==(const RingShape&, const RingShape&) = default;
};

class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(RingShape shape);  // zero
  GroupRingElement(RingShape shape, IntVector coeffs);

  static GroupRingElement one(RingShape shape);
  static GroupRingElement monomial(RingShape shape, std::span<const int> exponents);
  // y_var^power
  static GroupRingElement variable(RingShape shape, int var, int power = 1);

  const RingShape& shape() const { return shape_; }
  const IntVector& coeffs() const { return coeffs_; }
  const Integer& coeff(std::span<const int> exponents) const;
  std::size_t support_size() const;

  // epsilon: sum of coefficients
  Integer augmentation() const;
  // Anti-involution y_i -> y_i^{-1}.
  GroupRingElement conjugate() const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const Integer& s);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  RingShape shape_;
  IntVector coeffs_;
};

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const Integer& s, GroupRingElement a);

// Multiplication by the monomial y^exponents, as a permutation of coefficients.
GroupRingElement shift(const GroupRingElement& a, std::span<const int> exponents);

// R^{(m)} -> R^{(m')} for m' >= m; variables keep their indices.
GroupRingElement embed(const GroupRingElement& a, RingShape target);
// R^{(m)} -> R^{(m-1)}, substituting y_{m-1} = 1.
GroupRingElement substitute_last_one(const GroupRingElement& a);

// phi_n = (y_0 - 1)(y_1 - y_0) ... (y_n - y_{n-1}) in R_d^{(n+1)}.
// phi_{-1} = 1 in R_d^{(0)} = Z.
GroupRingElement phi(int d, int n);
// u = sum_k y_var^k.
GroupRingElement norm_element(RingShape shape, int var);
// u_n in R_d^{(n+1)}
GroupRingElement u(int d, int n);
// 1 - y_var, with the convention y_{-1} = 1 (so the result is 0 for var = -1).
GroupRingElement one_minus_y(RingShape shape, int var);

struct AugmentationData {
  IntMatrix epsilon;              // rank x 1 column: coefficient sum
  GroupRingElement coaug_image;   // epsilon^d(1) = sum of all group elements
};

// Augmentation data of R_d^{(1)} = Z mu_d.
AugmentationData augmentation_data(int d);

// d^m x d^m matrix of x -> x * a in the monomial basis.
IntMatrix mult_matrix(const GroupRingElement& a);

// Z-basis of the ideal generated by the given elements.
Submodule ideal_basis(std::span<const GroupRingElement> generators);
Submodule ideal_basis(const GroupRingElement& generator);

// Image of a Z-submodule of R^{(m)} under x -> x * a.
Submodule multiply(const Submodule& s, const GroupRingElement& a);

// Row-wise versions of the above on coefficient matrices.
IntMatrix multiply_rows(const IntMatrix& rows, const GroupRingElement& a);
IntMatrix embed_rows(const IntMatrix& rows, RingShape source, RingShape target);
IntMatrix substitute_last_one_rows(const IntMatrix& rows, RingShape source);

}  // namespace cyclocover::group_ring
