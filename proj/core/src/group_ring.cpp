#include "cyclocover/group_ring.hpp"

#include <algorithm>

namespace cyclocover::group_ring {

RingShape::RingShape(int d_, int m_) : d(d_), m(m_) {
  if (d < 2) throw PreconditionViolation("RingShape: d must be >= 2");
  if (m < 0) throw PreconditionViolation("RingShape: m must be >= 0");
}

std::size_t RingShape::rank() const {
  std::size_t r = 1;
  for (int i = 0; i < m; ++i) r *= static_cast<std::size_t>(d);
  return r;
}

std::size_t RingShape::index(std::span<const int> e) const {
  if (e.size() != static_cast<std::size_t>(m)) throw DimensionMismatch("exponent tuple length");
  std::size_t idx = 0;
  for (int v : e) idx = idx * d + static_cast<std::size_t>(((v % d) + d) % d);
  return idx;
}

std::vector<int> RingShape::exponents(std::size_t idx) const {
  std::vector<int> e(m);
  for (int i = m - 1; i >= 0; --i) {
    e[i] = static_cast<int>(idx % d);
    idx /= d;
  }
  return e;
}

GroupRingElement::GroupRingElement(RingShape shape) : shape_(shape), coeffs_(shape.rank()) {}

GroupRingElement::GroupRingElement(RingShape shape, IntVector coeffs)
    : shape_(shape), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != shape_.rank()) throw DimensionMismatch("GroupRingElement: coefficient count");
}

GroupRingElement GroupRingElement::one(RingShape shape) {
  GroupRingElement e(shape);
  e.coeffs_[0] = 1;
  return e;
}

GroupRingElement GroupRingElement::monomial(RingShape shape, std::span<const int> exponents) {
  GroupRingElement e(shape);
  e.coeffs_[shape.index(exponents)] = 1;
  return e;
}

GroupRingElement GroupRingElement::variable(RingShape shape, int var, int power) {
  if (var < 0 || var >= shape.m) throw PreconditionViolation("variable index out of range");
  std::vector<int> e(shape.m, 0);
  e[var] = power;
  return monomial(shape, e);
}

const Integer& GroupRingElement::coeff(std::span<const int> exponents) const {
  return coeffs_[shape_.index(exponents)];
}

std::size_t GroupRingElement::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

Integer GroupRingElement::augmentation() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

GroupRingElement GroupRingElement::conjugate() const {
  GroupRingElement out(shape_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    auto e = shape_.exponents(i);
    for (auto& v : e) v = -v;
    out.coeffs_[shape_.index(e)] = coeffs_[i];
  }
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  if (!(shape_ == other.shape_)) throw DimensionMismatch("group ring shape mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  if (!(shape_ == other.shape_)) throw DimensionMismatch("group ring shape mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Integer& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
GroupRingElement operator*(const Integer& s, GroupRingElement a) { return a *= s; }

namespace {

// Index of monomial(i) * monomial(j); digits added mod d without carries.
std::size_t add_indices(std::size_t i, std::size_t j, int d, int m) {
  std::size_t out = 0, place = 1;
  for (int k = 0; k < m; ++k) {
    const std::size_t digit = (i % d + j % d) % d;
    out += digit * place;
    place *= d;
    i /= d;
    j /= d;
  }
  return out;
}

}  // namespace

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (!(a.shape() == b.shape())) throw DimensionMismatch("group ring shape mismatch");
  const auto& s = a.shape();
  IntVector out(s.rank());
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<std::size_t> bsupport;
  for (std::size_t j = 0; j < bc.size(); ++j)
    if (sgn(bc[j]) != 0) bsupport.push_back(j);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j : bsupport) out[add_indices(i, j, s.d, s.m)] += ac[i] * bc[j];
  }
  return GroupRingElement(s, std::move(out));
}

GroupRingElement shift(const GroupRingElement& a, std::span<const int> exponents) {
  const auto& s = a.shape();
  const std::size_t offset = s.index(exponents);
  IntVector out(s.rank());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (sgn(a.coeffs()[i]) != 0) out[add_indices(i, offset, s.d, s.m)] = a.coeffs()[i];
  return GroupRingElement(s, std::move(out));
}

GroupRingElement embed(const GroupRingElement& a, RingShape target) {
  const auto& s = a.shape();
  if (target.d != s.d || target.m < s.m) throw DimensionMismatch("embed: target shape too small");
  const std::size_t stride = target.rank() / s.rank();
  IntVector out(target.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) out[i * stride] = a.coeffs()[i];
  return GroupRingElement(target, std::move(out));
}

GroupRingElement substitute_last_one(const GroupRingElement& a) {
  const auto& s = a.shape();
  if (s.m == 0) throw PreconditionViolation("substitute_last_one: no variables");
  RingShape target(s.d, s.m - 1);
  IntVector out(target.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) out[i / s.d] += a.coeffs()[i];
  return GroupRingElement(target, std::move(out));
}

GroupRingElement phi(int d, int n) {
  if (n < -1) throw PreconditionViolation("phi: n must be >= -1");
  RingShape s(d, n + 1);
  GroupRingElement p = GroupRingElement::one(s);
  for (int k = 0; k <= n; ++k) {
    GroupRingElement factor = GroupRingElement::variable(s, k);
    if (k == 0)
      factor -= GroupRingElement::one(s);
    else
      factor -= GroupRingElement::variable(s, k - 1);
    p = p * factor;
  }
  return p;
}

GroupRingElement norm_element(RingShape shape, int var) {
  GroupRingElement u(shape);
  for (int k = 0; k < shape.d; ++k) u += GroupRingElement::variable(shape, var, k);
  return u;
}

GroupRingElement u(int d, int n) {
  if (n < 0) throw PreconditionViolation("u: n must be >= 0");
  return norm_element(RingShape(d, n + 1), n);
}

GroupRingElement one_minus_y(RingShape shape, int var) {
  if (var == -1) return GroupRingElement(shape);
  return GroupRingElement::one(shape) - GroupRingElement::variable(shape, var);
}

AugmentationData augmentation_data(int d) {
  RingShape s(d, 1);
  AugmentationData a;
  a.epsilon = IntMatrix(s.rank(), 1);
  for (std::size_t i = 0; i < s.rank(); ++i) a.epsilon(i, 0) = 1;
  a.coaug_image = norm_element(s, 0);
  return a;
}

IntMatrix mult_matrix(const GroupRingElement& a) {
  const auto& s = a.shape();
  const std::size_t n = s.rank();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = m.row(i);
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(a.coeffs()[j]) != 0) row[add_indices(i, j, s.d, s.m)] = a.coeffs()[j];
  }
  return m;
}

Submodule ideal_basis(std::span<const GroupRingElement> generators) {
  if (generators.empty()) throw PreconditionViolation("ideal_basis: no generators");
  const RingShape s = generators.front().shape();
  IntMatrix rows(0, s.rank());
  for (const auto& g : generators) {
    if (!(g.shape() == s)) throw DimensionMismatch("ideal_basis: shape mismatch");
    for (std::size_t i = 0; i < s.rank(); ++i) {
      auto e = s.exponents(i);
      rows.append_row(shift(g, e).coeffs());
    }
  }
  return Submodule::span(s.rank(), rows);
}

Submodule ideal_basis(const GroupRingElement& generator) {
  return ideal_basis(std::span<const GroupRingElement>(&generator, 1));
}

Submodule multiply(const Submodule& sub, const GroupRingElement& a) {
  if (sub.ambient_rank() != a.shape().rank()) throw DimensionMismatch("multiply: shape mismatch");
  if (sub.is_zero()) return sub;
  return Submodule::span(sub.ambient_rank(), multiply_rows(sub.basis(), a));
}

IntMatrix multiply_rows(const IntMatrix& rows, const GroupRingElement& a) {
  const auto& s = a.shape();
  if (rows.cols() != s.rank()) throw DimensionMismatch("multiply_rows: shape mismatch");
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < s.rank(); ++j)
    if (sgn(a.coeffs()[j]) != 0) support.push_back(j);
  IntMatrix out(rows.rows(), rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto src = rows.row(r);
    auto dst = out.row(r);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (sgn(src[i]) == 0) continue;
      for (std::size_t j : support) dst[add_indices(i, j, s.d, s.m)] += src[i] * a.coeffs()[j];
    }
  }
  return out;
}

IntMatrix embed_rows(const IntMatrix& rows, RingShape source, RingShape target) {
  if (rows.cols() != source.rank()) throw DimensionMismatch("embed_rows: shape mismatch");
  if (target.d != source.d || target.m < source.m) throw DimensionMismatch("embed_rows: target too small");
  const std::size_t stride = target.rank() / source.rank();
  IntMatrix out(rows.rows(), target.rank());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t i = 0; i < source.rank(); ++i) out(r, i * stride) = rows(r, i);
  return out;
}

IntMatrix substitute_last_one_rows(const IntMatrix& rows, RingShape source) {
  if (rows.cols() != source.rank()) throw DimensionMismatch("substitute_last_one_rows: shape mismatch");
  if (source.m == 0) throw PreconditionViolation("substitute_last_one_rows: no variables");
  IntMatrix out(rows.rows(), source.rank() / source.d);
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t i = 0; i < source.rank(); ++i) out(r, i / source.d) += rows(r, i);
  return out;
}

}  // namespace cyclocover::group_ring
