#include "cyclocover/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace cyclocover::lattice {

using group_ring::GroupRingElement;
using group_ring::RingShape;

namespace {

int sign_power(long e) { return e % 2 == 0 ? 1 : -1; }

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

// ---------------------------------------------------------------------------
// Small dense linear algebra over F_p.

using Row = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::vector<Row> to_fp(const IntMatrix& m, std::int64_t p) {
  std::vector<Row> out(m.rows(), Row(m.cols()));
  const Integer pp = p;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), m(i, j).get_mpz_t(), pp.get_mpz_t());
      out[i][j] = r.get_si();
    }
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& a, std::int64_t p) {
  std::vector<std::size_t> pivots;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const std::int64_t inv = inverse_mod(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

// Basis of {x : x * m = 0} over F_p.
std::vector<Row> left_kernel_fp(const std::vector<Row>& m, std::size_t rows, std::int64_t p) {
  // Transpose, then null space of the transpose acting on columns.
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<Row> t(cols, Row(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  auto pivots = rref(t, p);
  std::vector<bool> is_pivot(rows, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < rows; ++f) {
    if (is_pivot[f]) continue;
    Row v(rows, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = mod(-t[k][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Row>> inverse_fp(const std::vector<Row>& m, std::int64_t p) {
  const std::size_t n = m.size();
  std::vector<Row> aug(n, Row(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, p);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  std::vector<Row> inv(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<Row> mul_fp(const std::vector<Row>& a, const std::vector<Row>& b, std::int64_t p) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  std::vector<Row> c(a.size(), Row(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    }
  return c;
}

IntMatrix from_fp(const std::vector<Row>& m, std::size_t cols) {
  IntMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = static_cast<long>(m[i][j]);
  return out;
}

// Open-addressing hash set of nonzero 64-bit keys.
class FlatSet {
 public:
  explicit FlatSet(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, 0);
    mask_ = cap - 1;
  }
  bool insert(std::uint64_t key) {
    std::size_t i = hash(key) & mask_;
    while (slots_[i] != 0) {
      if (slots_[i] == key) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = key;
    ++size_;
    return true;
  }
  std::size_t size() const { return size_; }

 private:
  static std::uint64_t hash(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
  }
  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

IntMatrix cartan_of(const LatticeWithForm& l) {
  if (l.rank() == 0) throw PreconditionViolation("empty root lattice");
  const Integer& g00 = l.gram(0, 0);
  if (g00 != 2 && g00 != -2) throw PreconditionViolation("not a simply-laced root lattice");
  return g00 == 2 ? l.gram : Integer(-1) * l.gram;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lattices

Integer LatticeWithForm::pair(std::span<const Integer> a, std::span<const Integer> b) const {
  IntVector ag = a * gram;
  Integer s = 0;
  for (std::size_t i = 0; i < ag.size(); ++i) s += ag[i] * b[i];
  return s;
}

void LatticeWithForm::validate() const {
  if (gram.rows() != gram.cols()) throw DimensionMismatch("Gram matrix not square");
  const IntMatrix t = gram.transpose();
  if (parity == Parity::symmetric && !(t == gram)) throw PreconditionViolation("Gram matrix not symmetric");
  if (parity == Parity::antisymmetric && !(Integer(-1) * t == gram))
    throw PreconditionViolation("Gram matrix not antisymmetric");
  for (const auto& v : vanishing)
    if (v.size() != rank()) throw DimensionMismatch("vanishing vector length");
}

IntMatrix cartan_matrix(std::string_view name) {
  // Dynkin diagrams as edge lists (0-based, Bourbaki numbering).
  std::size_t rank = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (name == "E6") {
    rank = 6;
    edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
  } else if (name == "E7") {
    rank = 7;
    edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};
  } else if (name.size() >= 2 && name[0] == 'A') {
    int k = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') throw PreconditionViolation("unknown root system");
      k = k * 10 + (ch - '0');
      if (k > 64) throw PreconditionViolation("root system rank too large");
    }
    if (k < 1) throw PreconditionViolation("unknown root system");
    rank = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i + 1 < rank; ++i) edges.push_back({i, i + 1});
  } else {
    throw PreconditionViolation("unknown root system: " + std::string(name));
  }
  IntMatrix c(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) c(i, i) = 2;
  for (auto [a, b] : edges) c(a, b) = c(b, a) = -1;
  return c;
}

LatticeWithForm root_lattice(std::string_view name, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionViolation("root_lattice: sign must be +1 or -1");
  LatticeWithForm l;
  l.gram = Integer(sign) * cartan_matrix(name);
  l.parity = Parity::symmetric;
  for (std::size_t i = 0; i < l.rank(); ++i) l.vanishing.push_back(unit(l.rank(), i));
  return l;
}

IntMatrix simple_reflection(const IntMatrix& cartan, std::size_t i) {
  const std::size_t r = cartan.rows();
  IntMatrix s = IntMatrix::identity(r);
  for (std::size_t j = 0; j < r; ++j) s(j, i) -= cartan(j, i);
  return s;
}

std::vector<IntVector> roots(const LatticeWithForm& l) {
  const IntMatrix c = cartan_of(l);
  const std::size_t r = l.rank();
  std::vector<IntMatrix> refl;
  for (std::size_t i = 0; i < r; ++i) refl.push_back(simple_reflection(c, i));
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e = unit(r, i);
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : refl) {
      IntVector w = std::span<const Integer>(v) * s;
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

AbelianInvariants discriminant_group(const LatticeWithForm& l) { return cokernel_invariants(l.gram); }

bool preserves_form(const IntMatrix& t, const IntMatrix& gram) {
  return t * gram * t.transpose() == gram;
}

std::optional<unsigned> matrix_order(const IntMatrix& t, unsigned max_order) {
  IntMatrix p = t;
  for (unsigned k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = p * t;
  }
  return std::nullopt;
}

IntMatrix pl_transvection(const LatticeWithForm& l, std::span<const Integer> delta, int n) {
  l.validate();
  if (delta.size() != l.rank()) throw DimensionMismatch("pl_transvection: vector length");
  const Integer dd = l.pair(delta, delta);
  if (l.parity == Parity::symmetric) {
    if (n % 2 == 0) throw PreconditionViolation("pl_transvection: symmetric form needs odd n");
    const int m = (n - 1) / 2;
    if (dd != 2 * sign_power(m)) throw PreconditionViolation("pl_transvection: delta.delta != (-1)^m 2");
  } else if (n % 2 != 0) {
    throw PreconditionViolation("pl_transvection: antisymmetric form needs even n");
  }
  const int eps = sign_power(static_cast<long>(n) * (n + 1) / 2);
  const std::size_t r = l.rank();
  // (e_i . delta) = (G delta^t)_i
  IntVector gd(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) gd[i] += l.gram(i, j) * delta[j];
  }
  IntMatrix t = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t(i, j) += eps * gd[i] * delta[j];
  return t;
}

// ---------------------------------------------------------------------------
// Hermitian modules

IntMatrix HermitianModule::intersection_form() const {
  return variation + Integer(sign_power(n)) * variation.transpose();
}

Integer HermitianModule::variation_pair(std::span<const Integer> a, std::span<const Integer> b) const {
  IntVector ap = a * variation;
  Integer s = 0;
  for (std::size_t i = 0; i < ap.size(); ++i) s += ap[i] * b[i];
  return s;
}

GroupRingElement HermitianModule::hermitian(std::span<const Integer> a, std::span<const Integer> b) const {
  const RingShape shape(d, 1);
  const IntMatrix q = intersection_form();
  IntVector coeffs(d);
  IntVector gb(b.begin(), b.end());
  for (int k = 0; k < d; ++k) {
    IntVector aq = a * q;
    Integer s = 0;
    for (std::size_t i = 0; i < aq.size(); ++i) s += aq[i] * gb[i];
    coeffs[k] = s;
    gb = std::span<const Integer>(gb) * action;
  }
  return GroupRingElement(shape, std::move(coeffs));
}

std::vector<std::vector<GroupRingElement>> HermitianModule::hermitian_gram(
    const std::vector<IntVector>& vectors) const {
  std::vector<std::vector<GroupRingElement>> g(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) g[i].push_back(hermitian(vectors[i], vectors[j]));
  return g;
}

void HermitianModule::validate() const {
  const std::size_t r = rank();
  if (action.cols() != r || variation.rows() != r || variation.cols() != r)
    throw DimensionMismatch("HermitianModule: matrix sizes");
  if (!power(action, static_cast<unsigned>(d)).is_identity())
    throw PreconditionViolation("HermitianModule: g^d != 1");
  if (!preserves_form(action, variation)) throw PreconditionViolation("HermitianModule: g does not preserve P");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const IntVector a = unit(r, i), b = unit(r, j);
      GroupRingElement lhs = hermitian(a, b).conjugate();
      GroupRingElement rhs = Integer(sign_power(n)) * hermitian(b, a);
      if (!(lhs == rhs)) throw PreconditionViolation("HermitianModule: form not (-1)^n-hermitian");
    }
}

HermitianModule standard_model(int d, int n) {
  if (d < 2) throw PreconditionViolation("standard_model: d must be >= 2");
  const int s = sign_power(static_cast<long>(n + 1) * (n + 2) / 2);
  const std::size_t r = static_cast<std::size_t>(d - 1);
  HermitianModule h;
  h.d = d;
  h.n = n;
  h.action = IntMatrix(r, r);
  for (std::size_t k = 0; k + 1 < r; ++k) h.action(k, k + 1) = 1;
  for (std::size_t j = 0; j < r; ++j) h.action(r - 1, j) = -1;
  h.variation = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const int diff = ((static_cast<int>(j) - static_cast<int>(i)) % d + d) % d;
      if (diff == 0) h.variation(i, j) = -s;
      else if (diff == 1) h.variation(i, j) += s;
    }
  return h;
}

IntMatrix pham_reflection(const HermitianModule& h, std::span<const Integer> delta) {
  const std::size_t r = h.rank();
  if (delta.size() != r) throw DimensionMismatch("pham_reflection: vector length");
  // The orbit of delta must span a primitive rank d-1 summand.
  IntMatrix orbit(0, r);
  IntVector v(delta.begin(), delta.end());
  std::vector<IntVector> translates;
  for (int k = 0; k < h.d; ++k) {
    translates.push_back(v);
    if (k + 1 < h.d) orbit.append_row(v);
    v = std::span<const Integer>(v) * h.action;
  }
  Submodule span = Submodule::span(r, orbit);
  if (span.rank() != static_cast<std::size_t>(h.d - 1) || !(saturation(span) == span))
    throw PreconditionViolation("pham_reflection: delta does not generate an A_{d-1} summand");

  const int s = sign_power(static_cast<long>(h.n + 1) * (h.n + 2) / 2);
  IntMatrix t = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) {
    const IntVector e = unit(r, i);
    for (const auto& w : translates) {
      const Integer c = s * h.variation_pair(e, w);
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < r; ++j) t(i, j) += c * w[j];
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Quadratic refinements

QuadraticRefinement quadratic_refinement(const LatticeWithForm& l, int n) {
  l.validate();
  QuadraticRefinement q;
  const std::size_t r = l.rank();
  if (n % 2 != 0) {
    if (l.parity != Parity::symmetric) throw PreconditionViolation("quadratic_refinement: odd n needs a symmetric form");
    for (std::size_t i = 0; i < r; ++i)
      if (!mpz_even_p(l.gram(i, i).get_mpz_t())) throw PreconditionViolation("quadratic_refinement: form is not even");
    q.integral = true;
    q.feasible = true;
    q.expected = sign_power(static_cast<long>(n - 1) * (n - 2) / 2);
    q.pass = true;
    for (const auto& v : l.vanishing) {
      Integer val = l.pair(v, v) / 2;
      if (val != q.expected) q.pass = false;
      q.values.push_back(std::move(val));
    }
    return q;
  }
  // q(x) = sum x_i q_i + sum_{i<j} x_i x_j b_ij over F_2; q(delta) = 1 is linear in q_i.
  q.expected = 1;
  auto b = to_fp(l.gram, 2);
  std::vector<Row> system;
  for (const auto& v : l.vanishing) {
    Row row(r + 1, 0);
    std::int64_t rhs = 1;
    std::vector<std::int64_t> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = mpz_odd_p(v[i].get_mpz_t()) ? 1 : 0;
    for (std::size_t i = 0; i < r; ++i) {
      row[i] = x[i];
      for (std::size_t j = i + 1; j < r; ++j) rhs ^= (x[i] & x[j] & b[i][j]);
    }
    row[r] = rhs;
    system.push_back(std::move(row));
  }
  auto pivots = rref(system, 2);
  if (!pivots.empty() && pivots.back() == r) {
    q.feasible = false;
    q.pass = false;
    return q;
  }
  q.feasible = true;
  q.basis_values.assign(r, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) q.basis_values[pivots[k]] = static_cast<int>(system[k][r]);
  q.pass = true;
  for (const auto& v : l.vanishing) {
    std::int64_t val = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (!mpz_odd_p(v[i].get_mpz_t())) continue;
      val ^= q.basis_values[i];
      for (std::size_t j = i + 1; j < r; ++j)
        if (mpz_odd_p(v[j].get_mpz_t())) val ^= b[i][j];
    }
    if (val != 1) q.pass = false;
    q.values.push_back(Integer(static_cast<long>(val)));
  }
  return q;
}

// ---------------------------------------------------------------------------
// Mod p

ModPQuotient mod_p_quotient(const LatticeWithForm& l, int p) {
  if (p < 2) throw PreconditionViolation("mod_p_quotient: p must be >= 2");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw PreconditionViolation("mod_p_quotient: p must be prime");
  const std::size_t r = l.rank();
  ModPQuotient out;
  out.p = p;
  out.dim = r;
  const auto g = to_fp(l.gram, p);
  auto radical = left_kernel_fp(g, r, p);
  auto rad_echelon = radical;
  auto pivots = rref(rad_echelon, p);
  out.radical_dim = radical.size();
  out.quotient_dim = r - radical.size();
  out.radical = from_fp(rad_echelon, r);
  if (out.radical.rows() == 0) out.radical = IntMatrix(0, r);

  std::vector<bool> is_pivot(r, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> complement;
  for (std::size_t j = 0; j < r; ++j)
    if (!is_pivot[j]) {
      Row e(r, 0);
      e[j] = 1;
      complement.push_back(std::move(e));
    }
  out.complement = from_fp(complement, r);
  if (out.complement.rows() == 0) out.complement = IntMatrix(0, r);

  // x = y * [complement; radical]; projection keeps the complement coordinates.
  std::vector<Row> basis = complement;
  basis.insert(basis.end(), rad_echelon.begin(), rad_echelon.end());
  auto inv = inverse_fp(basis, p);
  if (!inv) throw Error("mod_p_quotient: basis not invertible");
  std::vector<Row> proj(r, Row(out.quotient_dim));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < out.quotient_dim; ++j) proj[i][j] = (*inv)[i][j];
  out.projection = from_fp(proj, out.quotient_dim);

  std::vector<Row> ct(r, Row(complement.size()));
  for (std::size_t i = 0; i < complement.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) ct[j][i] = complement[i][j];
  auto qg = mul_fp(mul_fp(complement, g, p), ct, p);
  out.quotient_gram = from_fp(qg, out.quotient_dim);
  auto check = qg;
  out.nondegenerate = rref(check, p).size() == out.quotient_dim;
  out.alternating = true;
  for (std::size_t i = 0; i < out.quotient_dim; ++i)
    for (std::size_t j = 0; j < out.quotient_dim; ++j)
      if (mod(qg[i][j] + qg[j][i], p) != 0 || (i == j && qg[i][i] != 0)) out.alternating = false;
  return out;
}

// ---------------------------------------------------------------------------
// Weyl groups

EnumerationCapExceeded::EnumerationCapExceeded(std::size_t cap)
    : Error("enumeration exceeded cap of " + std::to_string(cap) + " elements") {}

namespace {

// Orbit of rho in fundamental-weight coordinates, entries packed as int8.
Integer weyl_orbit_size(const IntMatrix& cartan, std::size_t cap) {
  const std::size_t r = cartan.rows();
  if (r > 8) throw PreconditionViolation("weyl_image_order: rank above 8 not supported");
  std::vector<std::vector<int>> c(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i][j] = static_cast<int>(cartan(i, j).get_si());
  using Weight = std::vector<int>;
  auto encode = [&](const Weight& w) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (w[j] < -127 || w[j] > 127) throw Error("weyl_image_order: weight coordinate overflow");
      key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(w[j]))) << (8 * j);
    }
    return key | (std::uint64_t{1} << 63);
  };
  FlatSet seen(std::min<std::size_t>(cap, 4'000'000));
  std::vector<Weight> frontier{Weight(r, 1)};
  seen.insert(encode(frontier[0]));
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < r; ++i) {
        Weight v = w;
        for (std::size_t j = 0; j < r; ++j) v[j] -= w[i] * c[i][j];
        if (seen.insert(encode(v))) {
          if (seen.size() > cap) throw EnumerationCapExceeded(cap);
          next.push_back(std::move(v));
        }
      }
    frontier = std::move(next);
  }
  return Integer(static_cast<unsigned long>(seen.size()));
}

// Closure of the group generated by k x k matrices over F_p, packed base p.
Integer matrix_group_order(const std::vector<std::vector<Row>>& gens, std::size_t k, std::int64_t p,
                           std::size_t cap) {
  auto encode = [&](const std::vector<Row>& m) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) key = key * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(m[i][j]);
    return key + 1;
  };
  long double bits = 0;
  for (std::size_t i = 0; i < k * k; ++i) bits += std::log2(static_cast<long double>(p));
  if (bits > 62) throw PreconditionViolation("weyl_image_order: quotient too large to pack");
  std::vector<Row> id(k, Row(k, 0));
  for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
  FlatSet seen(std::min<std::size_t>(cap, 4'000'000));
  seen.insert(encode(id));
  std::vector<std::vector<Row>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<Row>> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        auto prod = mul_fp(m, g, p);
        if (seen.insert(encode(prod))) {
          if (seen.size() > cap) throw EnumerationCapExceeded(cap);
          next.push_back(std::move(prod));
        }
      }
    frontier = std::move(next);
  }
  return Integer(static_cast<unsigned long>(seen.size()));
}

}  // namespace

WeylImage weyl_image_order(const LatticeWithForm& l, int p, std::size_t cap) {
  const IntMatrix c = cartan_of(l);
  WeylImage out;
  out.group_order = weyl_orbit_size(c, cap);

  const ModPQuotient q = mod_p_quotient(l, p);
  const std::size_t k = q.quotient_dim;
  std::vector<std::vector<Row>> gens;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    IntMatrix m = q.complement * simple_reflection(c, i) * q.projection;
    gens.push_back(to_fp(m, p));
  }
  out.image_order = k == 0 ? Integer(1) : matrix_group_order(gens, k, p, cap);
  out.faithful = out.image_order == out.group_order;
  return out;
}

Integer weyl_order_from_degrees(std::string_view name) {
  std::vector<int> degrees;
  if (name == "E6") {
    degrees = {2, 5, 6, 8, 9, 12};
  } else if (name == "E7") {
    degrees = {2, 6, 8, 10, 12, 14, 18};
  } else {
    const std::size_t r = cartan_matrix(name).rows();
    for (std::size_t i = 2; i <= r + 1; ++i) degrees.push_back(static_cast<int>(i));
  }
  Integer order = 1;
  for (int e : degrees) order *= e;
  return order;
}

}  // namespace cyclocover::lattice
