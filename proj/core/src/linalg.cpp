#include "cyclocover/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace cyclocover {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return IntVector(s.begin(), s.end());
}

void IntMatrix::append_row(std::span<const Integer> values) {
  if (values.size() != cols_) throw DimensionMismatch("append_row: wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) data_[a * cols_ + j].swap(data_[b * cols_ + j]);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + a].swap(data_[i * cols_ + b]);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionMismatch("select_rows out of range");
  IntMatrix m(count, cols_);
  std::copy(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_, m.data_.begin());
  return m;
}

IntMatrix IntMatrix::select_cols(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionMismatch("select_cols out of range");
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::stack(const IntMatrix& other) const {
  if (other.cols_ != cols_) throw DimensionMismatch("stack: column mismatch");
  IntMatrix m = *this;
  m.data_.insert(m.data_.end(), other.data_.begin(), other.data_.end());
  m.rows_ += other.rows_;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      auto bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(bk[j]) != 0) ci[j] += aik * bk[j];
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto& v : c.row(i)) v *= s;
  return c;
}

IntVector operator*(std::span<const Integer> x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw DimensionMismatch("vector-matrix product");
  IntVector y(m.cols());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    auto mk = m.row(k);
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(mk[j]) != 0) y[j] += x[k] * mk[j];
  }
  return y;
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  if (m.rows() != m.cols()) throw DimensionMismatch("power of non-square matrix");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntMatrix reduce_mod(const IntMatrix& m, const Integer& modulus) {
  IntMatrix r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (auto& v : r.row(i)) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// Row and column primitives

namespace {

// dst -= q * src, touching columns [from, end).
void row_submul(std::span<Integer> dst, std::span<const Integer> src, const Integer& q,
                std::size_t from = 0) {
  if (q == 1) {
    for (std::size_t j = from; j < dst.size(); ++j)
      if (sgn(src[j]) != 0) dst[j] -= src[j];
  } else if (q == -1) {
    for (std::size_t j = from; j < dst.size(); ++j)
      if (sgn(src[j]) != 0) dst[j] += src[j];
  } else {
    for (std::size_t j = from; j < dst.size(); ++j)
      if (sgn(src[j]) != 0) mpz_submul(dst[j].get_mpz_t(), src[j].get_mpz_t(), q.get_mpz_t());
  }
}

void negate_row(std::span<Integer> r) {
  for (auto& v : r) v = -v;
}

// col_dst -= q * col_src
void col_submul(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (sgn(m(i, src)) != 0) mpz_submul(m(i, dst).get_mpz_t(), m(i, src).get_mpz_t(), q.get_mpz_t());
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Quotient chosen so that the remainder a - q*b has minimal absolute value.
Integer nearest_div(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer r2 = r - b;
  if (abs(r2) < abs(r)) q += 1;
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite(const IntMatrix& m, bool with_transform) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  IntMatrix u = with_transform ? IntMatrix::identity(rows) : IntMatrix();
  std::vector<std::size_t> pivots;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == rows || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0) best = i;
        if (best == i && (h(i, c) == 1 || h(i, c) == -1)) break;
      }
      if (best == rows) break;
      have_pivot = true;
      h.swap_rows(r, best);
      if (with_transform) u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Integer q = nearest_div(h(i, c), h(r, c));
        row_submul(h.row(i), h.row(r), q, c);
        if (with_transform) row_submul(u.row(i), u.row(r), q);
        if (sgn(h(i, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (sgn(h(r, c)) < 0) {
      negate_row(h.row(r));
      if (with_transform) negate_row(u.row(r));
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      Integer q = floor_div(h(i, c), h(r, c));
      if (sgn(q) == 0) continue;
      row_submul(h.row(i), h.row(r), q, c);
      if (with_transform) row_submul(u.row(i), u.row(r), q);
    }
    pivots.push_back(c);
    ++r;
  }

  HermiteForm out;
  out.basis = h.select_rows(0, r);
  out.pivots = std::move(pivots);
  if (with_transform) out.transform = std::move(u);
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void smith_in_place(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  const std::size_t n = std::min(rows, cols);
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Minimal absolute value pivot in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = k; i < rows; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (pr == rows || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return;  // trailing block is zero
      d.swap_rows(k, pr);
      if (u) u->swap_rows(k, pr);
      d.swap_cols(k, pc);
      if (v) v->swap_cols(k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (sgn(d(i, k)) == 0) continue;
        Integer q = nearest_div(d(i, k), d(k, k));
        row_submul(d.row(i), d.row(k), q, k);
        if (u) row_submul(u->row(i), u->row(k), q);
        if (sgn(d(i, k)) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (sgn(d(k, j)) == 0) continue;
        Integer q = nearest_div(d(k, j), d(k, k));
        col_submul(d, j, k, q);
        if (v) col_submul(*v, j, k, q);
        if (sgn(d(k, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row k and retry.
      std::size_t bad = rows;
      for (std::size_t i = k + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (sgn(d(i, j)) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(k, k).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_submul(d.row(k), d.row(bad), Integer(-1), k);
      if (u) row_submul(u->row(k), u->row(bad), Integer(-1));
    }
    if (sgn(d(k, k)) < 0) {
      negate_row(d.row(k));
      if (u) negate_row(u->row(k));
    }
  }
}

}  // namespace

IntVector SmithForm::diagonal() const {
  IntVector diag;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) diag.push_back(D(i, i));
  return diag;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm s;
  s.D = m;
  s.U = IntMatrix::identity(m.rows());
  s.V = IntMatrix::identity(m.cols());
  smith_in_place(s.D, &s.U, &s.V);
  return s;
}

IntVector smith_invariants(const IntMatrix& m) {
  // Shrink to the square-ish Hermite basis first; it has the same invariants.
  HermiteForm h = hermite(m);
  IntMatrix d = h.basis;
  if (d.rows() > 0 && d.cols() > d.rows()) {
    // Column-style reduction to an r x r block.
    HermiteForm t = hermite(d.transpose());
    d = t.basis.transpose();
  }
  smith_in_place(d, nullptr, nullptr);
  IntVector out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (sgn(d(i, i)) != 0) out.push_back(d(i, i));
  return out;
}

Integer AbelianInvariants::torsion_order() const {
  Integer order = 1;
  for (const auto& f : invariant_factors) order *= f;
  return order;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& f : invariant_factors) {
    out << (first ? "" : " + ") << "Z/" << f.get_str();
    first = false;
  }
  if (free_rank > 0) out << (first ? "" : " + ") << "Z^" << free_rank;
  return out.str();
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  IntVector diag = smith_invariants(m);
  AbelianInvariants a;
  a.free_rank = m.cols() - diag.size();
  for (auto& f : diag)
    if (f != 1) a.invariant_factors.push_back(f);
  return a;
}

AbelianInvariants abelian_from_cyclic(std::span<const Integer> orders) {
  IntVector abs_orders;
  for (const auto& o : orders) abs_orders.push_back(abs(o));
  return cokernel_invariants(IntMatrix::diagonal(abs_orders));
}

namespace {

std::vector<Integer> modular_orders(const IntMatrix& m, const Integer& modulus, std::size_t extra) {
  IntVector diag = smith_invariants(m);
  const std::size_t n = std::min(m.rows(), m.cols());
  diag.resize(n, Integer(0));
  std::vector<Integer> orders;
  for (const auto& s : diag) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
    orders.push_back(g);
  }
  orders.insert(orders.end(), extra, modulus);
  return orders;
}

}  // namespace

AbelianInvariants modular_kernel_invariants(const IntMatrix& m, const Integer& modulus) {
  auto orders = modular_orders(m, modulus, m.rows() - std::min(m.rows(), m.cols()));
  return abelian_from_cyclic(orders);
}

AbelianInvariants modular_cokernel_invariants(const IntMatrix& m, const Integer& modulus) {
  auto orders = modular_orders(m, modulus, m.cols() - std::min(m.rows(), m.cols()));
  return abelian_from_cyclic(orders);
}

std::size_t mod_p_rank(const IntMatrix& m, const Integer& modulus) {
  if (modulus < 2) throw PreconditionViolation("mod_p_rank: modulus must be >= 2");
  std::size_t count = 0;
  for (const auto& s : smith_invariants(m)) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
    if (g == 1) ++count;
  }
  return count;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  HermiteForm h = hermite(m, true);
  if (!h.basis.is_identity()) throw PreconditionViolation("matrix is not unimodular");
  return h.transform;
}

// ---------------------------------------------------------------------------
// Submodule

Submodule::Submodule(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

Submodule Submodule::span(std::size_t ambient_rank, const IntMatrix& generators) {
  if (generators.cols() != ambient_rank && generators.rows() > 0)
    throw DimensionMismatch("Submodule::span: generator length differs from ambient rank");
  Submodule s(ambient_rank);
  if (generators.rows() == 0) return s;
  HermiteForm h = hermite(generators);
  s.basis_ = std::move(h.basis);
  s.pivots_ = std::move(h.pivots);
  return s;
}

Submodule Submodule::span(std::size_t ambient_rank, std::span<const IntVector> generators) {
  return span(ambient_rank, IntMatrix::from_rows(generators, ambient_rank));
}

Submodule Submodule::full(std::size_t ambient_rank) {
  return span(ambient_rank, IntMatrix::identity(ambient_rank));
}

std::optional<IntVector> Submodule::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("coordinates: vector length differs from ambient rank");
  IntVector rest(v.begin(), v.end());
  IntVector c(rank());
  std::size_t next = 0;  // first column that may still be nonzero
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t p = pivots_[k];
    for (; next < p; ++next)
      if (sgn(rest[next]) != 0) return std::nullopt;
    if (sgn(rest[p]) != 0) {
      if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_(k, p).get_mpz_t())) return std::nullopt;
      mpz_divexact(c[k].get_mpz_t(), rest[p].get_mpz_t(), basis_(k, p).get_mpz_t());
      row_submul(rest, basis_.row(k), c[k], p);
    }
    next = p + 1;
  }
  for (; next < ambient_; ++next)
    if (sgn(rest[next]) != 0) return std::nullopt;
  return c;
}

bool Submodule::contains(const Submodule& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

IntMatrix Submodule::coordinates_of_rows(const IntMatrix& rows) const {
  IntMatrix out(0, rank());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto c = coordinates(rows.row(i));
    if (!c) throw PreconditionViolation("coordinates_of_rows: row outside submodule");
    out.append_row(*c);
  }
  return out;
}

Submodule kernel_basis(const IntMatrix& m) {
  HermiteForm h = hermite(m, true);
  const std::size_t r = h.rank();
  return Submodule::span(m.rows(), h.transform.select_rows(r, m.rows() - r));
}

Submodule image(const IntMatrix& m) { return Submodule::span(m.cols(), m); }

Submodule preimage(const IntMatrix& m, const Submodule& target) {
  if (m.cols() != target.ambient_rank()) throw DimensionMismatch("preimage: dimension mismatch");
  if (target.rank() == 0) return kernel_basis(m);
  Submodule k = kernel_basis(m.stack(target.basis()));
  return Submodule::span(m.rows(), k.basis().select_cols(0, m.rows()));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionMismatch("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Submodule(a.ambient_rank());
  if (a == b) return a;
  Submodule coords = preimage(a.basis(), b);
  return Submodule::span(a.ambient_rank(), coords.basis() * a.basis());
}

Submodule sum(const Submodule& a, const Submodule& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionMismatch("sum: ambient mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Submodule::span(a.ambient_rank(), a.basis().stack(b.basis()));
}

Submodule saturation(const Submodule& a) {
  if (a.is_zero()) return a;
  Submodule right_kernel = kernel_basis(a.basis().transpose());
  if (right_kernel.is_zero()) return Submodule::full(a.ambient_rank());
  return kernel_basis(right_kernel.basis().transpose());
}

Submodule scale(const Submodule& a, const Integer& factor) {
  return Submodule::span(a.ambient_rank(), factor * a.basis());
}

Submodule map_submodule(const Submodule& a, const IntMatrix& m) {
  if (m.rows() != a.ambient_rank()) throw DimensionMismatch("map_submodule: dimension mismatch");
  if (a.is_zero()) return Submodule(m.cols());
  return Submodule::span(m.cols(), a.basis() * m);
}

std::optional<IntVector> solve(const IntMatrix& m, std::span<const Integer> b) {
  if (b.size() != m.cols()) throw DimensionMismatch("solve: right-hand side length");
  HermiteForm h = hermite(m, true);
  Submodule basis = Submodule::span(m.cols(), h.basis);
  auto y = basis.coordinates(b);
  if (!y) return std::nullopt;
  return IntVector(std::span<const Integer>(*y) * h.transform.select_rows(0, h.rank()));
}

// ---------------------------------------------------------------------------
// QuotientGroup and homomorphisms

QuotientGroup::QuotientGroup(std::size_t generators, Submodule relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.ambient_rank() != generators_)
    throw DimensionMismatch("QuotientGroup: relation ambient differs from generator count");
}

QuotientGroup QuotientGroup::free(std::size_t generators) {
  return QuotientGroup(generators, Submodule(generators));
}

QuotientGroup QuotientGroup::modular(std::size_t generators, const Integer& modulus) {
  return QuotientGroup(generators, Submodule::span(generators, modulus * IntMatrix::identity(generators)));
}

AbelianInvariants QuotientGroup::invariants() const {
  return cokernel_invariants(relations_.basis());
}

bool QuotientGroup::is_trivial() const { return relations_.rank() == generators_ && invariants().is_trivial(); }

bool GroupHom::well_defined() const {
  if (matrix.rows() != source.generators() || matrix.cols() != target.generators()) return false;
  const auto& rel = source.relations();
  for (std::size_t i = 0; i < rel.rank(); ++i)
    if (!target.relations().contains(rel.basis().row(i) * matrix)) return false;
  return true;
}

bool GroupHom::is_surjective() const {
  Submodule s = sum(cyclocover::image(matrix), target.relations());
  return s == Submodule::full(target.generators());
}

Submodule GroupHom::kernel_lattice() const { return preimage(matrix, target.relations()); }

AbelianInvariants GroupHom::kernel() const {
  Submodule k = kernel_lattice();
  IntMatrix rel = k.coordinates_of_rows(source.relations().basis());
  if (rel.rows() == 0) rel = IntMatrix(0, k.rank());
  return cokernel_invariants(rel);
}

bool GroupHom::is_injective() const { return kernel().is_trivial(); }

AbelianInvariants GroupHom::image() const {
  Submodule s = sum(cyclocover::image(matrix), target.relations());
  IntMatrix rel = s.coordinates_of_rows(target.relations().basis());
  if (rel.rows() == 0) rel = IntMatrix(0, s.rank());
  return cokernel_invariants(rel);
}

AbelianInvariants GroupHom::cokernel() const {
  Submodule s = sum(cyclocover::image(matrix), target.relations());
  IntMatrix b = s.basis();
  if (b.rows() == 0) b = IntMatrix(0, target.generators());
  return cokernel_invariants(b);
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (f.matrix.cols() != g.matrix.rows()) throw DimensionMismatch("compose: incompatible homomorphisms");
  return GroupHom{f.source, g.target, f.matrix * g.matrix};
}

bool equal_as_maps(const GroupHom& f, const GroupHom& g) {
  if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols()) return false;
  IntMatrix diff = f.matrix - g.matrix;
  for (std::size_t i = 0; i < diff.rows(); ++i)
    if (!g.target.relations().contains(diff.row(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SubQuotient

SubQuotient::SubQuotient(Submodule numerator, Submodule denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (!numerator_.contains(denominator_))
    throw PreconditionViolation("SubQuotient: denominator not contained in numerator");
  const std::size_t a = numerator_.rank();
  const std::size_t b = denominator_.rank();
  IntMatrix rel = numerator_.coordinates_of_rows(denominator_.basis());
  if (rel.rows() == 0) rel = IntMatrix(0, a);
  SmithForm s = snf(rel);
  invariants_.free_rank = a - b;
  for (std::size_t i = 0; i < b; ++i)
    if (s.D(i, i) != 1) invariants_.invariant_factors.push_back(s.D(i, i));
  projection_ = s.V.select_cols(b, a - b);
  IntMatrix v_inv = unimodular_inverse(s.V);
  section_ = v_inv.select_rows(b, a - b) * numerator_.basis();
  if (section_.rows() == 0) section_ = IntMatrix(0, numerator_.ambient_rank());
}

IntVector SubQuotient::project(std::span<const Integer> v) const {
  auto c = numerator_.coordinates(v);
  if (!c) throw PreconditionViolation("SubQuotient::project: vector outside numerator");
  return std::span<const Integer>(*c) * projection_;
}

}  // namespace cyclocover
