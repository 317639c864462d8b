#include "trilinear/matrix.hpp"

#include <optional>
#include <sstream>
#include <utility>

namespace trilinear {

namespace {

using QRow = std::vector<mpq_class>;

std::vector<QRow> to_mpq(const DenseMatrix& m) {
  std::vector<QRow> out(m.rows(), QRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).rational();
  }
  return out;
}

std::vector<std::size_t> rref_q(std::vector<QRow>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    mpq_class iv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(a[r][j]) != 0) a[r][j] *= iv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

std::vector<QRow> kernel_from_rref(const std::vector<QRow>& red, const std::vector<std::size_t>& pivots,
                                   std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QRow> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QRow v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QRow> exact_kernel_q(const DenseMatrix& m) {
  auto a = to_mpq(m);
  auto pivots = rref_q(a, m.cols());
  auto basis = kernel_from_rref(a, pivots, m.cols());
  rref_q(basis, m.cols());
  return basis;
}

using SparseIntRow = std::vector<std::pair<std::size_t, mpz_class>>;

/// Scales each row to integers, keeping only nonzero entries.
std::vector<SparseIntRow> integer_rows(const DenseMatrix& m) {
  std::vector<SparseIntRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j).rational();
      if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j).rational();
      if (sgn(q) == 0) continue;
      mpz_class v = q.get_num() * (l / q.get_den());
      rows[i].emplace_back(j, std::move(v));
    }
  }
  return rows;
}

bool rational_reconstruct(const mpz_class& u, const mpz_class& mod, mpq_class& out) {
  mpz_class bound;
  mpz_class half = mod / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = mod, r1 = u % mod;
  if (r1 < 0) r1 += mod;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

bool annihilates(const std::vector<SparseIntRow>& rows, const QRow& v) {
  mpz_class d = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<mpz_class> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) != 0) w[j] = v[j].get_num() * (d / v[j].get_den());
  }
  mpz_class acc;
  for (const auto& row : rows) {
    acc = 0;
    for (const auto& [j, a] : row) {
      if (sgn(w[j]) != 0) acc += a * w[j];
    }
    if (sgn(acc) != 0) return false;
  }
  return true;
}

/// Multimodular kernel over Q. Returns nothing when no certified answer was
/// reached within the prime budget.
std::optional<std::vector<QRow>> modular_kernel_q(const DenseMatrix& m) {
  const auto rows = integer_rows(m);
  const std::size_t cols = m.cols();
  std::optional<std::size_t> best_dim;
  std::vector<std::size_t> lead;
  std::vector<std::vector<mpz_class>> acc;
  mpz_class modulus = 1;

  for (std::uint32_t p : modp::certification_primes()) {
    modp::Matrix red(m.rows(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const auto& [j, a] : rows[i]) red.at(i, j) = static_cast<std::uint32_t>(mpz_fdiv_ui(a.get_mpz_t(), p));
    }
    auto ker = modp::kernel(std::move(red));
    std::vector<std::size_t> this_lead;
    for (const auto& v : ker) {
      std::size_t c = 0;
      while (v[c] == 0) ++c;
      this_lead.push_back(c);
    }
    if (!best_dim || ker.size() < *best_dim) {
      best_dim = ker.size();
      lead = this_lead;
      acc.assign(ker.size(), std::vector<mpz_class>(cols));
      for (std::size_t i = 0; i < ker.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) acc[i][j] = ker[i][j];
      }
      modulus = p;
    } else if (ker.size() > *best_dim || this_lead != lead) {
      continue;
    } else {
      mpz_class mi = modulus % p;
      std::uint32_t inv_m = modp::inv(static_cast<std::uint32_t>(mi.get_ui()), p);
      for (std::size_t i = 0; i < ker.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          auto x = static_cast<std::uint32_t>(mpz_fdiv_ui(acc[i][j].get_mpz_t(), p));
          std::uint32_t t = modp::mul(modp::sub(ker[i][j], x, p), inv_m, p);
          acc[i][j] += modulus * t;
        }
      }
      modulus *= p;
    }
    if (*best_dim == 0) return std::vector<QRow>{};

    std::vector<QRow> cand(acc.size(), QRow(cols));
    bool ok = true;
    for (std::size_t i = 0; i < acc.size() && ok; ++i) {
      for (std::size_t j = 0; j < cols && ok; ++j) ok = rational_reconstruct(acc[i][j], modulus, cand[i][j]);
    }
    if (!ok) continue;
    bool all = true;
    for (const auto& v : cand) {
      if (!annihilates(rows, v)) {
        all = false;
        break;
      }
    }
    // The candidate rows are in echelon form, hence independent; the modular
    // kernel dimension bounds the rational one from above.
    if (all) return cand;
  }
  return std::nullopt;
}

std::vector<QRow> kernel_q(const DenseMatrix& m) {
  if (m.rows() * m.cols() > 1600) {
    if (auto k = modular_kernel_q(m)) return *k;
  }
  return exact_kernel_q(m);
}

Vector to_scalars(Field f, const QRow& row) {
  Vector v;
  v.reserve(row.size());
  for (const auto& x : row) v.emplace_back(f, x);
  return v;
}

Vector to_scalars(Field f, const std::vector<std::uint32_t>& row) {
  Vector v;
  v.reserve(row.size());
  for (auto x : row) v.emplace_back(f, static_cast<long>(x));
  return v;
}

void require_same_field(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("matrices over different fields");
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar(f)) {}

DenseMatrix DenseMatrix::identity(std::size_t n, Field f) {
  DenseMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field f, const std::vector<Vector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  DenseMatrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].field() == f)) throw FieldMismatch("entry field differs from matrix field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

DenseMatrix DenseMatrix::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  DenseMatrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Vector DenseMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector DenseMatrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_) throw ShapeError("inner dimensions differ");
  DenseMatrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("shape mismatch in sum");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("shape mismatch in difference");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

DenseMatrix operator*(const Scalar& s, const DenseMatrix& m) {
  DenseMatrix c = m;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar(f)); }

Vector apply(const DenseMatrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw ShapeError("vector length does not match matrix columns");
  Vector out = zero_vector(m.field(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) throw ShapeError("dot of mismatched vectors");
  Scalar s(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

modp::Matrix reduce(const DenseMatrix& m, std::uint32_t p) {
  modp::Matrix out(m.rows(), m.cols(), p);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      if (x.field().is_prime()) {
        if (x.field().modulus() != p) throw FieldMismatch("cannot reduce between prime fields");
        out.at(i, j) = x.residue();
      } else {
        out.at(i, j) = reduce_mod(x.rational(), p);
      }
    }
  }
  return out;
}

DenseMatrix rref(const DenseMatrix& m, std::vector<std::size_t>* pivots) {
  Field f = m.field();
  DenseMatrix out(m.rows(), m.cols(), f);
  std::vector<std::size_t> piv;
  if (f.is_prime()) {
    auto red = reduce(m, f.modulus());
    piv = modp::rref(red);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(f, static_cast<long>(red.at(i, j)));
    }
  } else {
    auto a = to_mpq(m);
    piv = rref_q(a, m.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(f, a[i][j]);
    }
  }
  if (pivots) *pivots = piv;
  return out;
}

std::size_t rank(const DenseMatrix& m) {
  Field f = m.field();
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (f.is_prime()) return modp::rank(reduce(m, f.modulus()));
  // A modular rank never exceeds the rational one; full rank is final.
  std::size_t lower = 0;
  for (std::uint32_t p : modp::certification_primes()) {
    try {
      lower = modp::rank(reduce(m, p));
      break;
    } catch (const NotInvertible&) {
      continue;
    }
  }
  std::size_t full = std::min(m.rows(), m.cols());
  if (lower == full) return full;
  if (m.cols() - lower <= m.rows() - lower) return m.cols() - kernel_q(m).size();
  return m.rows() - kernel_q(m.transpose()).size();
}

std::size_t nullity(const DenseMatrix& m) { return m.cols() - rank(m); }

std::vector<Vector> matrix_kernel(const DenseMatrix& m) {
  Field f = m.field();
  std::vector<Vector> out;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Vector v = zero_vector(f, m.cols());
      v[j] = Scalar(f, 1);
      out.push_back(std::move(v));
    }
    return out;
  }
  if (f.is_prime()) {
    for (const auto& v : modp::kernel(reduce(m, f.modulus()))) out.push_back(to_scalars(f, v));
  } else {
    for (const auto& v : kernel_q(m)) out.push_back(to_scalars(f, v));
  }
  return out;
}

std::vector<Vector> canonical_basis(Field f, std::size_t dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  DenseMatrix m(vectors.size(), dim, f);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw ShapeError("spanning vector of wrong length");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  }
  std::vector<std::size_t> piv;
  DenseMatrix r = rref(m, &piv);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(r.row(i));
  return out;
}

std::size_t span_dimension(Field f, std::size_t dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw ShapeError("spanning vector of wrong length");
  }
  return rank(DenseMatrix::from_rows(f, vectors));
}

Scalar determinant(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  Field f = m.field();
  const std::size_t n = m.rows();
  DenseMatrix a = m;
  Scalar det(f, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar(f);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar iv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar fct = a(i, c) * iv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= fct * a(c, j);
    }
  }
  return det;
}

DenseMatrix inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Field f = m.field();
  DenseMatrix aug(n, 2 * n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(f, 1);
  }
  std::vector<std::size_t> piv;
  DenseMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw NotInvertible("singular matrix");
  DenseMatrix out(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  }
  return out;
}

DenseMatrix adjugate(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Field f = m.field();
  DenseMatrix out(n, n, f);
  if (n == 1) {
    out(0, 0) = Scalar(f, 1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      DenseMatrix minor(n - 1, n - 1, f);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Scalar cof = determinant(minor);
      // adj(m)[j][i] is the (i, j) cofactor
      out(j, i) = (i + j) % 2 ? -cof : cof;
    }
  }
  return out;
}

std::vector<Scalar> characteristic_polynomial(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Field f = m.field();
  if (f.is_prime() && f.modulus() <= n) throw std::invalid_argument("field too small to interpolate");
  // Newton interpolation of det(x I - m) at x = 0..n.
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Scalar x(f, static_cast<long>(k));
    xs.push_back(x);
    ys.push_back(determinant(x * DenseMatrix::identity(n, f) - m));
  }
  std::vector<Scalar> coef = ys;
  for (std::size_t lvl = 1; lvl <= n; ++lvl) {
    for (std::size_t i = n; i >= lvl; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - lvl]);
    }
  }
  std::vector<Scalar> poly(n + 1, Scalar(f));
  for (std::size_t i = n + 1; i-- > 0;) {
    // poly = poly * (x - xs[i]) + coef[i]
    std::vector<Scalar> next(n + 1, Scalar(f));
    for (std::size_t d = 0; d < n; ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[i];
    }
    next[0] += coef[i];
    poly = std::move(next);
  }
  return poly;
}

std::size_t bareiss_rank(const DenseMatrix& m) {
  if (!m.field().is_rational()) return rank(m);
  auto rows = integer_rows(m);
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto& [j, v] : rows[i]) a[i][j] = v;
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace trilinear
