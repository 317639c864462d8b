#include "trilinear/poly.hpp"

#include <sstream>

namespace trilinear {

unsigned degree_of(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

void fill_basis(std::size_t nvars, std::size_t pos, unsigned remaining, Exponent& cur,
                std::vector<Exponent>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[pos] = static_cast<std::uint16_t>(k);
    fill_basis(nvars, pos + 1, remaining - k, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponent> monomial_basis(std::size_t nvars, unsigned degree) {
  if (nvars == 0 || nvars > kMaxVars) throw std::invalid_argument("variable count must be in 1..8");
  std::vector<Exponent> out;
  Exponent cur{};
  fill_basis(nvars, 0, degree, cur, out);
  return out;
}

std::size_t monomial_index(std::size_t nvars, const Exponent& e) {
  // Count the degree-d monomials that precede e in grlex order.
  unsigned remaining = degree_of(e);
  std::size_t idx = 0;
  auto count = [](std::size_t vars, unsigned deg) -> std::size_t {
    // C(deg + vars - 1, vars - 1)
    std::size_t r = 1;
    for (std::size_t i = 1; i < vars; ++i) r = r * (deg + i) / i;
    return r;
  };
  for (std::size_t pos = 0; pos + 1 < nvars; ++pos) {
    for (unsigned k = remaining; k > e[pos]; --k) idx += count(nvars - pos - 1, remaining - k);
    remaining -= e[pos];
  }
  return idx;
}

MultiPoly::MultiPoly(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {
  if (nvars > kMaxVars) throw std::invalid_argument("at most 8 variables supported");
}

MultiPoly MultiPoly::constant(Field f, std::size_t nvars, const Scalar& c) {
  MultiPoly p(f, nvars);
  p.add_term(Exponent{}, c);
  return p;
}

MultiPoly MultiPoly::variable(Field f, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  Exponent e{};
  e[i] = 1;
  return monomial(f, nvars, e, Scalar(f, 1));
}

MultiPoly MultiPoly::monomial(Field f, std::size_t nvars, const Exponent& e, const Scalar& c) {
  MultiPoly p(f, nvars);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear(Field f, const Vector& coeffs) {
  MultiPoly p(f, coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent e{};
    e[k] = 1;
    p.add_term(e, coeffs[k]);
  }
  return p;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == field_)) throw FieldMismatch("coefficient field differs from polynomial field");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (!(field_ == other.field_)) throw FieldMismatch("polynomials over different fields");
  if (nvars_ != other.nvars_) throw ShapeError("polynomials in different variable counts");
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = degree_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) != d) return false;
  }
  return true;
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(field_) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.field_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{};
      for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Scalar MultiPoly::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw ShapeError("evaluation point has wrong length");
  Scalar total(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw ShapeError("substitution needs one image per variable");
  std::size_t target_vars = images.empty() ? 0 : images[0].nvars();
  MultiPoly out(field_, target_vars);
  // Cache powers of each image.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].push_back(constant(field_, target_vars, Scalar(field_, 1)));
  }
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(field_, target_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i]) term = term * powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

Vector MultiPoly::coefficients_in(const std::vector<Exponent>& basis) const {
  Vector v;
  v.reserve(basis.size());
  std::size_t found = 0;
  for (const auto& e : basis) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      v.emplace_back(field_);
    } else {
      v.push_back(it->second);
      ++found;
    }
  }
  if (found != terms_.size()) throw std::invalid_argument("polynomial has terms outside the given basis");
  return v;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coef = c.to_string();
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool constant_term = degree_of(e) == 0;
    bool unit = coef == "1";
    if (!unit || constant_term) os << coef;
    bool need_star = !unit || constant_term;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << i;
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly poly_det3(const std::array<std::array<MultiPoly, 3>, 3>& m) {
  std::vector<std::vector<MultiPoly>> rows(3);
  for (std::size_t i = 0; i < 3; ++i) rows[i].assign(m[i].begin(), m[i].end());
  return poly_det(rows);
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw ShapeError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw ShapeError("determinant of a non-square matrix");
  }
  if (n == 1) return m[0][0];
  MultiPoly total(m[0][0].field(), m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][j] * poly_det(minor);
    if (j % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

DenseMatrix graded_multiplication_matrix(const MultiPoly& f, unsigned src_degree) {
  if (f.is_zero() || !f.is_homogeneous()) {
    throw std::invalid_argument("multiplication matrix needs a nonzero homogeneous polynomial");
  }
  const std::size_t n = f.nvars();
  auto src = monomial_basis(n, src_degree);
  auto dst = monomial_basis(n, src_degree + static_cast<unsigned>(f.degree()));
  DenseMatrix m(dst.size(), src.size(), f.field());
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (const auto& [e, coef] : f.terms()) {
      Exponent sum{};
      for (std::size_t i = 0; i < kMaxVars; ++i) sum[i] = static_cast<std::uint16_t>(e[i] + src[c][i]);
      m(monomial_index(n, sum), c) += coef;
    }
  }
  return m;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.terms().size() != b.terms().size()) return false;
  const auto& [ea, ca] = *a.terms().begin();
  const auto& [eb, cb] = *b.terms().begin();
  if (ea != eb) return false;
  MultiPoly scaled = (ca / cb) * b;
  return scaled == a;
}

}  // namespace trilinear
