#include "trilinear/hilbert_burch.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "trilinear/roots.hpp"

namespace trilinear {

ProjectivePoint::ProjectivePoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("empty point");
  std::size_t lead = 0;
  while (lead < coords_.size() && coords_[lead].is_zero()) ++lead;
  if (lead == coords_.size()) throw std::invalid_argument("the zero vector is not a projective point");
  Scalar s = coords_[lead].inverse();
  for (auto& c : coords_) c *= s;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ':';
    out += coords_[i].to_string();
  }
  return out + ")";
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

ProjectivePoint point_from_residues(Field fp, const std::vector<std::uint32_t>& x) {
  Vector v;
  for (auto c : x) v.emplace_back(fp, static_cast<long>(c));
  return ProjectivePoint(std::move(v));
}

std::vector<ProjectivePoint> parse_points(Field f, const std::string& text) {
  std::vector<ProjectivePoint> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' at offset " + std::to_string(pos));
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated point");
    std::string body = text.substr(pos + 1, close - pos - 1);
    Vector coords;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ':')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
      coords.push_back(Scalar::parse(f, item));
    }
    out.emplace_back(std::move(coords));
    pos = close + 1;
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ',') throw std::invalid_argument("expected ',' between points");
      ++pos;
      skip_ws();
    }
  }
  return out;
}

namespace {

MultiPoly poly_from(Field f, std::size_t nvars, const std::vector<Exponent>& basis, const Vector& coeffs) {
  MultiPoly p(f, nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coeffs[i].is_zero()) p += MultiPoly::monomial(f, nvars, basis[i], coeffs[i]);
  }
  return p;
}

Exponent times_var(Exponent e, std::size_t v) {
  ++e[v];
  return e;
}

}  // namespace

std::vector<MultiPoly> cubics_through_points(const std::vector<PlanePoint>& pts) {
  if (pts.size() != 6) throw std::invalid_argument("expected 6 points, got " + std::to_string(pts.size()));
  Field f = pts[0].field();
  auto basis = monomial_basis(3, 3);
  DenseMatrix ev(6, basis.size(), f);
  for (std::size_t r = 0; r < 6; ++r) {
    if (pts[r].size() != 3) throw ShapeError("plane points need 3 coordinates");
    for (std::size_t c = 0; c < basis.size(); ++c) {
      ev(r, c) = MultiPoly::monomial(f, 3, basis[c], Scalar(f, 1)).evaluate(pts[r].coords());
    }
  }
  auto ker = matrix_kernel(ev);
  if (ker.size() != 4) {
    throw SpecialPosition("points in special position: cubic system has dimension " + std::to_string(ker.size()),
                          ker.size());
  }
  std::vector<MultiPoly> out;
  for (const auto& v : ker) out.push_back(poly_from(f, 3, basis, v));
  return out;
}

LinearFormMatrix linear_syzygies(const std::vector<MultiPoly>& cubics) {
  if (cubics.size() != 4) throw std::invalid_argument("expected 4 cubics");
  Field f = cubics[0].field();
  auto b3 = monomial_basis(3, 3);
  auto b4 = monomial_basis(3, 4);
  DenseMatrix a(b4.size(), 12, f);
  for (std::size_t m = 0; m < 4; ++m) {
    if (cubics[m].nvars() != 3 || !cubics[m].is_homogeneous() || cubics[m].degree() != 3) {
      throw std::invalid_argument("syzygies need homogeneous cubics in 3 variables");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      for (const auto& [e, c] : cubics[m].terms()) a(monomial_index(3, times_var(e, i)), m * 3 + i) += c;
    }
  }
  auto ker = matrix_kernel(a);
  if (ker.size() != 3) {
    throw SpecialPosition("linear syzygy space has dimension " + std::to_string(ker.size()), ker.size());
  }
  LinearFormMatrix rows;
  for (const auto& s : ker) {
    std::vector<MultiPoly> row;
    for (std::size_t m = 0; m < 4; ++m) row.push_back(MultiPoly::linear(f, {s[m * 3], s[m * 3 + 1], s[m * 3 + 2]}));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<MultiPoly> maximal_minors(const LinearFormMatrix& m) {
  if (m.size() != 3 || m[0].size() != 4) throw ShapeError("maximal minors need a 3x4 matrix");
  std::vector<MultiPoly> out;
  for (std::size_t d = 0; d < 4; ++d) {
    std::vector<std::vector<MultiPoly>> sub(3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        if (c != d) sub[r].push_back(m[r][c]);
      }
    }
    MultiPoly det = poly_det(sub);
    out.push_back(d % 2 ? -det : det);
  }
  return out;
}

bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  int deg = std::max(a[0].degree(), b[0].degree());
  if (deg < 0) return false;
  std::size_t n = a[0].nvars();
  Field f = a[0].field();
  auto basis = monomial_basis(n, static_cast<unsigned>(deg));
  std::vector<Vector> va, vb;
  for (const auto& p : a) va.push_back(p.coefficients_in(basis));
  for (const auto& p : b) vb.push_back(p.coefficients_in(basis));
  return canonical_basis(f, basis.size(), va) == canonical_basis(f, basis.size(), vb);
}

TriTensor points_to_tensor(const std::vector<PlanePoint>& pts) {
  auto cubics = cubics_through_points(pts);
  auto syz = linear_syzygies(cubics);
  Field f = pts[0].field();
  TriTensor t({3, 3, 4}, f);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t m = 0; m < 4; ++m) {
      for (std::size_t i = 0; i < 3; ++i) {
        Exponent e{};
        e[i] = 1;
        t(i, a, m) = syz[a][m].coefficient(e);
      }
    }
  }
  return t;
}

const char* side_name(Side s) { return s == Side::U ? "U" : "W"; }

namespace {

BasePoints scan_points(const TriTensor& t, Side side, std::uint32_t p, const std::string& mode) {
  require_334(t);
  Field fp = Field::prime(p);
  BasePoints out;
  out.mode = mode;
  scan_slice_ranks(t, side_leg(side), p, [&](const std::vector<std::uint32_t>& x, std::size_t r) {
    if (r <= 2) out.points.push_back(point_from_residues(fp, x));
  });
  std::sort(out.points.begin(), out.points.end());
  out.complete = out.points.size() == 6;
  if (!out.complete) {
    out.note = std::to_string(out.points.size()) + " points over F_" + std::to_string(p) +
               "; the remaining ones are not defined over this field or the locus is not reduced";
    if (out.points.size() > 6) out.note = "rank-drop locus has more than 6 points; it is not 0-dimensional";
  }
  return out;
}

bool slice_rank_at_most_2(const TriTensor& t, Side side, const ProjectivePoint& pt) {
  return rank(slice(t, side_leg(side), pt.coords())) <= 2;
}

BasePoints rational_points_by_eigenvectors(const TriTensor& t, Side side) {
  Field f = t.field();
  BasePoints out;
  out.mode = "minors";
  auto minors = maximal_minors(symbolic_slice(t, side_leg(side)));
  auto b3 = monomial_basis(3, 3);
  auto b4 = monomial_basis(3, 4);

  std::vector<Vector> v3, v4;
  for (const auto& m : minors) {
    if (!m.is_zero()) v3.push_back(m.coefficients_in(b3));
  }
  std::vector<std::size_t> piv3, piv4;
  if (v3.empty()) {
    out.note = "all maximal minors vanish";
    return out;
  }
  rref(DenseMatrix::from_rows(f, v3), &piv3);
  if (piv3.size() != 4) {
    out.note = "maximal minors span a space of dimension " + std::to_string(piv3.size());
    return out;
  }
  for (const auto& m : minors) {
    for (std::size_t a = 0; a < 3; ++a) v4.push_back((MultiPoly::variable(f, 3, a) * m).coefficients_in(b4));
  }
  DenseMatrix r4 = rref(DenseMatrix::from_rows(f, v4), &piv4);
  if (piv4.size() != 9) {
    out.note = "degree-4 part of the minors ideal has dimension " + std::to_string(piv4.size()) + ", not 9";
    return out;
  }
  std::vector<std::size_t> free3, free4;
  for (std::size_t c = 0; c < b3.size(); ++c) {
    if (std::find(piv3.begin(), piv3.end(), c) == piv3.end()) free3.push_back(c);
  }
  for (std::size_t c = 0; c < b4.size(); ++c) {
    if (std::find(piv4.begin(), piv4.end(), c) == piv4.end()) free4.push_back(c);
  }
  const std::size_t n = free4.size();  // 6

  // A functional on S^4 vanishing on the ideal, from its values on the free
  // monomials.
  auto full4 = [&](const Vector& y) {
    Vector phi = zero_vector(f, b4.size());
    for (std::size_t l = 0; l < n; ++l) phi[free4[l]] = y[l];
    for (std::size_t r = 0; r < piv4.size(); ++r) {
      Scalar s(f);
      for (std::size_t l = 0; l < n; ++l) s += r4(r, free4[l]) * y[l];
      phi[piv4[r]] = -s;
    }
    return phi;
  };
  // Multiplication by a linear form, dual side: N4 → N3.
  auto dual_mult = [&](const Vector& lin) {
    DenseMatrix op(free3.size(), n, f);
    for (std::size_t j = 0; j < n; ++j) {
      Vector y = zero_vector(f, n);
      y[j] = Scalar(f, 1);
      Vector phi = full4(y);
      for (std::size_t l = 0; l < free3.size(); ++l) {
        Scalar s(f);
        for (std::size_t a = 0; a < 3; ++a) s += lin[a] * phi[monomial_index(3, times_var(b3[free3[l]], a))];
        op(l, j) = s;
      }
    }
    return op;
  };

  std::mt19937_64 rng(0x5eed);
  auto random_form = [&] {
    Vector v;
    for (int a = 0; a < 3; ++a) v.emplace_back(f, static_cast<long>(rng() % 19) - 9);
    return v;
  };

  std::vector<PlanePoint> best;
  for (int attempt = 0; attempt < 6 && best.size() < 6; ++attempt) {
    DenseMatrix th = dual_mult(random_form());
    if (determinant(th).is_zero()) continue;
    DenseMatrix m = inverse(th) * dual_mult(random_form());
    auto cp = characteristic_polynomial(m);
    std::vector<mpq_class> q;
    for (const auto& c : cp) q.push_back(c.rational());
    std::vector<PlanePoint> found;
    for (const auto& lambda : rational_roots(q)) {
      DenseMatrix shifted = m - Scalar(f, lambda) * DenseMatrix::identity(n, f);
      auto ker = matrix_kernel(shifted);
      if (ker.size() != 1) continue;
      Vector phi = full4(ker[0]);
      for (std::size_t i = 0; i < 3; ++i) {
        Exponent e{};
        e[i] = 4;
        const Scalar& pure = phi[monomial_index(3, e)];
        if (pure.is_zero()) continue;
        Vector coords;
        for (std::size_t j = 0; j < 3; ++j) {
          Exponent g{};
          g[i] = 3;
          ++g[j];
          coords.push_back(phi[monomial_index(3, g)] / pure);
        }
        PlanePoint pt(std::move(coords));
        if (slice_rank_at_most_2(t, side, pt)) found.push_back(pt);
        break;
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.size() > best.size()) best = found;
  }
  out.points = best;
  out.complete = best.size() == 6;
  if (!out.complete) {
    out.note = std::to_string(best.size()) +
               " rational points recovered; the others are irrational, infinitely near or not separated";
  }
  return out;
}

}  // namespace

BasePoints base_points(const TriTensor& t, Side side, BasePointMode mode) {
  require_334(t);
  Field f = t.field();
  if (mode.kind == BasePointMode::Kind::Scan) {
    if (f.is_prime() && f.modulus() != mode.prime) {
      throw FieldMismatch("scan prime differs from the tensor's field " + f.name());
    }
    return scan_points(t, side, mode.prime, "scan");
  }
  if (f.is_prime()) {
    if (f.modulus() > 2000) {
      BasePoints out;
      out.mode = "minors";
      out.note = "prime field too large for an exhaustive search";
      return out;
    }
    return scan_points(t, side, f.modulus(), "minors");
  }
  return rational_points_by_eigenvectors(t, side);
}

SliceRankScan min_slice_rank_scan(const TriTensor& t, int leg, std::uint32_t p) {
  Field fp = Field::prime(p);
  SliceRankScan out;
  bool first = true;
  scan_slice_ranks(t, leg, p, [&](const std::vector<std::uint32_t>& x, std::size_t r) {
    if (first || r < out.min_rank) {
      out.min_rank = r;
      out.witness = point_from_residues(fp, x);
      first = false;
    }
  });
  return out;
}

}  // namespace trilinear
