#include "trilinear/schur.hpp"

#include <algorithm>

namespace trilinear {

namespace {

const std::array<std::pair<std::size_t, std::size_t>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

std::vector<std::pair<std::size_t, std::size_t>> quadric_monomials() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t l = k; l < 4; ++l) out.emplace_back(k, l);
  }
  return out;
}

Vector unit(Field f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = Scalar(f, 1);
  return v;
}

DenseMatrix scaled_canonically(const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return m(i, j).inverse() * m;
    }
  }
  return m;
}

DenseMatrix to_field(const DenseMatrix& m, Field f) {
  if (m.field() == f) return m;
  if (!m.field().is_rational() || !f.is_prime()) throw FieldMismatch("cannot move matrix between these fields");
  DenseMatrix out(m.rows(), m.cols(), f);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(f, m(i, j).rational());
  }
  return out;
}

std::vector<MultiPoly> linear_images(const DenseMatrix& m) {
  // x_l ↦ Σ_k m[l][k] y_k
  std::vector<MultiPoly> out;
  for (std::size_t l = 0; l < m.rows(); ++l) out.push_back(MultiPoly::linear(m.field(), m.row(l)));
  return out;
}

}  // namespace

DenseMatrix schur_map(const TriTensor& t) {
  require_334(t);
  Field f = t.field();
  auto mons = quadric_monomials();
  DenseMatrix out(9, mons.size(), f);
  Scalar quarter = Scalar(f, 4).inverse();
  for (std::size_t c = 0; c < mons.size(); ++c) {
    auto [k, l] = mons[c];
    DenseMatrix m = slice(t, 2, unit(f, 4, k));
    DenseMatrix mp = slice(t, 2, unit(f, 4, l));
    for (std::size_t pi = 0; pi < 3; ++pi) {
      auto [i, i2] = kPairs[pi];
      for (std::size_t pj = 0; pj < 3; ++pj) {
        auto [j, j2] = kPairs[pj];
        Scalar v = m(i, j) * mp(i2, j2) - m(i2, j) * mp(i, j2) - m(i, j2) * mp(i2, j) + m(i2, j2) * mp(i, j);
        out(pi * 3 + pj, c) = quarter * v;
      }
    }
  }
  return out;
}

Vector SchurQuadric::as_monomial_vector() const {
  Vector v;
  for (auto [k, l] : quadric_monomials()) v.push_back(k == l ? q(k, k) : q(k, l) + q(l, k));
  return v;
}

SchurQuadric schur_quadric(const TriTensor& t) {
  auto ker = matrix_kernel(schur_map(t));
  if (ker.size() != 1) throw SchurDegeneracy(ker.size());
  Field f = t.field();
  Scalar half = Scalar(f, 2).inverse();
  DenseMatrix q(4, 4, f);
  auto mons = quadric_monomials();
  for (std::size_t c = 0; c < mons.size(); ++c) {
    auto [k, l] = mons[c];
    if (k == l) {
      q(k, k) = ker[0][c];
    } else {
      q(k, l) = half * ker[0][c];
      q(l, k) = q(k, l);
    }
  }
  SchurQuadric out;
  out.q = scaled_canonically(q);
  out.nondegenerate = !determinant(out.q).is_zero();
  return out;
}

DoubleSix double_six(const TriTensor& t, BasePointMode mode) {
  require_334(t);
  TriTensor work = t;
  if (mode.kind == BasePointMode::Kind::Scan && t.field().is_rational()) work = t.reduce_mod(mode.prime);
  DoubleSix ds;
  ds.field = work.field();
  auto bu = base_points(work, Side::U, mode);
  auto bw = base_points(work, Side::W, mode);
  if (!bu.complete || !bw.complete) {
    throw DoubleSixError("base points not all defined over " + ds.field.name() + " (U side: " +
                         std::to_string(bu.points.size()) + ", W side: " + std::to_string(bw.points.size()) +
                         "); work over a scan field");
  }
  ds.u_points = bu.points;
  ds.w_points = bw.points;
  auto lines = [&](const std::vector<PlanePoint>& pts, Side side) {
    std::vector<ProjectiveLine> out;
    for (std::size_t z = 0; z < pts.size(); ++z) {
      auto ker = matrix_kernel(slice(work, side_leg(side), pts[z].coords()));
      if (ker.size() != 2) {
        throw DoubleSixError(std::string("slice at ") + side_name(side) + "-point " + pts[z].to_string() +
                             " has kernel dimension " + std::to_string(ker.size()) + ", expected 2");
      }
      out.push_back({ker, side, z});
    }
    return out;
  };
  ds.a_lines = lines(ds.u_points, Side::U);
  ds.a_prime_lines = lines(ds.w_points, Side::W);
  ds.span_table.assign(6, std::vector<std::size_t>(6, 0));
  for (std::size_t z = 0; z < 6; ++z) {
    std::vector<std::size_t> disjoint;
    for (std::size_t w = 0; w < 6; ++w) {
      std::vector<Vector> both = ds.a_lines[z].span;
      both.insert(both.end(), ds.a_prime_lines[w].span.begin(), ds.a_prime_lines[w].span.end());
      ds.span_table[z][w] = span_dimension(ds.field, 4, both);
      if (ds.span_table[z][w] == 4) disjoint.push_back(w);
    }
    if (disjoint.size() != 1) {
      throw DoubleSixError("line A_" + std::to_string(z) + " is disjoint from " + std::to_string(disjoint.size()) +
                           " of the A' lines, expected exactly 1");
    }
    ds.matching.emplace_back(z, disjoint[0]);
  }
  std::vector<std::size_t> targets;
  for (auto [z, w] : ds.matching) targets.push_back(w);
  std::sort(targets.begin(), targets.end());
  if (std::unique(targets.begin(), targets.end()) != targets.end()) {
    throw DoubleSixError("disjointness pairing is not a perfect matching");
  }
  return ds;
}

OrthogonalityResult orthogonality_check(const DenseMatrix& form, const DoubleSix& ds) {
  DenseMatrix b = to_field(form, ds.field);
  if (b.is_zero()) throw std::invalid_argument("zero bilinear form");
  OrthogonalityResult out;
  auto eval = [&](const Vector& x, const Vector& y) { return dot(x, trilinear::apply(b, y)); };
  for (auto [z, w] : ds.matching) {
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t r = 0; r < 2; ++r) {
        Scalar v = eval(ds.a_lines[z].span[s], ds.a_prime_lines[w].span[r]);
        if (v.is_zero()) {
          ++out.exact_zeros;
        } else {
          out.violations.push_back("pair (" + std::to_string(z) + "," + std::to_string(w) + ") basis (" +
                                   std::to_string(s) + "," + std::to_string(r) + ") = " + v.to_string());
        }
      }
    }
  }
  for (std::size_t z = 0; z < ds.a_lines.size() && !out.cross_pair_nonzero; ++z) {
    for (std::size_t w = 0; w < ds.a_prime_lines.size() && !out.cross_pair_nonzero; ++w) {
      if (ds.matching[z].second == w) continue;
      for (const auto& x : ds.a_lines[z].span) {
        for (const auto& y : ds.a_prime_lines[w].span) {
          if (!eval(x, y).is_zero()) out.cross_pair_nonzero = true;
        }
      }
    }
  }
  out.ok = out.violations.empty() && out.cross_pair_nonzero;
  return out;
}

OrthogonalityResult orthogonality_check(const SchurQuadric& q, const DoubleSix& ds) {
  if (!q.nondegenerate) throw std::invalid_argument("orthogonality needs a nondegenerate quadric");
  return orthogonality_check(q.dual(), ds);
}

bool schur_carries_u_to_uprime(const TriTensor& t) {
  auto inv = cross_product_involution(t);
  auto q = schur_quadric(t);
  Field f = t.field();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < 3; ++i) {
    Vector v = zero_vector(f, 12);
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        Scalar s(f);
        for (std::size_t l = 0; l < 4; ++l) s += t(i, j, l) * q.q(l, k);
        v[j * 4 + k] = s;
      }
    }
    images.push_back(std::move(v));
  }
  return canonical_basis(f, 12, images) == inv.uprime_basis;
}

const std::vector<std::string>& cubic_conventions() {
  static const std::vector<std::string> names{
      "C(q*y) ~ C'(y)",
      "C'(q^-1*x) ~ C(x)",
      "C'(q*x) ~ C(x)",
      "C(q^-1*y) ~ C'(y)",
  };
  return names;
}

CubicCorrespondence cubic_correspondence_check(const TriTensor& t) {
  auto q = schur_quadric(t);
  if (!q.nondegenerate) throw std::invalid_argument("cubic correspondence needs a nondegenerate quadric");
  MultiPoly c = det_cubic(t);
  MultiPoly cp = det_cubic(reversing_construction(t));
  auto sq = linear_images(q.q);
  auto sqi = linear_images(q.dual());
  std::array<bool, 4> holds{
      proportional(c.substitute(sq), cp),
      proportional(cp.substitute(sqi), c),
      proportional(cp.substitute(sq), c),
      proportional(c.substitute(sqi), cp),
  };
  CubicCorrespondence out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (holds[i]) out.holding.push_back(cubic_conventions()[i]);
  }
  bool first_class = holds[0] && holds[1];
  bool second_class = holds[2] && holds[3];
  out.ok = (first_class && !holds[2] && !holds[3]) || (second_class && !holds[0] && !holds[1]);
  if (out.ok) out.convention = first_class ? cubic_conventions()[0] : cubic_conventions()[2];
  return out;
}

bool reversed_quadric_is_dual(const TriTensor& t) {
  auto q = schur_quadric(t);
  auto qr = schur_quadric(reversing_construction(t));
  return qr.q == scaled_canonically(q.dual());
}

}  // namespace trilinear
