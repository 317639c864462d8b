#include "trilinear/en_resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace trilinear {

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

int permutation_sign(const std::vector<std::size_t>& seq) {
  int s = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) s = -s;
    }
  }
  return s;
}

ComplexTerm make_term(ComplexTerm::Kind kind, std::size_t f, std::size_t g, std::size_t i, std::size_t power) {
  ComplexTerm term;
  term.kind = kind;
  term.exterior = i;
  term.power = power;
  term.twist = -static_cast<int>(i);
  auto mons = monomial_basis(g, static_cast<unsigned>(power));
  for (const auto& set : combinations(f, i)) {
    for (const auto& m : mons) term.basis.emplace_back(set, m);
  }
  return term;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& set, std::size_t drop) {
  std::vector<std::size_t> out;
  for (auto e : set) {
    if (e != drop) out.push_back(e);
  }
  return out;
}

unsigned long long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  unsigned long long r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return r;
}

long symmetric_dim(std::size_t nvars, long degree) {
  if (degree < 0) return 0;
  return static_cast<long>(binomial(degree + static_cast<long>(nvars) - 1, static_cast<long>(nvars) - 1));
}

// φ_{b,c}(x) = Σ_a B[a][b][c] x_a, one row per W2 index.
std::vector<std::vector<MultiPoly>> phi_matrix(const TriTensor& t) {
  const auto& d = t.dims();
  std::vector<std::vector<MultiPoly>> phi(d[1], std::vector<MultiPoly>(d[2]));
  for (std::size_t b = 0; b < d[1]; ++b) {
    for (std::size_t c = 0; c < d[2]; ++c) {
      Vector coeffs = zero_vector(t.field(), d[0]);
      for (std::size_t a = 0; a < d[0]; ++a) coeffs[a] = t(a, b, c);
      phi[b][c] = MultiPoly::linear(t.field(), coeffs);
    }
  }
  return phi;
}

}  // namespace

std::string ComplexTerm::label() const {
  std::string s = "L^" + std::to_string(exterior) + (kind == Kind::Symmetric ? " S^" : " D_") + std::to_string(power);
  return s + " O(" + std::to_string(twist) + ")";
}

long GradedComplex::alternating_rank_sum() const {
  long s = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    long r = static_cast<long>(terms[k].rank());
    s += k % 2 == 0 ? r : -r;
  }
  return s;
}

TriTensor v_first(const TriTensor& t) { return t.permute_legs({2, 0, 1}); }

GradedComplex en_complex(const TriTensor& t, int twist) {
  const auto& dims = t.dims();
  const long n1 = static_cast<long>(dims[0]);
  const long g = static_cast<long>(dims[1]);
  const long f = static_cast<long>(dims[2]);
  const long d1 = n1 - 1, d2 = g - 1, d3 = f - 1;
  if (d1 + d2 < d3 + 1) {
    throw std::invalid_argument("incidence variety is empty for dims (" + std::to_string(n1) + "," +
                                std::to_string(g) + "," + std::to_string(f) + ")");
  }
  const bool cor2 = twist >= d3 + 1 - d2 && twist >= 0;
  const bool cor3 = twist > 0 && twist < d3 + 1 - d2;
  if (!cor2 && !cor3) {
    throw std::invalid_argument("twist " + std::to_string(twist) + " is outside both regimes for these dims");
  }
  using Kind = ComplexTerm::Kind;
  GradedComplex c;
  c.field = t.field();
  c.nvars = dims[0];
  c.regime = cor2 ? "symmetric" : "jump";
  for (long i = 0; i <= std::min<long>(twist, f); ++i) {
    c.terms.push_back(make_term(Kind::Symmetric, f, g, i, twist - i));
  }
  if (cor3) {
    for (long i = twist + g; i <= f; ++i) c.terms.push_back(make_term(Kind::Divided, f, g, i, i - twist - g));
  }

  auto phi = phi_matrix(t);
  const MultiPoly zero(c.field, c.nvars);
  for (std::size_t pos = 1; pos < c.terms.size(); ++pos) {
    const auto& src = c.terms[pos];
    const auto& dst = c.terms[pos - 1];
    std::map<std::pair<std::vector<std::size_t>, Exponent>, std::size_t> index;
    for (std::size_t r = 0; r < dst.basis.size(); ++r) index[dst.basis[r]] = r;
    PolyMatrix m(dst.rank(), std::vector<MultiPoly>(src.rank(), zero));
    for (std::size_t col = 0; col < src.basis.size(); ++col) {
      const auto& [set, mono] = src.basis[col];
      if (src.kind == Kind::Symmetric || dst.kind == Kind::Divided) {
        for (std::size_t pm = 0; pm < set.size(); ++pm) {
          Scalar sign(c.field, pm % 2 == 0 ? 1 : -1);
          auto rest = without(set, set[pm]);
          for (long b = 0; b < g; ++b) {
            Exponent e = mono;
            Scalar factor = sign;
            if (src.kind == Kind::Symmetric) {
              ++e[b];
            } else {
              if (e[b] == 0) continue;
              factor *= Scalar(c.field, static_cast<long>(e[b]));
              --e[b];
            }
            m[index.at({rest, e})][col] += factor * phi[b][set[pm]];
          }
        }
      } else {
        // Λ^{t+g} ⊗ D_0 → Λ^t ⊗ S^0 by the g×g minors of φ.
        for (const auto& pick : combinations(set.size(), static_cast<std::size_t>(g))) {
          std::vector<std::size_t> cols, order;
          for (auto q : pick) cols.push_back(set[q]);
          std::vector<std::size_t> rest;
          for (auto e : set) {
            if (std::find(cols.begin(), cols.end(), e) == cols.end()) rest.push_back(e);
          }
          order = cols;
          order.insert(order.end(), rest.begin(), rest.end());
          std::vector<std::vector<MultiPoly>> minor(g);
          for (long b = 0; b < g; ++b) {
            for (auto cc : cols) minor[b].push_back(phi[b][cc]);
          }
          Scalar sign(c.field, permutation_sign(order));
          m[index.at({rest, Exponent{}})][col] += sign * poly_det(minor);
        }
      }
    }
    c.differentials.push_back(std::move(m));
  }
  return c;
}

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw ShapeError("polynomial matrix shapes do not compose");
  const MultiPoly& any = a[0][0];
  PolyMatrix out(a.size(), std::vector<MultiPoly>(b[0].size(), MultiPoly(any.field(), any.nvars())));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

DdResult verify_dd_zero(const GradedComplex& c) {
  DdResult out;
  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
    auto prod = poly_matmul(c.differentials[k], c.differentials[k + 1]);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      for (std::size_t j = 0; j < prod[i].size(); ++j) {
        if (!prod[i][j].is_zero()) {
          out.ok = false;
          out.first_nonzero = "d" + std::to_string(k) + "*d" + std::to_string(k + 1) + " entry (" +
                              std::to_string(i) + "," + std::to_string(j) + ") = " + prod[i][j].to_string();
          return out;
        }
      }
    }
  }
  return out;
}

DenseMatrix evaluate(const PolyMatrix& m, std::size_t rows, std::size_t cols, Field f, const Vector& x) {
  DenseMatrix out(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j].evaluate(x);
  }
  return out;
}

std::vector<std::size_t> evaluated_homology(const GradedComplex& c, const Vector& x) {
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    ranks.push_back(rank(evaluate(c.differentials[k], c.terms[k].rank(), c.terms[k + 1].rank(), c.field, x)));
  }
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k < c.terms.size(); ++k) {
    std::size_t in = k < ranks.size() ? ranks[k] : 0;
    std::size_t out = k > 0 ? ranks[k - 1] : 0;
    h.push_back(c.terms[k].rank() - in - out);
  }
  return h;
}

bool on_support(const TriTensor& t, const Vector& x) {
  DenseMatrix phi = slice(t, 0, x);
  return rank(phi) < t.dims()[1];
}

ExactnessResult verify_generic_exactness(const GradedComplex& c, const TriTensor& t, const std::vector<Vector>& points) {
  ExactnessResult out;
  for (const auto& x : points) {
    if (x.size() != c.nvars) throw ShapeError("sample point has the wrong length");
    if (on_support(t, x)) {
      ++out.points_on_support;
      continue;
    }
    ++out.points_used;
    auto h = evaluated_homology(c, x);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] != 0) {
        std::string where;
        for (const auto& s : x) where += (where.empty() ? "" : ":") + s.to_string();
        out.failures.push_back("homology " + std::to_string(h[k]) + " at position " + std::to_string(k) +
                               " over (" + where + ")");
      }
    }
  }
  out.conclusive = out.points_used > 0;
  out.exact = out.conclusive && out.failures.empty();
  return out;
}

HilbertFunctionTable hilbert_function(const GradedComplex& c, int d_min, int d_max) {
  HilbertFunctionTable table;
  for (int d = d_min; d <= d_max; ++d) {
    long v = 0;
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
      long contrib = static_cast<long>(c.terms[k].rank()) * symmetric_dim(c.nvars, d + c.terms[k].twist);
      v += k % 2 == 0 ? contrib : -contrib;
    }
    table.degrees.push_back(d);
    table.values.push_back(v);
  }
  return table;
}

GammaScan gamma_points(const TriTensor& t, std::uint32_t p) {
  const auto& d = t.dims();
  auto res = tensor_residues(t, p);
  Field fp = Field::prime(p);
  GammaScan out;
  modp::for_each_projective_point(d[0], p, [&](const std::vector<std::uint32_t>& x) {
    // Rows c, columns b: the transpose of φ(x), whose kernel is the y side.
    modp::Matrix m(d[2], d[1], p);
    for (std::size_t a = 0; a < d[0]; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < d[1]; ++b) {
        for (std::size_t c = 0; c < d[2]; ++c) {
          std::uint32_t v = res[(a * d[1] + b) * d[2] + c];
          if (v != 0) m.at(c, b) = modp::add(m.at(c, b), modp::mul(v, x[a], p), p);
        }
      }
    }
    auto ker = modp::kernel(std::move(m));
    if (ker.empty()) return;
    if (ker.size() > 1) out.saturated = true;
    out.pairs.emplace_back(point_from_residues(fp, x), point_from_residues(fp, ker[0]));
  });
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace trilinear
