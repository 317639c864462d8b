#include "trilinear/cohomology.hpp"

#include <stdexcept>

#include "trilinear/schur.hpp"

namespace trilinear {

namespace {

// a(a-1)...(a-k+1)/k! for any integer a.
long poly_binomial(long a, long k) {
  long num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

long binomial(long a, long k) { return a < k || k < 0 ? 0 : poly_binomial(a, k); }

}  // namespace

TruncatedSeries chern_polynomial() {
  TruncatedSeries one_plus_t(Field::rationals(), 4, {1, 1});
  TruncatedSeries one_plus_2t(Field::rationals(), 4, {1, 2});
  return one_plus_t.pow(9) * one_plus_2t.pow(3).inverse();
}

long euler_characteristic(long n) { return 9 * poly_binomial(n + 4, 3) - 3 * poly_binomial(n + 5, 3); }

long h0_line(long k) { return binomial(k + 3, 3); }
long h3_line(long k) { return binomial(-k - 1, 3); }

long h0_omega1(long k) { return k >= 2 ? binomial(k + 2, 2) * (k - 1) : 0; }
long h1_omega1(long k) { return k == 0 ? 1 : 0; }
long h3_omega1(long k) { return k <= -3 ? (1 - k) * binomial(-k - 1, 2) : 0; }

KernelBundleModel::KernelBundleModel(TriTensor t) : tensor_(std::move(t)) { require_334(tensor_); }

const DenseMatrix& KernelBundleModel::phi(long n) const {
  if (n < -1) throw std::invalid_argument("Φ_n is only defined for n ≥ -1");
  auto it = phi_cache_.find(n);
  if (it != phi_cache_.end()) return it->second;
  const Field f = tensor_.field();
  auto src = monomial_basis(4, static_cast<unsigned>(n + 1));
  auto big = monomial_basis(4, static_cast<unsigned>(n + 2));
  const std::size_t s = src.size(), b = big.size();
  DenseMatrix m(3 * s + 3 * b, 12 * s, f);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t mi = 0; mi < s; ++mi) {
        std::size_t col = (i * 4 + k) * s + mi;
        for (std::size_t j = 0; j < 3; ++j) m(j * s + mi, col) = tensor_(i, j, k);
        Exponent e = src[mi];
        ++e[k];
        m(3 * s + i * b + monomial_index(4, e), col) = Scalar(f, 1);
      }
    }
  }
  return phi_cache_.emplace(n, std::move(m)).first->second;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Computed:
      return "computed-exactly";
    case Provenance::ForcedVanishing:
      return "forced-vanishing";
    case Provenance::Bott:
      return "from-presentation-and-bott";
  }
  return "?";
}

const CohomologyRow& CohomologyTable::at(long n) const {
  for (const auto& r : rows) {
    if (r.n == n) return r;
  }
  throw std::out_of_range("twist " + std::to_string(n) + " not in table");
}

bool CohomologyTable::minimal_cohomology() const {
  for (const auto& r : rows) {
    long want_h1 = (r.n == -1 || r.n == -2) ? 3 : 0;
    if (r.h[1] != want_h1) return false;
    if (r.n < 0 && r.h[0] != 0) return false;
    if (r.n == 0 && r.h[0] != 6) return false;
    if (r.n >= -4 && r.n <= 0 && (r.h[2] != 0 || r.h[3] != 0)) return false;
  }
  return true;
}

CohomologyTable cohomology_table(const KernelBundleModel& model, long n_min, long n_max) {
  CohomologyTable table;
  for (long n = n_min; n <= n_max; ++n) {
    CohomologyRow row;
    row.n = n;
    row.chi = euler_characteristic(n);
    if (n >= -1) {
      const DenseMatrix& m = model.phi(n);
      std::size_t r = rank(m);
      row.h = {static_cast<long>(m.cols() - r), static_cast<long>(m.rows() - r), 0, 0};
      row.provenance = {Provenance::Computed, Provenance::Computed, Provenance::ForcedVanishing,
                        Provenance::ForcedVanishing};
    } else {
      const long k = n + 2;
      row.h[0] = 3 * h0_omega1(k);  // zero: k ≤ 0
      row.h[1] = 3 * h0_line(n + 1) + 3 * h1_omega1(k);
      row.h[2] = 0;
      row.h[3] = 3 * h3_omega1(k) - 3 * h3_line(n + 1);
      row.provenance.fill(Provenance::Bott);
    }
    table.rows.push_back(row);
  }
  return table;
}

MultiplicationCheck multiplication_check(const KernelBundleModel& model) {
  MultiplicationCheck out;
  const DenseMatrix& m = model.phi(-1);
  const Field f = model.tensor().field();
  std::size_t r = rank(m);
  if (m.rows() - r != 3) {
    out.diagnostic = "cokernel of Φ_-1 has dimension " + std::to_string(m.rows() - r) + ", expected 3";
    return out;
  }
  DenseMatrix wblock(3, 12, f), ublock(12, 12, f);
  for (std::size_t c = 0; c < 12; ++c) {
    for (std::size_t j = 0; j < 3; ++j) wblock(j, c) = m(j, c);
    for (std::size_t q = 0; q < 12; ++q) ublock(q, c) = m(3 + q, c);
  }
  if (determinant(ublock).is_zero()) {
    out.diagnostic = "U block of Φ_-1 is singular";
    return out;
  }
  // Cokernel ≅ W via (w, u) ↦ w - M u with M = wblock · ublock⁻¹.
  DenseMatrix mult = wblock * inverse(ublock);
  TriTensor rec({3, 3, 4}, f, model.tensor().legs());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t j = 0; j < 3; ++j) rec(i, j, k) = mult(j, i * 4 + k);
    }
  }
  if (rec.is_zero()) {
    out.diagnostic = "recovered multiplication is zero: degenerate tensor";
    out.recovered = rec;
    return out;
  }
  out.ok = rec == model.tensor();
  if (!out.ok) out.diagnostic = "recovered multiplication differs from the input tensor";
  out.recovered = std::move(rec);
  return out;
}

std::vector<Vector> section_basis(const KernelBundleModel& model) {
  auto ker = matrix_kernel(model.phi(0));
  if (ker.size() != 6) throw SectionCountError(ker.size());
  // Columns are (i, k, m) with m = e_l in degree 1, so the flat index is
  // already (i·4+k)·4+l.
  return ker;
}

DenseMatrix fiber_map(const TriTensor& t, const Vector& y) {
  require_334(t);
  if (y.size() != 4) throw ShapeError("fiber point must have 4 coordinates");
  DenseMatrix m(6, 12, t.field());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t j = 0; j < 3; ++j) m(j, i * 4 + k) = t(i, j, k);
      m(3 + i, i * 4 + k) = y[k];
    }
  }
  return m;
}

std::size_t degeneracy_rank(const KernelBundleModel& model, const std::vector<Vector>& sections, const Vector& y) {
  const Field f = model.tensor().field();
  std::size_t fr = rank(fiber_map(model.tensor(), y));
  if (fr != 6) throw JumpingPoint("fiber map has rank " + std::to_string(fr) + " at this point, expected 6");
  DenseMatrix ev(sections.size(), 12, f);
  for (std::size_t s = 0; s < sections.size(); ++s) {
    for (std::size_t c = 0; c < 12; ++c) {
      Scalar v(f);
      for (std::size_t l = 0; l < 4; ++l) v += sections[s][c * 4 + l] * y[l];
      ev(s, c) = v;
    }
  }
  return rank(ev);
}

DegeneracyLocusCheck degeneracy_locus_check(const KernelBundleModel& model, std::uint32_t p) {
  DegeneracyLocusCheck out;
  const TriTensor& t = model.tensor();
  auto sections = section_basis(model);
  MultiPoly cubic = det_cubic(reversing_construction(t));
  if (t.field().is_rational()) {
    try {
      auto cc = cubic_correspondence_check(t);
      out.convention = cc.ok ? cc.convention : "unpinned";
    } catch (const std::exception&) {
      out.convention = "unpinned";
    }
  }

  auto residue = [&](const Scalar& s) -> std::uint32_t {
    return s.field().is_rational() ? Scalar(Field::prime(p), s.rational()).residue() : s.residue();
  };
  std::vector<std::uint32_t> sec(6 * 48);
  for (std::size_t s = 0; s < 6; ++s) {
    for (std::size_t c = 0; c < 48; ++c) sec[s * 48 + c] = residue(sections[s][c]);
  }
  auto tres = tensor_residues(t, p);
  std::vector<std::pair<Exponent, std::uint32_t>> cubic_terms;
  for (const auto& [e, c] : cubic.terms()) cubic_terms.emplace_back(e, residue(c));

  std::vector<std::uint32_t> ev(6 * 12), fib(6 * 12);
  modp::for_each_projective_point(4, p, [&](const std::vector<std::uint32_t>& y) {
    ++out.points;
    std::fill(fib.begin(), fib.end(), 0);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t j = 0; j < 3; ++j) fib[j * 12 + i * 4 + k] = tres[(i * 3 + j) * 4 + k];
        fib[(3 + i) * 12 + i * 4 + k] = y[k];
      }
    }
    if (modp::rank_inplace(fib.data(), 6, 12, p) != 6) {
      ++out.jumping;
      return;
    }
    for (std::size_t s = 0; s < 6; ++s) {
      for (std::size_t c = 0; c < 12; ++c) {
        std::uint32_t v = 0;
        for (std::size_t l = 0; l < 4; ++l) v = modp::add(v, modp::mul(sec[s * 48 + c * 4 + l], y[l], p), p);
        ev[s * 12 + c] = v;
      }
    }
    bool degenerate = modp::rank_inplace(ev.data(), 6, 12, p) <= 5;
    std::uint32_t value = 0;
    for (const auto& [e, c] : cubic_terms) {
      std::uint32_t term = c;
      for (std::size_t v = 0; v < 4; ++v) {
        for (unsigned q = 0; q < e[v]; ++q) term = modp::mul(term, y[v], p);
      }
      value = modp::add(value, term, p);
    }
    bool on_cubic = value == 0;
    if (degenerate) ++out.degenerate;
    if (on_cubic) ++out.on_cubic;
    if (degenerate != on_cubic) ++out.mismatches;
  });
  out.ok = out.mismatches == 0 && out.jumping == 0 && out.degenerate > 0;
  return out;
}

}  // namespace trilinear
