#include "trilinear/tensor.hpp"

namespace trilinear {

TriTensor::TriTensor(Dims dims, Field f, Legs legs)
    : dims_(dims), field_(f), legs_(std::move(legs)), data_(dims[0] * dims[1] * dims[2], Scalar(f)) {}

bool TriTensor::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

TriTensor TriTensor::permute_legs(std::array<int, 3> perm) const {
  std::array<bool, 3> seen{};
  for (int p : perm) {
    if (p < 0 || p > 2 || seen[p]) throw std::invalid_argument("not a permutation of the legs");
    seen[p] = true;
  }
  Dims nd{dims_[perm[0]], dims_[perm[1]], dims_[perm[2]]};
  TriTensor out(nd, field_, {legs_[perm[0]], legs_[perm[1]], legs_[perm[2]]});
  std::array<std::size_t, 3> idx{};
  for (idx[0] = 0; idx[0] < dims_[0]; ++idx[0]) {
    for (idx[1] = 0; idx[1] < dims_[1]; ++idx[1]) {
      for (idx[2] = 0; idx[2] < dims_[2]; ++idx[2]) {
        out(idx[perm[0]], idx[perm[1]], idx[perm[2]]) = (*this)(idx[0], idx[1], idx[2]);
      }
    }
  }
  return out;
}

TriTensor TriTensor::reduce_mod(std::uint32_t p) const {
  Field fp = Field::prime(p);
  TriTensor out(dims_, fp, legs_);
  for (std::size_t n = 0; n < data_.size(); ++n) {
    const Scalar& x = data_[n];
    if (x.field().is_prime()) {
      if (x.field().modulus() != p) throw FieldMismatch("cannot reduce between prime fields");
      out.data_[n] = x;
    } else {
      out.data_[n] = Scalar(fp, x.rational());
    }
  }
  return out;
}

bool operator==(const TriTensor& a, const TriTensor& b) {
  return a.dims_ == b.dims_ && a.field_ == b.field_ && a.data_ == b.data_;
}

MainAssumptionFailure::MainAssumptionFailure(std::size_t rank)
    : std::runtime_error("contraction has rank " + std::to_string(rank) + " < 9"), rank_(rank) {}

void require_334(const TriTensor& t) {
  if (!t.is_334()) throw ShapeError("operation needs a (3,3,4) tensor");
}

DenseMatrix slice(const TriTensor& t, int leg, const Vector& v) {
  const auto& d = t.dims();
  if (leg < 0 || leg > 2) throw std::invalid_argument("leg must be 0, 1 or 2");
  if (v.size() != d[leg]) throw ShapeError("slice vector length does not match the leg");
  std::size_t r = leg == 0 ? d[1] : d[0];
  std::size_t c = leg == 2 ? d[1] : d[2];
  DenseMatrix m(r, c, t.field());
  for (std::size_t i = 0; i < d[0]; ++i) {
    for (std::size_t j = 0; j < d[1]; ++j) {
      for (std::size_t k = 0; k < d[2]; ++k) {
        const Scalar& b = t(i, j, k);
        if (b.is_zero()) continue;
        switch (leg) {
          case 0:
            m(j, k) += v[i] * b;
            break;
          case 1:
            m(i, k) += v[j] * b;
            break;
          default:
            m(i, j) += v[k] * b;
        }
      }
    }
  }
  return m;
}

std::vector<std::vector<MultiPoly>> symbolic_slice(const TriTensor& t, int leg) {
  const auto& d = t.dims();
  if (leg < 0 || leg > 2) throw std::invalid_argument("leg must be 0, 1 or 2");
  std::size_t r = leg == 0 ? d[1] : d[0];
  std::size_t c = leg == 2 ? d[1] : d[2];
  std::size_t nv = d[leg];
  std::vector<std::vector<MultiPoly>> m(r, std::vector<MultiPoly>(c, MultiPoly(t.field(), nv)));
  for (std::size_t i = 0; i < d[0]; ++i) {
    for (std::size_t j = 0; j < d[1]; ++j) {
      for (std::size_t k = 0; k < d[2]; ++k) {
        const Scalar& b = t(i, j, k);
        if (b.is_zero()) continue;
        std::size_t var = leg == 0 ? i : leg == 1 ? j : k;
        Exponent e{};
        e[var] = 1;
        auto term = MultiPoly::monomial(t.field(), nv, e, b);
        if (leg == 0) {
          m[j][k] += term;
        } else if (leg == 1) {
          m[i][k] += term;
        } else {
          m[i][j] += term;
        }
      }
    }
  }
  return m;
}

MultiPoly det_cubic(const TriTensor& t) {
  require_334(t);
  return poly_det(symbolic_slice(t, 2));
}

TriTensor trivial_involution(const TriTensor& t) { return t.permute_legs({1, 0, 2}); }

const std::array<BivectorOrientation, 3>& bivector_orientation() {
  static const std::array<BivectorOrientation, 3> table{{
      {0, 1, 2, +1},
      {0, 2, 1, -1},
      {1, 2, 0, +1},
  }};
  return table;
}

DenseMatrix contraction_matrix(const TriTensor& t) {
  require_334(t);
  DenseMatrix m(9, 12, t.field());
  const auto& biv = bivector_orientation();
  for (std::size_t b = 0; b < 3; ++b) {
    const std::size_t a = biv[b].a, a2 = biv[b].b;
    for (std::size_t k = 0; k < 4; ++k) {
      std::size_t col = b * 4 + k;
      for (std::size_t i = 0; i < 3; ++i) {
        // ω = e_a∧e_a2 sends (i, a2) ← B[i][a][k] and (i, a) ← -B[i][a2][k].
        m(i * 3 + a2, col) += t(i, a, k);
        m(i * 3 + a, col) -= t(i, a2, k);
      }
    }
  }
  return m;
}

bool main_assumption(const TriTensor& t) {
  require_334(t);
  return rank(contraction_matrix(t)) == 9;
}

InvolutionResult cross_product_involution(const TriTensor& t) {
  require_334(t);
  DenseMatrix c = contraction_matrix(t);
  std::size_t r = rank(c);
  if (r != 9) throw MainAssumptionFailure(r);
  auto ker = matrix_kernel(c);
  const auto& biv = bivector_orientation();
  Field f = t.field();
  std::vector<Vector> images;
  for (const auto& v : ker) {
    Vector w = zero_vector(f, 12);
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t k = 0; k < 4; ++k) {
        Scalar x = v[b * 4 + k];
        w[biv[b].target * 4 + k] = biv[b].sign > 0 ? x : -x;
      }
    }
    images.push_back(std::move(w));
  }
  InvolutionResult out;
  out.uprime_basis = canonical_basis(f, 12, images);
  out.bprime = TriTensor({3, 3, 4}, f, {"U'*", "W", "V"});
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 4; ++k) out.bprime(a, j, k) = out.uprime_basis[a][j * 4 + k];
    }
  }
  out.orientation = "e0^e1->+e2, e0^e2->-e1, e1^e2->+e0; det(e0,e1,e2)=1";
  return out;
}

TriTensor reversing_construction(const TriTensor& t) {
  return cross_product_involution(t).bprime.permute_legs({1, 0, 2});
}

std::vector<std::uint32_t> tensor_residues(const TriTensor& t, std::uint32_t p) {
  const auto& d = t.dims();
  std::vector<std::uint32_t> out;
  out.reserve(d[0] * d[1] * d[2]);
  for (std::size_t i = 0; i < d[0]; ++i) {
    for (std::size_t j = 0; j < d[1]; ++j) {
      for (std::size_t k = 0; k < d[2]; ++k) {
        const Scalar& x = t(i, j, k);
        if (x.field().is_prime()) {
          if (x.field().modulus() != p) throw FieldMismatch("tensor lives in a different prime field");
          out.push_back(x.residue());
        } else {
          out.push_back(reduce_mod(x.rational(), p));
        }
      }
    }
  }
  return out;
}

std::vector<Vector> u_subspace(const TriTensor& t) {
  require_334(t);
  std::vector<Vector> slabs;
  for (std::size_t i = 0; i < 3; ++i) {
    Vector v;
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 4; ++k) v.push_back(t(i, j, k));
    }
    slabs.push_back(std::move(v));
  }
  return canonical_basis(t.field(), 12, slabs);
}

}  // namespace trilinear
