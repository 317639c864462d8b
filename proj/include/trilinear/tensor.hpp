#pragma once

#include <array>
#include <string>
#include <vector>

#include "trilinear/matrix.hpp"
#include "trilinear/poly.hpp"

namespace trilinear {

/// Three-leg tensor B[i][j][k]. The leg names are labels only; the standard
/// (3,3,4) case is B ∈ U*⊗W⊗V* with legs "U*", "W", "V*".
class TriTensor {
 public:
  using Dims = std::array<std::size_t, 3>;
  using Legs = std::array<std::string, 3>;

  TriTensor() = default;
  TriTensor(Dims dims, Field f, Legs legs = {"U*", "W", "V*"});

  const Dims& dims() const { return dims_; }
  Field field() const { return field_; }
  const Legs& legs() const { return legs_; }
  void set_legs(Legs legs) { legs_ = std::move(legs); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[index(i, j, k)]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }

  bool is_zero() const;
  bool is_334() const { return dims_ == Dims{3, 3, 4}; }

  /// Tensor whose leg a is this tensor's leg perm[a].
  TriTensor permute_legs(std::array<int, 3> perm) const;
  /// Entrywise image in F_p.
  TriTensor reduce_mod(std::uint32_t p) const;

  friend bool operator==(const TriTensor& a, const TriTensor& b);

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dims_[1] + j) * dims_[2] + k;
  }

  Dims dims_{0, 0, 0};
  Field field_;
  Legs legs_;
  std::vector<Scalar> data_;
};

class MainAssumptionFailure : public std::runtime_error {
 public:
  explicit MainAssumptionFailure(std::size_t rank);
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

/// Contracts one leg (0, 1 or 2) with `v`. The remaining legs keep their order:
/// leg 2 gives the d1×d2 matrix Σ_k v_k B[·][·][k], leg 0 gives d2×d3, leg 1
/// gives d1×d3.
DenseMatrix slice(const TriTensor& t, int leg, const Vector& v);

/// The same slice with v replaced by the leg's coordinate variables.
std::vector<std::vector<MultiPoly>> symbolic_slice(const TriTensor& t, int leg);

void require_334(const TriTensor& t);

MultiPoly det_cubic(const TriTensor& t);

/// B'[j][i][k] = B[i][j][k].
TriTensor trivial_involution(const TriTensor& t);

/// The 9×12 matrix of the contraction from Λ²W*⊗V to U*⊗W*. Rows (i, j'),
/// U index major; columns (bivector, k) with bivectors ordered e0∧e1, e0∧e2,
/// e1∧e2 and the V index minor.
DenseMatrix contraction_matrix(const TriTensor& t);

bool main_assumption(const TriTensor& t);

/// Fixed identification Λ²W* ≅ W: e_a∧e_b ↦ sign·e_c.
struct BivectorOrientation {
  std::size_t a, b, target;
  int sign;
};
const std::array<BivectorOrientation, 3>& bivector_orientation();

struct InvolutionResult {
  /// Canonical basis of U' inside W⊗V, coordinates flattened as j·4 + k.
  std::vector<Vector> uprime_basis;
  /// Legs (U'*, W, V): bprime[a][j][k] = uprime_basis[a][j·4 + k].
  TriTensor bprime;
  std::string orientation;
};

/// Throws MainAssumptionFailure carrying the contraction rank when it is
/// below 9.
InvolutionResult cross_product_involution(const TriTensor& t);

/// The cross-product image with legs reordered to (W, U'*, V).
TriTensor reversing_construction(const TriTensor& t);

/// Entries reduced into F_p, flattened as (i·d2 + j)·d3 + k. Rational tensors
/// are reduced; prime-field tensors must already live in F_p.
std::vector<std::uint32_t> tensor_residues(const TriTensor& t, std::uint32_t p);

/// Canonical basis of the span of the slabs B[i][·][·] inside W⊗V*.
std::vector<Vector> u_subspace(const TriTensor& t);

}  // namespace trilinear
