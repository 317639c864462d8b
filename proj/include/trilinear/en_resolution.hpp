#pragma once

#include <map>
#include <string>
#include <vector>

#include "trilinear/hilbert_burch.hpp"
#include "trilinear/poly.hpp"
#include "trilinear/tensor.hpp"

namespace trilinear {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// One term Λ^i W3* ⊗ (S^s W2 or D_s W2*) ⊗ O(-i).
struct ComplexTerm {
  enum class Kind { Symmetric, Divided } kind = Kind::Symmetric;
  std::size_t exterior = 0;
  std::size_t power = 0;
  int twist = 0;
  /// Basis: (sorted exterior index set, exponent on W2).
  std::vector<std::pair<std::vector<std::size_t>, Exponent>> basis;

  std::size_t rank() const { return basis.size(); }
  std::string label() const;
};

/// Terms from position 0 (the S^t W2 ⊗ O end) leftwards; differentials[k]
/// maps terms[k+1] to terms[k] and has entries linear in the W1 coordinates.
struct GradedComplex {
  Field field;
  std::size_t nvars = 0;
  std::string regime;
  std::vector<ComplexTerm> terms;
  std::vector<PolyMatrix> differentials;

  long alternating_rank_sum() const;
};

/// Eagon–Northcott type complex for twist t of a tensor in W1⊗W2⊗W3 with
/// dims (d1+1, d2+1, d3+1). The "cor2" regime t ≥ d3+1-d2 uses only
/// symmetric-power terms; for 0 < t < d3+1-d2 divided-power terms from
/// Λ^{t+d2+1} upward are joined to Λ^t by maximal minors.
GradedComplex en_complex(const TriTensor& t, int twist);

/// The same tensor with the V leg first: (U*, W, V*) ↦ (V*, U*, W).
TriTensor v_first(const TriTensor& t);

struct DdResult {
  bool ok = true;
  std::string first_nonzero;
};
DdResult verify_dd_zero(const GradedComplex& c);

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b);
DenseMatrix evaluate(const PolyMatrix& m, std::size_t rows, std::size_t cols, Field f, const Vector& x);

/// Homology dimensions of the complex evaluated at x, position by position,
/// counting the cokernel at position 0.
std::vector<std::size_t> evaluated_homology(const GradedComplex& c, const Vector& x);

struct ExactnessResult {
  bool conclusive = false;
  bool exact = false;
  std::size_t points_used = 0;
  std::size_t points_on_support = 0;
  std::vector<std::string> failures;
};

/// Points where the W2×W3 matrix φ(x) has full row rank are off the support;
/// only those are used. Exact means zero homology everywhere.
ExactnessResult verify_generic_exactness(const GradedComplex& c, const TriTensor& t, const std::vector<Vector>& points);

bool on_support(const TriTensor& t, const Vector& x);

struct HilbertFunctionTable {
  std::vector<int> degrees;
  std::vector<long> values;
};

/// value(d) = Σ_k (-1)^k rank_k · dim S^{d + twist_k}(W1).
HilbertFunctionTable hilbert_function(const GradedComplex& c, int d_min, int d_max);

struct GammaScan {
  std::vector<std::pair<ProjectivePoint, ProjectivePoint>> pairs;
  /// Some point had a kernel of dimension ≥ 2, so the pair list is not the
  /// whole story there.
  bool saturated = false;
};

/// Pairs (x, y) in P(W1)×P(W2) over F_p with Σ B[a][b][c] x_a y_b = 0 for all c.
GammaScan gamma_points(const TriTensor& t, std::uint32_t p);

}  // namespace trilinear
