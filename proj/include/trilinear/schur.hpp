#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trilinear/hilbert_burch.hpp"
#include "trilinear/tensor.hpp"

namespace trilinear {

/// The 9×10 matrix of S²V → Λ²U*⊗Λ²W. Columns are the monomials e_k e_l
/// (k ≤ l, lexicographic); rows are pairs (i<i') major, (j<j') minor.
DenseMatrix schur_map(const TriTensor& t);

class SchurDegeneracy : public std::runtime_error {
 public:
  explicit SchurDegeneracy(std::size_t dim)
      : std::runtime_error("Schur map kernel has dimension " + std::to_string(dim) + ", expected 1"),
        dimension_(dim) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

struct SchurQuadric {
  /// Symmetric 4×4, scaled so the first nonzero entry (row-major) is 1.
  DenseMatrix q;
  bool nondegenerate = false;

  /// The induced form on V, proportional to q⁻¹ (the adjugate).
  DenseMatrix dual() const { return adjugate(q); }
  /// Coefficients of q as a vector in the monomial basis of schur_map.
  Vector as_monomial_vector() const;
};

SchurQuadric schur_quadric(const TriTensor& t);

struct ProjectiveLine {
  std::vector<Vector> span;  // canonical, 2 vectors in V
  Side side = Side::U;
  std::size_t index = 0;
};

class DoubleSixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DoubleSix {
  Field field;
  std::vector<PlanePoint> u_points, w_points;
  std::vector<ProjectiveLine> a_lines, a_prime_lines;
  /// dim(A_z + A'_z') for every pair.
  std::vector<std::vector<std::size_t>> span_table;
  /// (z, z') with A_z and A'_z' disjoint.
  std::vector<std::pair<std::size_t, std::size_t>> matching;
};

/// Base points on both sides, their kernel lines and the disjointness
/// matching. Minors mode needs all 12 points rational; scan mode works over
/// F_p.
DoubleSix double_six(const TriTensor& t, BasePointMode mode);

struct OrthogonalityResult {
  bool ok = false;
  std::size_t exact_zeros = 0;
  bool cross_pair_nonzero = false;
  std::vector<std::string> violations;
};

/// Evaluates the bilinear form on both spanning vectors of every matched
/// pair; also requires some unmatched pair where the form is nonzero.
OrthogonalityResult orthogonality_check(const DenseMatrix& form, const DoubleSix& ds);
/// Uses the dual of the Schur quadric, brought into the double six's field.
OrthogonalityResult orthogonality_check(const SchurQuadric& q, const DoubleSix& ds);

/// span{(id_W ⊗ q)(B[i])} equals U' from the cross-product involution.
bool schur_carries_u_to_uprime(const TriTensor& t);

struct CubicCorrespondence {
  bool ok = false;
  std::string convention;
  std::vector<std::string> holding;
};

/// The substitution conventions, in the order tried. "C" is the tensor's
/// cubic, "C'" the reversing construction's, q the Schur quadric.
const std::vector<std::string>& cubic_conventions();

/// The four conventions fall into two classes of mutually equivalent
/// statements; the check passes when the holding ones form exactly one class.
CubicCorrespondence cubic_correspondence_check(const TriTensor& t);

/// The Schur quadric of the reversing construction, compared with the dual of
/// q up to scale.
bool reversed_quadric_is_dual(const TriTensor& t);

}  // namespace trilinear
