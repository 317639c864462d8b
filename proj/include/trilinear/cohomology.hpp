#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trilinear/series.hpp"
#include "trilinear/tensor.hpp"

namespace trilinear {

/// (1+t)^9 · (1+2t)^-3 truncated at order 4.
TruncatedSeries chern_polynomial();

/// χ(E(n)) = 9·C(n+4,3) - 3·C(n+5,3), with C(a,3) = a(a-1)(a-2)/6 for every a.
long euler_characteristic(long n);

/// Bott's numbers for Ω¹(k) on P³.
long h0_omega1(long k);
long h1_omega1(long k);
long h3_omega1(long k);
/// h^0 and h^3 of O(k) on P³.
long h0_line(long k);
long h3_line(long k);

/// E = ker(U⊗V⊗O → (W⊗O(1)) ⊕ (U⊗O(2))) built from a (3,3,4) tensor.
class KernelBundleModel {
 public:
  explicit KernelBundleModel(TriTensor t);

  const TriTensor& tensor() const { return tensor_; }

  /// U⊗V⊗S^{n+1}V → (W⊗S^{n+1}V) ⊕ (U⊗S^{n+2}V), defined for n ≥ -1.
  /// Columns (i, k, m) with m in grlex order; rows (j, m) then (i, m').
  const DenseMatrix& phi(long n) const;

 private:
  TriTensor tensor_;
  mutable std::map<long, DenseMatrix> phi_cache_;
};

enum class Provenance { Computed, ForcedVanishing, Bott };
const char* provenance_name(Provenance p);

struct CohomologyRow {
  long n = 0;
  std::array<long, 4> h{};
  std::array<Provenance, 4> provenance{};
  long chi = 0;

  long alternating_sum() const { return h[0] - h[1] + h[2] - h[3]; }
};

struct CohomologyTable {
  std::vector<CohomologyRow> rows;

  const CohomologyRow& at(long n) const;
  /// h¹ is 3 at n = -2, -1 and 0 elsewhere; h⁰ vanishes for n < 0; h², h³
  /// vanish on [-4, 0]; h⁰(E) = 6.
  bool minimal_cohomology() const;
};

/// n ≥ -1 from Φ_n (h⁰ nullity, h¹ corank), n ≤ -2 from the presentation
/// 0 → E(n) → U⊗Ω¹(n+2) → W⊗O(n+1) → 0 and Bott's formula.
CohomologyTable cohomology_table(const KernelBundleModel& model, long n_min, long n_max);

struct MultiplicationCheck {
  bool ok = false;
  std::optional<TriTensor> recovered;
  std::string diagnostic;
};

/// Reads U⊗V → W back off Φ_{-1}: the U block is invertible and the W block
/// composed with its inverse is the multiplication tensor.
MultiplicationCheck multiplication_check(const KernelBundleModel& model);

class SectionCountError : public std::runtime_error {
 public:
  explicit SectionCountError(std::size_t h0)
      : std::runtime_error("h0(E) = " + std::to_string(h0) + ", expected 6"), h0_(h0) {}
  std::size_t h0() const { return h0_; }

 private:
  std::size_t h0_;
};

/// Canonical kernel basis of Φ_0, vectors in U⊗V⊗V indexed (i·4+k)·4+l.
std::vector<Vector> section_basis(const KernelBundleModel& model);

class JumpingPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 6×12 fiber map of β at y; columns (i, k) = [B[i][·][k]; y_k e_i].
DenseMatrix fiber_map(const TriTensor& t, const Vector& y);

/// Rank of the evaluated sections inside E_y. Throws JumpingPoint when the
/// fiber map does not have rank 6.
std::size_t degeneracy_rank(const KernelBundleModel& model, const std::vector<Vector>& sections, const Vector& y);

struct DegeneracyLocusCheck {
  bool ok = false;
  std::size_t points = 0;
  std::size_t degenerate = 0;
  std::size_t on_cubic = 0;
  std::size_t mismatches = 0;
  std::size_t jumping = 0;
  std::string convention;
};

/// Over F_p: {y : rank ≤ 5} against the zero set of the reversing
/// construction's cubic.
DegeneracyLocusCheck degeneracy_locus_check(const KernelBundleModel& model, std::uint32_t p);

}  // namespace trilinear
