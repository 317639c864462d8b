#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trilinear/poly.hpp"
#include "trilinear/tensor.hpp"

namespace trilinear {

/// Projective point, stored as the representative whose first nonzero
/// coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  explicit ProjectivePoint(Vector coords);

  const Vector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  Field field() const { return coords_.front().field(); }
  /// "(1:0:-1/2)"
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  Vector coords_;
};
using PlanePoint = ProjectivePoint;

ProjectivePoint point_from_residues(Field fp, const std::vector<std::uint32_t>& x);

/// Parses "(1:0:0),(0:1:0),..." over the given field.
std::vector<ProjectivePoint> parse_points(Field f, const std::string& text);

class SpecialPosition : public std::runtime_error {
 public:
  SpecialPosition(const std::string& what, std::size_t dimension)
      : std::runtime_error(what), dimension_(dimension) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

/// Canonical basis of the cubics through the points; exactly 4 are expected.
/// Throws SpecialPosition with the actual dimension otherwise.
std::vector<MultiPoly> cubics_through_points(const std::vector<PlanePoint>& pts);

using LinearFormMatrix = std::vector<std::vector<MultiPoly>>;

/// Canonical basis of the linear syzygies (L_0..L_3) with Σ L_m g_m = 0, one
/// row per syzygy. Throws SpecialPosition unless there are exactly 3.
LinearFormMatrix linear_syzygies(const std::vector<MultiPoly>& cubics);

/// Signed maximal minors of a 3×4 matrix: entry d is (-1)^d times the
/// determinant with column d removed.
std::vector<MultiPoly> maximal_minors(const LinearFormMatrix& m);

/// Whether two families of homogeneous polynomials of one degree span the
/// same subspace.
bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b);

/// T[i][a][m] = coefficient of x_i in the a-th syzygy's m-th entry. Legs are
/// (plane coordinate, syzygy, cubic), so the leg-0 base points are `pts`.
TriTensor points_to_tensor(const std::vector<PlanePoint>& pts);

enum class Side { U, W };
inline int side_leg(Side s) { return s == Side::U ? 0 : 1; }
const char* side_name(Side s);

struct BasePointMode {
  enum class Kind { Scan, Minors } kind = Kind::Minors;
  std::uint32_t prime = 101;

  static BasePointMode scan(std::uint32_t p) { return {Kind::Scan, p}; }
  static BasePointMode minors() { return {Kind::Minors, 0}; }
};

struct BasePoints {
  std::vector<PlanePoint> points;  // sorted
  bool complete = false;
  std::string mode;
  std::string note;
};

/// Points of the chosen plane where the 3×4 slice has rank ≤ 2. Scan mode
/// enumerates P²(F_p). Minors mode works over the tensor's own field: over Q
/// it recovers the points as joint eigenvectors of multiplication operators
/// on the dual of the degree-4 part of the minors ideal, keeping only the
/// rational ones; over F_p it scans the field itself.
BasePoints base_points(const TriTensor& t, Side side, BasePointMode mode);

struct SliceRankScan {
  std::size_t min_rank = 0;
  std::optional<ProjectivePoint> witness;
};

/// Exhaustive scan of P(leg)(F_p) for the smallest slice rank.
SliceRankScan min_slice_rank_scan(const TriTensor& t, int leg, std::uint32_t p);

/// Rank of the slice at every point of P(leg)(F_p) via word arithmetic;
/// calls fn(point residues, rank).
template <typename Fn>
void scan_slice_ranks(const TriTensor& t, int leg, std::uint32_t p, Fn&& fn) {
  const auto& d = t.dims();
  auto res = tensor_residues(t, p);
  const std::size_t r = leg == 0 ? d[1] : d[0];
  const std::size_t c = leg == 2 ? d[1] : d[2];
  std::vector<std::uint32_t> m(r * c);
  modp::for_each_projective_point(d[leg], p, [&](const std::vector<std::uint32_t>& x) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < d[0]; ++i) {
      for (std::size_t j = 0; j < d[1]; ++j) {
        for (std::size_t k = 0; k < d[2]; ++k) {
          std::uint32_t b = res[(i * d[1] + j) * d[2] + k];
          if (b == 0) continue;
          std::size_t var = leg == 0 ? i : leg == 1 ? j : k;
          if (x[var] == 0) continue;
          std::size_t row = leg == 0 ? j : i;
          std::size_t col = leg == 2 ? j : k;
          auto& e = m[row * c + col];
          e = modp::add(e, modp::mul(b, x[var], p), p);
        }
      }
    }
    fn(x, modp::rank_inplace(m.data(), r, c, p));
  });
}

}  // namespace trilinear
