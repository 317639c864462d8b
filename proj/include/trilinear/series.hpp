#pragma once

#include <vector>

#include "trilinear/scalar.hpp"

namespace trilinear {

/// Power series c_0 + c_1 t + ... truncated below t^order.
class TruncatedSeries {
 public:
  TruncatedSeries(Field f, std::size_t order);
  TruncatedSeries(Field f, std::size_t order, const std::vector<long>& coeffs);

  std::size_t order() const { return coeffs_.size(); }
  Field field() const { return field_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Throws NotInvertible when c_0 = 0.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(unsigned k) const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

inline TruncatedSeries series_invert(const TruncatedSeries& s) { return s.inverse(); }

}  // namespace trilinear
