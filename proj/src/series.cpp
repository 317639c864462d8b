#include "trilinear/series.hpp"

#include <stdexcept>

namespace trilinear {

TruncatedSeries::TruncatedSeries(Field f, std::size_t order) : field_(f), coeffs_(order, Scalar(f)) {
  if (order == 0) throw std::invalid_argument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(Field f, std::size_t order, const std::vector<long>& coeffs)
    : TruncatedSeries(f, order) {
  for (std::size_t i = 0; i < coeffs.size() && i < order; ++i) coeffs_[i] = Scalar(f, coeffs[i]);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("series over different fields");
  std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries out(a.field_, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; i + j < order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw NotInvertible("series with zero constant term");
  TruncatedSeries out(field_, order());
  Scalar c0inv = coeffs_[0].inverse();
  out.coeffs_[0] = c0inv;
  for (std::size_t n = 1; n < order(); ++n) {
    Scalar acc(field_);
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
    out.coeffs_[n] = -acc * c0inv;
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
  TruncatedSeries out(field_, order(), {1});
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

}  // namespace trilinear
