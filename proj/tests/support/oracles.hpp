#pragma once

// Independent reference routines for tests: schoolbook elimination over mpq,
// brute-force scans and a small seeded generator. Nothing here calls the
// library's modular or multimodular paths.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trilinear/hilbert_burch.hpp"
#include "trilinear/tensor.hpp"

namespace oracle {

using QMatrix = std::vector<std::vector<mpq_class>>;

inline QMatrix to_q(const trilinear::DenseMatrix& m) {
  QMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).rational();
  }
  return out;
}

inline std::size_t rank(QMatrix a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_mod(std::vector<std::vector<long>> a, long p) {
  auto md = [p](long v) { return ((v % p) + p) % p; };
  auto inv = [&](long v) {
    long r = 1, b = md(v), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && md(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    long iv = inv(a[r][c]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      long f = md(a[i][c]) * iv % p;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = md(a[i][j] - f * md(a[r][j]));
    }
    ++r;
  }
  return r;
}

inline mpq_class det3(const QMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Σ_k y_k B[·][·][k] as a plain rational matrix.
inline QMatrix v_slice(const trilinear::TriTensor& t, const std::vector<long>& y) {
  QMatrix m(t.dims()[0], std::vector<mpq_class>(t.dims()[1]));
  for (std::size_t i = 0; i < t.dims()[0]; ++i) {
    for (std::size_t j = 0; j < t.dims()[1]; ++j) {
      for (std::size_t k = 0; k < t.dims()[2]; ++k) m[i][j] += t(i, j, k).rational() * y[k];
    }
  }
  return m;
}

/// Points of P²(F_p) where the 3×4 slice Σ x_i B[i] (or Σ x_j B[·][j]) has
/// rank ≤ 2, by plain enumeration.
inline std::vector<std::vector<long>> brute_base_points(const trilinear::TriTensor& t, int leg, long p) {
  std::vector<std::vector<long>> out;
  auto entry = [&](std::size_t i, std::size_t j, std::size_t k) -> long {
    mpq_class q = t(i, j, k).rational();
    return static_cast<long>(trilinear::reduce_mod(q, static_cast<std::uint32_t>(p)));
  };
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      for (long c = 0; c < p; ++c) {
        std::vector<long> x{a, b, c};
        // first nonzero coordinate must be 1
        std::size_t lead = 0;
        while (lead < 3 && x[lead] == 0) ++lead;
        if (lead == 3 || x[lead] != 1) continue;
        std::vector<std::vector<long>> m(3, std::vector<long>(4, 0));
        for (std::size_t u = 0; u < 3; ++u) {
          for (std::size_t w = 0; w < 3; ++w) {
            for (std::size_t k = 0; k < 4; ++k) {
              long coeff = leg == 0 ? entry(u, w, k) * x[u] : entry(w, u, k) * x[u];
              m[w][k] = (m[w][k] + coeff) % p;
            }
          }
        }
        if (rank_mod(m, p) <= 2) out.push_back(x);
      }
    }
  }
  return out;
}

/// Seeded source of small integers; every property test draws from one.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long between(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::mt19937_64& engine() { return rng_; }

  trilinear::TriTensor tensor(trilinear::TriTensor::Dims dims, long bound) {
    trilinear::TriTensor t(dims, trilinear::Field::rationals());
    for (std::size_t i = 0; i < dims[0]; ++i) {
      for (std::size_t j = 0; j < dims[1]; ++j) {
        for (std::size_t k = 0; k < dims[2]; ++k) t(i, j, k) = trilinear::Scalar(t.field(), between(-bound, bound));
      }
    }
    return t;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
