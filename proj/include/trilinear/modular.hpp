#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace trilinear::modp {

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;  // p < 2^31, so no wraparound
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

/// Row-major matrix of residues.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, std::uint32_t modulus)
      : rows(r), cols(c), p(modulus), a(r * c, 0) {}
  std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// In-place reduced row echelon form. Returns the pivot columns; rows past the
/// rank are zero afterwards.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Canonical (reduced echelon) basis of the right null space, one vector per
/// entry.
std::vector<std::vector<std::uint32_t>> kernel(Matrix m);

/// Rank of a small row-major residue matrix, destroying it.
std::size_t rank_inplace(std::uint32_t* a, std::size_t rows, std::size_t cols, std::uint32_t p);

/// Calls fn(coords) for every point of P^{n-1}(F_p), each given by its
/// representative whose first nonzero coordinate is 1.
template <typename Fn>
void for_each_projective_point(std::size_t n, std::uint32_t p, Fn&& fn) {
  std::vector<std::uint32_t> x(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    while (true) {
      fn(static_cast<const std::vector<std::uint32_t>&>(x));
      bool carry = true;
      for (std::size_t pos = n; pos > lead + 1 && carry;) {
        --pos;
        if (++x[pos] < p) {
          carry = false;
        } else {
          x[pos] = 0;
        }
      }
      if (carry) break;
    }
  }
}

/// Large primes used for modular certification, all below 2^31.
const std::vector<std::uint32_t>& certification_primes();

}  // namespace trilinear::modp
