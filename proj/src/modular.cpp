#include "trilinear/modular.hpp"

#include <stdexcept>

#include "trilinear/scalar.hpp"

namespace trilinear::modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw NotInvertible("zero has no inverse mod " + std::to_string(p));
  return pow(a, p - 2, p);
}

std::vector<std::size_t> rref(Matrix& m) {
  const std::uint32_t p = m.p;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    std::uint32_t iv = inv(m.at(r, c), p);
    std::uint32_t* row = &m.a[r * m.cols];
    for (std::size_t j = c; j < m.cols; ++j) row[j] = mul(row[j], iv, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      std::uint32_t f = m.at(i, c);
      if (f == 0) continue;
      std::uint32_t* other = &m.a[i * m.cols];
      std::uint64_t nf = p - f;
      for (std::size_t j = c; j < m.cols; ++j) {
        if (row[j] == 0) continue;
        other[j] = static_cast<std::uint32_t>((other[j] + nf * row[j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<std::uint32_t>> kernel(Matrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      std::uint32_t e = m.at(i, f);
      v[pivots[i]] = e == 0 ? 0 : m.p - e;
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  // Canonicalize the span.
  Matrix k(basis.size(), m.cols, m.p);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) k.at(i, j) = basis[i][j];
  }
  rref(k);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) basis[i][j] = k.at(i, j);
  }
  return basis;
}

std::size_t rank_inplace(std::uint32_t* a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    std::uint32_t iv = inv(a[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t f = a[i * cols + c];
      if (f == 0) continue;
      std::uint32_t g = mul(f, iv, p);
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = sub(a[i * cols + j], mul(g, a[r * cols + j], p), p);
      }
    }
    ++r;
  }
  return r;
}

const std::vector<std::uint32_t>& certification_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = (1u << 31) - 1; out.size() < 64; c -= 2) {
      if (is_prime_u64(c)) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

}  // namespace trilinear::modp
