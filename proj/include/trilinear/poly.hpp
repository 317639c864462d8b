#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trilinear/matrix.hpp"
#include "trilinear/scalar.hpp"

namespace trilinear {

constexpr std::size_t kMaxVars = 8;
using Exponent = std::array<std::uint16_t, kMaxVars>;

unsigned degree_of(const Exponent& e);

/// Graded lexicographic order, largest first: higher total degree wins, then
/// the lexicographically larger exponent. x0^d leads every degree-d basis.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Monomials of exact degree `degree` in `nvars` variables, in grlex order.
std::vector<Exponent> monomial_basis(std::size_t nvars, unsigned degree);

/// Position of a monomial inside monomial_basis(nvars, degree_of(e)).
std::size_t monomial_index(std::size_t nvars, const Exponent& e);

class MultiPoly {
 public:
  using Terms = std::map<Exponent, Scalar, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(Field f, std::size_t nvars);

  static MultiPoly constant(Field f, std::size_t nvars, const Scalar& c);
  static MultiPoly variable(Field f, std::size_t nvars, std::size_t i);
  static MultiPoly monomial(Field f, std::size_t nvars, const Exponent& e, const Scalar& c);
  /// Σ coeffs[k] · x_k.
  static MultiPoly linear(Field f, const Vector& coeffs);

  std::size_t nvars() const { return nvars_; }
  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Scalar coefficient(const Exponent& e) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Scalar& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& s, MultiPoly p) { return p *= s; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  Scalar evaluate(const Vector& point) const;
  /// Replaces x_i by images[i]; all images share a variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Coefficient vector against an explicit monomial list.
  Vector coefficients_in(const std::vector<Exponent>& basis) const;

  /// Human-readable form such as "-x0^2*x3 + x1^2*x2".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Scalar& c);
  void check_compatible(const MultiPoly& other) const;

  Field field_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Cofactor expansion along the first row.
MultiPoly poly_det3(const std::array<std::array<MultiPoly, 3>, 3>& m);
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m);

/// Matrix of multiplication by homogeneous f from degree d to degree d+deg f,
/// rows and columns indexed by the grlex monomial bases.
DenseMatrix graded_multiplication_matrix(const MultiPoly& f, unsigned src_degree);

/// True when a = c·b for a nonzero scalar c (both nonzero), or both are zero.
bool proportional(const MultiPoly& a, const MultiPoly& b);

}  // namespace trilinear
