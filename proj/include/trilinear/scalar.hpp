#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace trilinear {

/// Raised when two values from different fields meet in one operation.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime_u64(std::uint64_t n);

/// The coefficient field: the rationals, or F_p with p prime and p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime() const { return modulus_ != 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; prime-field residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field f);
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  /// Parses "a", "-a" or "a/b"; for prime fields the rational is reduced.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// A total order used only for canonical sorting: numeric order on Q,
  /// residue order on F_p.
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// "num/den" for non-integral rationals, the integer otherwise.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t> value_{mpq_class(0)};
};

/// Reduces a rational into F_p; throws NotInvertible when p divides the
/// denominator.
std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p);

}  // namespace trilinear
