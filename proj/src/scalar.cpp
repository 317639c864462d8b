#include "trilinear/scalar.hpp"

#include <charconv>

namespace trilinear {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw NotInvertible("zero has no inverse in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_u64(p)) {
    throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("malformed field modulus: " + std::string(text));
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "', expected Q or Fp:<p>");
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw NotInvertible("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  }
  auto n = static_cast<std::uint64_t>(num.get_ui());
  return static_cast<std::uint32_t>(n * mod_inverse(static_cast<std::uint32_t>(den.get_ui()), p) % p);
}

Scalar::Scalar(Field f) : field_(f) {
  if (f.is_prime()) value_ = std::uint32_t{0};
}

Scalar::Scalar(Field f, long value) : field_(f) {
  if (f.is_prime()) {
    long r = value % static_cast<long>(f.modulus());
    if (r < 0) r += f.modulus();
    value_ = static_cast<std::uint32_t>(r);
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f) {
  if (f.is_prime()) {
    value_ = reduce_mod(value, f.modulus());
  } else {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
  }
}

Scalar Scalar::parse(Field f, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed scalar '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime()) throw FieldMismatch("rational() called on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime()) throw FieldMismatch("residue() called on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("mixed fields: " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero");
  Scalar r(field_);
  if (field_.is_prime()) {
    r.value_ = mod_inverse(std::get<std::uint32_t>(value_), field_.modulus());
  } else {
    r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_prime()) {
    auto v = std::get<std::uint32_t>(value_);
    r.value_ = v == 0 ? 0u : field_.modulus() - v;
  } else {
    r.value_ = mpq_class(-std::get<mpq_class>(value_));
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_prime()) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(rhs.value_);
    if (s >= field_.modulus()) s -= field_.modulus();
    value_ = static_cast<std::uint32_t>(s);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_prime()) {
    std::uint64_t p = field_.modulus();
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + p - std::get<std::uint32_t>(rhs.value_);
    if (s >= p) s -= p;
    value_ = static_cast<std::uint32_t>(s);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_prime()) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_prime()) return std::get<std::uint32_t>(a.value_) < std::get<std::uint32_t>(b.value_);
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace trilinear
