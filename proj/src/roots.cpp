#include "trilinear/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "trilinear/modular.hpp"
#include "trilinear/scalar.hpp"

namespace trilinear {

namespace {

using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

/// Remainder of a by b (b nonzero).
QPoly poly_rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

QPoly poly_quot(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ZPoly to_integer(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  for (const auto& c : p) z.push_back(c.get_num() * (l / c.get_den()));
  return z;
}

std::vector<std::uint32_t> reduce(const ZPoly& f, std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (const auto& c : f) out.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_mpz_t(), p)));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::size_t gcd_degree_mod(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b, std::uint32_t p) {
  auto strip = [](std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(a);
  strip(b);
  while (!b.empty()) {
    std::uint32_t iv = modp::inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint32_t f = modp::mul(a.back(), iv, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = modp::sub(a[shift + i], modp::mul(f, b[i], p), p);
      strip(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

mpz_class eval_mod(const ZPoly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = (acc * x + f[i]) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

bool ratrecon(const mpz_class& u, const mpz_class& mod, mpq_class& out) {
  mpz_class bound, half = mod / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = mod, r1 = u % mod, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += mod;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

bool is_root(const QPoly& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return sgn(acc) == 0;
}

}  // namespace

std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs) {
  QPoly f = coeffs;
  trim(f);
  if (f.empty()) throw std::invalid_argument("the zero polynomial has every value as a root");
  std::vector<mpq_class> roots;
  if (sgn(f[0]) == 0) {
    roots.emplace_back(0);
    std::size_t k = 0;
    while (sgn(f[k]) == 0) ++k;
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (f.size() <= 1) return roots;

  QPoly g = poly_gcd(f, derivative(f));
  if (g.size() > 1) f = poly_quot(f, g);
  ZPoly z = to_integer(f);
  ZPoly dz;
  for (std::size_t i = 1; i < z.size(); ++i) dz.push_back(z[i] * static_cast<long>(i));

  mpz_class bound = abs(z.front()) > abs(z.back()) ? abs(z.front()) : abs(z.back());
  mpz_class target = 2 * bound * bound + 1;

  for (std::uint32_t p = 10007;; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(z.back().get_mpz_t(), p)) continue;
    auto fp = reduce(z, p);
    auto dp = reduce(dz, p);
    if (gcd_degree_mod(fp, dp, p) != 0) continue;

    std::vector<std::uint32_t> base;
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = fp.size(); i-- > 0;) acc = (acc * x + fp[i]) % p;
      if (acc == 0) base.push_back(x);
    }
    for (auto r0 : base) {
      mpz_class r = r0, m = p;
      while (m < target) {
        mpz_class m2 = m * m;
        mpz_class fv = eval_mod(z, r, m2);
        mpz_class dv = eval_mod(dz, r, m2);
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t()) == 0) break;
        r = (r - fv * dinv) % m2;
        if (r < 0) r += m2;
        m = m2;
      }
      mpq_class cand;
      if (ratrecon(r, m, cand) && is_root(f, cand)) roots.push_back(cand);
    }
    break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace trilinear
