#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "trilinear/en_resolution.hpp"
#include "trilinear/generator.hpp"

using namespace trilinear;

namespace {

const Field Q = Field::rationals();

long binom(long a, long k) {
  if (a < k || k < 0) return 0;
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (a - i) / (i + 1);
  return r;
}

std::vector<std::size_t> ranks(const GradedComplex& c) {
  std::vector<std::size_t> out;
  for (const auto& t : c.terms) out.push_back(t.rank());
  return out;
}

// dim coker of terms[1]⊗S^{d-1} → terms[0]⊗S^d, built from the linear entries of d0.
long cokernel_dimension(const GradedComplex& c, unsigned d) {
  const PolyMatrix& d0 = c.differentials[0];
  const std::size_t n = c.nvars, rows0 = c.terms[0].rank(), cols0 = c.terms[1].rank();
  auto tgt = monomial_basis(n, d);
  if (d == 0) return static_cast<long>(rows0);
  auto src = monomial_basis(n, d - 1);
  oracle::QMatrix m(rows0 * tgt.size(), std::vector<mpq_class>(cols0 * src.size()));
  for (std::size_t r = 0; r < rows0; ++r) {
    for (std::size_t col = 0; col < cols0; ++col) {
      for (std::size_t v = 0; v < n; ++v) {
        Exponent e{};
        e[v] = 1;
        mpq_class coeff = d0[r][col].coefficient(e).rational();
        if (coeff == 0) continue;
        for (std::size_t s = 0; s < src.size(); ++s) {
          Exponent up = src[s];
          ++up[v];
          m[r * tgt.size() + monomial_index(n, up)][col * src.size() + s] += coeff;
        }
      }
    }
  }
  return static_cast<long>(rows0 * tgt.size() - oracle::rank(m));
}

oracle::QMatrix evaluated(const PolyMatrix& m, const std::vector<long>& x) {
  oracle::QMatrix out(m.size(), std::vector<mpq_class>(m.empty() ? 0 : m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      for (std::size_t v = 0; v < x.size(); ++v) {
        Exponent e{};
        e[v] = 1;
        out[i][j] += m[i][j].coefficient(e).rational() * x[v];
      }
  return out;
}

Vector qv(const std::vector<long>& xs) {
  Vector v;
  for (long x : xs) v.emplace_back(Q, x);
  return v;
}

TriTensor cayley_v_first() { return v_first(fixture("cayley6")); }

}  // namespace

TEST(EnComplex, TwistOneIsTheMatrixResolution) {
  GradedComplex c = en_complex(cayley_v_first(), 1);
  EXPECT_EQ(c.regime, "symmetric");
  EXPECT_EQ(ranks(c), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(c.terms[0].label(), "L^0 S^1 O(0)");
  EXPECT_EQ(c.terms[1].label(), "L^1 S^0 O(-1)");
  EXPECT_EQ(c.nvars, 4u);
  ASSERT_EQ(c.differentials.size(), 1u);
  EXPECT_TRUE(verify_dd_zero(c).ok);
}

TEST(EnComplex, TwistTwoHasThreeTerms) {
  GradedComplex c = en_complex(cayley_v_first(), 2);
  EXPECT_EQ(ranks(c), (std::vector<std::size_t>{6, 9, 3}));
  EXPECT_EQ(c.terms[2].exterior, 2u);
  EXPECT_EQ(c.terms[2].twist, -2);
  EXPECT_EQ(c.alternating_rank_sum(), 0);
  EXPECT_EQ(ranks(en_complex(cayley_v_first(), 3)), (std::vector<std::size_t>{10, 18, 9, 1}));
}

TEST(EnComplex, AsIsOrderTwistOneIsTheDualizedPointResolution) {
  GradedComplex c = en_complex(fixture("cayley6"), 1);
  EXPECT_EQ(c.regime, "jump");
  EXPECT_EQ(ranks(c), (std::vector<std::size_t>{3, 4, 1}));
  EXPECT_EQ(c.terms[2].kind, ComplexTerm::Kind::Divided);
  EXPECT_EQ(c.terms[2].twist, -4);
  EXPECT_TRUE(verify_dd_zero(c).ok);
  auto hf = hilbert_function(c, 0, 6);
  EXPECT_EQ(hf.values, (std::vector<long>{3, 5, 6, 6, 6, 6, 6}));
  for (unsigned d = 0; d <= 5; ++d) EXPECT_EQ(hf.values[d], cokernel_dimension(c, d)) << "degree " << d;
}

TEST(EnComplex, InputErrors) {
  EXPECT_THROW(en_complex(fixture("cayley6"), 0), std::invalid_argument);
  EXPECT_THROW(en_complex(TriTensor({2, 2, 4}, Q), 3), std::invalid_argument);
  EXPECT_THROW(en_complex(cayley_v_first(), -1), std::invalid_argument);
}

TEST(EnComplex, RegimesPartitionTheTwistLine) {
  for (TriTensor::Dims dims : {TriTensor::Dims{3, 3, 4}, TriTensor::Dims{4, 3, 3}, TriTensor::Dims{4, 2, 4},
                               TriTensor::Dims{3, 4, 3}, TriTensor::Dims{5, 2, 5}}) {
    oracle::Gen gen(dims[0] * 100 + dims[1] * 10 + dims[2]);
    TriTensor t = gen.tensor(dims, 3);
    const long d2 = static_cast<long>(dims[1]) - 1, d3 = static_cast<long>(dims[2]) - 1;
    for (int twist = -2; twist <= 5; ++twist) {
      bool cor2 = twist >= d3 + 1 - d2 && twist >= 0;
      bool cor3 = twist > 0 && twist < d3 + 1 - d2;
      ASSERT_FALSE(cor2 && cor3);
      if (!cor2 && !cor3) {
        EXPECT_THROW(en_complex(t, twist), std::invalid_argument);
        continue;
      }
      GradedComplex c = en_complex(t, twist);
      EXPECT_EQ(c.regime, cor2 ? "symmetric" : "jump");
      EXPECT_TRUE(verify_dd_zero(c).ok) << "dims " << dims[0] << dims[1] << dims[2] << " twist " << twist;
    }
  }
}

TEST(EnComplex, TwistZeroIsStructureSheaf) {
  oracle::Gen gen(151);
  TriTensor t = gen.tensor({3, 4, 3}, 4);
  GradedComplex c = en_complex(t, 0);
  EXPECT_EQ(ranks(c), (std::vector<std::size_t>{1}));
  auto hf = hilbert_function(c, 0, 5);
  for (std::size_t d = 0; d < hf.values.size(); ++d) EXPECT_EQ(hf.values[d], binom(static_cast<long>(d) + 2, 2));
}

TEST(DdZero, RandomTensorsTwistTwo) {
  oracle::Gen gen(157);
  for (int trial = 0; trial < 10; ++trial) {
    TriTensor t = v_first(gen.tensor({3, 3, 4}, 5));
    GradedComplex c = en_complex(t, 2);
    EXPECT_TRUE(verify_dd_zero(c).ok);
    // pointwise product as a second opinion
    std::vector<long> x{gen.between(-4, 4), gen.between(-4, 4), gen.between(-4, 4), gen.between(-4, 4)};
    auto a = evaluated(c.differentials[0], x), b = evaluated(c.differentials[1], x);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        mpq_class s = 0;
        for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(DdZero, FlippedSignIsCaught) {
  GradedComplex c = en_complex(cayley_v_first(), 2);
  ASSERT_TRUE(verify_dd_zero(c).ok);
  bool flipped = false;
  for (auto& row : c.differentials[1]) {
    for (auto& e : row) {
      if (!flipped && !e.is_zero()) {
        e = -e;
        flipped = true;
      }
    }
  }
  ASSERT_TRUE(flipped);
  auto r = verify_dd_zero(c);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.first_nonzero.empty());
}

TEST(Exactness, OffTheCubicTwistTwo) {
  TriTensor t = cayley_v_first();
  GradedComplex c = en_complex(t, 2);
  oracle::Gen gen(163);
  std::vector<Vector> pts;
  while (pts.size() < 20) {
    std::vector<long> x{gen.between(-9, 9), gen.between(-9, 9), gen.between(-9, 9), gen.between(-9, 9)};
    Vector xv = qv(x);
    if (on_support(t, xv)) continue;
    pts.push_back(xv);
    auto a = evaluated(c.differentials[0], x), b = evaluated(c.differentials[1], x);
    EXPECT_EQ(oracle::rank(a), 6u);
    EXPECT_EQ(oracle::rank(b), 3u);
    EXPECT_EQ(oracle::rank(a) + oracle::rank(b), 9u);
  }
  auto r = verify_generic_exactness(c, t, pts);
  EXPECT_TRUE(r.conclusive);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.points_used, 20u);
}

TEST(Exactness, OnTheCubicTheCokernelAppears) {
  TriTensor t = cayley_v_first();
  GradedComplex c = en_complex(t, 2);
  // small integer points of the cubic, found by direct determinant evaluation
  TriTensor orig = fixture("cayley6");
  std::size_t found = 0;
  for (long a = -2; a <= 2 && found < 3; ++a)
    for (long b = -2; b <= 2 && found < 3; ++b)
      for (long d = -2; d <= 2 && found < 3; ++d)
        for (long e = -2; e <= 2 && found < 3; ++e) {
          std::vector<long> x{a, b, d, e};
          if (a == 0 && b == 0 && d == 0 && e == 0) continue;
          if (oracle::det3(oracle::v_slice(orig, x)) != 0) continue;
          ++found;
          Vector xv = qv(x);
          EXPECT_TRUE(on_support(t, xv));
          auto h = evaluated_homology(c, xv);
          EXPECT_GT(h[0], 0u);
        }
  EXPECT_EQ(found, 3u);
}

TEST(Exactness, ZeroTensorIsInconclusive) {
  TriTensor t = v_first(fixture("zero"));
  GradedComplex c = en_complex(t, 2);
  auto r = verify_generic_exactness(c, t, {qv({1, 2, 3, 4}), qv({1, 0, 0, 0})});
  EXPECT_FALSE(r.conclusive);
  EXPECT_EQ(r.points_used, 0u);
  EXPECT_EQ(r.points_on_support, 2u);
}

TEST(HilbertFunction, TwistTwoMatchesCokernel) {
  GradedComplex c = en_complex(cayley_v_first(), 2);
  auto hf = hilbert_function(c, 0, 4);
  for (unsigned d = 0; d <= 4; ++d) EXPECT_EQ(hf.values[d], cokernel_dimension(c, d)) << "degree " << d;
  // a sheaf on the cubic surface: second differences settle at 3·(rank 2 data)
  auto big = hilbert_function(c, 4, 10);
  for (std::size_t i = 2; i < big.values.size(); ++i)
    EXPECT_EQ(big.values[i] - 2 * big.values[i - 1] + big.values[i - 2], 3);
}

TEST(Gamma, SixPointTensorGivesItsPoints) {
  auto g = gamma_points(fixture("cayley6"), 101);
  EXPECT_FALSE(g.saturated);
  ASSERT_EQ(g.pairs.size(), 6u);
  std::set<std::vector<long>> firsts, expected;
  for (const auto& [x, y] : g.pairs) {
    std::vector<long> v;
    for (const auto& s : x.coords()) v.push_back(s.residue());
    firsts.insert(v);
  }
  for (const auto& p : oracle::brute_base_points(fixture("cayley6"), 0, 101)) expected.insert(p);
  EXPECT_EQ(firsts, expected);
  for (const auto& p : cayley6_points()) {
    std::vector<long> v;
    for (const auto& s : p.coords()) v.push_back(reduce_mod(s.rational(), 101));
    EXPECT_EQ(firsts.count(v), 1u);
  }
}

TEST(Gamma, RandomTensorOverF1009) {
  oracle::Gen gen(167);
  TriTensor t = gen.tensor({3, 3, 4}, 50).reduce_mod(1009);
  auto g = gamma_points(t, 1009);
  EXPECT_LE(g.pairs.size(), 6u);
  EXPECT_FALSE(g.saturated);
}

TEST(Gamma, ZeroTensorSaturates) {
  auto g = gamma_points(fixture("zero"), 7);
  EXPECT_TRUE(g.saturated);
}
