#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "trilinear/generator.hpp"
#include "trilinear/tensor.hpp"

using namespace trilinear;

namespace {

const Field Q = Field::rationals();

Vector qv(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(Q, x);
  return v;
}

// Contraction built straight from the entry rule with an antisymmetric ω.
oracle::QMatrix contraction_oracle(const TriTensor& t) {
  const std::array<std::pair<int, int>, 3> biv{{{0, 1}, {0, 2}, {1, 2}}};
  oracle::QMatrix m(9, std::vector<mpq_class>(12));
  for (std::size_t b = 0; b < 3; ++b) {
    auto [j1, j2] = biv[b];
    auto omega = [&](int j, int jp) -> int {
      if (j == j1 && jp == j2) return 1;
      if (j == j2 && jp == j1) return -1;
      return 0;
    };
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (int jp = 0; jp < 3; ++jp) {
          mpq_class v = 0;
          for (int j = 0; j < 3; ++j) v += t(i, j, k).rational() * omega(j, jp);
          m[i * 3 + jp][b * 4 + k] = v;
        }
      }
    }
  }
  return m;
}

TriTensor generic_tensor(oracle::Gen& gen) {
  for (;;) {
    TriTensor t = gen.tensor({3, 3, 4}, 5);
    if (oracle::rank(contraction_oracle(t)) == 9) return t;
  }
}

// Zero set of the cubic mod p contains no plane of P³(F_p).
bool has_linear_factor_mod(const MultiPoly& c, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> pts;
  std::vector<bool> zero;
  modp::for_each_projective_point(4, p, [&](const std::vector<std::uint32_t>& y) {
    pts.push_back(y);
    std::uint32_t v = 0;
    for (const auto& [e, coeff] : c.terms()) {
      std::uint32_t term = reduce_mod(coeff.rational(), p);
      for (std::size_t i = 0; i < 4; ++i)
        for (unsigned r = 0; r < e[i]; ++r) term = modp::mul(term, y[i], p);
      v = modp::add(v, term, p);
    }
    zero.push_back(v == 0);
  });
  for (const auto& a : pts) {
    bool contained = true;
    for (std::size_t n = 0; n < pts.size() && contained; ++n) {
      std::uint32_t s = 0;
      for (std::size_t i = 0; i < 4; ++i) s = modp::add(s, modp::mul(a[i], pts[n][i], p), p);
      if (s == 0 && !zero[n]) contained = false;
    }
    if (contained) return true;
  }
  return false;
}

}  // namespace

TEST(Slice, ZeroVectorGivesZeroMatrix) {
  oracle::Gen gen(1);
  TriTensor t = gen.tensor({3, 3, 4}, 4);
  EXPECT_TRUE(slice(t, 2, zero_vector(Q, 4)).is_zero());
  EXPECT_TRUE(slice(t, 0, zero_vector(Q, 3)).is_zero());
}

TEST(Slice, DoubleLineCoefficientOfX0) {
  DenseMatrix m = slice(fixture("doubleline-1"), 2, qv({1, 0, 0, 0}));
  EXPECT_EQ(m, DenseMatrix::from_ints(Q, {{1, 0, 0}, {0, 0, -1}, {0, 0, 0}}));
}

TEST(Slice, FirstLegBasisVectorIsSlab) {
  oracle::Gen gen(17);
  TriTensor t = gen.tensor({3, 3, 4}, 6);
  DenseMatrix m = slice(t, 0, qv({1, 0, 0}));
  ASSERT_EQ(m.rows(), 3u);
  ASSERT_EQ(m.cols(), 4u);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(m(j, k), t(0, j, k));
}

TEST(Slice, LengthMismatchRejected) {
  EXPECT_THROW(slice(fixture("cayley6"), 2, qv({1, 0, 0})), ShapeError);
}

TEST(Slice, LinearInTheVector) {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 10; ++trial) {
    TriTensor t = gen.tensor({3, 3, 4}, 4);
    std::vector<long> y{gen.between(-5, 5), gen.between(-5, 5), gen.between(-5, 5), gen.between(-5, 5)};
    Vector yv = qv({y[0], y[1], y[2], y[3]});
    EXPECT_EQ(oracle::to_q(slice(t, 2, yv)), oracle::v_slice(t, y));
  }
}

TEST(DetCubic, DoubleLine) {
  EXPECT_EQ(det_cubic(fixture("doubleline-1")).to_string(), "-x0^2*x3 + x1^2*x2");
}

TEST(DetCubic, ZeroAndIdentitySlab) {
  EXPECT_TRUE(det_cubic(fixture("zero")).is_zero());
  TriTensor t({3, 3, 4}, Q);
  for (std::size_t i = 0; i < 3; ++i) t(i, i, 0) = Scalar(Q, 1);
  EXPECT_EQ(det_cubic(t).to_string(), "x0^3");
}

TEST(DetCubic, WrongDimsRejected) {
  EXPECT_THROW(det_cubic(TriTensor({2, 3, 4}, Q)), std::invalid_argument);
}

TEST(DetCubic, AgreesWithPointwiseDeterminant) {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 15; ++trial) {
    TriTensor t = gen.tensor({3, 3, 4}, 5);
    MultiPoly c = det_cubic(t);
    for (int s = 0; s < 4; ++s) {
      std::vector<long> y{gen.between(-6, 6), gen.between(-6, 6), gen.between(-6, 6), gen.between(-6, 6)};
      EXPECT_EQ(c.evaluate(qv({y[0], y[1], y[2], y[3]})).rational(), oracle::det3(oracle::v_slice(t, y)));
    }
  }
}

TEST(DetCubic, SixPointCubicHasNoLinearFactor) {
  MultiPoly c = det_cubic(fixture("cayley6"));
  EXPECT_EQ(c.degree(), 3);
  EXPECT_FALSE(has_linear_factor_mod(c, 7));
  // control: a product with a plane is caught
  auto x = [](std::size_t i) { return MultiPoly::variable(Q, 4, i); };
  EXPECT_TRUE(has_linear_factor_mod((x(0) + x(3)) * (x(1) * x(1) - x(2) * x(3)), 7));
}

TEST(TrivialInvolution, SymmetricSlabsAreFixed) {
  oracle::Gen gen(41);
  TriTensor t({3, 3, 4}, Q);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) t(i, j, k) = t(j, i, k) = Scalar(Q, gen.between(-3, 3));
  TriTensor s = trivial_involution(t);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(s(i, j, k), t(i, j, k));
}

TEST(TrivialInvolution, DoubleLineSlabsTransposed) {
  TriTensor t = fixture("doubleline-1");
  TriTensor s = trivial_involution(t);
  for (std::size_t k = 0; k < 4; ++k) {
    Vector e = zero_vector(Q, 4);
    e[k] = Scalar(Q, 1);
    EXPECT_EQ(slice(s, 2, e), slice(t, 2, e).transpose());
  }
}

TEST(TrivialInvolution, InvolutiveAndPreservesCubic) {
  oracle::Gen gen(43);
  for (int trial = 0; trial < 20; ++trial) {
    TriTensor t = gen.tensor({3, 3, 4}, 5);
    TriTensor s = trivial_involution(t);
    EXPECT_EQ(det_cubic(s), det_cubic(t));
    TriTensor back = trivial_involution(s);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(back(i, j, k), t(i, j, k));
  }
}

TEST(Contraction, ZeroTensor) {
  DenseMatrix m = contraction_matrix(fixture("zero"));
  EXPECT_EQ(m.rows(), 9u);
  EXPECT_EQ(m.cols(), 12u);
  EXPECT_TRUE(m.is_zero());
  EXPECT_FALSE(main_assumption(fixture("zero")));
}

TEST(Contraction, DiagonalTensorHasRankSix) {
  TriTensor t({3, 3, 4}, Q);
  for (std::size_t i = 0; i < 3; ++i) t(i, i, i) = Scalar(Q, 1);
  EXPECT_EQ(oracle::rank(contraction_oracle(t)), 6u);
  EXPECT_EQ(rank(contraction_matrix(t)), 6u);
  EXPECT_FALSE(main_assumption(t));
}

TEST(Contraction, MatchesEntryRuleAndRankBound) {
  oracle::Gen gen(47);
  for (int trial = 0; trial < 25; ++trial) {
    TriTensor t = gen.tensor({3, 3, 4}, trial < 5 ? 1 : 5);
    auto expected = contraction_oracle(t);
    DenseMatrix m = contraction_matrix(t);
    EXPECT_EQ(oracle::to_q(m), expected);
    std::size_t r = oracle::rank(expected);
    EXPECT_LE(r, 9u);
    EXPECT_EQ(nullity(m), 12 - r);
    EXPECT_EQ(main_assumption(t), r == 9);
  }
}

TEST(MainAssumption, DoubleLinesHoldAndTheirImagesFail) {
  for (const char* name : {"doubleline-1", "doubleline-2"}) {
    SCOPED_TRACE(name);
    TriTensor t = fixture(name);
    EXPECT_EQ(oracle::rank(contraction_oracle(t)), 9u);
    EXPECT_TRUE(main_assumption(t));
    TriTensor image = cross_product_involution(t).bprime;
    EXPECT_FALSE(main_assumption(image));
    // Both degenerate images have the same contraction rank.
    EXPECT_EQ(rank(contraction_matrix(image)), 5u);
    EXPECT_THROW(cross_product_involution(image), MainAssumptionFailure);
  }
}

TEST(CrossProduct, ZeroTensorReportsRank) {
  try {
    cross_product_involution(fixture("zero"));
    FAIL() << "expected MainAssumptionFailure";
  } catch (const MainAssumptionFailure& e) {
    EXPECT_EQ(e.rank(), 0u);
  }
}

TEST(CrossProduct, BasisIsTheContractionKernel) {
  oracle::Gen gen(53);
  const auto& orient = bivector_orientation();
  for (int trial = 0; trial < 10; ++trial) {
    TriTensor t = generic_tensor(gen);
    auto res = cross_product_involution(t);
    ASSERT_EQ(res.uprime_basis.size(), 3u);
    EXPECT_EQ(canonical_basis(Q, 12, res.uprime_basis), res.uprime_basis);
    auto c = contraction_oracle(t);
    for (const auto& u : res.uprime_basis) {
      // back from W⊗V to Λ²W*⊗V
      std::vector<mpq_class> x(12);
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t k = 0; k < 4; ++k) x[b * 4 + k] = orient[b].sign * u[orient[b].target * 4 + k].rational();
      for (std::size_t r = 0; r < 9; ++r) {
        mpq_class s = 0;
        for (std::size_t col = 0; col < 12; ++col) s += c[r][col] * x[col];
        EXPECT_EQ(s, 0);
      }
    }
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(res.bprime(a, j, k), res.uprime_basis[a][j * 4 + k]);
  }
}

TEST(CrossProduct, OrientationIsEvenPermutations) {
  const auto& o = bivector_orientation();
  EXPECT_EQ(o[0].target, 2u);
  EXPECT_EQ(o[0].sign, 1);
  EXPECT_EQ(o[1].target, 1u);
  EXPECT_EQ(o[1].sign, -1);
  EXPECT_EQ(o[2].target, 0u);
  EXPECT_EQ(o[2].sign, 1);
}

TEST(CrossProduct, TwiceRecoversUAsSubspace) {
  oracle::Gen gen(59);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 10; ++trial) {
    TriTensor t = generic_tensor(gen);
    auto first = cross_product_involution(t);
    if (!main_assumption(first.bprime)) continue;
    ++checked;
    auto second = cross_product_involution(first.bprime);
    std::vector<Vector> slabs;
    for (std::size_t i = 0; i < 3; ++i) {
      Vector v;
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 4; ++k) v.push_back(t(i, j, k));
      slabs.push_back(v);
    }
    EXPECT_EQ(second.uprime_basis, canonical_basis(Q, 12, slabs));
  }
  EXPECT_EQ(checked, 10);
}

TEST(ReversingConstruction, LegsReordered) {
  TriTensor t = fixture("cayley6");
  auto res = cross_product_involution(t);
  TriTensor rev = reversing_construction(t);
  EXPECT_EQ(rev.dims(), (TriTensor::Dims{3, 3, 4}));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(rev(j, a, k), res.bprime(a, j, k));
  EXPECT_THROW(reversing_construction(fixture("zero")), MainAssumptionFailure);
}
